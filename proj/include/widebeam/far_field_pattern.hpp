// SPDX-License-Identifier: Apache-2.0
//
// widebeam: array-factor beam widening and patch antenna radiation models
// Copyright (C) 2026 The widebeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "widebeam/angular_grid.hpp"
#include "widebeam/constants.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace widebeam {

/// Complex far-field samples (relative amplitude) of both spherical components on a grid.
class FarFieldPattern
{
  public:
    FarFieldPattern(AngularGrid grid, std::vector<Complex> e_theta, std::vector<Complex> e_phi,
                    std::optional<double> frequency_hz = std::nullopt);

    const AngularGrid &grid() const { return grid_; }
    std::span<const Complex> e_theta() const { return e_theta_; }
    std::span<const Complex> e_phi() const { return e_phi_; }
    std::optional<double> frequency_hz() const { return frequency_hz_; }

  private:
    AngularGrid grid_;
    std::vector<Complex> e_theta_;
    std::vector<Complex> e_phi_;
    std::optional<double> frequency_hz_;
};

/// |E_theta|^2 + |E_phi|^2 per grid point.
std::vector<double> power_pattern(const FarFieldPattern &p);

/// Ludwig-3 components with a y-directed co-polarization reference.
struct Ludwig3
{
    Complex horizontal; // L3H
    Complex vertical;   // L3V
};

inline constexpr std::string_view ludwig3_convention =
    "ludwig3-y-reference: L3V = Etheta*sin(phi) + Ephi*cos(phi), L3H = Etheta*cos(phi) - Ephi*sin(phi)";

Ludwig3 to_ludwig3(Complex e_theta, Complex e_phi, double phi);

/// Inverse of to_ludwig3 at the same azimuth; returns {E_theta, E_phi}.
std::pair<Complex, Complex> from_ludwig3(const Ludwig3 &l3, double phi);

std::vector<Ludwig3> to_ludwig3(const FarFieldPattern &p);

} // namespace widebeam
