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
#include "widebeam/far_field_pattern.hpp"
#include "widebeam/patch_geometry.hpp"

#include <optional>
#include <vector>

namespace widebeam {

/// Straight magnetic line current lying on the ground plane z = 0.
struct MagneticCurrent
{
    double x = 0.0; // center [m]
    double y = 0.0;
    double ux = 1.0; // in-plane unit orientation
    double uy = 0.0;
    Complex amplitude{1.0, 0.0};
    double length = 0.0; // [m]
};

struct MagneticCurrentSet
{
    std::vector<MagneticCurrent> elements;
    double frequency_hz = 0.0;

    void validate() const;
};

/// First (rectangular patch) mode: two in-phase x-directed slots of length w_p at the
/// radiating edges y = +-(l_p + 2 dL) / 2.
MagneticCurrentSet mode1_currents(const PatchGeometry &g, double frequency_hz);

/// Second mode: two anti-phase y-directed currents of length l_p at x = +-separation/2.
/// The default separation is w_p (currents at the outer patch edges).
MagneticCurrentSet mode2_currents(const PatchGeometry &g, double frequency_hz,
                                  std::optional<double> separation = std::nullopt);

/**
 * Upper-hemisphere far field of magnetic line currents over an infinite ground plane:
 *
 *   E(r) ~ sum_n a_n (r x l_n) sinc(k L_n (r . l_n) / 2) exp(+j k r . r_n)
 *
 * with sinc(x) = sin(x)/x. The image doubling and all constant factors are dropped.
 * The grid must be an upper-hemisphere grid with theta <= pi/2.
 */
FarFieldPattern far_field(const MagneticCurrentSet &currents, const AngularGrid &grid);

/// w1 * p1 + w2 * p2, component-wise. Grids must be identical.
FarFieldPattern superpose_modes(const FarFieldPattern &p1, Complex w1, const FarFieldPattern &p2, Complex w2);

} // namespace widebeam
