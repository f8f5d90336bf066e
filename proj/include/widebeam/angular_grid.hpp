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

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace widebeam {

/// Portion of the sphere a grid (and the pattern sampled on it) describes.
/// Patterns on an upper-hemisphere grid are taken as zero below the ground plane.
enum class Domain { full_sphere, upper_hemisphere };

std::string_view to_string(Domain d);
Domain domain_from_string(std::string_view s);

/// Sampled angular domain. theta is the polar angle from +z, phi the azimuth from +x.
///
/// Samples are stored theta-major: index(it, ip) = it * phi_count() + ip.
/// A grid with a single phi sample is a theta-only grid (a cut, or a pattern that
/// is rotationally symmetric about z).
class AngularGrid
{
  public:
    AngularGrid(std::vector<double> theta, std::vector<double> phi, Domain domain);

    /// n uniform theta samples over [theta_first, theta_last], single phi.
    static AngularGrid theta_only(double theta_first, double theta_last, std::size_t n,
                                  Domain domain = Domain::full_sphere, double phi = 0.0);

    /// Uniform theta over [0, theta_max] with the given steps, phi over [0, 2*pi).
    /// theta_max is pi for the full sphere and pi/2 for the upper hemisphere.
    static AngularGrid sampled(Domain domain, double theta_step, double phi_step);

    std::span<const double> theta() const { return theta_; }
    std::span<const double> phi() const { return phi_; }
    Domain domain() const { return domain_; }

    std::size_t theta_count() const { return theta_.size(); }
    std::size_t phi_count() const { return phi_.size(); }
    std::size_t size() const { return theta_.size() * phi_.size(); }
    std::size_t index(std::size_t it, std::size_t ip) const { return it * phi_.size() + ip; }

    bool is_theta_only() const { return phi_.size() == 1; }
    double theta_step() const { return (theta_.back() - theta_.front()) / double(theta_.size() - 1); }

    /// Index of the phi sample matching `phi` (mod 2*pi) within `tol`, or npos.
    std::size_t find_phi(double phi, double tol = 1e-9) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const AngularGrid &, const AngularGrid &) = default;

  private:
    std::vector<double> theta_;
    std::vector<double> phi_;
    Domain domain_;
};

/// n points uniformly spaced over [first, last] (both included).
std::vector<double> linspace(double first, double last, std::size_t n);

} // namespace widebeam
