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

#include "widebeam/far_field_pattern.hpp"

#include <optional>
#include <span>
#include <vector>

namespace widebeam {

/**
 * Half-power beamwidth in degrees of a sampled power pattern.
 *
 * Returns the total angular measure of {theta : P(theta) >= P_max / 2}, with the
 * half-power crossings located by linear interpolation between samples. For a
 * single main lobe this is the classical HPBW; for twin lobes it is the sum of the
 * individual beamwidths (plus any region between them that stays above half power).
 *
 * theta must be increasing (radians, may be signed); power non-negative.
 * Throws std::invalid_argument("degenerate pattern") if the pattern is all zero.
 */
double hpbw_deg(std::span<const double> theta, std::span<const double> power);

/**
 * Directivity 10*log10(4*pi*U_max / integral(U dOmega)) of a power pattern on a grid.
 *
 * The theta integral uses the trapezoid rule with the sin(theta) weight; phi uses the
 * periodic trapezoid rule and must cover [0, 2*pi) uniformly. A theta-only grid is
 * treated as rotationally symmetric about z (phi integral = 2*pi). Upper-hemisphere
 * grids must span theta in [0, pi/2] and the field below ground is zero; full-sphere
 * grids must span [0, pi].
 */
double directivity_dbi(const AngularGrid &grid, std::span<const double> power);
double directivity_dbi(const FarFieldPattern &p);

struct Peak
{
    std::size_t index = 0;
    double theta = 0.0; // rad
    double phi = 0.0;   // rad
    double power = 0.0;
};

/// First grid sample (theta-major order) within a relative 1e-9 of the maximum power.
Peak find_peak(const AngularGrid &grid, std::span<const double> power);

/// Samples of a pattern along one great circle through the zenith.
///
/// For grids with phi coverage the cut joins the half-plane at phi_plane (theta >= 0)
/// with the opposite half-plane phi_plane + pi, reported with negative theta. For
/// theta-only grids the cut is the grid itself.
struct GreatCircleCut
{
    double phi_plane = 0.0;
    std::vector<double> theta;   // rad, increasing, signed for joined half-planes
    std::vector<double> phi;     // actual azimuth of each sample
    std::vector<Complex> e_theta;
    std::vector<Complex> e_phi;

    std::vector<double> power() const;
};

GreatCircleCut great_circle_cut(const FarFieldPattern &p, double phi_plane);

struct PatternMetrics
{
    double hpbw_deg = 0.0;
    double directivity_dbi = 0.0;
    double peak_theta_deg = 0.0;
    double peak_phi_deg = 0.0;
    double hpbw_plane_deg = 0.0; // azimuth of the cut the HPBW was measured on
};

/// HPBW on the great circle through `hpbw_plane` (defaults to the peak azimuth),
/// directivity and peak direction.
PatternMetrics compute_metrics(const FarFieldPattern &p, std::optional<double> hpbw_plane = std::nullopt);

} // namespace widebeam
