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

#include <cstddef>
#include <vector>

namespace widebeam {

/// Level written for samples with zero field, in dB relative to the cut peak.
inline constexpr double db_floor = -300.0;

/// Ludwig-3 pattern cut in dB (20*log10 of field magnitude), one great circle.
struct PatternCut
{
    double phi_plane = 0.0; // rad
    std::vector<double> theta_deg;
    std::vector<double> l3h_db;
    std::vector<double> l3v_db;
    /// Linear field magnitude that maps to 0 dB (informative).
    double normalization = 1.0;

    /// Throws std::invalid_argument on ragged columns or non-increasing theta.
    void validate() const;
};

/// Great-circle cut of a pattern at `phi_plane`, peak-normalized so that the larger
/// of the two Ludwig-3 components peaks at 0 dB.
PatternCut make_pattern_cut(const FarFieldPattern &p, double phi_plane);

struct PolarizationError
{
    double rms_db = 0.0;
    double max_db = 0.0;
    std::size_t samples = 0;
};

struct CutComparison
{
    PolarizationError l3h;
    PolarizationError l3v;
    double rms_db = 0.0; // over both polarizations
    double max_db = 0.0;
    double theta_min_deg = 0.0;
    double theta_max_deg = 0.0;
};

/**
 * Compare cut `b` against reference cut `a` over their overlapping theta range.
 *
 * `b` is linearly interpolated onto the theta samples of `a` inside the overlap. Both
 * cuts are then peak-normalized to 0 dB (joint peak over L3H and L3V), and per
 * polarization samples where either cut lies below floor_db are excluded.
 * Throws std::invalid_argument when the theta ranges do not overlap.
 */
CutComparison compare_cuts(const PatternCut &a, const PatternCut &b, double floor_db);

} // namespace widebeam
