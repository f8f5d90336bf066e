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

namespace widebeam {

/// Patch, parasitic and substrate dimensions. Lengths in meters.
struct PatchGeometry
{
    double l_p = 0.0;   // patch length (resonant dimension, along y)
    double w_p = 0.0;   // patch width (radiating edges, along x)
    double l_par = 0.0; // parasitic patch length
    double w_par = 0.0; // parasitic patch width
    double w_g = 0.0;   // gap between patch and parasitics
    double h = 0.0;     // substrate height
    double eps_r = 1.0;
    double tan_delta = 0.0; // informative only

    /// 36 GHz design on 0.254 mm RO3003 (eps_r = 3).
    static PatchGeometry reference_design();

    /// All lengths multiplied by `factor`; materials unchanged.
    PatchGeometry scaled(double factor) const;

    /// Throws std::invalid_argument unless all lengths > 0, eps_r >= 1 and h < l_p.
    void validate() const;
};

struct ResonanceOptions
{
    /// Include the open-end fringing extension 2*dL in the resonant length.
    bool include_fringing = true;
};

/// Effective permittivity of a microstrip of width w_p on height h (Hammerstad):
///   eps_eff = (eps_r + 1)/2 + (eps_r - 1)/2 * (1 + 12 h / w_p)^(-1/2)
double effective_permittivity(const PatchGeometry &g);

/// Open-end fringing extension (Hammerstad):
///   dL = 0.412 h (eps_eff + 0.3)(w_p/h + 0.264) / ((eps_eff - 0.258)(w_p/h + 0.8))
double fringing_extension(const PatchGeometry &g);

/// Transmission-line-model resonance f = c / (2 (l_p + 2 dL) sqrt(eps_eff)).
/// Throws std::invalid_argument("model out of validity") when w_p / h < 1.
double estimate_resonance(const PatchGeometry &g, ResonanceOptions opts = {});

/// Relative impedance bandwidth measure h w_p / (eps_r lambda0 l_p) at frequency f0.
double bandwidth_factor(const PatchGeometry &g, double f0);

/// Ratio of the bandwidth measures of `a` and `b` (a relative to b) at a common f0.
double bandwidth_ratio(const PatchGeometry &a, const PatchGeometry &b, double f0);

/// Same for different operating frequencies.
double bandwidth_ratio(const PatchGeometry &a, double f0_a, const PatchGeometry &b, double f0_b);

} // namespace widebeam
