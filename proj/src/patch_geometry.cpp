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

#include "widebeam/patch_geometry.hpp"
#include "widebeam/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace widebeam {

namespace {

void check_validity(const PatchGeometry &g)
{
    g.validate();
    if (g.w_p / g.h < 1.0)
        throw std::invalid_argument("model out of validity");
}

void check_frequency(double f)
{
    if (!(f > 0.0) || !std::isfinite(f))
        throw std::invalid_argument("frequency must be positive");
}

} // namespace

PatchGeometry PatchGeometry::reference_design()
{
    PatchGeometry g;
    g.l_p = 2.29e-3;
    g.w_p = 4.42e-3;
    g.l_par = 2.21e-3;
    g.w_par = 3.29e-3;
    g.w_g = 1.16e-3;
    g.h = 0.254e-3;
    g.eps_r = 3.0;
    g.tan_delta = 0.004;
    return g;
}

PatchGeometry PatchGeometry::scaled(double factor) const
{
    PatchGeometry g = *this;
    g.l_p *= factor;
    g.w_p *= factor;
    g.l_par *= factor;
    g.w_par *= factor;
    g.w_g *= factor;
    g.h *= factor;
    return g;
}

void PatchGeometry::validate() const
{
    for (double v : {l_p, w_p, l_par, w_par, w_g, h})
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("patch geometry lengths must be positive");
    if (!(eps_r >= 1.0) || !std::isfinite(eps_r))
        throw std::invalid_argument("eps_r must be >= 1");
    if (!(h < l_p))
        throw std::invalid_argument("substrate height must be smaller than the patch length");
    if (!std::isfinite(tan_delta) || tan_delta < 0.0)
        throw std::invalid_argument("tan_delta must be non-negative");
}

double effective_permittivity(const PatchGeometry &g)
{
    check_validity(g);
    return 0.5 * (g.eps_r + 1.0) + 0.5 * (g.eps_r - 1.0) / std::sqrt(1.0 + 12.0 * g.h / g.w_p);
}

double fringing_extension(const PatchGeometry &g)
{
    const double eps_eff = effective_permittivity(g);
    const double u = g.w_p / g.h;
    return 0.412 * g.h * (eps_eff + 0.3) * (u + 0.264) / ((eps_eff - 0.258) * (u + 0.8));
}

double estimate_resonance(const PatchGeometry &g, ResonanceOptions opts)
{
    const double eps_eff = effective_permittivity(g);
    const double length = g.l_p + (opts.include_fringing ? 2.0 * fringing_extension(g) : 0.0);
    return speed_of_light / (2.0 * length * std::sqrt(eps_eff));
}

double bandwidth_factor(const PatchGeometry &g, double f0)
{
    g.validate();
    check_frequency(f0);
    const double lambda0 = speed_of_light / f0;
    return g.h * g.w_p / (g.eps_r * lambda0 * g.l_p);
}

double bandwidth_ratio(const PatchGeometry &a, const PatchGeometry &b, double f0)
{
    return bandwidth_ratio(a, f0, b, f0);
}

double bandwidth_ratio(const PatchGeometry &a, double f0_a, const PatchGeometry &b, double f0_b)
{
    return bandwidth_factor(a, f0_a) / bandwidth_factor(b, f0_b);
}

} // namespace widebeam
