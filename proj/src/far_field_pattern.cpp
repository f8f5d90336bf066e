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

#include "widebeam/far_field_pattern.hpp"

#include <cmath>
#include <stdexcept>

namespace widebeam {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

FarFieldPattern::FarFieldPattern(AngularGrid grid, std::vector<Complex> e_theta, std::vector<Complex> e_phi,
                                 std::optional<double> frequency_hz)
    : grid_(std::move(grid)), e_theta_(std::move(e_theta)), e_phi_(std::move(e_phi)), frequency_hz_(frequency_hz)
{
    if (e_theta_.size() != grid_.size() || e_phi_.size() != grid_.size())
        throw std::invalid_argument("field sample count does not match grid size");
    for (std::size_t i = 0; i < e_theta_.size(); ++i)
        if (!finite(e_theta_[i]) || !finite(e_phi_[i]))
            throw std::invalid_argument("far-field samples must be finite");
    if (frequency_hz_ && !(*frequency_hz_ > 0.0 && std::isfinite(*frequency_hz_)))
        throw std::invalid_argument("frequency must be positive");
}

std::vector<double> power_pattern(const FarFieldPattern &p)
{
    const auto et = p.e_theta();
    const auto ep = p.e_phi();
    std::vector<double> out(et.size());
    for (std::size_t i = 0; i < et.size(); ++i)
        out[i] = std::norm(et[i]) + std::norm(ep[i]);
    return out;
}

Ludwig3 to_ludwig3(Complex e_theta, Complex e_phi, double phi)
{
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    return {e_theta * c - e_phi * s, e_theta * s + e_phi * c};
}

std::pair<Complex, Complex> from_ludwig3(const Ludwig3 &l3, double phi)
{
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    return {l3.horizontal * c + l3.vertical * s, -l3.horizontal * s + l3.vertical * c};
}

std::vector<Ludwig3> to_ludwig3(const FarFieldPattern &p)
{
    const auto &grid = p.grid();
    std::vector<Ludwig3> out(grid.size());
    for (std::size_t it = 0; it < grid.theta_count(); ++it)
        for (std::size_t ip = 0; ip < grid.phi_count(); ++ip)
        {
            const std::size_t i = grid.index(it, ip);
            out[i] = to_ludwig3(p.e_theta()[i], p.e_phi()[i], grid.phi()[ip]);
        }
    return out;
}

} // namespace widebeam
