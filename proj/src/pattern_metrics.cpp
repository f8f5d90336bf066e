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

#include "widebeam/pattern_metrics.hpp"
#include "widebeam/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace widebeam {

namespace {

constexpr double kCoverageTol = 1e-9;

} // namespace

double hpbw_deg(std::span<const double> theta, std::span<const double> power)
{
    if (theta.size() != power.size())
        throw std::invalid_argument("hpbw: theta and power sample counts differ");
    if (theta.size() < 3)
        throw std::invalid_argument("hpbw: at least 3 samples required");

    double p_max = 0.0;
    for (double p : power)
    {
        if (!std::isfinite(p) || p < 0.0)
            throw std::invalid_argument("hpbw: power samples must be finite and non-negative");
        p_max = std::max(p_max, p);
    }
    if (!(p_max > 0.0))
        throw std::invalid_argument("degenerate pattern");

    const double half = 0.5 * p_max;
    double width = 0.0;
    for (std::size_t i = 0; i + 1 < theta.size(); ++i)
    {
        const double dt = theta[i + 1] - theta[i];
        if (!(dt > 0.0))
            throw std::invalid_argument("hpbw: theta must be strictly increasing");
        const double a = power[i];
        const double b = power[i + 1];
        const bool a_in = a >= half;
        const bool b_in = b >= half;
        if (a_in && b_in)
            width += dt;
        else if (a_in != b_in)
        {
            // fraction of the interval from theta[i] to the crossing
            const double frac = (half - a) / (b - a);
            width += a_in ? frac * dt : (1.0 - frac) * dt;
        }
    }
    return rad_to_deg(width);
}

double directivity_dbi(const AngularGrid &grid, std::span<const double> power)
{
    if (power.size() != grid.size())
        throw std::invalid_argument("directivity: power sample count does not match grid");

    const auto theta = grid.theta();
    const double theta_end = grid.domain() == Domain::full_sphere ? pi : half_pi;
    if (std::abs(theta.front()) > kCoverageTol || std::abs(theta.back() - theta_end) > kCoverageTol)
        throw std::invalid_argument(grid.domain() == Domain::full_sphere
                                        ? "directivity: full-sphere grid must span theta in [0, pi]"
                                        : "directivity: upper-hemisphere grid must span theta in [0, pi/2]");

    const std::size_t n_theta = grid.theta_count();
    const std::size_t n_phi = grid.phi_count();
    double phi_step = two_pi;
    if (n_phi > 1)
    {
        const auto phi = grid.phi();
        phi_step = two_pi / double(n_phi);
        for (std::size_t ip = 0; ip < n_phi; ++ip)
            if (std::abs(phi[ip] - phi.front() - phi_step * double(ip)) > 1e-6 * phi_step)
                throw std::invalid_argument("directivity: phi samples must cover [0, 2*pi) uniformly");
    }

    std::vector<double> sin_theta(n_theta);
    for (std::size_t it = 0; it < n_theta; ++it)
        sin_theta[it] = std::sin(theta[it]);

    // integrate over theta for each phi, then over phi
    std::vector<double> column(n_theta);
    std::vector<double> per_phi(n_phi);
    double u_max = 0.0;
    for (std::size_t ip = 0; ip < n_phi; ++ip)
    {
        for (std::size_t it = 0; it < n_theta; ++it)
        {
            const double u = power[grid.index(it, ip)];
            if (!std::isfinite(u) || u < 0.0)
                throw std::invalid_argument("directivity: power samples must be finite and non-negative");
            u_max = std::max(u_max, u);
            column[it] = u * sin_theta[it];
        }
        per_phi[ip] = quadrature::trapezoid<double>(column, grid.theta_step());
    }
    const double total = quadrature::periodic_trapezoid<double>(per_phi, phi_step);
    if (!(total > 0.0))
        throw std::invalid_argument("directivity: zero total radiated power");

    return 10.0 * std::log10(4.0 * pi * u_max / total);
}

double directivity_dbi(const FarFieldPattern &p)
{
    return directivity_dbi(p.grid(), power_pattern(p));
}

Peak find_peak(const AngularGrid &grid, std::span<const double> power)
{
    if (power.size() != grid.size() || power.empty())
        throw std::invalid_argument("find_peak: power sample count does not match grid");
    // ties within rounding resolve to the first sample, so the zenith of a sampled
    // pattern reports phi = 0 regardless of how its azimuth copies were rounded
    const double max = *std::max_element(power.begin(), power.end());
    const auto it = std::find_if(power.begin(), power.end(), [&](double v) { return v >= max * (1.0 - 1e-9); });
    Peak peak;
    peak.index = static_cast<std::size_t>(it - power.begin());
    peak.power = max;
    peak.theta = grid.theta()[peak.index / grid.phi_count()];
    peak.phi = grid.phi()[peak.index % grid.phi_count()];
    return peak;
}

std::vector<double> GreatCircleCut::power() const
{
    std::vector<double> out(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i)
        out[i] = std::norm(e_theta[i]) + std::norm(e_phi[i]);
    return out;
}

GreatCircleCut great_circle_cut(const FarFieldPattern &p, double phi_plane)
{
    const auto &grid = p.grid();
    const auto theta = grid.theta();
    GreatCircleCut cut;

    if (grid.is_theta_only())
    {
        const double phi0 = grid.phi().front();
        cut.phi_plane = phi0;
        cut.theta.assign(theta.begin(), theta.end());
        cut.phi.assign(theta.size(), phi0);
        cut.e_theta.assign(p.e_theta().begin(), p.e_theta().end());
        cut.e_phi.assign(p.e_phi().begin(), p.e_phi().end());
        return cut;
    }

    const std::size_t ip = grid.find_phi(phi_plane);
    if (ip == AngularGrid::npos)
        throw std::invalid_argument("great-circle cut: requested phi plane is not on the grid");
    const std::size_t io = grid.find_phi(phi_plane + pi);
    cut.phi_plane = grid.phi()[ip];

    auto push = [&](std::size_t it, std::size_t iphi, double signed_theta) {
        const std::size_t i = grid.index(it, iphi);
        cut.theta.push_back(signed_theta);
        cut.phi.push_back(grid.phi()[iphi]);
        cut.e_theta.push_back(p.e_theta()[i]);
        cut.e_phi.push_back(p.e_phi()[i]);
    };

    if (io != AngularGrid::npos)
    {
        const std::size_t stop = theta.front() <= kCoverageTol ? 1 : 0; // zenith shared by both halves
        for (std::size_t it = theta.size(); it-- > stop;)
            push(it, io, -theta[it]);
    }
    for (std::size_t it = 0; it < theta.size(); ++it)
        push(it, ip, theta[it]);
    return cut;
}

PatternMetrics compute_metrics(const FarFieldPattern &p, std::optional<double> hpbw_plane)
{
    const auto power = power_pattern(p);
    const Peak peak = find_peak(p.grid(), power);
    const GreatCircleCut cut = great_circle_cut(p, hpbw_plane.value_or(peak.phi));

    PatternMetrics m;
    m.hpbw_deg = hpbw_deg(cut.theta, cut.power());
    m.directivity_dbi = directivity_dbi(p.grid(), power);
    m.peak_theta_deg = rad_to_deg(peak.theta);
    m.peak_phi_deg = rad_to_deg(peak.phi);
    m.hpbw_plane_deg = rad_to_deg(cut.phi_plane);
    return m;
}

} // namespace widebeam
