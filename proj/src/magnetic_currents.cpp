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

#include "widebeam/magnetic_currents.hpp"
#include "widebeam/vec3.hpp"

#include <cmath>
#include <stdexcept>

namespace widebeam {

namespace {

double sinc(double x)
{
    return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
}

} // namespace

void MagneticCurrentSet::validate() const
{
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
        throw std::invalid_argument("current set frequency must be positive");
    for (const MagneticCurrent &e : elements)
    {
        if (std::abs(std::hypot(e.ux, e.uy) - 1.0) > 1e-9)
            throw std::invalid_argument("magnetic current orientation must be a unit vector");
        if (!(e.length > 0.0) || !std::isfinite(e.length))
            throw std::invalid_argument("magnetic current length must be positive");
        if (!std::isfinite(e.x) || !std::isfinite(e.y) || !std::isfinite(e.amplitude.real()) ||
            !std::isfinite(e.amplitude.imag()))
            throw std::invalid_argument("magnetic current values must be finite");
    }
}

MagneticCurrentSet mode1_currents(const PatchGeometry &g, double frequency_hz)
{
    const double y = 0.5 * (g.l_p + 2.0 * fringing_extension(g));
    MagneticCurrentSet set;
    set.frequency_hz = frequency_hz;
    set.elements = {
        {0.0, y, 1.0, 0.0, {1.0, 0.0}, g.w_p},
        {0.0, -y, 1.0, 0.0, {1.0, 0.0}, g.w_p},
    };
    set.validate();
    return set;
}

MagneticCurrentSet mode2_currents(const PatchGeometry &g, double frequency_hz, std::optional<double> separation)
{
    g.validate();
    const double s = separation.value_or(g.w_p);
    if (!(s > 0.0) || s > g.w_p)
        throw std::invalid_argument("mode-2 separation must lie in (0, w_p]");
    MagneticCurrentSet set;
    set.frequency_hz = frequency_hz;
    set.elements = {
        {0.5 * s, 0.0, 0.0, 1.0, {1.0, 0.0}, g.l_p},
        {-0.5 * s, 0.0, 0.0, 1.0, {-1.0, 0.0}, g.l_p},
    };
    set.validate();
    return set;
}

FarFieldPattern far_field(const MagneticCurrentSet &currents, const AngularGrid &grid)
{
    currents.validate();
    if (grid.domain() != Domain::upper_hemisphere)
        throw std::invalid_argument("far_field needs an upper-hemisphere grid");
    if (grid.theta().back() > half_pi + 1e-9)
        throw std::invalid_argument("far_field is only defined for theta within [0, pi/2]");

    const double k = two_pi * currents.frequency_hz / speed_of_light;
    std::vector<Complex> e_theta(grid.size());
    std::vector<Complex> e_phi(grid.size());

    for (std::size_t it = 0; it < grid.theta_count(); ++it)
    {
        const double theta = grid.theta()[it];
        const double st = std::sin(theta);
        const double ct = std::cos(theta);
        for (std::size_t ip = 0; ip < grid.phi_count(); ++ip)
        {
            const double phi = grid.phi()[ip];
            const double sp = std::sin(phi);
            const double cp = std::cos(phi);
            const Vec3 r{st * cp, st * sp, ct};
            const Vec3 theta_hat{ct * cp, ct * sp, -st};
            const Vec3 phi_hat{-sp, cp, 0.0};

            Complex et{0.0, 0.0};
            Complex ep{0.0, 0.0};
            for (const MagneticCurrent &e : currents.elements)
            {
                const Vec3 l{e.ux, e.uy, 0.0};
                const Vec3 v = cross(r, l);
                const double taper = sinc(0.5 * k * e.length * dot(r, l));
                const double path = k * (r.x * e.x + r.y * e.y);
                const Complex a = e.amplitude * taper * Complex{std::cos(path), std::sin(path)};
                et += a * dot(v, theta_hat);
                ep += a * dot(v, phi_hat);
            }
            const std::size_t i = grid.index(it, ip);
            e_theta[i] = et;
            e_phi[i] = ep;
        }
    }
    return FarFieldPattern(grid, std::move(e_theta), std::move(e_phi), currents.frequency_hz);
}

FarFieldPattern superpose_modes(const FarFieldPattern &p1, Complex w1, const FarFieldPattern &p2, Complex w2)
{
    if (!(p1.grid() == p2.grid()))
        throw std::invalid_argument("superpose_modes: patterns are sampled on different grids");
    std::vector<Complex> et(p1.grid().size());
    std::vector<Complex> ep(p1.grid().size());
    for (std::size_t i = 0; i < et.size(); ++i)
    {
        et[i] = w1 * p1.e_theta()[i] + w2 * p2.e_theta()[i];
        ep[i] = w1 * p1.e_phi()[i] + w2 * p2.e_phi()[i];
    }
    return FarFieldPattern(p1.grid(), std::move(et), std::move(ep), p1.frequency_hz());
}

} // namespace widebeam
