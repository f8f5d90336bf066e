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

#include "widebeam/angular_grid.hpp"
#include "widebeam/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace widebeam {

namespace {

// Grid values travel through text files with 12 significant digits.
constexpr double kAngleTol = 1e-9;
constexpr double kUniformityTol = 1e-6;

void check_strictly_increasing(const std::vector<double> &v, const char *name)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1]))
            throw std::invalid_argument(std::string(name) + " samples must be strictly increasing");
}

std::size_t steps_in(double range, double step, const char *name)
{
    if (!(step > 0.0) || !std::isfinite(step))
        throw std::invalid_argument(std::string(name) + " step must be positive");
    const double n = range / step;
    const double rounded = std::round(n);
    if (rounded < 1.0 || std::abs(n - rounded) > 1e-6)
        throw std::invalid_argument(std::string(name) + " step must divide its range evenly");
    return static_cast<std::size_t>(rounded);
}

} // namespace

std::string_view to_string(Domain d)
{
    return d == Domain::full_sphere ? "full-sphere" : "upper-hemisphere";
}

Domain domain_from_string(std::string_view s)
{
    if (s == "full-sphere")
        return Domain::full_sphere;
    if (s == "upper-hemisphere")
        return Domain::upper_hemisphere;
    throw std::invalid_argument("unknown domain tag '" + std::string(s) + "'");
}

std::vector<double> linspace(double first, double last, std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("linspace needs at least 2 points");
    std::vector<double> out(n);
    const double step = (last - first) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = first + step * double(i);
    out.back() = last;
    return out;
}

AngularGrid::AngularGrid(std::vector<double> theta, std::vector<double> phi, Domain domain)
    : theta_(std::move(theta)), phi_(std::move(phi)), domain_(domain)
{
    if (theta_.size() < 3)
        throw std::invalid_argument("angular grid needs at least 3 theta samples");
    if (phi_.empty())
        throw std::invalid_argument("angular grid needs at least 1 phi sample");
    check_strictly_increasing(theta_, "theta");
    check_strictly_increasing(phi_, "phi");

    for (double t : theta_)
        if (!std::isfinite(t) || t < -kAngleTol || t > pi + kAngleTol)
            throw std::invalid_argument("theta samples must lie within [0, pi]");
    for (double p : phi_)
        if (!std::isfinite(p) || p < -kAngleTol || p >= two_pi - kAngleTol)
            throw std::invalid_argument("phi samples must lie within [0, 2*pi)");

    // A single-phi hemisphere grid may describe a great-circle cut over [0, pi].
    if (domain_ == Domain::upper_hemisphere && phi_.size() > 1 && theta_.back() > half_pi + kAngleTol)
        throw std::invalid_argument("upper-hemisphere grid with phi coverage needs theta within [0, pi/2]");

    const double step = theta_step();
    for (std::size_t i = 1; i < theta_.size(); ++i)
        if (std::abs((theta_[i] - theta_[i - 1]) - step) > kUniformityTol * step)
            throw std::invalid_argument("theta samples must be uniformly spaced");
}

AngularGrid AngularGrid::theta_only(double theta_first, double theta_last, std::size_t n, Domain domain,
                                    double phi)
{
    return AngularGrid(linspace(theta_first, theta_last, n), {phi}, domain);
}

AngularGrid AngularGrid::sampled(Domain domain, double theta_step, double phi_step)
{
    const double theta_max = domain == Domain::full_sphere ? pi : half_pi;
    const std::size_t n_theta = steps_in(theta_max, theta_step, "theta");
    const std::size_t n_phi = steps_in(two_pi, phi_step, "phi");

    std::vector<double> phi(n_phi);
    for (std::size_t i = 0; i < n_phi; ++i)
        phi[i] = two_pi * double(i) / double(n_phi);
    return AngularGrid(linspace(0.0, theta_max, n_theta + 1), std::move(phi), domain);
}

std::size_t AngularGrid::find_phi(double phi, double tol) const
{
    double wrapped = std::fmod(phi, two_pi);
    if (wrapped < 0.0)
        wrapped += two_pi;
    for (std::size_t i = 0; i < phi_.size(); ++i)
    {
        const double d = std::abs(phi_[i] - wrapped);
        if (d <= tol || std::abs(d - two_pi) <= tol)
            return i;
    }
    return npos;
}

} // namespace widebeam
