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

#include "widebeam/array_synthesis.hpp"
#include "widebeam/bessel.hpp"
#include "widebeam/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace widebeam {

namespace {

constexpr double kCoverageTol = 1e-9;

Complex array_factor_at(const ArrayExcitation &exc, double u)
{
    Complex sum{0.0, 0.0};
    for (int m = -exc.m_max; m <= exc.m_max; ++m)
    {
        const double arg = two_pi * m * exc.spacing_over_lambda * u;
        sum += exc.coefficient(m) * Complex{std::cos(arg), std::sin(arg)};
    }
    return sum;
}

// Resample (theta, values) onto n uniform points over [0, pi].
std::vector<double> resample(const std::vector<double> &theta, const std::vector<double> &values,
                             const std::vector<double> &nodes)
{
    if (theta.size() == nodes.size())
    {
        bool same = true;
        for (std::size_t i = 0; i < nodes.size() && same; ++i)
            same = std::abs(theta[i] - nodes[i]) <= kCoverageTol;
        if (same)
            return values;
    }

    std::vector<double> out(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
    {
        const double t = std::clamp(nodes[i], theta.front(), theta.back());
        auto hi = std::lower_bound(theta.begin(), theta.end(), t);
        auto j = static_cast<std::size_t>(hi - theta.begin());
        if (j == theta.size())
            j = theta.size() - 1;
        if (j == 0 || theta[j] == t)
        {
            out[i] = values[j];
            continue;
        }
        const double f = (t - theta[j - 1]) / (theta[j] - theta[j - 1]);
        out[i] = values[j - 1] + f * (values[j] - values[j - 1]);
    }
    return out;
}

// Integrand F(t) sin(t) of the coefficient integral at the quadrature nodes.
std::vector<double> weighted_target(const SynthesisTarget &target, const std::vector<double> &nodes)
{
    const std::vector<double> samples = resample(target.theta, target.samples, nodes);
    const double floor = target.clip_floor;
    const std::size_t n = nodes.size();
    std::vector<double> g(n);

    if (target.kind == TargetKind::explicit_samples)
    {
        if (std::none_of(samples.begin(), samples.end(), [&](double v) { return v >= floor; }))
            throw std::invalid_argument("unusable target");
        for (std::size_t i = 0; i < n; ++i)
            g[i] = samples[i] * std::sin(nodes[i]);
        return g;
    }

    std::vector<bool> clipped(n), pole(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const double s = std::sin(nodes[i]);
        clipped[i] = samples[i] < floor;
        pole[i] = clipped[i] && s < floor;
        g[i] = s / std::max(samples[i], floor);
    }
    if (std::all_of(clipped.begin(), clipped.end(), [](bool c) { return c; }))
        throw std::invalid_argument("unusable target");

    // 0 * inf at theta = 0, pi: continue the integrand from the nearest unclipped sample
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!pole[i])
            continue;
        std::size_t best = n;
        for (std::size_t d = 1; d < n && best == n; ++d)
        {
            if (i >= d && !clipped[i - d])
                best = i - d;
            else if (i + d < n && !clipped[i + d])
                best = i + d;
        }
        g[i] = g[best];
    }
    return g;
}

} // namespace

void ArrayExcitation::validate() const
{
    if (m_max < 0)
        throw std::invalid_argument("m_max must be non-negative");
    if (!(spacing_over_lambda > 0.0) || !std::isfinite(spacing_over_lambda))
        throw std::invalid_argument("spacing_over_lambda must be finite and positive");
    if (coefficients.size() != static_cast<std::size_t>(2 * m_max + 1))
        throw std::invalid_argument("coefficient count must be 2*m_max + 1");
    for (const Complex &c : coefficients)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("coefficients must be finite");
}

SynthesisTarget SynthesisTarget::inverse_of_element(std::vector<double> theta, std::vector<double> element,
                                                    double clip_floor)
{
    SynthesisTarget t{TargetKind::inverse_of_element, std::move(theta), std::move(element), clip_floor};
    t.validate();
    return t;
}

SynthesisTarget SynthesisTarget::explicit_target(std::vector<double> theta, std::vector<double> target,
                                                 double clip_floor)
{
    SynthesisTarget t{TargetKind::explicit_samples, std::move(theta), std::move(target), clip_floor};
    t.validate();
    return t;
}

void SynthesisTarget::validate() const
{
    if (!(clip_floor > 0.0) || !std::isfinite(clip_floor))
        throw std::invalid_argument("clip_floor must be positive");
    if (theta.size() != samples.size() || theta.size() < 2)
        throw std::invalid_argument("synthesis target needs matching theta and sample columns");
    for (std::size_t i = 1; i < theta.size(); ++i)
        if (!(theta[i] > theta[i - 1]))
            throw std::invalid_argument("synthesis target theta must be strictly increasing");
    if (std::abs(theta.front()) > kCoverageTol || std::abs(theta.back() - pi) > kCoverageTol)
        throw std::invalid_argument("synthesis target must be defined on [0, pi]");
    for (double v : samples)
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("synthesis target samples must be finite and non-negative");
}

std::vector<Complex> array_factor(const ArrayExcitation &exc, std::span<const double> theta)
{
    exc.validate();
    std::vector<Complex> out(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i)
        out[i] = array_factor_at(exc, std::cos(theta[i]));
    return out;
}

std::vector<Complex> array_factor(const ArrayExcitation &exc, const AngularGrid &grid)
{
    if (!grid.is_theta_only())
        throw std::invalid_argument("array_factor needs a theta-only grid");
    return array_factor(exc, grid.theta());
}

std::vector<Complex> fourier_coefficients(const SynthesisTarget &target, int m_max, double spacing_over_lambda,
                                          std::size_t quadrature_samples)
{
    target.validate();
    if (m_max < 0)
        throw std::invalid_argument("m_max must be non-negative");
    if (!(spacing_over_lambda > 0.0))
        throw std::invalid_argument("spacing_over_lambda must be positive");
    if (quadrature_samples < 3)
        throw std::invalid_argument("quadrature needs at least 3 samples");

    const std::vector<double> nodes = linspace(0.0, pi, quadrature_samples);
    const std::vector<double> g = weighted_target(target, nodes);
    const double step = pi / double(quadrature_samples - 1);

    std::vector<double> cos_t(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        cos_t[i] = std::cos(nodes[i]);

    std::vector<Complex> coeffs;
    coeffs.reserve(static_cast<std::size_t>(2 * m_max + 1));
    std::vector<Complex> integrand(nodes.size());
    for (int m = -m_max; m <= m_max; ++m)
    {
        for (std::size_t i = 0; i < nodes.size(); ++i)
        {
            const double arg = -two_pi * m * spacing_over_lambda * cos_t[i];
            integrand[i] = g[i] * Complex{std::cos(arg), std::sin(arg)};
        }
        coeffs.push_back(quadrature::trapezoid<Complex>(integrand, step));
    }
    return coeffs;
}

ArrayExcitation synthesize_coefficients(const SynthesisTarget &target, int m_max, double spacing_over_lambda,
                                        std::size_t quadrature_samples)
{
    std::vector<Complex> coeffs = fourier_coefficients(target, m_max, spacing_over_lambda, quadrature_samples);
    const Complex c0 = coeffs[static_cast<std::size_t>(m_max)];
    if (!(std::abs(c0) > 0.0))
        throw std::invalid_argument("unusable target");
    for (Complex &c : coeffs)
        c /= c0;
    ArrayExcitation exc{m_max, spacing_over_lambda, std::move(coeffs)};
    exc.validate();
    return exc;
}

ArrayExcitation fejer_taper(ArrayExcitation exc)
{
    exc.validate();
    const double denom = exc.m_max + 1.0;
    for (int m = -exc.m_max; m <= exc.m_max; ++m)
        exc.coefficients[static_cast<std::size_t>(m + exc.m_max)] *= 1.0 - std::abs(m) / denom;
    const Complex c0 = exc.coefficient(0);
    if (std::abs(c0) > 0.0 && c0 != Complex{1.0, 0.0})
        for (Complex &c : exc.coefficients)
            c /= c0;
    return exc;
}

ArrayExcitation fejer_bessel_excitation(int m_max)
{
    if (m_max < 0)
        throw std::invalid_argument("m_max must be non-negative");
    ArrayExcitation exc;
    exc.m_max = m_max;
    exc.spacing_over_lambda = 0.5;
    exc.coefficients.clear();
    for (int m = -m_max; m <= m_max; ++m)
        exc.coefficients.emplace_back((1.0 - std::abs(m) / (m_max + 1.0)) * bessel_j0(m * pi), 0.0);
    // J0(0) = 1 and the m = 0 weight is 1, so c_0 is already 1
    return exc;
}

std::vector<double> composite_pattern(std::span<const double> element, const ArrayExcitation &exc,
                                      const AngularGrid &grid)
{
    if (element.size() != grid.theta_count())
        throw std::invalid_argument("element sample count does not match grid");
    for (double c : element)
        if (!std::isfinite(c) || c < 0.0)
            throw std::invalid_argument("element pattern must be finite and non-negative");
    const std::vector<Complex> af = array_factor(exc, grid);
    std::vector<double> out(af.size());
    for (std::size_t i = 0; i < af.size(); ++i)
        out[i] = std::abs(af[i]) * element[i];
    return out;
}

FarFieldPattern apply_linear_array(const FarFieldPattern &p, const ArrayExcitation &exc, const Vec3 &axis)
{
    exc.validate();
    if (std::abs(norm(axis) - 1.0) > 1e-9)
        throw std::invalid_argument("array axis must be a unit vector");

    const auto &grid = p.grid();
    std::vector<Complex> et(p.e_theta().begin(), p.e_theta().end());
    std::vector<Complex> ep(p.e_phi().begin(), p.e_phi().end());
    for (std::size_t it = 0; it < grid.theta_count(); ++it)
        for (std::size_t ip = 0; ip < grid.phi_count(); ++ip)
        {
            const std::size_t i = grid.index(it, ip);
            const Complex af = array_factor_at(exc, dot(direction(grid.theta()[it], grid.phi()[ip]), axis));
            et[i] *= af;
            ep[i] *= af;
        }
    return FarFieldPattern(grid, std::move(et), std::move(ep), p.frequency_hz());
}

} // namespace widebeam
