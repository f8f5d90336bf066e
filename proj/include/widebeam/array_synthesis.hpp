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

#include "widebeam/angular_grid.hpp"
#include "widebeam/constants.hpp"
#include "widebeam/far_field_pattern.hpp"
#include "widebeam/vec3.hpp"

#include <span>
#include <vector>

namespace widebeam {

/// Excitation of a uniform linear array with 2M+1 elements.
struct ArrayExcitation
{
    int m_max = 0;
    double spacing_over_lambda = 0.5;
    /// c_{-M} ... c_{M}, ascending m.
    std::vector<Complex> coefficients{Complex{1.0, 0.0}};

    Complex coefficient(int m) const { return coefficients.at(static_cast<std::size_t>(m + m_max)); }

    /// Throws std::invalid_argument when the invariants do not hold.
    void validate() const;
};

enum class TargetKind
{
    inverse_of_element, // F = 1 / max(C, clip_floor)
    explicit_samples    // F given directly
};

/// Desired array factor, sampled over theta in [0, pi] (angle from the array axis).
struct SynthesisTarget
{
    TargetKind kind = TargetKind::explicit_samples;
    std::vector<double> theta;   // rad, increasing, spanning [0, pi]
    std::vector<double> samples; // element C (inverse kind) or target F, non-negative
    double clip_floor = 1e-6;

    static SynthesisTarget inverse_of_element(std::vector<double> theta, std::vector<double> element,
                                              double clip_floor = 1e-6);
    static SynthesisTarget explicit_target(std::vector<double> theta, std::vector<double> target,
                                           double clip_floor = 1e-6);

    void validate() const;
};

inline constexpr std::size_t default_quadrature_samples = 4001;

/// F(theta) = sum_m c_m exp(j 2 pi m (d/lambda) cos(theta)).
std::vector<Complex> array_factor(const ArrayExcitation &exc, std::span<const double> theta);

/// Array factor on a theta-only grid.
std::vector<Complex> array_factor(const ArrayExcitation &exc, const AngularGrid &grid);

/**
 * Fourier coefficients c_m = int_0^pi F(t) exp(-j 2 pi m (d/lambda) cos t) sin t dt,
 * m = -M..M, without normalization.
 *
 * The target is linearly resampled onto `quadrature_samples` uniform points and
 * integrated with the composite trapezoid rule. For inverse-of-element targets the
 * integrand at poles where both C and sin(t) fall below the clip floor is continued
 * from the nearest unclipped sample.
 */
std::vector<Complex> fourier_coefficients(const SynthesisTarget &target, int m_max, double spacing_over_lambda,
                                          std::size_t quadrature_samples = default_quadrature_samples);

/// Fourier coefficients normalized to c_0 = 1.
/// Throws std::invalid_argument("unusable target") for targets entirely below the clip floor.
ArrayExcitation synthesize_coefficients(const SynthesisTarget &target, int m_max, double spacing_over_lambda,
                                        std::size_t quadrature_samples = default_quadrature_samples);

/// Fejer weights (1 - |m| / (M + 1)), renormalized to c_0 = 1.
ArrayExcitation fejer_taper(ArrayExcitation exc);

/// Closed form of the Fejer-tapered inverse-sin(theta) design at d = lambda/2:
/// c_m = (1 - |m| / (M + 1)) J0(m pi), normalized to c_0 = 1.
ArrayExcitation fejer_bessel_excitation(int m_max);

/// |F(theta)| * C(theta) on a theta-only grid (pattern multiplication).
std::vector<double> composite_pattern(std::span<const double> element, const ArrayExcitation &exc,
                                      const AngularGrid &grid);

/// Multiply a sampled pattern by the factor of a linear array along `axis`
/// (unit vector): the array angle is cos(theta_axis) = r_hat . axis.
FarFieldPattern apply_linear_array(const FarFieldPattern &p, const ArrayExcitation &exc, const Vec3 &axis);

} // namespace widebeam
