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

#include <cstddef>
#include <span>
#include <stdexcept>

namespace widebeam::quadrature {

/**
 * Composite trapezoid rule over uniformly spaced samples.
 *
 *   integral ~= step * (f_0 / 2 + f_1 + ... + f_{n-2} + f_{n-1} / 2)
 *
 * T may be any type closed under addition and scaling by double (double, std::complex<double>).
 */
template <typename T>
T trapezoid(std::span<const T> samples, double step)
{
    if (samples.size() < 2)
        throw std::invalid_argument("trapezoid rule needs at least 2 samples");
    T interior{};
    for (std::size_t i = 1; i + 1 < samples.size(); ++i)
        interior += samples[i];
    return step * ((samples.front() + samples.back()) * 0.5 + interior);
}

/// Trapezoid rule for a periodic integrand sampled at n points of a full period
/// (the closing sample f(x0 + period) is implied, not stored).
template <typename T>
T periodic_trapezoid(std::span<const T> samples, double step)
{
    if (samples.empty())
        throw std::invalid_argument("periodic trapezoid rule needs at least 1 sample");
    T sum{};
    for (const T &v : samples)
        sum += v;
    return step * sum;
}

} // namespace widebeam::quadrature
