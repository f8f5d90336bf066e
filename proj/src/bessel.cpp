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

#include "widebeam/bessel.hpp"
#include "widebeam/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace widebeam {

namespace {

constexpr double kSeriesLimit = 12.0;

// J0(x) = sum_k (-1)^k (x/2)^(2k) / (k!)^2
double j0_series(double x)
{
    const long double q = -0.25L * static_cast<long double>(x) * static_cast<long double>(x);
    long double term = 1.0L;
    long double sum = 1.0L;
    // terms peak near k = |x|/2 and are negligible well before k = 200
    for (int k = 1; k < 200; ++k)
    {
        term *= q / (static_cast<long double>(k) * static_cast<long double>(k));
        sum += term;
        if (std::fabs(term) < 1e-22L)
            break;
    }
    return static_cast<double>(sum);
}

// J0(x) ~ sqrt(2/(pi x)) * (P(x) cos(w) - Q(x) sin(w)),  w = x - pi/4
//   P = sum_k (-1)^k a_{2k} / x^{2k},  Q = sum_k (-1)^k a_{2k+1} / x^{2k+1}
//   a_k = prod_{i=1..k} (-(2i-1)^2) / (k! 8^k)
// The series is asymptotic; summation stops at the smallest term.
double j0_asymptotic(double x)
{
    double p = 0.0;
    double q = 0.0;
    double a = 1.0; // a_k / x^k
    double last = INFINITY;
    for (int k = 0; k < 120; ++k)
    {
        if (k > 0)
        {
            const double odd = 2.0 * k - 1.0;
            a *= -(odd * odd) / (8.0 * k * x);
        }
        const double mag = std::abs(a);
        if (mag > last)
            break;
        last = mag;
        // (-1)^{floor(k/2)} applied to a_k / x^k
        const double signed_term = ((k / 2) % 2 == 0) ? a : -a;
        if (k % 2 == 0)
            p += signed_term;
        else
            q += signed_term;
        if (mag < 1e-17)
            break;
    }
    const double w = x - 0.25 * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(w) - q * std::sin(w));
}

} // namespace

double bessel_j0(double x)
{
    if (!std::isfinite(x) || std::abs(x) > bessel_j0_max_argument)
        throw std::domain_error("out of validated range");
    const double ax = std::abs(x);
    return ax <= kSeriesLimit ? j0_series(ax) : j0_asymptotic(ax);
}

} // namespace widebeam
