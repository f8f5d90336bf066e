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

/// Largest |x| for which bessel_j0 is validated.
inline constexpr double bessel_j0_max_argument = 100.0;

/**
 * Bessel function of the first kind, order zero.
 *
 * Power series for |x| <= 12 (summed in long double), Hankel asymptotic expansion
 * beyond. Absolute error below 1e-9 over |x| <= 100; larger |x| throws
 * std::domain_error("out of validated range").
 */
double bessel_j0(double x);

} // namespace widebeam
