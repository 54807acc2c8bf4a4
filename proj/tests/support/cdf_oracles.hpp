// SPDX-License-Identifier: Apache-2.0
//
// dipolefade - channel statistics of randomly oriented dipole links
// Copyright (C) 2026 The dipolefade authors
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
//
// Test-side oracles: closed-form CDFs of the alignment factors and field
// magnitudes, obtained by antiderivatives independent of the library's PDF
// code. These back the Kolmogorov-Smirnov and chi-square sampling tests.

#ifndef DIPOLEFADE_TESTS_CDF_ORACLES_HPP
#define DIPOLEFADE_TESTS_CDF_ORACLES_HPP

#include <cmath>
#include <numbers>

namespace oracles {

// int arcosh(2u) du = u arcosh(2u) - sqrt(4u^2 - 1)/2, vanishing at u = 1/2.
inline double arcosh2u_antiderivative(double u) {
    return u * std::acosh(2.0 * u) - 0.5 * std::sqrt(4.0 * u * u - 1.0);
}

/// CDF of the near-field alignment factor.
inline double cdf_j_nf(double j) {
    if (j <= -1.0) return 0.0;
    if (j >= 1.0) return 1.0;
    if (j < 0.0) return 1.0 - cdf_j_nf(-j);
    const double arcosh2 = std::acosh(2.0);
    const double peak = arcosh2 / std::sqrt(3.0); // 1 / (2 beta_nf_bar)
    if (j <= 0.5) return 0.5 + peak * j;
    return 0.5 + peak * (j - arcosh2u_antiderivative(j) / arcosh2);
}

/// CDF of the far-field alignment factor.
inline double cdf_j_ff(double j) {
    if (j <= -1.0) return 0.0;
    if (j >= 1.0) return 1.0;
    if (j < 0.0) return 1.0 - cdf_j_ff(-j);
    const double half_pi = 0.5 * std::numbers::pi;
    return 0.5 +
           0.5 * (half_pi * j - (j * std::asin(j) + std::sqrt(1.0 - j * j) - 1.0));
}

/// CDF of the near-field magnitude on [1/2, 1].
inline double cdf_beta_nf(double beta) {
    if (beta <= 0.5) return 0.0;
    if (beta >= 1.0) return 1.0;
    return std::sqrt(4.0 * beta * beta - 1.0) / std::sqrt(3.0);
}

/// CDF of the far-field magnitude on [0, 1].
inline double cdf_beta_ff(double beta) {
    if (beta <= 0.0) return 0.0;
    if (beta >= 1.0) return 1.0;
    return 1.0 - std::sqrt(1.0 - beta * beta);
}

/// CDF of a projection of a uniform unit vector: U(-1, 1).
inline double cdf_uniform_projection(double x) {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return 0.5 * (x + 1.0);
}

} // namespace oracles

#endif // DIPOLEFADE_TESTS_CDF_ORACLES_HPP
