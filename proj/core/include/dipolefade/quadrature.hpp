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
// Globally adaptive Gauss-Kronrod (G7,K15) panel integration. All nodes are
// interior, so endpoint singularities are never evaluated; integrable
// singularities converge through panel subdivision. Non-finite integrand
// values are counted and treated as zero, which keeps panel sums finite
// while subdivision isolates the offending point.

#ifndef DIPOLEFADE_QUADRATURE_HPP
#define DIPOLEFADE_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace dipolefade::quad {

struct Options {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    int max_panels = 2000;
    /// Uniform pre-split of [a, b] before adaptive refinement. Guards
    /// against integrands whose support is much narrower than the interval
    /// (a single panel would see zeros at every node and stop).
    int initial_panels = 1;
};

struct Result {
    double value = 0.0;
    double error = 0.0; ///< accumulated error estimate
    bool converged = false;
    int panels = 0;
    int nonfinite_evaluations = 0;

    explicit operator double() const { return value; }
};

namespace detail {

// Positive K15 abscissae; the odd-indexed ones (1,3,5) plus the center are
// the G7 nodes.
inline constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
inline constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
inline constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel &o) const { return error < o.error; }
};

template <class F>
Panel gk15(F &&f, double a, double b, int &nonfinite) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    auto eval = [&](double x) {
        const double y = f(x);
        if (!std::isfinite(y)) {
            ++nonfinite;
            return 0.0;
        }
        return y;
    };

    const double fc = eval(center);
    double k15 = kWgk[7] * fc;
    double g7 = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double pair = eval(center + dx) + eval(center - dx);
        k15 += kWgk[i] * pair;
        if (i % 2 == 1) g7 += kWg[i / 2] * pair;
    }
    k15 *= half;
    g7 *= half;
    return {a, b, k15, std::abs(k15 - g7)};
}

} // namespace detail

/// Integrate f over [a, b] to the requested tolerance by refining the panel
/// with the largest error estimate.
template <class F>
Result integrate(F &&f, double a, double b, const Options &opt = {}) {
    Result res;
    if (a == b) {
        res.converged = true;
        return res;
    }

    std::priority_queue<detail::Panel> queue;
    double total_value = 0.0;
    double total_error = 0.0;
    double frozen_error = 0.0; // panels too narrow to bisect in floating point
    const int splits = std::max(1, opt.initial_panels);
    for (int i = 0; i < splits; ++i) {
        const double pa = a + (b - a) * double(i) / double(splits);
        const double pb = a + (b - a) * double(i + 1) / double(splits);
        detail::Panel p = detail::gk15(f, pa, pb, res.nonfinite_evaluations);
        total_value += p.value;
        total_error += p.error;
        queue.push(p);
    }
    res.panels = splits;

    while (total_error + frozen_error >
           std::max(opt.abs_tol, opt.rel_tol * std::abs(total_value))) {
        if (res.panels >= opt.max_panels || queue.empty()) break;
        detail::Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
            // Cannot bisect further; keep the contribution and move on.
            total_error -= worst.error;
            frozen_error += worst.error;
            continue;
        }
        total_value -= worst.value;
        total_error -= worst.error;
        detail::Panel left = detail::gk15(f, worst.a, mid, res.nonfinite_evaluations);
        detail::Panel right = detail::gk15(f, mid, worst.b, res.nonfinite_evaluations);
        total_value += left.value + right.value;
        total_error += left.error + right.error;
        queue.push(left);
        queue.push(right);
        ++res.panels;
    }
    total_error += frozen_error;

    res.value = total_value;
    res.error = total_error;
    res.converged =
        total_error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total_value));
    return res;
}

} // namespace dipolefade::quad

#endif // DIPOLEFADE_QUADRATURE_HPP
