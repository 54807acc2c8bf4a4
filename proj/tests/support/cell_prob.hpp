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
// High-accuracy per-cell probabilities of the conditional and full channel
// distributions, for chi-square expected counts. The conditional cell mass
// is reduced to a 1D integral: the preimage of a rectangle under the
// Gram-Schmidt map is a parallelogram in the unit disk, where the
// projection density 1/(2 pi sqrt(1 - m^2 - n^2)) integrates over n to an
// arcsine difference. The fully random cell mass adds one more averaging
// integral over the TX-side projection.

#ifndef DIPOLEFADE_TESTS_CELL_PROB_HPP
#define DIPOLEFADE_TESTS_CELL_PROB_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dipolefade/model.hpp"
#include "dipolefade/quadrature.hpp"

namespace cellprob {

struct Rect {
    double re_lo, re_hi;
    double im_lo, im_hi;
};

/// P(h in rect) under the conditional law with statistics (v_re, v_im, rho).
inline double conditional_cell_probability(double v_re, double v_im, double rho,
                                           const Rect &cell) {
    if (!(v_re > 0.0) || !(v_im > 0.0)) return 0.0; // line mass, measure zero
    const double omr = 1.0 - rho * rho;
    const double two_pi = 2.0 * std::numbers::pi;

    const double m_lo = std::max(cell.re_lo / v_re, -1.0);
    const double m_hi = std::min(cell.re_hi / v_re, 1.0);
    if (!(m_hi > m_lo)) return 0.0;

    if (omr < 1e-24) {
        // Degenerate slice: h lives on the segment h = (v_re + j rho v_im) m
        // with m ~ U(-1, 1).
        double lo = m_lo, hi = m_hi;
        const double s = rho * v_im;
        double n_lo = cell.im_lo / s, n_hi = cell.im_hi / s;
        if (s < 0.0) std::swap(n_lo, n_hi);
        lo = std::max(lo, n_lo);
        hi = std::min(hi, n_hi);
        return hi > lo ? 0.5 * (hi - lo) : 0.0;
    }

    const double sq = std::sqrt(omr);
    auto segment = [&](double m) {
        const double disk = 1.0 - m * m;
        if (disk <= 0.0) return 0.0;
        const double root = std::sqrt(disk);
        const double n_lo = (cell.im_lo / v_im - rho * m) / sq;
        const double n_hi = (cell.im_hi / v_im - rho * m) / sq;
        const double c_lo = std::clamp(n_lo / root, -1.0, 1.0);
        const double c_hi = std::clamp(n_hi / root, -1.0, 1.0);
        if (c_hi <= c_lo) return 0.0;
        return (std::asin(c_hi) - std::asin(c_lo)) / two_pi;
    };

    dipolefade::quad::Options opt;
    opt.abs_tol = 1e-12;
    opt.rel_tol = 1e-9;
    opt.max_panels = 4000;
    opt.initial_panels = 8; // cells grazing the ellipse have narrow support
    return dipolefade::quad::integrate(segment, m_lo, m_hi, opt).value;
}

inline double conditional_cell_probability(const dipolefade::ComplexFieldVector &v,
                                           const Rect &cell) {
    return conditional_cell_probability(v.v_re_norm(), v.v_im_norm(), v.rho(), cell);
}

/// P(h in rect) under fully random orientations:
/// the average of the conditional cell mass over d^T o_tx ~ U(-1, 1),
/// which is even in the projection.
inline double full_cell_probability(double kr, dipolefade::Complex alpha_bar,
                                    const Rect &cell) {
    using namespace dipolefade;
    const UnitVector3 d = UnitVector3::unit_z();
    auto by_projection = [&](double x) {
        const UnitVector3 o_tx(std::sqrt(std::max(0.0, 1.0 - x * x)), 0.0, x);
        const ComplexFieldVector v = field_vector(kr, alpha_bar, d, o_tx);
        return conditional_cell_probability(v, cell);
    };
    quad::Options opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-7;
    opt.max_panels = 4000;
    opt.initial_panels = 16; // rhombus-edge cells are covered on narrow x windows
    return quad::integrate(by_projection, 0.0, 1.0, opt).value;
}

} // namespace cellprob

#endif // DIPOLEFADE_TESTS_CELL_PROB_HPP
