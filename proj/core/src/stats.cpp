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

#include "dipolefade/stats.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include "dipolefade/parallel.hpp"
#include "dipolefade/quadrature.hpp"

namespace dipolefade::stats {

namespace {

constexpr double kPi = std::numbers::pi;
const double kArcosh2 = std::acosh(2.0);
// Mean near-field magnitude; normalizes the near-field alignment PDF.
const double kBetaNfBar = std::sqrt(3.0) / (2.0 * kArcosh2);

// Conditional density of h expressed directly in the (v_Re, v_Im, rho)
// statistics. Shared by the public conditional PDF and the grid evaluator.
double conditional_density(double h_re, double h_im, double v_re, double v_im,
                           double rho) {
    const double omr = 1.0 - rho * rho;
    if (!(omr > 0.0) || !(v_re > 0.0) || !(v_im > 0.0)) return 0.0;
    const double u1 = h_re / v_re;
    const double u2 = h_im / v_im;
    const double w2 = (u2 - rho * u1) / std::sqrt(omr);
    const double radius2 = u1 * u1 + w2 * w2;
    if (radius2 >= 1.0) return 0.0;
    const double b = v_re * v_im * std::sqrt(omr);
    return 1.0 / (2.0 * kPi * b * std::sqrt(1.0 - radius2));
}

// Per-kr constants of the field vector: v = p b_nf + q b_ff.
struct FieldWeights {
    double p_re, p_im, q_re, q_im;
};

FieldWeights field_weights(double kr, Complex alpha_bar) {
    const Complex alpha = alpha_bar * std::exp(Complex(0.0, -kr));
    const double inv = 1.0 / kr;
    const Complex p = alpha * Complex(inv * inv * inv, inv * inv);
    const Complex q = alpha * (0.5 * inv);
    return {p.real(), p.imag(), q.real(), q.imag()};
}

// Statistics of the field vector as a function of the TX-side projection
// x = d^T o_tx, using the algebraic identities
//   ||b_nf||^2 = (1 + 3 x^2)/4, ||b_ff||^2 = 1 - x^2,
//   b_nf . b_ff = -(1 - x^2)/2.
struct ConditionalSlice {
    double v_re, v_im, rho;
};

ConditionalSlice conditional_slice(const FieldWeights &w, double x) {
    const double bnf2 = 0.25 * (1.0 + 3.0 * x * x);
    const double bff2 = 1.0 - x * x;
    const double cross = -0.5 * (1.0 - x * x);
    const double vre2 =
        w.p_re * w.p_re * bnf2 + w.q_re * w.q_re * bff2 + 2.0 * w.p_re * w.q_re * cross;
    const double vim2 =
        w.p_im * w.p_im * bnf2 + w.q_im * w.q_im * bff2 + 2.0 * w.p_im * w.q_im * cross;
    const double dot = w.p_re * w.p_im * bnf2 + w.q_re * w.q_im * bff2 +
                       (w.p_re * w.q_im + w.p_im * w.q_re) * cross;
    const double v_re = std::sqrt(std::max(vre2, 0.0));
    const double v_im = std::sqrt(std::max(vim2, 0.0));
    const double denom = v_re * v_im;
    const double rho = denom > 0.0 ? dot / denom : 0.0;
    return {v_re, v_im, rho};
}

// Uniform axis over [lo, hi]. Symmetric ranges are mirrored exactly so the
// evaluation lattice satisfies grid[n-1-i] == -grid[i] bitwise; together
// with the pointwise-even integrand this makes the tabulated density
// exactly even.
std::vector<double> make_axis(double lo, double hi, int n) {
    std::vector<double> axis(n);
    for (int i = 0; i < n; ++i)
        axis[i] = lo + (hi - lo) * double(i) / double(n - 1);
    if (lo == -hi) {
        for (int i = 0; i < n / 2; ++i) axis[n - 1 - i] = -axis[i];
        if (n % 2 == 1) axis[n / 2] = 0.0;
    }
    return axis;
}

// True iff h lies on the open segment between -h_copl and +h_copl, where
// the fully random density has its logarithmic ridge.
bool on_copl_ridge(Complex h, Complex hp) {
    const double mag = std::abs(h);
    const double ref = std::abs(hp);
    if (mag >= ref * (1.0 - 1e-12)) return false;
    if (mag == 0.0) return true;
    const double cross = hp.real() * h.imag() - hp.imag() * h.real();
    return std::abs(cross) <= 1e-12 * ref * mag;
}

} // namespace

double pdf_j_nf(double j) {
    const double aj = std::abs(j);
    if (aj >= 1.0) return 0.0;
    const double peak = 1.0 / (2.0 * kBetaNfBar);
    if (aj <= 0.5) return peak;
    return peak * (1.0 - std::acosh(2.0 * aj) / kArcosh2);
}

double pdf_j_ff(double j) {
    const double aj = std::abs(j);
    if (aj > 1.0) return 0.0;
    return 0.5 * (0.5 * kPi - std::asin(aj));
}

double pdf_beta_nf(double beta) {
    if (beta < 0.5 || beta > 1.0) return 0.0;
    const double det = 4.0 * beta * beta - 1.0;
    if (det <= 0.0) return std::numeric_limits<double>::infinity();
    return 4.0 / std::sqrt(3.0) * beta / std::sqrt(det);
}

double pdf_beta_ff(double beta) {
    if (beta < 0.0 || beta > 1.0) return 0.0;
    const double det = 1.0 - beta * beta;
    if (det <= 0.0) return std::numeric_limits<double>::infinity();
    return beta / std::sqrt(det);
}

double psi(double x) {
    if (x < 0.0 || x > 1.0) return 0.0;
    if (x >= 1.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (2.0 * kPi * std::sqrt(1.0 - x));
}

double region_pdf_at_zero(RegionKind region) {
    switch (region) {
        case RegionKind::NearField: return 1.0 / (2.0 * kBetaNfBar);
        case RegionKind::FarField: return kPi / 4.0;
        case RegionKind::Transition:
            throw std::invalid_argument(
                "region_pdf_at_zero: no one-dimensional alignment law in the transition");
    }
    throw std::invalid_argument("region_pdf_at_zero: unknown region");
}

EllipseSupport support_ellipse(const ComplexFieldVector &v) {
    EllipseSupport e;
    e.v_re_norm = v.v_re_norm();
    e.v_im_norm = v.v_im_norm();
    e.rho = v.rho();
    e.degenerate = v.degenerate();
    e.a = 0.5 * (e.v_re_norm * e.v_re_norm + e.v_im_norm * e.v_im_norm);
    const double omr = std::max(0.0, 1.0 - e.rho * e.rho);
    e.b = e.v_re_norm * e.v_im_norm * std::sqrt(omr);
    if (e.degenerate) {
        e.s0 = 0.0;
        return e;
    }
    const double disc = std::max(0.0, e.a * e.a - e.b * e.b);
    e.s0 = e.a - std::sqrt(disc);
    return e;
}

double pdf_h_conditional(Complex h, const ComplexFieldVector &v) {
    if (v.degenerate())
        throw std::domain_error(
            "pdf_h_conditional: degenerate field vector, the conditional distribution "
            "is supported on a line segment (measure zero in the plane)");
    return conditional_density(h.real(), h.imag(), v.v_re_norm(), v.v_im_norm(), v.rho());
}

CdfBounds cdf_pte_conditional_bounds(double s, const ComplexFieldVector &v) {
    const EllipseSupport e = support_ellipse(v);
    if (e.degenerate)
        throw std::domain_error("cdf_pte_conditional_bounds: degenerate field vector");
    if (!(s < e.s0))
        throw std::domain_error("cdf_pte_conditional_bounds: requires s < s0");
    if (s < 0.0) throw std::domain_error("cdf_pte_conditional_bounds: requires s >= 0");
    const double lower = s / (2.0 * e.b);
    return {lower, lower / std::sqrt(1.0 - s / e.s0)};
}

double cdf_pte_region_approx(double s, RegionKind region, double eta_opt) {
    if (!(s >= 0.0)) throw std::invalid_argument("cdf_pte_region_approx: s must be >= 0");
    if (!(eta_opt > 0.0))
        throw std::invalid_argument("cdf_pte_region_approx: eta_opt must be > 0");
    return 2.0 * region_pdf_at_zero(region) * std::sqrt(s / eta_opt);
}

bool RhombusSupport::contains(Complex h, double tol) const {
    // Solve h = u h_coax + w h_copl over the reals.
    const double det = h_coax.real() * h_copl.imag() - h_coax.imag() * h_copl.real();
    const double scale = std::max(std::abs(h_coax), std::abs(h_copl));
    if (std::abs(det) < 1e-300) return std::abs(h) <= scale * (1.0 + tol);
    const double u = (h.real() * h_copl.imag() - h.imag() * h_copl.real()) / det;
    const double w = (h_coax.real() * h.imag() - h_coax.imag() * h.real()) / det;
    return std::abs(u) + std::abs(w) <= 1.0 + tol;
}

RhombusSupport support_rhombus(double kr, Complex alpha_bar) {
    return {h_coax(kr, alpha_bar), h_copl(kr, alpha_bar)};
}

GridSpec GridSpec::rhombus_bbox(double kr, Complex alpha_bar, double padding, int n) {
    const RhombusSupport r = support_rhombus(kr, alpha_bar);
    const double re_max =
        std::max(std::abs(r.h_coax.real()), std::abs(r.h_copl.real())) * (1.0 + padding);
    const double im_max =
        std::max(std::abs(r.h_coax.imag()), std::abs(r.h_copl.imag())) * (1.0 + padding);
    return {-re_max, re_max, -im_max, im_max, n, n};
}

FullPdfResult pdf_h_full(double kr, Complex alpha_bar, const GridSpec &grid,
                         const FullPdfOptions &opt) {
    if (!(kr > 0.0)) throw std::invalid_argument("pdf_h_full: kr must be > 0");
    if (opt.max_panels_per_point < 16)
        throw std::invalid_argument("pdf_h_full: panel budget must be >= 16");
    if (grid.nx < 2 || grid.ny < 2)
        throw std::invalid_argument("pdf_h_full: grid must be at least 2x2");

    FullPdfResult res;
    res.curve.kind = CurveKind::Pdf2d;
    res.curve.grid = make_axis(grid.re_min, grid.re_max, grid.nx);
    res.curve.grid2 = make_axis(grid.im_min, grid.im_max, grid.ny);
    res.curve.density.assign(std::size_t(grid.nx) * std::size_t(grid.ny), 0.0);

    const RhombusSupport rhombus = support_rhombus(kr, alpha_bar);
    for (double im : res.curve.grid2)
        for (double re : res.curve.grid)
            if (on_copl_ridge(Complex(re, im), rhombus.h_copl))
                ++res.singular_ridge_points;

    const FieldWeights weights = field_weights(kr, alpha_bar);
    const std::size_t total = res.curve.density.size();

    std::atomic<int> unconverged{0};
    std::mutex err_mutex;
    double max_err = 0.0;

    parallel_for(total, opt.threads, [&](std::size_t begin, std::size_t end) {
        quad::Options qopt;
        qopt.abs_tol = opt.abs_tol;
        qopt.rel_tol = opt.rel_tol;
        qopt.max_panels = opt.max_panels_per_point;
        qopt.initial_panels = std::min(opt.initial_panels_per_point, opt.max_panels_per_point / 2);
        double worst = 0.0;
        int missed = 0;
        for (std::size_t idx = begin; idx < end; ++idx) {
            const double h_re = res.curve.grid[idx % grid.nx];
            const double h_im = res.curve.grid2[idx / grid.nx];
            // The conditional slice statistics are even in x, so the average
            // over x ~ U(-1, 1) reduces to the integral over (0, 1).
            auto integrand = [&](double x) {
                const ConditionalSlice s = conditional_slice(weights, x);
                return conditional_density(h_re, h_im, s.v_re, s.v_im, s.rho);
            };
            const quad::Result q = quad::integrate(integrand, 0.0, 1.0, qopt);
            res.curve.density[idx] = q.value;
            if (!q.converged) {
                ++missed;
                worst = std::max(worst, q.error);
            }
        }
        unconverged.fetch_add(missed, std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(err_mutex);
        max_err = std::max(max_err, worst);
    });

    res.unconverged_points = unconverged.load();
    res.max_error = max_err;
    return res;
}

} // namespace dipolefade::stats
