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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "cdf_oracles.hpp"
#include "cell_prob.hpp"
#include "dipolefade/montecarlo.hpp"
#include "dipolefade/quadrature.hpp"
#include "dipolefade/stats.hpp"

using namespace dipolefade;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// Field vector with prescribed statistics (v_re, v_im, rho):
// Re v = v_re e1, Im v = v_im (rho e1 + sqrt(1-rho^2) e2).
ComplexFieldVector make_field_vector(double v_re, double v_im, double rho) {
    const double s = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    CVec3 v;
    v.x = Complex(v_re, v_im * rho);
    v.y = Complex(0.0, v_im * s);
    return ComplexFieldVector(v);
}

ComplexFieldVector fig5_vector() {
    const UnitVector3 o_tx(std::sqrt(1.0 - 0.09), 0.0, 0.3);
    return field_vector(2.0, Complex(1e-2, 0.0), UnitVector3::unit_z(), o_tx);
}

// Exact conditional CDF of |h|^2 by reducing the disk integral to the
// arcsine segment formula (same reduction as the chi-square cell oracle).
double conditional_disk_cdf(const ComplexFieldVector &v, double s) {
    const double r = std::sqrt(s);
    const double v_re = v.v_re_norm(), v_im = v.v_im_norm(), rho = v.rho();
    const double omr = 1.0 - rho * rho;
    const double sq = std::sqrt(omr);
    auto segment = [&](double re) {
        const double m = re / v_re;
        const double disk = 1.0 - m * m;
        if (disk <= 0.0) return 0.0;
        const double root = std::sqrt(disk);
        const double im = std::sqrt(std::max(0.0, s - re * re));
        const double n_lo = (-im / v_im - rho * m) / sq;
        const double n_hi = (im / v_im - rho * m) / sq;
        const double c_lo = std::clamp(n_lo / root, -1.0, 1.0);
        const double c_hi = std::clamp(n_hi / root, -1.0, 1.0);
        if (c_hi <= c_lo) return 0.0;
        return (std::asin(c_hi) - std::asin(c_lo)) / (2.0 * kPi * v_re);
    };
    quad::Options opt;
    opt.abs_tol = 1e-12;
    opt.rel_tol = 1e-9;
    opt.max_panels = 4000;
    return quad::integrate(segment, -r, r, opt).value;
}

} // namespace

TEST_CASE("near-field alignment PDF values") {
    const double peak = std::acosh(2.0) / std::sqrt(3.0);
    CHECK(stats::pdf_j_nf(0.0) == Approx(peak).epsilon(1e-15));
    CHECK(stats::pdf_j_nf(0.0) == Approx(0.76035).epsilon(1e-4));
    CHECK(stats::pdf_j_nf(1.2) == 0.0);
    CHECK(stats::pdf_j_nf(-1.0) == 0.0);
    const double at08 = peak * (1.0 - std::acosh(1.6) / std::acosh(2.0));
    CHECK(stats::pdf_j_nf(0.8) == Approx(at08).epsilon(1e-15));
    CHECK(stats::pdf_j_nf(0.8) == Approx(0.15587).epsilon(1e-4));
    // Flat inside |j| <= 1/2.
    CHECK(stats::pdf_j_nf(0.49) == Approx(peak).epsilon(1e-15));
}

TEST_CASE("far-field alignment PDF values") {
    CHECK(stats::pdf_j_ff(0.0) == Approx(kPi / 4.0).epsilon(1e-15));
    CHECK(stats::pdf_j_ff(1.0) == Approx(0.0).epsilon(1e-15));
    CHECK(stats::pdf_j_ff(0.5) == Approx(kPi / 6.0).epsilon(1e-14));
    CHECK(stats::pdf_j_ff(1.01) == 0.0);
}

TEST_CASE("field magnitude PDFs with their integrable singularities") {
    CHECK(stats::pdf_beta_nf(1.0) == Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(stats::pdf_beta_nf(0.49) == 0.0);
    CHECK(std::isinf(stats::pdf_beta_nf(0.5)));
    CHECK(stats::pdf_beta_ff(0.0) == 0.0);
    CHECK(stats::pdf_beta_ff(0.6) == Approx(0.75).epsilon(1e-14));
    CHECK(std::isinf(stats::pdf_beta_ff(1.0)));
    CHECK(stats::pdf_beta_ff(1.01) == 0.0);
}

TEST_CASE("psi kernel") {
    CHECK(stats::psi(0.0) == Approx(1.0 / (2.0 * kPi)).epsilon(1e-15));
    CHECK(stats::psi(0.75) == Approx(1.0 / kPi).epsilon(1e-14));
    CHECK(std::isinf(stats::psi(1.0)));
    CHECK(stats::psi(-0.1) == 0.0);
    CHECK(stats::psi(1.1) == 0.0);
}

TEST_CASE("region PDF at zero") {
    CHECK(stats::region_pdf_at_zero(RegionKind::NearField) ==
          Approx(std::acosh(2.0) / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(stats::region_pdf_at_zero(RegionKind::FarField) ==
          Approx(kPi / 4.0).epsilon(1e-15));
    CHECK_THROWS_AS(stats::region_pdf_at_zero(RegionKind::Transition),
                    std::invalid_argument);
}

TEST_CASE("marginal PDFs are normalized and even") {
    quad::Options opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-9;
    opt.max_panels = 8000;
    CHECK(quad::integrate(stats::pdf_j_nf, -1.0, 1.0, opt).value == Approx(1.0).epsilon(1e-6));
    CHECK(quad::integrate(stats::pdf_j_ff, -1.0, 1.0, opt).value == Approx(1.0).epsilon(1e-6));
    CHECK(quad::integrate(stats::pdf_beta_nf, 0.5, 1.0, opt).value ==
          Approx(1.0).epsilon(1e-6));
    CHECK(quad::integrate(stats::pdf_beta_ff, 0.0, 1.0, opt).value ==
          Approx(1.0).epsilon(1e-6));

    for (double j = 0.0; j <= 1.1; j += 0.037) {
        CHECK(stats::pdf_j_nf(j) == Approx(stats::pdf_j_nf(-j)).epsilon(1e-10));
        CHECK(stats::pdf_j_ff(j) == Approx(stats::pdf_j_ff(-j)).epsilon(1e-10));
    }
}

TEST_CASE("alignment PDFs match their conditional-magnitude construction") {
    // J | beta ~ U(-beta, beta), so f_J(j) = int f_beta(b) / (2b) db over b >= |j|.
    quad::Options opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-9;
    opt.max_panels = 8000;
    for (double j : {0.0, 0.2, 0.45, 0.6, 0.9}) {
        auto nf = [&](double b) { return stats::pdf_beta_nf(b) / (2.0 * b); };
        const double expect_nf =
            quad::integrate(nf, std::max(j, 0.5), 1.0, opt).value;
        CHECK(stats::pdf_j_nf(j) == Approx(expect_nf).epsilon(1e-6));

        auto ff = [&](double b) { return stats::pdf_beta_ff(b) / (2.0 * b); };
        const double expect_ff = quad::integrate(ff, j, 1.0, opt).value;
        CHECK(stats::pdf_j_ff(j) == Approx(expect_ff).epsilon(1e-6));
    }
}

TEST_CASE("conditional PDF: center value, support, normalization") {
    const ComplexFieldVector v = fig5_vector();
    const stats::EllipseSupport e = stats::support_ellipse(v);

    CHECK(stats::pdf_h_conditional(Complex(0.0, 0.0), v) ==
          Approx(1.0 / (2.0 * kPi * e.b)).epsilon(1e-12));

    // Far outside the support ellipse the density vanishes.
    CHECK(stats::pdf_h_conditional(Complex(2.0 * e.v_re_norm, 2.0 * e.v_im_norm), v) ==
          0.0);
    CHECK(stats::pdf_h_conditional(Complex(1.001 * e.v_re_norm, 0.0), v) == 0.0);

    // 2D quadrature over the support integrates to one. The inner interval
    // is the exact ellipse slice at fixed Re(h); a fixed box would miss the
    // narrowing slice near the edges.
    quad::Options inner_opt;
    inner_opt.abs_tol = 1e-9;
    inner_opt.rel_tol = 1e-7;
    inner_opt.max_panels = 4000;
    auto marginal = [&](double re) {
        const double u1 = re / e.v_re_norm;
        const double omr = 1.0 - e.rho * e.rho;
        const double disc = omr * (1.0 - u1 * u1);
        if (disc <= 0.0) return 0.0;
        const double center = e.rho * u1;
        const double half = std::sqrt(disc);
        auto f = [&](double im) {
            return stats::pdf_h_conditional(Complex(re, im), v);
        };
        return quad::integrate(f, (center - half) * e.v_im_norm,
                               (center + half) * e.v_im_norm, inner_opt)
            .value;
    };
    quad::Options outer_opt = inner_opt;
    outer_opt.abs_tol = 1e-7;
    const double mass =
        quad::integrate(marginal, -e.v_re_norm, e.v_re_norm, outer_opt).value;
    CHECK(mass == Approx(1.0).epsilon(1e-3));

    // The Im marginal is uniform U(-v_re, v_re): the inner integral equals
    // 1/(2 v_re) for any |re| < v_re.
    for (double frac : {0.0, 0.3, -0.62, 0.9}) {
        CHECK(marginal(frac * e.v_re_norm) ==
              Approx(1.0 / (2.0 * e.v_re_norm)).epsilon(1e-4));
    }
}

TEST_CASE("conditional PDF refuses degenerate vectors") {
    const UnitVector3 ez = UnitVector3::unit_z();
    const ComplexFieldVector degenerate =
        field_vector(2.0, Complex(1e-2, 0.0), ez, ez);
    CHECK(degenerate.degenerate());
    CHECK_THROWS_AS(stats::pdf_h_conditional(Complex(0.0, 0.0), degenerate),
                    std::domain_error);
}

TEST_CASE("support ellipse closed forms") {
    const stats::EllipseSupport circle = stats::support_ellipse(make_field_vector(1, 1, 0));
    CHECK(circle.a == Approx(1.0).epsilon(1e-15));
    CHECK(circle.b == Approx(1.0).epsilon(1e-15));
    CHECK(circle.s0 == Approx(1.0).epsilon(1e-12));

    const stats::EllipseSupport e = stats::support_ellipse(make_field_vector(2, 1, 0));
    CHECK(e.a == Approx(2.5).epsilon(1e-15));
    CHECK(e.b == Approx(2.0).epsilon(1e-15));
    CHECK(e.s0 == Approx(1.0).epsilon(1e-12));

    // s0 is the smaller eigenvalue of E^T E with E the Gram-Schmidt factor:
    // eigenvalues solve l^2 - 2a l + b^2 = 0.
    for (double rho : {-0.8, -0.3, 0.0, 0.42, 0.694, 0.95}) {
        const stats::EllipseSupport s = stats::support_ellipse(make_field_vector(1.7, 0.6, rho));
        const double tr = s.v_re_norm * s.v_re_norm + s.v_im_norm * s.v_im_norm;
        const double det = s.b * s.b;
        const double smaller = 0.5 * (tr - std::sqrt(tr * tr - 4.0 * det));
        CHECK(s.s0 == Approx(smaller).epsilon(1e-12));
        CHECK(s.s0 >= 0.0);
        CHECK(s.s0 <= s.b + 1e-15);
        CHECK(s.b <= s.a + 1e-15);
    }

    // Degenerate input collapses the minor axis.
    const stats::EllipseSupport d = stats::support_ellipse(make_field_vector(1, 1, 1.0));
    CHECK(d.degenerate);
    CHECK(d.s0 == 0.0);
}

TEST_CASE("conditional PTE CDF bounds") {
    const ComplexFieldVector v = fig5_vector();
    const stats::EllipseSupport e = stats::support_ellipse(v);

    // The bounds coincide as s -> 0.
    const stats::CdfBounds tiny = stats::cdf_pte_conditional_bounds(1e-8 * e.s0, v);
    CHECK(tiny.upper / tiny.lower == Approx(1.0).epsilon(1e-7));

    const stats::CdfBounds half = stats::cdf_pte_conditional_bounds(0.5 * e.s0, v);
    CHECK(half.upper / half.lower == Approx(std::numbers::sqrt2).epsilon(1e-12));
    CHECK(half.lower == Approx(0.5 * e.s0 / (2.0 * e.b)).epsilon(1e-14));

    CHECK_THROWS_AS(stats::cdf_pte_conditional_bounds(e.s0, v), std::domain_error);
    CHECK_THROWS_AS(stats::cdf_pte_conditional_bounds(2.0 * e.s0, v), std::domain_error);

    // Sandwich against the exact conditional CDF from quadrature.
    for (double frac : {0.01, 0.1, 0.5, 0.9}) {
        const double s = frac * e.s0;
        const stats::CdfBounds b = stats::cdf_pte_conditional_bounds(s, v);
        const double exact = conditional_disk_cdf(v, s);
        CHECK(b.lower <= exact * (1.0 + 1e-9));
        CHECK(exact <= b.upper * (1.0 + 1e-9));
    }
}

TEST_CASE("small-s region CDF approximation") {
    const double eta_opt = 0.25;
    CHECK(stats::cdf_pte_region_approx(0.0, RegionKind::FarField, eta_opt) == 0.0);
    CHECK(stats::cdf_pte_region_approx(1e-4 * eta_opt, RegionKind::FarField, eta_opt) ==
          Approx(2.0 * (kPi / 4.0) * 1e-2).epsilon(1e-14));
    CHECK(stats::cdf_pte_region_approx(1e-4 * eta_opt, RegionKind::FarField, eta_opt) ==
          Approx(0.015708).epsilon(1e-4));
    CHECK(stats::cdf_pte_region_approx(1e-4 * eta_opt, RegionKind::NearField, eta_opt) ==
          Approx(0.015207).epsilon(1e-4));
    CHECK_THROWS_AS(stats::cdf_pte_region_approx(-1.0, RegionKind::FarField, eta_opt),
                    std::invalid_argument);
}

TEST_CASE("rhombus support membership") {
    const double kr = 2.0;
    const Complex ab(1e-2, 0.0);
    const stats::RhombusSupport r = stats::support_rhombus(kr, ab);
    CHECK(r.contains(r.h_coax));
    CHECK(r.contains(-r.h_copl));
    CHECK(r.contains(0.5 * r.h_coax + 0.49 * r.h_copl));
    CHECK_FALSE(r.contains(1.01 * r.h_coax));
    CHECK_FALSE(r.contains(0.6 * r.h_coax + 0.6 * r.h_copl));
}

TEST_CASE("full PDF grid: normalization, support, symmetry") {
    const double kr = 2.0;
    const Complex ab(1e-2, 0.0);
    stats::FullPdfOptions opt;
    opt.threads = 2;
    const stats::GridSpec grid = stats::GridSpec::rhombus_bbox(kr, ab, 0.05, 101);
    const stats::FullPdfResult full = stats::pdf_h_full(kr, ab, grid, opt);

    // The only admissible non-converged points sit on the +-h_copl ridge
    // where the density genuinely diverges (here: the origin of the odd grid).
    CHECK(full.singular_ridge_points == 1);
    CHECK(full.unconverged_points <= full.singular_ridge_points);
    CHECK(trapezoid_integral(full.curve) == Approx(1.0).epsilon(6e-3));

    const stats::RhombusSupport rhombus = stats::support_rhombus(kr, ab);
    const double cell = (full.curve.grid[1] - full.curve.grid[0]) +
                        (full.curve.grid2[1] - full.curve.grid2[0]);
    for (std::size_t iy = 0; iy < full.curve.ny(); ++iy) {
        for (std::size_t ix = 0; ix < full.curve.nx(); ++ix) {
            const Complex h(full.curve.grid[ix], full.curve.grid2[iy]);
            if (full.curve.at(ix, iy) > 0.0) {
                // Positive density only inside the rhombus (up to one cell).
                CHECK(rhombus.contains(h, cell / std::abs(rhombus.h_copl)));
            }
            // Even density: f(h) = f(-h) on the symmetric grid.
            const std::size_t mx = full.curve.nx() - 1 - ix;
            const std::size_t my = full.curve.ny() - 1 - iy;
            CHECK(full.curve.at(ix, iy) ==
                  Approx(full.curve.at(mx, my)).epsilon(1e-10).scale(1.0));
        }
    }
}

TEST_CASE("full PDF pointwise agrees with the public conditional route") {
    const double kr = 2.0;
    const Complex ab(1e-2, 0.0);
    const UnitVector3 d = UnitVector3::unit_z();
    const stats::RhombusSupport r = stats::support_rhombus(kr, ab);

    quad::Options qopt;
    qopt.abs_tol = 1e-10;
    qopt.rel_tol = 1e-9;
    qopt.max_panels = 8000;
    qopt.initial_panels = 16;

    stats::FullPdfOptions fopt;
    fopt.abs_tol = 1e-10;
    fopt.rel_tol = 1e-9;
    fopt.max_panels_per_point = 8000;

    // Generic interior points, away from the singular +-h_copl ridge and the
    // +-h_coax segment where the integrand concentrates.
    for (Complex h : {0.3 * r.h_coax + 0.4 * r.h_copl, -0.55 * r.h_coax + 0.2 * r.h_copl,
                      0.1 * r.h_coax - 0.75 * r.h_copl}) {
        auto integrand = [&](double x) {
            const UnitVector3 o_tx(std::sqrt(std::max(0.0, 1.0 - x * x)), 0.0, x);
            const ComplexFieldVector v = field_vector(kr, ab, d, o_tx);
            if (v.degenerate()) return 0.0;
            return stats::pdf_h_conditional(h, v);
        };
        const double reference = quad::integrate(integrand, 0.0, 1.0, qopt).value;

        stats::GridSpec one{h.real(), h.real() + 1.0, h.imag(), h.imag() + 1.0, 2, 2};
        const stats::FullPdfResult point = stats::pdf_h_full(kr, ab, one, fopt);
        CHECK(point.curve.at(0, 0) == Approx(reference).epsilon(1e-5));
    }
}

TEST_CASE("full PDF is thread-count invariant and phase-robust") {
    // A complex prefactor phase rotates the (Re v, Im v) split; the density
    // machinery must handle it, and parallel evaluation must be bit-identical
    // to sequential.
    const double kr = 2.0;
    const Complex ab = std::polar(1e-2, 0.7);
    const stats::GridSpec grid = stats::GridSpec::rhombus_bbox(kr, ab, 0.05, 41);

    stats::FullPdfOptions seq;
    stats::FullPdfOptions par;
    par.threads = 3;
    const stats::FullPdfResult a = stats::pdf_h_full(kr, ab, grid, seq);
    const stats::FullPdfResult b = stats::pdf_h_full(kr, ab, grid, par);
    REQUIRE(a.curve.density.size() == b.curve.density.size());
    for (std::size_t i = 0; i < a.curve.density.size(); ++i)
        CHECK(a.curve.density[i] == b.curve.density[i]); // bitwise

    CHECK(trapezoid_integral(a.curve) == Approx(1.0).epsilon(2e-2));

    // Pointwise cross-check against the public conditional route with the
    // same complex prefactor.
    const stats::RhombusSupport r = stats::support_rhombus(kr, ab);
    const Complex h = 0.25 * r.h_coax + 0.45 * r.h_copl;
    quad::Options qopt;
    qopt.abs_tol = 1e-10;
    qopt.rel_tol = 1e-9;
    qopt.max_panels = 8000;
    qopt.initial_panels = 16;
    auto integrand = [&](double x) {
        const UnitVector3 o_tx(std::sqrt(std::max(0.0, 1.0 - x * x)), 0.0, x);
        const ComplexFieldVector v = field_vector(kr, ab, UnitVector3::unit_z(), o_tx);
        if (v.degenerate()) return 0.0;
        return stats::pdf_h_conditional(h, v);
    };
    const double reference = quad::integrate(integrand, 0.0, 1.0, qopt).value;
    stats::GridSpec one{h.real(), h.real() + 1.0, h.imag(), h.imag() + 1.0, 2, 2};
    stats::FullPdfOptions tight;
    tight.abs_tol = 1e-10;
    tight.rel_tol = 1e-9;
    tight.max_panels_per_point = 8000;
    CHECK(stats::pdf_h_full(kr, ab, one, tight).curve.at(0, 0) ==
          Approx(reference).epsilon(1e-5));
}

TEST_CASE("field vector statistics stay in range over random geometries") {
    for (std::uint64_t i = 0; i < 3000; ++i) {
        mc::CounterRng rng(31, i);
        const UnitVector3 d = mc::sample_unit_sphere(rng);
        const UnitVector3 o_tx = mc::sample_unit_sphere(rng);
        const double kr = 0.1 * std::pow(10.0, 3.0 * rng.next_unit());
        const Complex ab = std::polar(1e-2, 6.28 * rng.next_unit());
        const ComplexFieldVector v = field_vector(kr, ab, d, o_tx);
        CHECK(v.rho() >= -1.0);
        CHECK(v.rho() <= 1.0);
        CHECK(v.v_re_norm() >= 0.0);
        CHECK(v.v_im_norm() >= 0.0);
    }
}

TEST_CASE("full PDF input validation") {
    const stats::GridSpec grid = stats::GridSpec::rhombus_bbox(2.0, Complex(1e-2, 0.0));
    stats::FullPdfOptions opt;
    opt.max_panels_per_point = 8;
    CHECK_THROWS_AS(stats::pdf_h_full(2.0, Complex(1e-2, 0.0), grid, opt),
                    std::invalid_argument);
    CHECK_THROWS_AS(stats::pdf_h_full(-2.0, Complex(1e-2, 0.0), grid),
                    std::invalid_argument);
}

TEST_CASE("closed-form CDF oracles are consistent with the library PDFs") {
    // The test-side antiderivatives must differentiate back to the PDFs.
    quad::Options opt;
    opt.abs_tol = 1e-11;
    opt.rel_tol = 1e-10;
    opt.max_panels = 8000;
    for (double j : {-0.9, -0.4, 0.1, 0.55, 0.85}) {
        const double mass_nf = quad::integrate(stats::pdf_j_nf, -1.0, j, opt).value;
        CHECK(oracles::cdf_j_nf(j) == Approx(mass_nf).epsilon(1e-8));
        const double mass_ff = quad::integrate(stats::pdf_j_ff, -1.0, j, opt).value;
        CHECK(oracles::cdf_j_ff(j) == Approx(mass_ff).epsilon(1e-8));
    }
    for (double b : {0.55, 0.7, 0.95}) {
        CHECK(oracles::cdf_beta_nf(b) ==
              Approx(quad::integrate(stats::pdf_beta_nf, 0.5, b, opt).value).epsilon(1e-7));
    }
    for (double b : {0.2, 0.6, 0.9}) {
        CHECK(oracles::cdf_beta_ff(b) ==
              Approx(quad::integrate(stats::pdf_beta_ff, 0.0, b, opt).value).epsilon(1e-7));
    }
}

TEST_CASE("distribution curve invariants: normalization and CDF shape") {
    DistributionCurve pdf;
    pdf.kind = CurveKind::Pdf1d;
    const int n = 501;
    pdf.grid.resize(n);
    pdf.density.resize(n);
    for (int i = 0; i < n; ++i) {
        pdf.grid[i] = -1.0 + 2.0 * double(i) / double(n - 1);
        pdf.density[i] = stats::pdf_j_ff(pdf.grid[i]);
    }
    CHECK(trapezoid_integral(pdf) == Approx(1.0).epsilon(1e-3));

    const DistributionCurve cdf = cdf_from_pdf(pdf);
    CHECK(cdf.kind == CurveKind::Cdf1d);
    for (std::size_t i = 1; i < cdf.density.size(); ++i)
        CHECK(cdf.density[i] >= cdf.density[i - 1]);
    CHECK(cdf.density.front() == 0.0);
    CHECK(cdf.density.back() == Approx(1.0).epsilon(1e-3));
}

TEST_CASE("cell probability oracle matches direct 2D integration") {
    const ComplexFieldVector v = fig5_vector();
    const stats::EllipseSupport e = stats::support_ellipse(v);

    const cellprob::Rect cell{-0.2 * e.v_re_norm, 0.35 * e.v_re_norm,
                              -0.15 * e.v_im_norm, 0.4 * e.v_im_norm};
    quad::Options opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-8;
    opt.max_panels = 4000;
    auto row = [&](double re) {
        auto f = [&](double im) { return stats::pdf_h_conditional(Complex(re, im), v); };
        return quad::integrate(f, cell.im_lo, cell.im_hi, opt).value;
    };
    const double direct = quad::integrate(row, cell.re_lo, cell.re_hi, opt).value;
    CHECK(cellprob::conditional_cell_probability(v, cell) == Approx(direct).epsilon(1e-6));
}
