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
// Closed-form channel statistics under i.i.d. uniformly random 3D antenna
// orientations: marginal densities of the alignment factors and field
// magnitudes, the conditional density of the complex channel coefficient
// given the TX side, small-s CDF bounds and approximations, and the
// numerically integrated full channel-coefficient density.

#ifndef DIPOLEFADE_STATS_HPP
#define DIPOLEFADE_STATS_HPP

#include <complex>

#include "dipolefade/curve.hpp"
#include "dipolefade/model.hpp"
#include "dipolefade/region.hpp"

namespace dipolefade::stats {

/// Marginal PDF of the near-field alignment factor. Flat at 1/(2 beta_nf_bar)
/// on |j| <= 1/2 with beta_nf_bar = sqrt(3)/(2 arcosh 2), then decays to zero
/// at |j| = 1. Even, supported on [-1, 1].
double pdf_j_nf(double j);

/// Marginal PDF of the far-field alignment factor:
/// (pi/2 - arcsin|j|) / 2 on [-1, 1], zero outside.
double pdf_j_ff(double j);

/// PDF of the near-field magnitude on [1/2, 1]; integrable singularity at
/// 1/2 is reported as +infinity.
double pdf_beta_nf(double beta);

/// PDF of the far-field magnitude on [0, 1]; integrable singularity at 1 is
/// reported as +infinity.
double pdf_beta_ff(double beta);

/// Joint density kernel of two orthonormal projections of a uniformly
/// distributed unit vector: psi(x) = 1/(2 pi sqrt(1 - x)) on [0, 1], zero
/// outside, +infinity at the boundary x = 1.
double psi(double x);

/// f_{J*}(0) for the selected region law. Throws for Transition, which has
/// no one-dimensional alignment law.
double region_pdf_at_zero(RegionKind region);

/// Support ellipse data of the conditional channel distribution:
/// a = (v_Re^2 + v_Im^2)/2, b = v_Re v_Im sqrt(1 - rho^2),
/// s0 = a - sqrt(a^2 - b^2) (the squared semi-minor axis, smaller eigenvalue
/// of E^T E). Degenerate vectors yield s0 = 0 with the flag set.
struct EllipseSupport {
    double v_re_norm = 0.0;
    double v_im_norm = 0.0;
    double rho = 0.0;
    double a = 0.0;
    double b = 0.0;
    double s0 = 0.0;
    bool degenerate = false;
};

EllipseSupport support_ellipse(const ComplexFieldVector &v);

/// Conditional PDF of h given the field vector v, evaluated through the
/// lower-triangular Gram-Schmidt factor of (Re v, Im v). Supported on the
/// closed ellipse image of the unit disk; uniform marginals
/// U(-v_Re, v_Re) and U(-v_Im, v_Im). Throws std::domain_error for
/// degenerate v (the distribution then lives on a line segment).
double pdf_h_conditional(Complex h, const ComplexFieldVector &v);

/// Conditional CDF bounds of the PTE |h|^2 for s < s0:
/// s/(2b) <= F(s|v) <= s/(2b) (1 - s/s0)^{-1/2}.
/// Throws std::domain_error for s >= s0 or degenerate v.
struct CdfBounds {
    double lower;
    double upper;
};

CdfBounds cdf_pte_conditional_bounds(double s, const ComplexFieldVector &v);

/// Small-s approximation of the PTE CDF in the near- or far-field region:
/// F(s) ~ 2 f_{J*}(0) sqrt(s / eta_opt). An upper-bound approximation,
/// accurate for s << eta_opt.
double cdf_pte_region_approx(double s, RegionKind region, double eta_opt);

/// Rhombus-shaped support of the fully random channel coefficient, with
/// vertices at +-h_coax and +-h_copl.
struct RhombusSupport {
    Complex h_coax;
    Complex h_copl;

    /// True iff h = u h_coax + w h_copl with |u| + |w| <= 1 + tol.
    bool contains(Complex h, double tol = 1e-12) const;
};

RhombusSupport support_rhombus(double kr, Complex alpha_bar);

/// Uniform Cartesian evaluation grid in the complex h plane.
struct GridSpec {
    double re_min, re_max;
    double im_min, im_max;
    int nx = 201;
    int ny = 201;

    /// Bounding box of the support rhombus, padded by `padding` per side.
    static GridSpec rhombus_bbox(double kr, Complex alpha_bar, double padding = 0.05,
                                 int n = 201);
};

struct FullPdfOptions {
    /// Per-grid-point tolerance: max(abs_tol, rel_tol * |value|).
    double abs_tol = 1e-6;
    double rel_tol = 1e-6;
    /// Adaptive panel budget per grid point; must be >= 16.
    int max_panels_per_point = 256;
    /// Uniform pre-split so narrow conditional-support windows near the
    /// rhombus edge are not missed entirely.
    int initial_panels_per_point = 16;
    unsigned threads = 1;
};

struct FullPdfResult {
    DistributionCurve curve;
    int unconverged_points = 0;
    double max_error = 0.0;
    /// Lattice points lying exactly on the open segment between -h_copl and
    /// +h_copl (including the origin). The density diverges logarithmically
    /// there, so these points legitimately fail to converge; their values
    /// are finite only through the panel budget.
    int singular_ridge_points = 0;
};

/// Density of h under fully random orientations, obtained by integrating the
/// conditional density over the uniformly distributed TX-side projection:
/// f(h) = 1/2 int_{-1}^{1} f(h | d^T o_tx = x) dx, evaluated per grid point
/// with the adaptive panel rule (open nodes; the degenerate slices at
/// x in {0, +-1} are never evaluated). Grid points are independent, so the
/// evaluation parallelizes with bit-identical results for any thread count.
FullPdfResult pdf_h_full(double kr, Complex alpha_bar, const GridSpec &grid,
                         const FullPdfOptions &opt = {});

} // namespace dipolefade::stats

#endif // DIPOLEFADE_STATS_HPP
