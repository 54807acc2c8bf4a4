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
// Deterministic dipole-to-dipole channel model. Everything in this header
// is a pure function of the link geometry: the scaled near/far fields of a
// transmitting dipole, the alignment factors seen by the receiver, the
// complex channel coefficient h and its bilinear-form matrix, the optimal
// (coaxial/parallel) reference channels, and the physical prefactors for
// loop and dipole antennas.

#ifndef DIPOLEFADE_MODEL_HPP
#define DIPOLEFADE_MODEL_HPP

#include <complex>

#include "dipolefade/vec3.hpp"

namespace dipolefade {

using Complex = std::complex<double>;

/// Full input of the channel formula: kr = wavenumber * distance, the TX
/// and RX dipole axis orientations, the TX-to-RX direction d, and the
/// complex prefactor magnitude term alpha_bar. The full prefactor
/// alpha = alpha_bar * exp(-j*kr) is always derived, never stored.
struct LinkGeometry {
    double kr;
    UnitVector3 o_tx;
    UnitVector3 o_rx;
    UnitVector3 d;
    Complex alpha_bar;

    LinkGeometry(double kr_, UnitVector3 o_tx_, UnitVector3 o_rx_, UnitVector3 d_,
                 Complex alpha_bar_)
        : kr(kr_), o_tx(o_tx_), o_rx(o_rx_), d(d_), alpha_bar(alpha_bar_) {
        if (!(kr > 0.0)) throw std::invalid_argument("LinkGeometry: kr must be > 0");
    }

    Complex alpha() const { return alpha_bar * std::exp(Complex(0.0, -kr)); }
};

/// Channel coefficient h; |h|^2 is the power transfer efficiency (PTE).
struct ChannelCoefficient {
    Complex value{};
    double pte() const { return std::norm(value); }
};

/// The complex field vector v at the RX position with path loss factored
/// into it, such that h = o_rx^T v. Exposes the statistics of its real and
/// imaginary parts: norms v_Re, v_Im and their correlation coefficient rho.
///
/// The pair (Re v, Im v) is linearly dependent exactly when the TX-side
/// projection d^T o_tx is 0 or +-1. Degeneracy is detected on the vector
/// itself: |rho| > 1 - 1e-9, or either norm below 1e-15 times the supplied
/// magnitude scale (defaults to the vector norm). Downstream conditional
/// densities divide by sqrt(1 - rho^2) and must refuse degenerate input.
class ComplexFieldVector {
  public:
    explicit ComplexFieldVector(const CVec3 &v, double magnitude_scale = -1.0);

    const CVec3 &components() const { return v_; }
    double v_re_norm() const { return v_re_norm_; }
    double v_im_norm() const { return v_im_norm_; }
    double rho() const { return rho_; }
    bool degenerate() const { return degenerate_; }
    /// True when (Re v, Im v) span a plane, i.e. the conditional channel
    /// distribution is genuinely two-dimensional.
    bool linearly_independent() const { return !degenerate_; }

    static constexpr double kRhoDegeneracyTol = 1e-9;
    static constexpr double kNormDegeneracyScale = 1e-15;

  private:
    CVec3 v_;
    double v_re_norm_ = 0.0;
    double v_im_norm_ = 0.0;
    double rho_ = 0.0;
    bool degenerate_ = false;
};

struct AlignmentFactors {
    double j_nf; ///< near-field alignment factor, in [-1, 1]
    double j_ff; ///< far-field alignment factor, in [-1, 1]
};

/// Scaled near field b_nf = (3 d d^T - I) o_tx / 2. Magnitude in [1/2, 1]:
/// 1 on the dipole axis, 1/2 in the perpendicular plane.
Vec3 scaled_near_field(const UnitVector3 &d, const UnitVector3 &o_tx);

/// Scaled far field b_ff = (I - d d^T) o_tx. Magnitude in [0, 1]: zero on
/// the dipole axis, 1 in the perpendicular plane.
Vec3 scaled_far_field(const UnitVector3 &d, const UnitVector3 &o_tx);

/// Inner products of the RX orientation with the scaled fields.
AlignmentFactors alignment_factors(const LinkGeometry &g);

/// Field vector v = alpha * ((1/(kr)^3 + j/(kr)^2) b_nf + 1/(2 kr) b_ff)
/// with alpha = alpha_bar * exp(-j kr).
ComplexFieldVector field_vector(double kr, Complex alpha_bar, const UnitVector3 &d,
                                const UnitVector3 &o_tx);

/// h = alpha * ((1/(kr)^3 + j/(kr)^2) J_nf + 1/(2 kr) J_ff). Identical to
/// o_rx^T field_vector(...) and to the bilinear form through channel_matrix.
ChannelCoefficient channel_coefficient(const LinkGeometry &g);

/// Reference channel of the coaxial arrangement o_tx = o_rx = d.
Complex h_coax(double kr, Complex alpha_bar);

/// Reference channel of the parallel arrangement o_tx = o_rx, d^T o_tx = 0.
Complex h_copl(double kr, Complex alpha_bar);

/// kr value where |h_coax| = |h_copl|: sqrt((sqrt(37) + 5) / 2) ~ 2.3540.
double kr_threshold();

/// Maximum PTE over all orientation pairs at fixed kr and alpha_bar:
/// |h_coax|^2 below the threshold, |h_copl|^2 above it.
double optimal_pte(double kr, Complex alpha_bar);

/// Matrix A of the bilinear form h = o_rx^T A o_tx. A d = h_coax d, and
/// h_copl is a double eigenvalue on the plane orthogonal to d.
ComplexMat3 channel_matrix(double kr, Complex alpha_bar, const UnitVector3 &d);

/// Effective magnitude of a 1x3 SIMO link with three colocated orthogonal
/// RX dipoles under maximum-ratio combining: |h| = ||v||.
double simo_mrc_magnitude(const ComplexFieldVector &v);

/// Antenna kind selecting the dipole directivity prefactor.
enum class DipoleKind { Small, HalfWave };

/// Prefactor magnitude for weakly coupled, electrically small loop
/// antennas (coils):
///   alpha_bar = j mu0 A_tx N_tx A_rx N_rx f k^3 / sqrt(4 R_tx R_rx).
/// Purely imaginary with positive imaginary part. Rejects nonpositive
/// physical parameters.
Complex prefactor_loop(double mu0, double area_tx, double turns_tx, double area_rx,
                       double turns_rx, double freq, double k, double r_tx_ohm,
                       double r_rx_ohm);

/// Mutual inductance M = mu0/(2 pi) A_tx N_tx A_rx N_rx r^-3 J_nf.
double mutual_inductance(double mu0, double area_tx, double turns_tx, double area_rx,
                         double turns_rx, double r, double j_nf);

/// Directivity prefactor: 1.5 for electrically small dipoles, 1.64 for
/// half-wavelength dipoles.
double prefactor_dipole(DipoleKind kind);

/// Exact half-wave dipole pattern cos(pi/2 cos(theta)) / sin(theta) for
/// theta in (0, pi); end points are out of domain.
double halfwave_pattern_exact(double theta_tx);

/// True iff the weak-coupling model condition |h|^2 < threshold holds
/// (strict). The default threshold is 1e-2, i.e. -20 dB.
bool weak_coupling_check(const ChannelCoefficient &h, double threshold = 1e-2);

} // namespace dipolefade

#endif // DIPOLEFADE_MODEL_HPP
