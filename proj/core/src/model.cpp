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

#include "dipolefade/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dipolefade {

namespace {

// Complex coefficients multiplying b_nf and b_ff in h and v.
struct FieldCoefficients {
    Complex near; // alpha * (1/(kr)^3 + j/(kr)^2)
    Complex far;  // alpha * 1/(2 kr)
};

FieldCoefficients field_coefficients(double kr, Complex alpha_bar) {
    if (!(kr > 0.0)) throw std::invalid_argument("field_coefficients: kr must be > 0");
    const Complex alpha = alpha_bar * std::exp(Complex(0.0, -kr));
    const double inv = 1.0 / kr;
    const double inv2 = inv * inv;
    const double inv3 = inv2 * inv;
    return {alpha * Complex(inv3, inv2), alpha * (0.5 * inv)};
}

} // namespace

ComplexFieldVector::ComplexFieldVector(const CVec3 &v, double magnitude_scale) : v_(v) {
    const Vec3 re = v.real();
    const Vec3 im = v.imag();
    v_re_norm_ = re.norm();
    v_im_norm_ = im.norm();
    const double scale =
        magnitude_scale > 0.0 ? magnitude_scale : std::max(v_re_norm_, v_im_norm_);
    const double norm_floor = kNormDegeneracyScale * scale;
    if (v_re_norm_ <= norm_floor || v_im_norm_ <= norm_floor) {
        degenerate_ = true;
        rho_ = (v_re_norm_ > 0.0 && v_im_norm_ > 0.0)
                   ? std::clamp(re.dot(im) / (v_re_norm_ * v_im_norm_), -1.0, 1.0)
                   : 0.0;
        return;
    }
    rho_ = std::clamp(re.dot(im) / (v_re_norm_ * v_im_norm_), -1.0, 1.0);
    degenerate_ = std::abs(rho_) > 1.0 - kRhoDegeneracyTol;
}

Vec3 scaled_near_field(const UnitVector3 &d, const UnitVector3 &o_tx) {
    const double t = d.dot(o_tx);
    return 1.5 * t * d.vec() - 0.5 * o_tx.vec();
}

Vec3 scaled_far_field(const UnitVector3 &d, const UnitVector3 &o_tx) {
    const double t = d.dot(o_tx);
    return o_tx.vec() - t * d.vec();
}

AlignmentFactors alignment_factors(const LinkGeometry &g) {
    return {g.o_rx.dot(scaled_near_field(g.d, g.o_tx)),
            g.o_rx.dot(scaled_far_field(g.d, g.o_tx))};
}

ComplexFieldVector field_vector(double kr, Complex alpha_bar, const UnitVector3 &d,
                                const UnitVector3 &o_tx) {
    const FieldCoefficients c = field_coefficients(kr, alpha_bar);
    const CVec3 v = c.near * scaled_near_field(d, o_tx) + c.far * scaled_far_field(d, o_tx);
    return ComplexFieldVector(v, std::abs(alpha_bar));
}

ChannelCoefficient channel_coefficient(const LinkGeometry &g) {
    const FieldCoefficients c = field_coefficients(g.kr, g.alpha_bar);
    const AlignmentFactors j = alignment_factors(g);
    return {c.near * j.j_nf + c.far * j.j_ff};
}

Complex h_coax(double kr, Complex alpha_bar) {
    const FieldCoefficients c = field_coefficients(kr, alpha_bar);
    return c.near;
}

Complex h_copl(double kr, Complex alpha_bar) {
    const FieldCoefficients c = field_coefficients(kr, alpha_bar);
    return -0.5 * c.near + c.far;
}

double kr_threshold() {
    return std::sqrt((std::sqrt(37.0) + 5.0) / 2.0);
}

double optimal_pte(double kr, Complex alpha_bar) {
    return kr <= kr_threshold() ? std::norm(h_coax(kr, alpha_bar))
                                : std::norm(h_copl(kr, alpha_bar));
}

ComplexMat3 channel_matrix(double kr, Complex alpha_bar, const UnitVector3 &d) {
    const FieldCoefficients c = field_coefficients(kr, alpha_bar);
    // A = c_near (3/2 d d^T - 1/2 I) + c_far (I - d d^T)
    return ComplexMat3::scaled_outer(1.5 * c.near - c.far, d.vec()) +
           ComplexMat3::scaled_identity(-0.5 * c.near + c.far);
}

double simo_mrc_magnitude(const ComplexFieldVector &v) {
    return v.components().norm();
}

Complex prefactor_loop(double mu0, double area_tx, double turns_tx, double area_rx,
                       double turns_rx, double freq, double k, double r_tx_ohm,
                       double r_rx_ohm) {
    const double params[] = {mu0, area_tx, turns_tx, area_rx, turns_rx, freq, k,
                             r_tx_ohm, r_rx_ohm};
    for (double p : params)
        if (!(p > 0.0))
            throw std::invalid_argument("prefactor_loop: all physical parameters must be > 0");
    const double mag = mu0 * area_tx * turns_tx * area_rx * turns_rx * freq * (k * k * k) /
                       std::sqrt(4.0 * r_tx_ohm * r_rx_ohm);
    return Complex(0.0, mag);
}

double mutual_inductance(double mu0, double area_tx, double turns_tx, double area_rx,
                         double turns_rx, double r, double j_nf) {
    if (!(r > 0.0)) throw std::invalid_argument("mutual_inductance: r must be > 0");
    return mu0 / (2.0 * std::numbers::pi) * area_tx * turns_tx * area_rx * turns_rx *
           j_nf / (r * r * r);
}

double prefactor_dipole(DipoleKind kind) {
    return kind == DipoleKind::Small ? 1.5 : 1.64;
}

double halfwave_pattern_exact(double theta_tx) {
    if (!(theta_tx > 0.0) || !(theta_tx < std::numbers::pi))
        throw std::domain_error("halfwave_pattern_exact: theta must be in (0, pi)");
    return std::cos(0.5 * std::numbers::pi * std::cos(theta_tx)) / std::sin(theta_tx);
}

bool weak_coupling_check(const ChannelCoefficient &h, double threshold) {
    return h.pte() < threshold;
}

} // namespace dipolefade
