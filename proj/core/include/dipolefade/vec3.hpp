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

#ifndef DIPOLEFADE_VEC3_HPP
#define DIPOLEFADE_VEC3_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace dipolefade {

/// Plain real 3-vector with the usual arithmetic.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }

    constexpr double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3 &o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    constexpr double squared_norm() const { return dot(*this); }
    double norm() const { return std::sqrt(squared_norm()); }
};

constexpr Vec3 operator*(double s, const Vec3 &v) { return v * s; }

/// Unit vector in R^3. Construction normalizes the input and rejects
/// vectors with norm below 1e-9 (too short to carry a direction).
class UnitVector3 {
  public:
    explicit UnitVector3(const Vec3 &v) {
        const double n = v.norm();
        if (!(n >= kMinConstructionNorm))
            throw std::invalid_argument("UnitVector3: input norm below 1e-9");
        v_ = v * (1.0 / n);
    }
    UnitVector3(double x, double y, double z) : UnitVector3(Vec3{x, y, z}) {}

    const Vec3 &vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    double dot(const Vec3 &o) const { return v_.dot(o); }
    double dot(const UnitVector3 &o) const { return v_.dot(o.v_); }

    static UnitVector3 unit_x() { return UnitVector3(Vec3{1, 0, 0}); }
    static UnitVector3 unit_y() { return UnitVector3(Vec3{0, 1, 0}); }
    static UnitVector3 unit_z() { return UnitVector3(Vec3{0, 0, 1}); }

    static constexpr double kMinConstructionNorm = 1e-9;

  private:
    Vec3 v_;
};

/// Complex 3-vector, componentwise Re/Im split.
struct CVec3 {
    std::complex<double> x{};
    std::complex<double> y{};
    std::complex<double> z{};

    Vec3 real() const { return {x.real(), y.real(), z.real()}; }
    Vec3 imag() const { return {x.imag(), y.imag(), z.imag()}; }

    /// Frobenius norm sqrt(sum |v_i|^2).
    double norm() const {
        return std::sqrt(std::norm(x) + std::norm(y) + std::norm(z));
    }

    /// Inner product with a real vector (no conjugation needed).
    std::complex<double> dot(const Vec3 &o) const {
        return x * o.x + y * o.y + z * o.z;
    }

    CVec3 operator+(const CVec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    CVec3 operator*(const std::complex<double> &s) const { return {x * s, y * s, z * s}; }
};

inline CVec3 operator*(const std::complex<double> &s, const Vec3 &v) {
    return {s * v.x, s * v.y, s * v.z};
}

/// Complex 3x3 matrix, row-major. Just enough surface for bilinear forms.
class ComplexMat3 {
  public:
    ComplexMat3() = default;

    std::complex<double> &operator()(int r, int c) { return m_[r * 3 + c]; }
    const std::complex<double> &operator()(int r, int c) const { return m_[r * 3 + c]; }

    CVec3 apply(const Vec3 &v) const {
        return {m_[0] * v.x + m_[1] * v.y + m_[2] * v.z,
                m_[3] * v.x + m_[4] * v.y + m_[5] * v.z,
                m_[6] * v.x + m_[7] * v.y + m_[8] * v.z};
    }

    /// a^T M b for real vectors a, b.
    std::complex<double> bilinear(const Vec3 &a, const Vec3 &b) const {
        return apply(b).dot(a);
    }

    /// s * (I - outer) and friends are assembled by callers; these helpers
    /// build the two projector-style blocks used by the dipole field.
    static ComplexMat3 scaled_outer(const std::complex<double> &s, const Vec3 &d) {
        ComplexMat3 r;
        const double o[3] = {d.x, d.y, d.z};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r(i, j) = s * (o[i] * o[j]);
        return r;
    }
    static ComplexMat3 scaled_identity(const std::complex<double> &s) {
        ComplexMat3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = s;
        return r;
    }

    ComplexMat3 operator+(const ComplexMat3 &o) const {
        ComplexMat3 r;
        for (int i = 0; i < 9; ++i) r.m_[i] = m_[i] + o.m_[i];
        return r;
    }

  private:
    std::array<std::complex<double>, 9> m_{};
};

} // namespace dipolefade

#endif // DIPOLEFADE_VEC3_HPP
