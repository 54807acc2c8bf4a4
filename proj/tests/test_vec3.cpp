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

#include "dipolefade/vec3.hpp"

using namespace dipolefade;

TEST_CASE("unit vector construction normalizes") {
    const UnitVector3 u(3.0, 0.0, 4.0);
    CHECK(u.vec().norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(u.x() == doctest::Approx(0.6));
    CHECK(u.z() == doctest::Approx(0.8));
}

TEST_CASE("unit vector rejects near-zero input") {
    CHECK_THROWS_AS(UnitVector3(0.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(UnitVector3(1e-10, 0.0, 0.0), std::invalid_argument);
    CHECK_NOTHROW(UnitVector3(1e-8, 0.0, 0.0));
}

TEST_CASE("cross and dot products") {
    const Vec3 x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    CHECK(x.cross(y).dot(z) == doctest::Approx(1.0));
    CHECK(x.dot(y) == 0.0);
    CHECK((x + y - y).dot(x) == doctest::Approx(1.0));
}

TEST_CASE("complex matrix bilinear form") {
    ComplexMat3 m = ComplexMat3::scaled_identity({2.0, 1.0});
    const Vec3 a{1, 2, 3}, b{-1, 0, 1};
    const std::complex<double> r = m.bilinear(a, b);
    CHECK(r.real() == doctest::Approx(2.0 * a.dot(b)));
    CHECK(r.imag() == doctest::Approx(1.0 * a.dot(b)));
}
