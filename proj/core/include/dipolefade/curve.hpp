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

#ifndef DIPOLEFADE_CURVE_HPP
#define DIPOLEFADE_CURVE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dipolefade {

enum class CurveKind {
    Pdf1d,
    Cdf1d,
    Pdf2d,
};

/// Tabulated distribution over a 1D grid or a 2D complex-plane grid.
///
/// 1D: `grid` holds the ordered abscissae and `density` the PDF/CDF values.
/// 2D: `grid` is the Re axis (size nx), `grid2` the Im axis (size ny), and
/// `density` is row-major with index iy * nx + ix.
struct DistributionCurve {
    CurveKind kind = CurveKind::Pdf1d;
    std::vector<double> grid;
    std::vector<double> grid2;
    std::vector<double> density;

    std::size_t nx() const { return grid.size(); }
    std::size_t ny() const { return grid2.size(); }
    double at(std::size_t ix, std::size_t iy) const { return density[iy * nx() + ix]; }
};

/// Trapezoidal integral of a 1D curve over its grid.
inline double trapezoid_integral(const std::vector<double> &grid,
                                 const std::vector<double> &values) {
    if (grid.size() != values.size() || grid.size() < 2)
        throw std::invalid_argument("trapezoid_integral: need matching grids of size >= 2");
    double sum = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        sum += 0.5 * (values[i] + values[i - 1]) * (grid[i] - grid[i - 1]);
    return sum;
}

inline double trapezoid_integral(const DistributionCurve &c) {
    if (c.kind == CurveKind::Pdf2d) {
        // Tensor-product trapezoid over the uniform 2D grid.
        if (c.nx() < 2 || c.ny() < 2)
            throw std::invalid_argument("trapezoid_integral: 2D grid too small");
        double sum = 0.0;
        for (std::size_t iy = 0; iy < c.ny(); ++iy) {
            const double wy = (iy == 0 || iy == c.ny() - 1) ? 0.5 : 1.0;
            for (std::size_t ix = 0; ix < c.nx(); ++ix) {
                const double wx = (ix == 0 || ix == c.nx() - 1) ? 0.5 : 1.0;
                sum += wx * wy * c.at(ix, iy);
            }
        }
        const double hx = (c.grid.back() - c.grid.front()) / double(c.nx() - 1);
        const double hy = (c.grid2.back() - c.grid2.front()) / double(c.ny() - 1);
        return sum * hx * hy;
    }
    return trapezoid_integral(c.grid, c.density);
}

/// CDF from a tabulated PDF by trapezoidal cumulative sum (second-order
/// accurate). The result is not renormalized.
inline DistributionCurve cdf_from_pdf(const DistributionCurve &pdf) {
    if (pdf.kind != CurveKind::Pdf1d)
        throw std::invalid_argument("cdf_from_pdf: expects a 1D PDF curve");
    DistributionCurve cdf;
    cdf.kind = CurveKind::Cdf1d;
    cdf.grid = pdf.grid;
    cdf.density.resize(pdf.grid.size(), 0.0);
    for (std::size_t i = 1; i < pdf.grid.size(); ++i)
        cdf.density[i] = cdf.density[i - 1] + 0.5 * (pdf.density[i] + pdf.density[i - 1]) *
                                                  (pdf.grid[i] - pdf.grid[i - 1]);
    return cdf;
}

} // namespace dipolefade

#endif // DIPOLEFADE_CURVE_HPP
