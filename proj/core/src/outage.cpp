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

#include "dipolefade/outage.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "dipolefade/quadrature.hpp"
#include "dipolefade/stats.hpp"

namespace dipolefade::outage {

namespace {

constexpr double kPi = std::numbers::pi;

double region_pdf(RegionKind region, double j) {
    return region == RegionKind::NearField ? stats::pdf_j_nf(j) : stats::pdf_j_ff(j);
}

void require_region_law(RegionKind region, const char *who) {
    if (region == RegionKind::Transition)
        throw std::invalid_argument(std::string(who) +
                                    ": transition region has no closed-form law; use "
                                    "empirical quantiles instead");
}

double ber_expectation(double snr_opt, RegionKind region, bool backscatter) {
    require_region_law(region, "ber_expectation");
    if (!(snr_opt >= 0.0))
        throw std::invalid_argument("ber_expectation: snr_opt must be >= 0");
    const double root_snr = std::sqrt(2.0 * snr_opt);
    // The alignment PDFs are even, so the expectation reduces to 2 int_0^1.
    auto integrand = [&](double j) {
        const double arg = backscatter ? j * j : j;
        return region_pdf(region, j) * q_function(root_snr * arg);
    };
    quad::Options opt;
    opt.abs_tol = 1e-13;
    opt.rel_tol = 1e-10;
    opt.max_panels = 4000;
    const quad::Result r = quad::integrate(integrand, 0.0, 1.0, opt);
    if (!r.converged)
        throw QuadratureError("BER quadrature did not reach tolerance (error estimate " +
                              std::to_string(r.error) + ")");
    return 2.0 * r.value;
}

} // namespace

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double outage_probability(double eta_target, const OutageSpec &spec) {
    require_region_law(spec.region, "outage_probability");
    if (!(eta_target >= 0.0))
        throw std::invalid_argument("outage_probability: eta_target must be >= 0");
    return 2.0 * stats::region_pdf_at_zero(spec.region) *
           std::sqrt(eta_target / spec.eta_opt);
}

double outage_pte(const OutageSpec &spec) {
    require_region_law(spec.region, "outage_pte");
    const double f0 = stats::region_pdf_at_zero(spec.region);
    const double ratio = spec.epsilon / (2.0 * f0);
    return ratio * ratio * spec.eta_opt;
}

bool outage_approx_accurate(double eta_target, double eta_opt) {
    return eta_target <= 1e-2 * eta_opt;
}

OutageCapacity outage_capacity(const OutageSpec &spec,
                               const std::function<double(double)> &cdf_inverse) {
    if (!cdf_inverse) throw std::invalid_argument("outage_capacity: missing cdf_inverse");
    const double s_eps = cdf_inverse(spec.epsilon);
    if (!(s_eps >= 0.0))
        throw std::invalid_argument("outage_capacity: cdf_inverse must be >= 0");
    const double snr_eps = s_eps * spec.p_tx / spec.p_n;
    return {std::log2(1.0 + snr_eps), std::numbers::log2e * snr_eps};
}

double ber_exact_region(double snr_opt, RegionKind region) {
    return ber_expectation(snr_opt, region, /*backscatter=*/false);
}

double ber_bound(double snr_opt, RegionKind region) {
    require_region_law(region, "ber_bound");
    if (!(snr_opt > 0.0)) throw std::invalid_argument("ber_bound: snr_opt must be > 0");
    return stats::region_pdf_at_zero(region) / std::sqrt(kPi * snr_opt);
}

double ber_bound_intermediate(double snr_opt, RegionKind region) {
    require_region_law(region, "ber_bound_intermediate");
    if (!(snr_opt > 0.0))
        throw std::invalid_argument("ber_bound_intermediate: snr_opt must be > 0");
    const double f0 = stats::region_pdf_at_zero(region);
    return 2.0 * f0 * ((1.0 - std::exp(-snr_opt)) / std::sqrt(4.0 * kPi * snr_opt) +
                       q_function(std::sqrt(2.0 * snr_opt)));
}

double ber_backscatter(double snr_opt, RegionKind region) {
    return ber_expectation(snr_opt, region, /*backscatter=*/true);
}

double loglog_slope(std::span<const std::pair<double, double>> points, FitWindow window) {
    std::vector<std::pair<double, double>> logs;
    logs.reserve(points.size());
    for (const auto &[x, y] : points) {
        if (x < window.min_x || x > window.max_x) continue;
        if (!(x > 0.0) || !(y > 0.0)) continue;
        logs.emplace_back(std::log10(x), std::log10(y));
    }
    if (logs.size() < 5)
        throw std::invalid_argument("loglog_slope: need at least 5 points in the window");
    double min_lx = logs.front().first, max_lx = logs.front().first;
    for (const auto &[lx, ly] : logs) {
        min_lx = std::min(min_lx, lx);
        max_lx = std::max(max_lx, lx);
    }
    if (max_lx - min_lx < 2.0 - 1e-9)
        throw std::invalid_argument("loglog_slope: points must span at least 2 decades");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto &[lx, ly] : logs) {
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = double(logs.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double diversity_exponent_fit(std::span<const std::pair<double, double>> curve,
                              FitWindow window) {
    return -loglog_slope(curve, window);
}

double rayleigh_reference_cdf(double s, double sigma2) {
    if (!(sigma2 > 0.0))
        throw std::invalid_argument("rayleigh_reference_cdf: sigma2 must be > 0");
    if (s <= 0.0) return 0.0;
    return -std::expm1(-s / sigma2);
}

} // namespace dipolefade::outage
