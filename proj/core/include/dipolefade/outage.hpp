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
// Outage analysis of the randomly oriented dipole link: outage PTE, outage
// capacity, BPSK bit error rates with their closed-form bound, the
// backscatter (channel-applies-twice) variant, and diversity-exponent
// estimation from log-log curves.

#ifndef DIPOLEFADE_OUTAGE_HPP
#define DIPOLEFADE_OUTAGE_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <utility>

#include "dipolefade/region.hpp"

namespace dipolefade::outage {

/// Gaussian tail probability Q(x) = erfc(x / sqrt(2)) / 2.
double q_function(double x);

/// Thrown when an adaptive quadrature fails to reach its tolerance.
class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Outage working point: target outage probability, region law, the
/// optimal-orientation PTE and SNR, and the TX/noise power budget.
struct OutageSpec {
    double epsilon;
    RegionKind region;
    double eta_opt;
    double snr_opt;
    double p_tx;
    double p_n;

    OutageSpec(double epsilon_, RegionKind region_, double eta_opt_, double snr_opt_,
               double p_tx_, double p_n_)
        : epsilon(epsilon_), region(region_), eta_opt(eta_opt_), snr_opt(snr_opt_),
          p_tx(p_tx_), p_n(p_n_) {
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw std::invalid_argument("OutageSpec: epsilon must be in (0, 1)");
        if (!(eta_opt > 0.0)) throw std::invalid_argument("OutageSpec: eta_opt must be > 0");
        if (!(snr_opt >= 0.0)) throw std::invalid_argument("OutageSpec: snr_opt must be >= 0");
        if (!(p_tx > 0.0 && p_n > 0.0))
            throw std::invalid_argument("OutageSpec: powers must be > 0");
    }
};

/// Outage probability of a target PTE in the near- or far-field region:
/// eps ~ 2 f_{J*}(0) sqrt(eta_target / eta_opt). Accurate for
/// eta_target << eta_opt (see outage_approx_accurate).
double outage_probability(double eta_target, const OutageSpec &spec);

/// Outage PTE for the target outage probability of the spec:
/// eta_eps ~ eps^2 eta_opt / (2 f_{J*}(0))^2. Exact algebraic inverse of
/// outage_probability.
double outage_pte(const OutageSpec &spec);

/// Accuracy guard of the small-s closed forms: true iff
/// eta_target <= 1e-2 * eta_opt.
bool outage_approx_accurate(double eta_target, double eta_opt);

struct OutageCapacity {
    double capacity;         ///< log2(1 + F^{-1}(eps) P_tx / P_n), bit/s/Hz
    double log_linear_bound; ///< log2(e) F^{-1}(eps) P_tx / P_n
};

/// Outage capacity from a PTE CDF inverse, supplied analytically or as an
/// empirical quantile function.
OutageCapacity outage_capacity(const OutageSpec &spec,
                               const std::function<double(double)> &cdf_inverse);

/// BPSK bit error rate under the region alignment law, by adaptive
/// quadrature of E[Q(sqrt(2 J^2 snr_opt))].
double ber_exact_region(double snr_opt, RegionKind region);

/// Closed-form BER upper bound f_{J*}(0) / sqrt(pi snr_opt); tight for
/// large snr_opt. Rejects snr_opt <= 0.
double ber_bound(double snr_opt, RegionKind region);

/// The tighter intermediate form behind ber_bound:
/// 2 f_{J*}(0) [ (1 - e^{-snr}) / sqrt(4 pi snr) + Q(sqrt(2 snr)) ].
double ber_bound_intermediate(double snr_opt, RegionKind region);

/// Backscatter/load-modulation BER, where the fading applies twice:
/// E[Q(sqrt(2 J^4 snr_opt))].
double ber_backscatter(double snr_opt, RegionKind region);

struct FitWindow {
    double min_x;
    double max_x;
};

/// Least-squares slope of log10(y) vs log10(x) over points inside the
/// window. Requires >= 5 points spanning >= 2 decades; throws otherwise.
double loglog_slope(std::span<const std::pair<double, double>> points, FitWindow window);

/// Diversity exponent L of p ~ x^{-L}: the negated log-log slope of an
/// error/outage probability curve against SNR.
double diversity_exponent_fit(std::span<const std::pair<double, double>> curve,
                              FitWindow window);

/// Rayleigh-fading reference CDF F(s) = 1 - exp(-s / sigma2), for
/// comparison curves only.
double rayleigh_reference_cdf(double s, double sigma2);

} // namespace dipolefade::outage

#endif // DIPOLEFADE_OUTAGE_HPP
