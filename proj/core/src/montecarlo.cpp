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

#include "dipolefade/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dipolefade/parallel.hpp"

namespace dipolefade::mc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

UnitVector3 sample_unit_sphere(CounterRng &rng) {
    const double z = rng.next_symmetric();
    const double phi = kTwoPi * rng.next_unit();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return UnitVector3(r * std::cos(phi), r * std::sin(phi), z);
}

FixedTxGeometry FixedTxGeometry::from_dot(double dot_d_otx) {
    if (!(dot_d_otx >= -1.0 && dot_d_otx <= 1.0))
        throw std::invalid_argument("FixedTxGeometry: d^T o_tx must be in [-1, 1]");
    const double s = std::sqrt(std::max(0.0, 1.0 - dot_d_otx * dot_d_otx));
    return {UnitVector3(s, 0.0, dot_d_otx), UnitVector3::unit_z()};
}

SampleSet sample_channel(std::size_t n, double kr, Complex alpha_bar, SampleMode mode,
                         std::uint64_t seed, const FixedTxGeometry &fixed,
                         unsigned threads) {
    if (n == 0) throw std::invalid_argument("sample_channel: n must be > 0");
    if (!(kr > 0.0)) throw std::invalid_argument("sample_channel: kr must be > 0");

    SampleSet set;
    set.values.resize(n);
    set.seed = seed;
    set.kr = kr;
    set.alpha_bar = alpha_bar;

    if (mode == SampleMode::BothRandom) {
        set.scenario = "channel:both-random";
        const UnitVector3 d = fixed.d;
        parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                CounterRng rng(seed, i);
                const UnitVector3 o_tx = sample_unit_sphere(rng);
                const UnitVector3 o_rx = sample_unit_sphere(rng);
                set.values[i] =
                    channel_coefficient(LinkGeometry(kr, o_tx, o_rx, d, alpha_bar)).value;
            }
        });
    } else {
        set.scenario = "channel:rx-random";
        // h = o_rx^T v with the field vector fixed by the TX side.
        const CVec3 v = field_vector(kr, alpha_bar, fixed.d, fixed.o_tx).components();
        parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                CounterRng rng(seed, i);
                const UnitVector3 o_rx = sample_unit_sphere(rng);
                set.values[i] = v.dot(o_rx.vec());
            }
        });
    }
    return set;
}

SampleSet sample_alignment(std::size_t n, RegionKind region, std::uint64_t seed,
                           unsigned threads) {
    if (n == 0) throw std::invalid_argument("sample_alignment: n must be > 0");
    if (region == RegionKind::Transition)
        throw std::invalid_argument("sample_alignment: no alignment factor in the transition");

    SampleSet set;
    set.values.resize(n);
    set.seed = seed;
    set.scenario = region == RegionKind::NearField ? "alignment:near" : "alignment:far";

    const UnitVector3 d = UnitVector3::unit_z();
    const bool near = region == RegionKind::NearField;
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            CounterRng rng(seed, i);
            const UnitVector3 o_tx = sample_unit_sphere(rng);
            const UnitVector3 o_rx = sample_unit_sphere(rng);
            const Vec3 field = near ? scaled_near_field(d, o_tx) : scaled_far_field(d, o_tx);
            set.values[i] = Complex(o_rx.dot(field), 0.0);
        }
    });
    return set;
}

Ecdf::Ecdf(std::vector<double> values) : sorted_(std::move(values)) {
    if (sorted_.empty()) throw std::invalid_argument("Ecdf: empty sample set");
    std::sort(sorted_.begin(), sorted_.end());
}

double Ecdf::query(double s) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), s);
    return double(it - sorted_.begin()) / double(sorted_.size());
}

double Ecdf::quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("Ecdf::quantile: p must be in [0, 1]");
    if (sorted_.size() == 1) return sorted_.front();
    const double pos = p * double(sorted_.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted_.size()) return sorted_.back();
    const double frac = pos - double(lo);
    return sorted_[lo] + frac * (sorted_[lo + 1] - sorted_[lo]);
}

Ecdf ecdf(const SampleSet &set, Transform transform) {
    if (set.values.empty()) throw std::invalid_argument("ecdf: empty sample set");
    std::vector<double> v(set.values.size());
    switch (transform) {
        case Transform::MagnitudeSquared:
            std::transform(set.values.begin(), set.values.end(), v.begin(),
                           [](Complex c) { return std::norm(c); });
            break;
        case Transform::Magnitude:
            std::transform(set.values.begin(), set.values.end(), v.begin(),
                           [](Complex c) { return std::abs(c); });
            break;
        case Transform::Raw:
            std::transform(set.values.begin(), set.values.end(), v.begin(),
                           [](Complex c) { return c.real(); });
            break;
    }
    return Ecdf(std::move(v));
}

Ecdf normalized_pte_ecdf(double kr, std::size_t n, std::uint64_t seed, unsigned threads) {
    const SampleSet set =
        sample_channel(n, kr, Complex(1.0, 0.0), SampleMode::BothRandom, seed,
                       FixedTxGeometry::from_dot(0.0), threads);
    const double eta_opt = optimal_pte(kr, Complex(1.0, 0.0));
    std::vector<double> v(set.values.size());
    std::transform(set.values.begin(), set.values.end(), v.begin(),
                   [eta_opt](Complex c) { return std::norm(c) / eta_opt; });
    return Ecdf(std::move(v));
}

std::vector<KrLossCurve> misalignment_loss_cdf(const std::vector<double> &kr_list,
                                               std::size_t n, std::uint64_t seed,
                                               unsigned threads,
                                               const LossCurveOptions &opt) {
    if (opt.points < 2)
        throw std::invalid_argument("misalignment_loss_cdf: need at least 2 grid points");
    std::vector<KrLossCurve> out;
    out.reserve(kr_list.size());
    for (double kr : kr_list) {
        const Ecdf e = normalized_pte_ecdf(kr, n, seed, threads);
        DistributionCurve c;
        c.kind = CurveKind::Cdf1d;
        c.grid.resize(opt.points);
        c.density.resize(opt.points);
        for (int i = 0; i < opt.points; ++i) {
            const double db =
                opt.db_min + (opt.db_max - opt.db_min) * double(i) / double(opt.points - 1);
            c.grid[i] = db;
            c.density[i] = e.query(std::pow(10.0, db / 10.0));
        }
        out.push_back({kr, std::move(c)});
    }
    return out;
}

} // namespace dipolefade::mc
