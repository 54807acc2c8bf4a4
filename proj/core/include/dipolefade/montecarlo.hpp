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
// Deterministic, seedable sampling of antenna orientations and channel
// coefficients. Draw i is a pure function of (seed, i), so sample sets are
// bitwise reproducible for any worker count and can serve as the
// independent oracle for every closed form in the stats module.

#ifndef DIPOLEFADE_MONTECARLO_HPP
#define DIPOLEFADE_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dipolefade/curve.hpp"
#include "dipolefade/model.hpp"
#include "dipolefade/region.hpp"

namespace dipolefade::mc {

/// SplitMix64 stream with trivial jump-ahead: the state of draw `index` is
/// seeded at position index * stride of the stream keyed by `seed`. Each
/// draw may consume at most `stride` outputs, which keeps neighboring draws
/// disjoint and makes draw i independent of evaluation order.
class CounterRng {
  public:
    static constexpr std::uint64_t kDefaultStride = 8;

    CounterRng(std::uint64_t seed, std::uint64_t index,
               std::uint64_t stride = kDefaultStride)
        : state_(mix64(seed) + kGamma * (index * stride)) {}

    std::uint64_t next_u64() {
        state_ += kGamma;
        return mix64(state_);
    }

    /// Uniform on [0, 1).
    double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [-1, 1).
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// Uniform draw on the unit sphere via z ~ U(-1, 1), phi ~ U(0, 2 pi).
/// The z coordinate is exactly uniform by construction.
UnitVector3 sample_unit_sphere(CounterRng &rng);

/// Channel draws with seed provenance. Alignment-factor sampling stores the
/// real draws in the real part.
struct SampleSet {
    std::vector<Complex> values;
    std::uint64_t seed = 0;
    double kr = 0.0;
    Complex alpha_bar{};
    std::string scenario;
};

enum class SampleMode {
    BothRandom, ///< o_tx and o_rx i.i.d. uniform on the sphere
    RxRandom,   ///< o_rx uniform, o_tx and d fixed
};

/// Fixed TX side for RxRandom sampling. The canonical frame puts d on the
/// z axis and o_tx in the x-z plane at the requested projection d^T o_tx.
struct FixedTxGeometry {
    UnitVector3 o_tx;
    UnitVector3 d;

    static FixedTxGeometry from_dot(double dot_d_otx);
};

/// n channel coefficient draws. BothRandom uses only fixed.d (the law is
/// invariant under its choice); RxRandom keeps fixed.o_tx and fixed.d.
/// Rejects n = 0.
SampleSet sample_channel(std::size_t n, double kr, Complex alpha_bar, SampleMode mode,
                         std::uint64_t seed,
                         const FixedTxGeometry &fixed = FixedTxGeometry::from_dot(0.3),
                         unsigned threads = 1);

/// n draws of the near- or far-field alignment factor under fully random
/// orientation pairs. Throws for Transition.
SampleSet sample_alignment(std::size_t n, RegionKind region, std::uint64_t seed,
                           unsigned threads = 1);

/// Empirical CDF over sorted transformed magnitudes.
class Ecdf {
  public:
    explicit Ecdf(std::vector<double> values);

    /// Fraction of samples <= s (right-continuous, range [0, 1]).
    double query(double s) const;

    /// Quantile with linear interpolation between order statistics,
    /// p in [0, 1].
    double quantile(double p) const;

    std::size_t size() const { return sorted_.size(); }
    const std::vector<double> &sorted() const { return sorted_; }

  private:
    std::vector<double> sorted_;
};

enum class Transform {
    MagnitudeSquared,
    Magnitude,
    Raw, ///< real part; used for alignment-factor sample sets
};

/// Empirical CDF of the transformed sample values. Rejects empty sets.
Ecdf ecdf(const SampleSet &set, Transform transform);

/// Empirical CDF of the misalignment loss |h|^2 / eta_opt under fully
/// random orientations (independent of alpha_bar).
Ecdf normalized_pte_ecdf(double kr, std::size_t n, std::uint64_t seed,
                         unsigned threads = 1);

struct LossCurveOptions {
    double db_min = -60.0;
    double db_max = 0.0;
    int points = 601;
};

struct KrLossCurve {
    double kr;
    DistributionCurve curve; ///< Cdf1d over the loss grid in dB
};

/// Misalignment-loss CDF 10 log10(|h|^2 / eta_opt) per kr value, evaluated
/// on a fixed dB grid. The same seed is reused across kr values so the
/// family of curves shares orientation draws.
std::vector<KrLossCurve> misalignment_loss_cdf(const std::vector<double> &kr_list,
                                               std::size_t n, std::uint64_t seed,
                                               unsigned threads = 1,
                                               const LossCurveOptions &opt = {});

} // namespace dipolefade::mc

#endif // DIPOLEFADE_MONTECARLO_HPP
