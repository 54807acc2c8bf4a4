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

#include <benchmark/benchmark.h>

#include "dipolefade/montecarlo.hpp"
#include "dipolefade/outage.hpp"
#include "dipolefade/stats.hpp"

using namespace dipolefade;

namespace {

void BM_ChannelCoefficient(benchmark::State &state) {
    const Complex ab(1e-2, 0.0);
    std::uint64_t i = 0;
    for (auto _ : state) {
        mc::CounterRng rng(1, i++);
        const UnitVector3 o_tx = mc::sample_unit_sphere(rng);
        const UnitVector3 o_rx = mc::sample_unit_sphere(rng);
        benchmark::DoNotOptimize(
            channel_coefficient(LinkGeometry(2.0, o_tx, o_rx, UnitVector3::unit_z(), ab)));
    }
}
BENCHMARK(BM_ChannelCoefficient);

void BM_SampleChannel(benchmark::State &state) {
    const std::size_t n = std::size_t(state.range(0));
    const unsigned threads = unsigned(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::sample_channel(n, 2.0, Complex(1e-2, 0.0),
                                                    mc::SampleMode::BothRandom, 1,
                                                    mc::FixedTxGeometry::from_dot(0.3),
                                                    threads));
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(n));
}
BENCHMARK(BM_SampleChannel)->Args({100000, 1})->Args({100000, 2});

void BM_ConditionalPdf(benchmark::State &state) {
    const mc::FixedTxGeometry fixed = mc::FixedTxGeometry::from_dot(0.3);
    const ComplexFieldVector v =
        field_vector(2.0, Complex(1e-2, 0.0), fixed.d, fixed.o_tx);
    double re = 0.0;
    const double step = v.v_re_norm() / 1024.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(stats::pdf_h_conditional(Complex(re, 0.3 * re), v));
        re += step;
        if (re > v.v_re_norm()) re = 0.0;
    }
}
BENCHMARK(BM_ConditionalPdf);

void BM_FullPdfGrid(benchmark::State &state) {
    const Complex ab(1e-2, 0.0);
    const stats::GridSpec grid =
        stats::GridSpec::rhombus_bbox(2.0, ab, 0.05, int(state.range(0)));
    stats::FullPdfOptions opt;
    opt.threads = unsigned(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(stats::pdf_h_full(2.0, ab, grid, opt));
}
BENCHMARK(BM_FullPdfGrid)->Args({41, 1})->Args({41, 2})->Unit(benchmark::kMillisecond);

void BM_BerQuadrature(benchmark::State &state) {
    double snr = 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(outage::ber_exact_region(snr, RegionKind::FarField));
        snr = snr >= 1e4 ? 10.0 : snr * 1.5;
    }
}
BENCHMARK(BM_BerQuadrature);

} // namespace

BENCHMARK_MAIN();
