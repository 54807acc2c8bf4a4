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

#include "commands.hpp"

#include <cmath>
#include <utility>

#include "csv.hpp"
#include "dipolefade/outage.hpp"
#include "dipolefade/stats.hpp"

namespace dfcli {

using namespace dipolefade;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * double(i) / double(n - 1);
    return v;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = lo * std::pow(hi / lo, double(i) / double(n - 1));
    return v;
}

// Reproducibility preamble. Thread count and output path are deliberately
// omitted: they must not influence the bytes.
void preamble(CsvWriter &w, const RunConfig &cfg, const std::string &subcommand,
              const std::string &extras = {}) {
    w.comment(std::string(kToolName) + " " + kToolVersion);
    std::string line = "subcommand=" + subcommand + " kr=" + fmt_double(cfg.kr) +
                       " alpha_bar=" + fmt_double(cfg.alpha_bar.real()) + "," +
                       fmt_double(cfg.alpha_bar.imag()) +
                       " seed=" + std::to_string(cfg.seed) +
                       " samples=" + std::to_string(cfg.samples) +
                       " grid=" + std::to_string(cfg.grid);
    if (!extras.empty()) line += " " + extras;
    w.comment(line);
}

void validate_common(const RunConfig &cfg) {
    if (!(cfg.kr > 0.0)) throw std::invalid_argument("--kr must be > 0");
    if (cfg.grid < 2) throw std::invalid_argument("--grid must be >= 2");
    if (cfg.samples == 0) throw std::invalid_argument("--samples must be > 0");
}

// Per-point histogram densities: cells are centered on the grid points and
// clipped to [lo, hi].
std::vector<double> histogram_density(const std::vector<double> &samples, double lo,
                                      double hi, const std::vector<double> &centers) {
    const double spacing = centers[1] - centers[0];
    std::vector<double> counts(centers.size(), 0.0);
    for (double x : samples) {
        const int i = int(std::floor((x - centers.front()) / spacing + 0.5));
        if (i >= 0 && std::size_t(i) < counts.size()) counts[i] += 1.0;
    }
    std::vector<double> density(centers.size(), 0.0);
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const double cell_lo = std::max(lo, centers[i] - 0.5 * spacing);
        const double cell_hi = std::min(hi, centers[i] + 0.5 * spacing);
        const double width = cell_hi - cell_lo;
        if (width > 0.0) density[i] = counts[i] / (double(samples.size()) * width);
    }
    return density;
}

std::string mode_name(mc::SampleMode mode) {
    return mode == mc::SampleMode::BothRandom ? "both-random" : "rx-random";
}

} // namespace

int cmd_field_map(const RunConfig &cfg) {
    validate_common(cfg);
    CsvWriter w;
    preamble(w, cfg, "field-map");
    w.header({"x", "z", "beta_nf", "beta_ff"});

    const UnitVector3 o_tx = UnitVector3::unit_z(); // dipole axis along z
    const std::vector<double> axis = linspace(-1.0, 1.0, cfg.grid);
    for (double z : axis) {
        for (double x : axis) {
            const double r = std::hypot(x, z);
            if (r < 1e-12) continue; // direction undefined at the dipole
            const UnitVector3 d(x / r, 0.0, z / r);
            w.row({x, z, scaled_near_field(d, o_tx).norm(),
                   scaled_far_field(d, o_tx).norm()});
        }
    }
    w.flush_to(cfg.out);
    return kExitOk;
}

int cmd_pdf_j(const RunConfig &cfg) {
    validate_common(cfg);
    CsvWriter w;
    preamble(w, cfg, "pdf-j");
    w.header({"j", "pdf_j_nf", "pdf_j_ff", "hist_j_nf", "hist_j_ff"});

    const std::vector<double> grid = linspace(-1.0, 1.0, cfg.grid);

    auto draws = [&](RegionKind region) {
        const mc::SampleSet set =
            mc::sample_alignment(cfg.samples, region, cfg.seed, cfg.threads);
        std::vector<double> v(set.values.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = set.values[i].real();
        return v;
    };
    const std::vector<double> hist_nf =
        histogram_density(draws(RegionKind::NearField), -1.0, 1.0, grid);
    const std::vector<double> hist_ff =
        histogram_density(draws(RegionKind::FarField), -1.0, 1.0, grid);

    for (std::size_t i = 0; i < grid.size(); ++i)
        w.row({grid[i], stats::pdf_j_nf(grid[i]), stats::pdf_j_ff(grid[i]), hist_nf[i],
               hist_ff[i]});
    w.flush_to(cfg.out);
    return kExitOk;
}

int cmd_pdf_beta(const RunConfig &cfg) {
    validate_common(cfg);
    CsvWriter w;
    preamble(w, cfg, "pdf-beta");
    w.header({"beta", "pdf_beta_nf", "pdf_beta_ff", "hist_beta_nf", "hist_beta_ff"});

    const std::vector<double> grid = linspace(0.0, 1.0, cfg.grid);

    // The magnitudes depend only on the TX-side projection t = d^T o_tx.
    std::vector<double> beta_nf(cfg.samples), beta_ff(cfg.samples);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        mc::CounterRng rng(cfg.seed, i);
        const double t = mc::sample_unit_sphere(rng).z();
        beta_nf[i] = 0.5 * std::sqrt(1.0 + 3.0 * t * t);
        beta_ff[i] = std::sqrt(std::max(0.0, 1.0 - t * t));
    }
    const std::vector<double> hist_nf = histogram_density(beta_nf, 0.0, 1.0, grid);
    const std::vector<double> hist_ff = histogram_density(beta_ff, 0.0, 1.0, grid);

    for (std::size_t i = 0; i < grid.size(); ++i)
        w.row({grid[i], stats::pdf_beta_nf(grid[i]), stats::pdf_beta_ff(grid[i]),
               hist_nf[i], hist_ff[i]});
    w.flush_to(cfg.out);
    return kExitOk;
}

int cmd_pdf_h_cond(const RunConfig &cfg) {
    validate_common(cfg);
    const mc::FixedTxGeometry fixed = mc::FixedTxGeometry::from_dot(cfg.dot);
    const ComplexFieldVector v = field_vector(cfg.kr, cfg.alpha_bar, fixed.d, fixed.o_tx);
    if (v.degenerate())
        throw std::invalid_argument(
            "conditional distribution is degenerate at d^T o_tx = " +
            fmt_double(cfg.dot) + " (line support); choose |dot| inside (0, 1)");

    CsvWriter w;
    preamble(w, cfg, "pdf-h-cond", "dot=" + fmt_double(cfg.dot));
    w.header({"re", "im", "pdf"});

    const double re_max = v.v_re_norm() * 1.05;
    const double im_max = v.v_im_norm() * 1.05;
    const std::vector<double> res = linspace(-re_max, re_max, cfg.grid);
    const std::vector<double> ims = linspace(-im_max, im_max, cfg.grid);
    for (double im : ims)
        for (double re : res)
            w.row({re, im, stats::pdf_h_conditional(Complex(re, im), v)});
    w.flush_to(cfg.out);
    return kExitOk;
}

int cmd_pdf_h_full(const RunConfig &cfg) {
    validate_common(cfg);
    stats::FullPdfOptions opt;
    opt.abs_tol = cfg.full_pdf_tol;
    opt.rel_tol = cfg.full_pdf_tol;
    opt.threads = cfg.threads;
    const stats::GridSpec grid =
        stats::GridSpec::rhombus_bbox(cfg.kr, cfg.alpha_bar, 0.05, cfg.grid);
    const stats::FullPdfResult full = stats::pdf_h_full(cfg.kr, cfg.alpha_bar, grid, opt);

    CsvWriter w;
    preamble(w, cfg, "pdf-h-full", "tol=" + fmt_double(cfg.full_pdf_tol));
    w.comment("unconverged_points=" + std::to_string(full.unconverged_points) +
              " singular_ridge_points=" + std::to_string(full.singular_ridge_points) +
              " max_error=" + fmt_double(full.max_error));
    w.header({"re", "im", "pdf"});
    for (std::size_t iy = 0; iy < full.curve.ny(); ++iy)
        for (std::size_t ix = 0; ix < full.curve.nx(); ++ix)
            w.row({full.curve.grid[ix], full.curve.grid2[iy], full.curve.at(ix, iy)});
    w.flush_to(cfg.out);

    // Non-convergence beyond the analytically singular ridge lattice points
    // is a genuine numerical failure.
    return full.unconverged_points > full.singular_ridge_points ? kExitNoConvergence
                                                                : kExitOk;
}

int cmd_scatter(const RunConfig &cfg) {
    validate_common(cfg);
    const mc::FixedTxGeometry fixed = mc::FixedTxGeometry::from_dot(cfg.dot);
    const mc::SampleSet set = mc::sample_channel(cfg.samples, cfg.kr, cfg.alpha_bar,
                                                 cfg.mode, cfg.seed, fixed, cfg.threads);
    CsvWriter w;
    preamble(w, cfg, "scatter",
             "mode=" + mode_name(cfg.mode) + " dot=" + fmt_double(cfg.dot));
    w.header({"re", "im"});
    for (const Complex &h : set.values) w.row({h.real(), h.imag()});
    w.flush_to(cfg.out);
    return kExitOk;
}

int cmd_outage(const RunConfig &cfg) {
    validate_common(cfg);
    if (!(cfg.snr_opt > 0.0)) throw std::invalid_argument("--snr-opt must be > 0");

    CsvWriter w;
    std::string extras = "snr_opt=" + fmt_double(cfg.snr_opt) + " kr_list=";
    for (std::size_t i = 0; i < cfg.kr_list.size(); ++i)
        extras += (i ? "|" : "") + fmt_double(cfg.kr_list[i]);
    if (cfg.region) extras += " region=" + std::string(to_string(*cfg.region));
    preamble(w, cfg, "outage", extras);
    w.header({"table", "series", "x", "y"});

    auto emit = [&](const std::string &table, const std::string &series, double x,
                    double y) {
        w.row({table, series, fmt_double(x), fmt_double(y)});
    };
    auto region_selected = [&](RegionKind r) { return !cfg.region || *cfg.region == r; };

    // Misalignment-loss CDF family plus per-curve deep-fade exponents; one
    // sample set per kr serves both.
    const std::vector<double> loss_grid = linspace(-60.0, 0.0, 601);
    for (double kr : cfg.kr_list) {
        const mc::Ecdf e = mc::normalized_pte_ecdf(kr, cfg.samples, cfg.seed, cfg.threads);
        const std::string series = "kr=" + fmt_double(kr);
        for (double db : loss_grid)
            emit("loss_cdf", series, db, e.query(std::pow(10.0, db / 10.0)));

        std::vector<std::pair<double, double>> pts;
        for (int k = 0; k < 13; ++k) {
            const double eps = 1e-4 * std::pow(100.0, double(k) / 12.0);
            pts.emplace_back(e.quantile(eps), eps);
        }
        try {
            emit("diversity_exponent", "loss_kr=" + fmt_double(kr), 0.0,
                 outage::loglog_slope(pts, {0.0, 1e300}));
        } catch (const std::invalid_argument &) {
            // Not enough deep-fade span at this kr; skip the fit.
        }
    }
    if (cfg.rayleigh) {
        for (double db : loss_grid)
            emit("loss_cdf", "rayleigh", db,
                 outage::rayleigh_reference_cdf(std::pow(10.0, db / 10.0), 1.0));
    }

    // Outage PTE and capacity vs target outage probability. Region laws are
    // closed-form; the transition is served from empirical quantiles at the
    // configured kr.
    const std::vector<double> eps_grid = logspace(1e-3, 0.5, 25);
    const double eta_opt = optimal_pte(cfg.kr, cfg.alpha_bar);
    for (RegionKind region : {RegionKind::NearField, RegionKind::FarField}) {
        if (!region_selected(region)) continue;
        const std::string name = to_string(region);
        for (double eps : eps_grid) {
            const outage::OutageSpec spec(eps, region, eta_opt, cfg.snr_opt, cfg.snr_opt,
                                          eta_opt);
            const double eta_eps_rel = outage::outage_pte(spec) / eta_opt;
            emit("outage_pte", name, eps, eta_eps_rel);
            const outage::OutageCapacity c =
                outage::outage_capacity(spec, [&](double) { return eta_eps_rel; });
            emit("outage_capacity", name, eps, c.capacity);
            emit("outage_capacity", name + "_bound", eps, c.log_linear_bound);
        }
    }
    if (region_selected(RegionKind::Transition)) {
        const mc::Ecdf e = mc::normalized_pte_ecdf(cfg.kr, cfg.samples, cfg.seed, cfg.threads);
        for (double eps : eps_grid) {
            const double s_rel = e.quantile(eps);
            emit("outage_pte", "transition", eps, s_rel);
            emit("outage_capacity", "transition", eps, std::log2(1.0 + s_rel * cfg.snr_opt));
        }
    }

    // BPSK BER curves: exact region law, closed-form bound, backscatter.
    const std::vector<double> snr_grid = logspace(1e1, 1e5, 25);
    const outage::FitWindow fit_window{1e2, 1e4};
    for (RegionKind region : {RegionKind::NearField, RegionKind::FarField}) {
        if (!region_selected(region)) continue;
        const std::string name = to_string(region);
        std::vector<std::pair<double, double>> exact_curve, backscatter_curve;
        for (double snr : snr_grid) {
            const double exact = outage::ber_exact_region(snr, region);
            const double back = outage::ber_backscatter(snr, region);
            exact_curve.emplace_back(snr, exact);
            backscatter_curve.emplace_back(snr, back);
            emit("ber", name + "_exact", snr, exact);
            emit("ber", name + "_bound", snr, outage::ber_bound(snr, region));
            emit("ber", name + "_backscatter", snr, back);
        }
        emit("diversity_exponent", name + "_ber", 0.0,
             outage::diversity_exponent_fit(exact_curve, fit_window));
        emit("diversity_exponent", name + "_backscatter", 0.0,
             outage::diversity_exponent_fit(backscatter_curve, fit_window));
    }

    w.flush_to(cfg.out);
    return kExitOk;
}

} // namespace dfcli
