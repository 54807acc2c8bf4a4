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

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <thread>

#include "commands.hpp"
#include "complex_arg.hpp"
#include "dipolefade/outage.hpp"

namespace {

unsigned default_threads() {
    if (const char *env = std::getenv("DIPOLE_FADE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return unsigned(v);
    }
    return 1;
}

dipolefade::RegionKind parse_region(const std::string &name) {
    if (name == "near") return dipolefade::RegionKind::NearField;
    if (name == "far") return dipolefade::RegionKind::FarField;
    if (name == "transition") return dipolefade::RegionKind::Transition;
    throw CLI::ValidationError("--region", "expected near, far, or transition");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Dipole-link channel statistics: deterministic channel model, "
                 "closed-form fading laws, Monte-Carlo validation, and outage/BER "
                 "analysis emitted as CSV."};
    app.set_version_flag("--version", std::string(dfcli::kToolName) + " " +
                                          dfcli::kToolVersion);
    app.require_subcommand(1);

    dfcli::RunConfig cfg;
    cfg.threads = default_threads();

    std::string alpha_text = "0.01";
    std::string mode_text = "both-random";
    std::string region_text;

    auto add_common = [&](CLI::App *sub, bool scalar_kr = true) {
        if (scalar_kr)
            sub->add_option("--kr", cfg.kr, "wavenumber-distance product (kr > 0)")
                ->capture_default_str();
        sub->add_option("--alpha-bar", alpha_text,
                        "complex prefactor: 're,im', 'mag@phase_rad', or a real")
            ->capture_default_str();
        sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
        sub->add_option("--samples", cfg.samples, "Monte-Carlo draw count")
            ->capture_default_str();
        sub->add_option("--grid", cfg.grid, "grid resolution per axis")
            ->capture_default_str();
        sub->add_option("--out", cfg.out, "output CSV path ('-' for stdout)")
            ->capture_default_str();
        sub->add_option("--threads", cfg.threads,
                        "worker threads (env DIPOLE_FADE_THREADS as fallback); "
                        "results are identical for any value")
            ->capture_default_str();
    };

    CLI::App *field_map = app.add_subcommand(
        "field-map", "scaled near/far field magnitudes on a plane through the dipole axis");
    CLI::App *pdf_j = app.add_subcommand(
        "pdf-j", "marginal PDFs of the alignment factors with Monte-Carlo histograms");
    CLI::App *pdf_beta = app.add_subcommand(
        "pdf-beta", "marginal PDFs of the field magnitudes with Monte-Carlo histograms");
    CLI::App *pdf_h_cond = app.add_subcommand(
        "pdf-h-cond", "conditional channel-coefficient PDF on a complex-plane grid");
    CLI::App *pdf_h_full = app.add_subcommand(
        "pdf-h-full", "fully random channel-coefficient PDF on a complex-plane grid");
    CLI::App *scatter =
        app.add_subcommand("scatter", "raw channel-coefficient draws");
    CLI::App *outage = app.add_subcommand(
        "outage",
        "misalignment-loss CDFs, outage PTE/capacity tables, BER curves, exponents");

    for (CLI::App *sub : {field_map, pdf_j, pdf_beta, pdf_h_cond, pdf_h_full, scatter})
        add_common(sub);
    add_common(outage, /*scalar_kr=*/false);

    pdf_h_cond->add_option("--dot", cfg.dot, "TX-side projection d^T o_tx")
        ->capture_default_str();
    scatter->add_option("--dot", cfg.dot, "TX-side projection for rx-random mode")
        ->capture_default_str();
    scatter
        ->add_option("--mode", mode_text, "orientation sampling: both-random | rx-random")
        ->capture_default_str()
        ->check(CLI::IsMember({"both-random", "rx-random"}));
    pdf_h_full
        ->add_option("--tol", cfg.full_pdf_tol, "per-grid-point quadrature tolerance")
        ->capture_default_str();
    outage->add_option("--kr", cfg.kr_list, "kr values for the loss-CDF family")
        ->delimiter(',')
        ->capture_default_str();
    outage
        ->add_option("--transition-kr", cfg.kr,
                     "kr backing the empirical transition quantile tables")
        ->capture_default_str();
    outage->add_option("--snr-opt", cfg.snr_opt, "optimal-orientation SNR for capacity")
        ->capture_default_str();
    outage->add_flag("--rayleigh", cfg.rayleigh, "add the Rayleigh reference CDF");
    outage->add_option("--region", region_text, "restrict tables: near | far | transition")
        ->check(CLI::IsMember({"near", "far", "transition"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return dfcli::kExitBadConfig;
    }

    try {
        cfg.alpha_bar = dfcli::parse_complex(alpha_text);
        cfg.mode = mode_text == "rx-random" ? dipolefade::mc::SampleMode::RxRandom
                                            : dipolefade::mc::SampleMode::BothRandom;
        if (!region_text.empty()) cfg.region = parse_region(region_text);
        if (cfg.threads == 0) cfg.threads = std::thread::hardware_concurrency();

        if (field_map->parsed()) return dfcli::cmd_field_map(cfg);
        if (pdf_j->parsed()) return dfcli::cmd_pdf_j(cfg);
        if (pdf_beta->parsed()) return dfcli::cmd_pdf_beta(cfg);
        if (pdf_h_cond->parsed()) return dfcli::cmd_pdf_h_cond(cfg);
        if (pdf_h_full->parsed()) return dfcli::cmd_pdf_h_full(cfg);
        if (scatter->parsed()) return dfcli::cmd_scatter(cfg);
        if (outage->parsed()) return dfcli::cmd_outage(cfg);
        std::cerr << "no subcommand selected\n";
        return dfcli::kExitBadConfig;
    } catch (const dipolefade::outage::QuadratureError &e) {
        std::cerr << "numerical convergence failure: " << e.what() << "\n";
        return dfcli::kExitNoConvergence;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return dfcli::kExitBadConfig;
    } catch (const std::domain_error &e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return dfcli::kExitBadConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
