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

#ifndef DIPOLEFADE_TOOLS_COMMANDS_HPP
#define DIPOLEFADE_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dipolefade/model.hpp"
#include "dipolefade/montecarlo.hpp"
#include "dipolefade/region.hpp"

namespace dfcli {

inline constexpr const char *kToolName = "dipolefade";
inline constexpr const char *kToolVersion = "1.0.0";

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadConfig = 2;
inline constexpr int kExitNoConvergence = 3;

struct RunConfig {
    double kr = 2.0;
    dipolefade::Complex alpha_bar{1e-2, 0.0};
    std::uint64_t seed = 0;
    std::size_t samples = 1000000;
    int grid = 201;
    std::string out = "-";
    unsigned threads = 1;
    dipolefade::mc::SampleMode mode = dipolefade::mc::SampleMode::BothRandom;
    double dot = 0.3; ///< d^T o_tx for the conditional commands
    std::vector<double> kr_list{0.1, 2.0, 100.0};
    double snr_opt = 1e4;
    bool rayleigh = false;
    std::optional<dipolefade::RegionKind> region; ///< restrict outage tables
    double full_pdf_tol = 1e-6;
};

int cmd_field_map(const RunConfig &cfg);
int cmd_pdf_j(const RunConfig &cfg);
int cmd_pdf_beta(const RunConfig &cfg);
int cmd_pdf_h_cond(const RunConfig &cfg);
int cmd_pdf_h_full(const RunConfig &cfg);
int cmd_scatter(const RunConfig &cfg);
int cmd_outage(const RunConfig &cfg);

} // namespace dfcli

#endif // DIPOLEFADE_TOOLS_COMMANDS_HPP
