// Copyright 2026 The cavent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// commands.hpp: the five CLI modes. Each builds a Table; run() writes it.

#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "cavent/cli/config.hpp"
#include "cavent/cli/csv.hpp"

namespace cavent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 2;

// Worker count from CAVENT_WORKERS, else the hardware concurrency.
unsigned worker_count();

// Columns: t, C, B, rho11_re, rho11_im, ..., rho32_im, engine.
Table cmd_evolve(const RunConfig& cfg);

// Columns: swept axis names, C_st, B_st. Every 100th point is re-solved with
// the numeric kernel; a gap above 1e-8 throws ErrorKind::Consistency.
Table cmd_steady_sweep(const RunConfig& cfg);

// Columns: nt, omega, entangled, omega_c.
Table cmd_region(const RunConfig& cfg);

// Columns: n_t, t, B, C (one block per n_t value).
Table cmd_bell_evolve(const RunConfig& cfg);

struct AdiabaticSummary {
    double max_gap = 0.0;
    double cutoff_gap_change = 0.0;
    double detuning_ratio = 0.0;
    bool flagged = false;
    bool pass = false;
};

// Columns: t, gap_11, gap_22, gap_33, gap_44, gap_23, gap_max, flagged.
Table cmd_validate_adiabatic(const RunConfig& cfg, AdiabaticSummary* summary = nullptr);

Table run_command(const RunConfig& cfg);

// Full CLI entry point (args exclude the program name). Returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace cavent::cli
