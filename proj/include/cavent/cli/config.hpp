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

// config.hpp: run configuration for the command-line tool.
//
// Settings come from `--key value` flags and, optionally, a text file of
// `key = value` lines (`#` starts a comment). Flags override the file.

#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cavent/model.hpp"
#include "cavent/state.hpp"

namespace cavent::cli {

enum class Mode { Evolve, SteadySweep, Region, BellEvolve, ValidateAdiabatic };

Mode parse_mode(std::string_view name);
std::string_view to_string(Mode mode) noexcept;

// `start:stop:count` with an optional `:log` suffix.
struct Axis {
    std::string name;
    double start = 0.0;
    double stop = 1.0;
    int count = 2;
    bool log = false;

    std::vector<double> values() const;
    std::string spec() const;
};

// Throws ErrorKind::Usage on malformed specs, count < 2 or stop <= start.
Axis parse_axis(std::string_view name, std::string_view spec);

struct RawEntry {
    std::string value;
    std::string origin; // "--key" or "file:line"
};

using RawConfig = std::map<std::string, RawEntry, std::less<>>;

// Reads `key = value` lines. Throws ErrorKind::Io / ErrorKind::Usage.
RawConfig read_config_file(const std::string& path);

struct ParsedArgs {
    Mode mode = Mode::Evolve;
    RawConfig values; // file values merged under the flags
    bool help = false;
};

// args excludes the program name.
ParsedArgs parse_args(std::span<const std::string> args);

struct RunConfig {
    Mode mode = Mode::Evolve;
    EffectiveParams effective;
    FullModelParams full;
    std::vector<Axis> axes; // steady-sweep: 1 or 2 axes; region: {nt, omega}
    Axis time{"t", 0.0, 100.0, 400, false};
    std::vector<double> n_t_list; // bell-evolve
    ProductState initial = ProductState::s10;
    double tolerance = 5e-2; // validate-adiabatic
    std::string output_path;

    // Resolved settings in a fixed order, written as CSV header comments.
    std::vector<std::pair<std::string, std::string>> provenance;
};

// Applies per-mode defaults and validates. Unknown keys, malformed values
// and missing --out raise ErrorKind::Usage naming the offending field.
RunConfig make_run_config(Mode mode, const RawConfig& raw);

std::string usage_text();

} // namespace cavent::cli
