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

#include "cavent/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "cavent/dynamics.hpp"
#include "cavent/errors.hpp"
#include "cavent/measures.hpp"

namespace cavent::cli {

namespace {

constexpr double kSpotCheckTol = 1e-8;
constexpr std::size_t kSpotCheckStride = 100;

// Runs fn(i) for i in [0, n). If several items throw, the exception of the
// lowest index is rethrown so failures are reproducible.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn)
{
    const std::size_t workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t failed_index = n;
    std::exception_ptr failure;
    auto body = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

void push_entries(std::vector<Cell>& row, const DensityMatrix4& rho)
{
    static constexpr std::array<std::pair<int, int>, 6> tracked{
        {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 1}}};
    for (const auto& [r, c] : tracked) {
        row.emplace_back(rho(r, c).real());
        row.emplace_back(rho(r, c).imag());
    }
}

std::vector<std::string> entry_columns()
{
    std::vector<std::string> cols;
    for (const char* label : {"rho11", "rho22", "rho33", "rho44", "rho23", "rho32"}) {
        cols.push_back(std::string(label) + "_re");
        cols.push_back(std::string(label) + "_im");
    }
    return cols;
}

EffectiveParams with_axis_value(EffectiveParams p, const std::string& axis, double v)
{
    if (axis == "nt") p.n_t[0] = v;
    else if (axis == "eta") p.eta = v;
    else if (axis == "gamma") p.gamma[0] = v;
    else if (axis == "omega") p.omega_eff = v;
    else throw Error(ErrorKind::Usage, "unknown sweep axis '" + axis + "'");
    return p;
}

double max_entry_gap(const numkit::CMatrix& a, const numkit::CMatrix& b)
{
    return numkit::max_abs(a - b);
}

std::vector<DensityMatrix4> reduced_full_trajectory(const FullModelParams& f, ProductState initial,
                                                    std::span<const double> times)
{
    const Liouvillian l = build_full_liouvillian(f);
    const numkit::CMatrix rho0 = with_cavity_vacuum(DensityMatrix4::product(initial), f.n_max);
    std::vector<DensityMatrix4> out;
    for (const numkit::CMatrix& m : propagate_grid(l, rho0, times)) {
        out.push_back(partial_trace_cavity(m, f.n_max));
    }
    return out;
}

} // namespace

unsigned worker_count()
{
    if (const char* env = std::getenv("CAVENT_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Table cmd_evolve(const RunConfig& cfg)
{
    const std::vector<double> times = cfg.time.values();
    const EffectiveParams& p = cfg.effective;
    const bool analytic = p.is_symmetric() && cfg.initial == ProductState::s10;

    std::vector<std::optional<DensityMatrix4>> states(times.size());
    if (analytic) {
        parallel_for(times.size(), [&](std::size_t i) {
            states[i] = analytic_state_symmetric(p, times[i]);
        });
    } else {
        Trajectory traj = trajectory(build_effective_liouvillian(p),
                                     DensityMatrix4::product(cfg.initial), times);
        for (std::size_t i = 0; i < times.size(); ++i) states[i] = std::move(traj.states[i]);
    }

    Table table;
    table.columns = {"t", "C", "B"};
    for (auto& c : entry_columns()) table.columns.push_back(std::move(c));
    table.columns.push_back("engine");
    table.rows.resize(times.size());
    parallel_for(times.size(), [&](std::size_t i) {
        const DensityMatrix4& rho = *states[i];
        std::vector<Cell> row{times[i], concurrence(rho), bell_max(rho)};
        push_entries(row, rho);
        row.emplace_back(std::string(analytic ? "analytic" : "numeric"));
        table.rows[i] = std::move(row);
    });
    return table;
}

Table cmd_steady_sweep(const RunConfig& cfg)
{
    if (cfg.axes.empty() || cfg.axes.size() > 2) {
        throw Error(ErrorKind::Usage, "steady-sweep needs one or two axes");
    }
    const std::vector<double> outer = cfg.axes[0].values();
    const std::vector<double> inner =
        cfg.axes.size() == 2 ? cfg.axes[1].values() : std::vector<double>{0.0};
    const std::size_t n = outer.size() * inner.size();

    Table table;
    for (const Axis& a : cfg.axes) table.columns.push_back(a.name);
    table.columns.push_back("C_st");
    table.columns.push_back("B_st");
    table.rows.resize(n);

    parallel_for(n, [&](std::size_t k) {
        const std::size_t i = k / inner.size();
        const std::size_t j = k % inner.size();
        EffectiveParams p = with_axis_value(cfg.effective, cfg.axes[0].name, outer[i]);
        if (cfg.axes.size() == 2) p = with_axis_value(p, cfg.axes[1].name, inner[j]);
        const DensityMatrix4 rho = analytic_steady_asymmetric(p);

        if (k % kSpotCheckStride == 0) {
            const DensityMatrix4 numeric = numeric_steady4(build_effective_liouvillian(p));
            const double gap = max_entry_gap(rho.matrix(), numeric.matrix());
            if (gap > kSpotCheckTol) {
                std::ostringstream os;
                os << "closed-form and numeric steady states differ by " << gap << " at grid point " << k;
                throw Error(ErrorKind::Consistency, os.str());
            }
        }

        std::vector<Cell> row{outer[i]};
        if (cfg.axes.size() == 2) row.emplace_back(inner[j]);
        row.emplace_back(concurrence_x(rho));
        row.emplace_back(bell_max(rho));
        table.rows[k] = std::move(row);
    });
    return table;
}

Table cmd_region(const RunConfig& cfg)
{
    const std::vector<double> nts = cfg.axes.at(0).values();
    const std::vector<double> omegas = cfg.axes.at(1).values();
    const double gamma = cfg.effective.gamma[0];
    const double eta = cfg.effective.eta;

    Table table;
    table.columns = {"nt", "omega", "entangled", "omega_c"};
    table.rows.resize(nts.size() * omegas.size());
    parallel_for(table.rows.size(), [&](std::size_t k) {
        const double nt = nts[k / omegas.size()];
        const double omega = omegas[k % omegas.size()];
        const auto p = EffectiveParams::single_driven(omega, gamma, nt, eta);
        const bool entangled = concurrence_x(analytic_steady_asymmetric(p)) > 0.0;
        const std::optional<double> omega_c = omega_threshold(gamma, eta, nt);
        table.rows[k] = {nt, omega, static_cast<long long>(entangled),
                         omega_c ? Cell{*omega_c} : Cell{}};
    });
    return table;
}

Table cmd_bell_evolve(const RunConfig& cfg)
{
    const std::vector<double> times = cfg.time.values();
    std::vector<Trajectory> runs(cfg.n_t_list.size());
    parallel_for(runs.size(), [&](std::size_t k) {
        const auto p = EffectiveParams::single_driven(cfg.effective.omega_eff, cfg.effective.gamma[0],
                                                      cfg.n_t_list[k], cfg.effective.eta);
        runs[k] = trajectory(build_effective_liouvillian(p), DensityMatrix4::product(cfg.initial), times);
    });

    Table table;
    table.columns = {"n_t", "t", "B", "C"};
    for (std::size_t k = 0; k < runs.size(); ++k) {
        for (std::size_t i = 0; i < times.size(); ++i) {
            const DensityMatrix4& rho = runs[k].states[i];
            table.rows.push_back({cfg.n_t_list[k], times[i], bell_max(rho), concurrence(rho)});
        }
    }
    return table;
}

Table cmd_validate_adiabatic(const RunConfig& cfg, AdiabaticSummary* summary)
{
    const std::vector<double> times = cfg.time.values();
    const FullModelParams& f = cfg.full;

    const Trajectory effective = trajectory(build_effective_liouvillian(cfg.effective),
                                            DensityMatrix4::product(cfg.initial), times);
    FullModelParams raised = f;
    raised.n_max = f.n_max + 1;
    std::vector<DensityMatrix4> full;
    std::vector<DensityMatrix4> full_raised;
    parallel_for(2, [&](std::size_t k) {
        if (k == 0) full = reduced_full_trajectory(f, cfg.initial, times);
        else full_raised = reduced_full_trajectory(raised, cfg.initial, times);
    });

    AdiabaticSummary s;
    s.detuning_ratio = f.detuning_ratio();
    s.flagged = !f.large_detuning();

    Table table;
    table.columns = {"t", "gap_11", "gap_22", "gap_33", "gap_44", "gap_23", "gap_max", "flagged"};
    for (std::size_t i = 0; i < times.size(); ++i) {
        const numkit::CMatrix diff = full[i].matrix() - effective.states[i].matrix();
        const double gap = numkit::max_abs(diff);
        const double gap_raised = max_entry_gap(full_raised[i].matrix(), effective.states[i].matrix());
        s.max_gap = std::max(s.max_gap, gap);
        s.cutoff_gap_change = std::max(s.cutoff_gap_change, std::abs(gap - gap_raised));
        table.rows.push_back({times[i], std::abs(diff(0, 0)), std::abs(diff(1, 1)), std::abs(diff(2, 2)),
                              std::abs(diff(3, 3)), std::abs(diff(1, 2)), gap,
                              static_cast<long long>(s.flagged)});
    }
    s.pass = s.max_gap <= cfg.tolerance;

    table.trailer.push_back("max_gap = " + format_double(s.max_gap));
    table.trailer.push_back("cutoff_gap_change = " + format_double(s.cutoff_gap_change));
    table.trailer.push_back("detuning_ratio = " + format_double(s.detuning_ratio));
    table.trailer.push_back("tolerance = " + format_double(cfg.tolerance));
    table.trailer.push_back(std::string("result = ") + (s.pass ? "pass" : "fail"));
    if (summary) *summary = s;
    return table;
}

Table run_command(const RunConfig& cfg)
{
    switch (cfg.mode) {
    case Mode::Evolve: return cmd_evolve(cfg);
    case Mode::SteadySweep: return cmd_steady_sweep(cfg);
    case Mode::Region: return cmd_region(cfg);
    case Mode::BellEvolve: return cmd_bell_evolve(cfg);
    case Mode::ValidateAdiabatic: return cmd_validate_adiabatic(cfg);
    }
    throw Error(ErrorKind::Usage, "unknown mode");
}

namespace {

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Consistency:
    case ErrorKind::Integration:
    case ErrorKind::Range:
    case ErrorKind::NotPsd:
        return kExitInternal;
    default:
        return kExitUsage;
    }
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    try {
        const ParsedArgs parsed = parse_args(args);
        if (parsed.help) {
            out << usage_text();
            return kExitOk;
        }
        const RunConfig cfg = make_run_config(parsed.mode, parsed.values);

        std::vector<std::pair<std::string, std::string>> header{
            {"mode", std::string(to_string(cfg.mode))}};
        header.insert(header.end(), cfg.provenance.begin(), cfg.provenance.end());

        if (cfg.mode == Mode::ValidateAdiabatic) {
            AdiabaticSummary s;
            const Table table = cmd_validate_adiabatic(cfg, &s);
            if (s.flagged) {
                err << "cavent: warning: detuning ratio " << format_double(s.detuning_ratio)
                    << " is below 10; the dispersive approximation may not hold\n";
            }
            write_csv_file(cfg.output_path, header, table);
            out << "max_gap = " << format_double(s.max_gap) << "\n"
                << "cutoff_gap_change = " << format_double(s.cutoff_gap_change) << "\n"
                << (s.pass ? "PASS" : "FAIL") << "\n";
            return s.pass ? kExitOk : kExitInternal;
        }

        write_csv_file(cfg.output_path, header, run_command(cfg));
        return kExitOk;
    } catch (const Error& e) {
        err << "cavent: " << to_string(e.kind()) << ": " << e.what() << "\n";
        if (e.kind() == ErrorKind::Usage) err << "run 'cavent --help' for usage\n";
        return exit_code_for(e.kind());
    }
}

} // namespace cavent::cli
