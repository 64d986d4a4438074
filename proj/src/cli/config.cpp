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

#include "cavent/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "cavent/cli/csv.hpp"
#include "cavent/errors.hpp"

namespace cavent::cli {

namespace {

[[noreturn]] void usage_error(const std::string& msg)
{
    throw Error(ErrorKind::Usage, msg);
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        parts.push_back(s.substr(pos, next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

bool parse_double(std::string_view text, double& out)
{
    text = trim(text);
    if (text.empty()) return false;
    if (text.front() == '+') text.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

bool parse_int(std::string_view text, int& out)
{
    text = trim(text);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return !text.empty() && ec == std::errc() && ptr == text.data() + text.size();
}

struct KeySpec {
    const char* name;
    const char* fallback; // empty: no default
};

const std::vector<KeySpec>& keys_for(Mode mode)
{
    static const std::vector<KeySpec> evolve{
        {"scenario", "symmetric"}, {"omega", "0.2"}, {"gamma", "0.01"}, {"nt", "0"},
        {"gamma2", ""}, {"nt2", ""}, {"eta", ""}, {"initial", "10"},
        {"t-range", "0:100:400"}, {"out", ""}};
    static const std::vector<KeySpec> sweep{
        {"omega", "0.2"}, {"gamma", "0.1"}, {"nt", "2"}, {"eta", "0.5"},
        {"sweep", ""}, {"sweep2", ""}, {"out", ""}};
    static const std::vector<KeySpec> region{
        {"gamma", "0.1"}, {"eta", "0.5"}, {"nt-range", "0.06:6:101"},
        {"omega-range", "0:1:101"}, {"out", ""}};
    static const std::vector<KeySpec> bell{
        {"omega", "0.2"}, {"gamma", "0.01"}, {"eta", "0.01"}, {"nt-list", "0,0.5,1"},
        {"initial", "10"}, {"t-range", "0:60:400"}, {"out", ""}};
    static const std::vector<KeySpec> validate{
        {"omega-cavity", "0"}, {"omega-atom", "5"}, {"g", "0.1"}, {"kappa", "0"},
        {"n-max", "2"}, {"gamma", "0.01"}, {"nt", "0"}, {"initial", "10"},
        {"t-range", "0:500:400"}, {"tolerance", "0.05"}, {"out", ""}};
    switch (mode) {
    case Mode::Evolve: return evolve;
    case Mode::SteadySweep: return sweep;
    case Mode::Region: return region;
    case Mode::BellEvolve: return bell;
    case Mode::ValidateAdiabatic: return validate;
    }
    return evolve;
}

// Typed access to the raw map, recording every resolved value.
class Reader {
public:
    Reader(Mode mode, const RawConfig& raw, RunConfig& cfg) : mode_(mode), raw_(raw), cfg_(cfg)
    {
        std::set<std::string, std::less<>> known;
        for (const auto& k : keys_for(mode)) known.insert(k.name);
        for (const auto& [key, entry] : raw) {
            if (!known.contains(key)) {
                usage_error(entry.origin + ": unknown setting '" + key + "' for mode " +
                            std::string(to_string(mode)));
            }
        }
    }

    bool given(std::string_view key) const { return raw_.find(key) != raw_.end(); }

    std::string text(std::string_view key) const
    {
        if (auto it = raw_.find(key); it != raw_.end()) return it->second.value;
        for (const auto& k : keys_for(mode_)) {
            if (key == k.name) return k.fallback;
        }
        return {};
    }

    std::string origin(std::string_view key) const
    {
        if (auto it = raw_.find(key); it != raw_.end()) return it->second.origin;
        return "default '" + std::string(key) + "'";
    }

    double number(std::string_view key, bool nonneg = true) const
    {
        double v = 0.0;
        const std::string t = text(key);
        if (!parse_double(t, v)) {
            usage_error(origin(key) + ": '" + std::string(key) + "' expects a number, got '" + t + "'");
        }
        if (nonneg && v < 0.0) {
            usage_error(origin(key) + ": '" + std::string(key) + "' must be >= 0");
        }
        record(key, format_double(v));
        return v;
    }

    int integer(std::string_view key) const
    {
        int v = 0;
        const std::string t = text(key);
        if (!parse_int(t, v)) {
            usage_error(origin(key) + ": '" + std::string(key) + "' expects an integer, got '" + t + "'");
        }
        record(key, std::to_string(v));
        return v;
    }

    Axis axis(std::string_view key, std::string_view name) const
    {
        try {
            Axis a = parse_axis(name, text(key));
            record(key, a.spec());
            return a;
        } catch (const Error& e) {
            usage_error(origin(key) + ": " + e.what());
        }
    }

    ProductState initial() const
    {
        try {
            ProductState s = parse_product_state(text("initial"));
            record("initial", std::string(to_string(s)));
            return s;
        } catch (const Error& e) {
            usage_error(origin("initial") + ": " + e.what());
        }
    }

    void record(std::string_view key, std::string value) const
    {
        cfg_.provenance.emplace_back(std::string(key), std::move(value));
    }

private:
    Mode mode_;
    const RawConfig& raw_;
    RunConfig& cfg_;
};

void resolve_evolve(const Reader& r, RunConfig& cfg)
{
    const std::string scenario = r.text("scenario");
    r.record("scenario", scenario);
    const double omega = r.number("omega");
    const double gamma = r.number("gamma");
    const double nt = r.number("nt");
    EffectiveParams p;
    if (scenario == "symmetric") {
        for (const char* k : {"gamma2", "nt2", "eta"}) {
            if (r.given(k)) usage_error(r.origin(k) + ": '" + k + "' is not allowed with scenario symmetric");
        }
        p = EffectiveParams::symmetric(omega, gamma, nt);
    } else if (scenario == "single") {
        for (const char* k : {"gamma2", "nt2"}) {
            if (r.given(k)) usage_error(r.origin(k) + ": '" + k + "' is not allowed with scenario single");
        }
        const double eta = r.given("eta") ? r.number("eta") : 0.0;
        p = EffectiveParams::single_driven(omega, gamma, nt, eta);
    } else if (scenario == "custom") {
        p.omega_eff = omega;
        p.gamma = {gamma, r.given("gamma2") ? r.number("gamma2") : 0.0};
        p.n_t = {nt, r.given("nt2") ? r.number("nt2") : 0.0};
        p.eta = r.given("eta") ? r.number("eta") : 0.0;
        p.validate();
    } else {
        usage_error(r.origin("scenario") + ": scenario must be symmetric, single or custom");
    }
    cfg.effective = p;
    cfg.initial = r.initial();
    cfg.time = r.axis("t-range", "t");
}

void resolve_sweep(const Reader& r, RunConfig& cfg)
{
    const double omega = r.number("omega");
    const double gamma = r.number("gamma");
    const double nt = r.number("nt");
    const double eta = r.number("eta");
    cfg.effective = EffectiveParams::single_driven(omega, gamma, nt, eta);

    auto axis_from = [&](std::string_view key) {
        const std::string text = r.text(key);
        const auto colon = text.find(':');
        if (colon == std::string::npos) {
            usage_error(r.origin(key) + ": expected name:start:stop:count, got '" + text + "'");
        }
        const std::string name = text.substr(0, colon);
        if (name != "nt" && name != "eta" && name != "gamma" && name != "omega") {
            usage_error(r.origin(key) + ": sweep axis must be one of nt, eta, gamma, omega");
        }
        Axis a;
        try {
            a = parse_axis(name, std::string_view(text).substr(colon + 1));
        } catch (const Error& e) {
            usage_error(r.origin(key) + ": " + e.what());
        }
        if (a.start < 0.0) usage_error(r.origin(key) + ": sweep values must be >= 0");
        r.record(key, a.name + ":" + a.spec());
        return a;
    };

    if (!r.given("sweep") && !r.given("sweep2")) {
        cfg.axes.push_back(Axis{"eta", 0.03, 3.0, 101, false});
        cfg.axes.push_back(Axis{"nt", 0.06, 6.0, 101, false});
        r.record("sweep", "eta:" + cfg.axes[0].spec());
        r.record("sweep2", "nt:" + cfg.axes[1].spec());
        return;
    }
    if (!r.given("sweep")) usage_error(r.origin("sweep2") + ": 'sweep2' requires 'sweep'");
    cfg.axes.push_back(axis_from("sweep"));
    if (r.given("sweep2")) {
        cfg.axes.push_back(axis_from("sweep2"));
        if (cfg.axes[0].name == cfg.axes[1].name) {
            usage_error(r.origin("sweep2") + ": both sweep axes are '" + cfg.axes[0].name + "'");
        }
    }
}

void resolve_region(const Reader& r, RunConfig& cfg)
{
    const double gamma = r.number("gamma");
    const double eta = r.number("eta");
    if (gamma == 0.0) usage_error(r.origin("gamma") + ": region maps need gamma > 0");
    cfg.effective = EffectiveParams::single_driven(0.0, gamma, 0.0, eta);
    cfg.axes.push_back(r.axis("nt-range", "nt"));
    cfg.axes.push_back(r.axis("omega-range", "omega"));
    for (const Axis& a : cfg.axes) {
        if (a.start < 0.0) usage_error(r.origin(a.name + "-range") + ": values must be >= 0");
    }
}

void resolve_bell(const Reader& r, RunConfig& cfg)
{
    const double omega = r.number("omega");
    const double gamma = r.number("gamma");
    const double eta = r.number("eta");
    cfg.effective = EffectiveParams::single_driven(omega, gamma, 0.0, eta);
    const std::string list = r.text("nt-list");
    std::string canonical;
    for (std::string_view part : split(list, ',')) {
        double v = 0.0;
        if (!parse_double(part, v) || v < 0.0) {
            usage_error(r.origin("nt-list") + ": 'nt-list' expects comma-separated numbers >= 0, got '" +
                        list + "'");
        }
        cfg.n_t_list.push_back(v);
        if (!canonical.empty()) canonical += ",";
        canonical += format_double(v);
    }
    r.record("nt-list", canonical);
    cfg.initial = r.initial();
    cfg.time = r.axis("t-range", "t");
}

void resolve_validate(const Reader& r, RunConfig& cfg)
{
    FullModelParams f;
    f.omega_cavity = r.number("omega-cavity", false);
    f.omega_atom = r.number("omega-atom", false);
    f.g = r.number("g");
    f.kappa = r.number("kappa");
    f.n_max = r.integer("n-max");
    if (f.n_max < 1) usage_error(r.origin("n-max") + ": 'n-max' must be >= 1");
    const double gamma = r.number("gamma");
    const double nt = r.number("nt");
    f.gamma = {gamma, gamma};
    f.n_t = {nt, nt};
    if (f.detuning() == 0.0) usage_error(r.origin("omega-atom") + ": detuning omega-atom - omega-cavity must be nonzero");
    f.validate();
    cfg.full = f;
    cfg.effective = f.effective();
    cfg.initial = r.initial();
    cfg.time = r.axis("t-range", "t");
    cfg.tolerance = r.number("tolerance");
}

} // namespace

Mode parse_mode(std::string_view name)
{
    if (name == "evolve") return Mode::Evolve;
    if (name == "steady-sweep") return Mode::SteadySweep;
    if (name == "region") return Mode::Region;
    if (name == "bell-evolve") return Mode::BellEvolve;
    if (name == "validate-adiabatic") return Mode::ValidateAdiabatic;
    usage_error("unknown mode '" + std::string(name) + "'");
}

std::string_view to_string(Mode mode) noexcept
{
    switch (mode) {
    case Mode::Evolve: return "evolve";
    case Mode::SteadySweep: return "steady-sweep";
    case Mode::Region: return "region";
    case Mode::BellEvolve: return "bell-evolve";
    case Mode::ValidateAdiabatic: return "validate-adiabatic";
    }
    return "?";
}

std::vector<double> Axis::values() const
{
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / (count - 1);
        v[static_cast<std::size_t>(i)] =
            log ? start * std::pow(stop / start, f) : start + f * (stop - start);
    }
    v.back() = stop;
    return v;
}

std::string Axis::spec() const
{
    std::string s = format_double(start) + ":" + format_double(stop) + ":" + std::to_string(count);
    if (log) s += ":log";
    return s;
}

Axis parse_axis(std::string_view name, std::string_view spec)
{
    const auto parts = split(trim(spec), ':');
    const std::string where = "axis '" + std::string(name) + "'";
    if (parts.size() != 3 && parts.size() != 4) {
        usage_error(where + ": expected start:stop:count[:log], got '" + std::string(spec) + "'");
    }
    Axis a;
    a.name = std::string(name);
    if (!parse_double(parts[0], a.start) || !parse_double(parts[1], a.stop)) {
        usage_error(where + ": start and stop must be numbers");
    }
    if (!parse_int(parts[2], a.count)) {
        usage_error(where + ": count must be an integer");
    }
    if (parts.size() == 4) {
        if (trim(parts[3]) != "log") usage_error(where + ": unknown spacing '" + std::string(parts[3]) + "'");
        a.log = true;
    }
    if (a.count < 2) usage_error(where + ": count must be >= 2");
    if (!(a.stop > a.start)) usage_error(where + ": stop must exceed start");
    if (a.log && a.start <= 0.0) usage_error(where + ": log spacing needs start > 0");
    return a;
}

RawConfig read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot read config file '" + path + "'");
    RawConfig raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view body = line;
        if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = trim(body);
        if (body.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) usage_error(where + ": expected 'key = value'");
        const std::string key(trim(body.substr(0, eq)));
        const std::string value(trim(body.substr(eq + 1)));
        if (key.empty()) usage_error(where + ": missing key");
        if (key == "config") usage_error(where + ": config files cannot include other config files");
        if (raw.contains(key)) usage_error(where + ": duplicate key '" + key + "'");
        raw.emplace(key, RawEntry{value, where});
    }
    return raw;
}

ParsedArgs parse_args(std::span<const std::string> args)
{
    ParsedArgs parsed;
    if (args.empty()) usage_error("missing mode");
    if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        parsed.help = true;
        return parsed;
    }
    parsed.mode = parse_mode(args[0]);

    RawConfig flags;
    std::string config_path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& tok = args[i];
        if (tok == "--help" || tok == "-h") {
            parsed.help = true;
            return parsed;
        }
        if (tok.size() < 3 || tok.compare(0, 2, "--") != 0) {
            usage_error("argument " + std::to_string(i + 1) + ": expected --key, got '" + tok + "'");
        }
        std::string key = tok.substr(2);
        std::string value;
        if (auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key.resize(eq);
        } else {
            if (i + 1 >= args.size()) usage_error("--" + key + ": missing value");
            value = args[++i];
        }
        if (key == "config") {
            if (!config_path.empty()) usage_error("--config given twice");
            config_path = value;
            continue;
        }
        if (flags.contains(key)) usage_error("--" + key + " given twice");
        flags.emplace(key, RawEntry{value, "--" + key});
    }

    if (!config_path.empty()) parsed.values = read_config_file(config_path);
    for (auto& [key, entry] : flags) parsed.values.insert_or_assign(key, entry);
    return parsed;
}

RunConfig make_run_config(Mode mode, const RawConfig& raw)
{
    RunConfig cfg;
    cfg.mode = mode;
    const Reader r(mode, raw, cfg);
    try {
        switch (mode) {
        case Mode::Evolve: resolve_evolve(r, cfg); break;
        case Mode::SteadySweep: resolve_sweep(r, cfg); break;
        case Mode::Region: resolve_region(r, cfg); break;
        case Mode::BellEvolve: resolve_bell(r, cfg); break;
        case Mode::ValidateAdiabatic: resolve_validate(r, cfg); break;
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Usage) throw;
        usage_error(e.what());
    }
    cfg.output_path = r.text("out");
    if (cfg.output_path.empty()) usage_error("--out: output path is required");
    r.record("out", cfg.output_path);
    return cfg;
}

std::string usage_text()
{
    std::ostringstream os;
    os << "usage: cavent <mode> [--key value ...] [--config path] --out path\n\n"
          "modes and settings (defaults in brackets):\n";
    for (Mode m : {Mode::Evolve, Mode::SteadySweep, Mode::Region, Mode::BellEvolve,
                   Mode::ValidateAdiabatic}) {
        os << "  " << to_string(m) << "\n";
        for (const auto& k : keys_for(m)) {
            os << "    --" << k.name;
            if (*k.fallback) os << " [" << k.fallback << "]";
            os << "\n";
        }
    }
    os << "\naxis specs are start:stop:count[:log]; steady-sweep axes are name:start:stop:count\n"
          "with name in {nt, eta, gamma, omega}. CAVENT_WORKERS sets the worker count.\n";
    return os.str();
}

} // namespace cavent::cli
