#include "tenorlab/scenario.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tenorlab {

ScenarioConfig figure_preset(int figure) {
    ScenarioConfig cfg;
    cfg.figure = figure;
    switch (figure) {
        case 1:
        case 2:
            cfg.experiment = "sweep";
            cfg.curve = 1;
            cfg.vol = "lambda1";
            cfg.t_star = 10.0;
            cfg.method = figure == 1 ? "1" : "2";
            break;
        case 3:
            cfg.experiment = "sweep";
            cfg.curve = 2;
            cfg.vol = "lambda1";
            cfg.t_star = 10.0;
            cfg.method = "all";
            cfg.window_lo = 4.0;
            cfg.window_hi = 6.0;
            break;
        case 4:
        case 5:
            cfg.experiment = "dynamics";
            cfg.curve = 3;
            cfg.vol = "lambda1";
            cfg.t_star = 2.25;
            cfg.fixed_maturity = 1.8125;
            cfg.fixed_ttm = 0.3125;
            cfg.method = figure == 4 ? "1" : "2";
            cfg.steps_per_period = 32;
            break;
        case 6:
        case 7:
            cfg.experiment = "impvol";
            cfg.curve = 3;
            cfg.vol = "lambda2";
            cfg.t_star = 4.25;
            cfg.method = figure == 6 ? "1" : "2";
            cfg.sweep_start = 2.0;
            break;
        default:
            throw ConfigError("figure: expected 1..7, got " + std::to_string(figure));
    }
    return cfg;
}

namespace {

void parse_into(ScenarioConfig& cfg, const std::string& key, const std::string& value, int lineno) {
    auto fail = [&](const std::string& what) {
        throw ConfigError("config line " + std::to_string(lineno) + ": field '" + key + "': " + what);
    };
    auto as_int = [&] {
        try {
            return std::stoll(value);
        } catch (const std::exception&) {
            fail("expected an integer, got '" + value + "'");
            return 0ll;
        }
    };
    auto as_double = [&] {
        try {
            return std::stod(value);
        } catch (const std::exception&) {
            fail("expected a number, got '" + value + "'");
            return 0.0;
        }
    };

    if (key == "figure") cfg.figure = static_cast<int>(as_int());
    else if (key == "experiment") cfg.experiment = value;
    else if (key == "curve") cfg.curve = static_cast<int>(as_int());
    else if (key == "curve_file") cfg.curve_file = value;
    else if (key == "vol") cfg.vol = value;
    else if (key == "t_star") cfg.t_star = as_double();
    else if (key == "delta") cfg.delta = as_double();
    else if (key == "method") cfg.method = value;
    else if (key == "fixed_maturity") cfg.fixed_maturity = as_double();
    else if (key == "fixed_ttm") cfg.fixed_ttm = as_double();
    else if (key == "sweep_start") cfg.sweep_start = as_double();
    else if (key == "interior_points") cfg.interior_points = static_cast<int>(as_int());
    else if (key == "window_lo") cfg.window_lo = as_double();
    else if (key == "window_hi") cfg.window_hi = as_double();
    else if (key == "grid_per_period") cfg.grid_per_period = static_cast<int>(as_int());
    else if (key == "paths") cfg.paths = as_int();
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(as_int());
    else if (key == "steps_per_period") cfg.steps_per_period = static_cast<int>(as_int());
    else if (key == "antithetic") {
        if (value == "true" || value == "1") cfg.antithetic = true;
        else if (value == "false" || value == "0") cfg.antithetic = false;
        else fail("expected true/false");
    }
    else if (key == "threads") cfg.threads = static_cast<int>(as_int());
    else if (key == "scheme") cfg.scheme = value;
    else if (key == "output_dir") cfg.output_dir = value;
    else fail("unknown key");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ScenarioConfig parse_config(std::istream& in) {
    ScenarioConfig cfg;
    std::string line;
    int lineno = 0;
    std::vector<std::pair<std::string, std::pair<std::string, int>>> entries;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value, got '" +
                              stripped + "'");
        entries.emplace_back(trim(stripped.substr(0, eq)),
                             std::make_pair(trim(stripped.substr(eq + 1)), lineno));
    }
    // A figure key seeds the preset first; the remaining keys override it.
    for (const auto& [key, vl] : entries)
        if (key == "figure") {
            parse_into(cfg, key, vl.first, vl.second);
            if (cfg.figure != 0) cfg = figure_preset(cfg.figure);
        }
    for (const auto& [key, vl] : entries)
        if (key != "figure") parse_into(cfg, key, vl.first, vl.second);
    validate_config(cfg);
    return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config(in);
}

std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "figure = " << cfg.figure << '\n';
    out << "experiment = " << cfg.experiment << '\n';
    out << "curve = " << cfg.curve << '\n';
    if (!cfg.curve_file.empty()) out << "curve_file = " << cfg.curve_file << '\n';
    out << "vol = " << cfg.vol << '\n';
    out << "t_star = " << cfg.t_star << '\n';
    out << "delta = " << cfg.delta << '\n';
    out << "method = " << cfg.method << '\n';
    out << "fixed_maturity = " << cfg.fixed_maturity << '\n';
    out << "fixed_ttm = " << cfg.fixed_ttm << '\n';
    out << "sweep_start = " << cfg.sweep_start << '\n';
    out << "interior_points = " << cfg.interior_points << '\n';
    out << "window_lo = " << cfg.window_lo << '\n';
    out << "window_hi = " << cfg.window_hi << '\n';
    out << "grid_per_period = " << cfg.grid_per_period << '\n';
    out << "paths = " << cfg.paths << '\n';
    out << "seed = " << cfg.seed << '\n';
    out << "steps_per_period = " << cfg.steps_per_period << '\n';
    out << "antithetic = " << (cfg.antithetic ? "true" : "false") << '\n';
    out << "threads = " << cfg.threads << '\n';
    out << "scheme = " << cfg.scheme << '\n';
    out << "output_dir = " << cfg.output_dir << '\n';
    return out.str();
}

void validate_config(const ScenarioConfig& cfg) {
    auto fail = [](const std::string& field, const std::string& what) {
        throw ConfigError("config field '" + field + "': " + what);
    };
    if (cfg.experiment != "sweep" && cfg.experiment != "dynamics" && cfg.experiment != "impvol")
        fail("experiment", "expected sweep|dynamics|impvol, got '" + cfg.experiment + "'");
    if (cfg.curve_file.empty() && (cfg.curve < 1 || cfg.curve > 3))
        fail("curve", "expected 1..3");
    if (cfg.vol != "lambda1" && cfg.vol != "lambda2" && cfg.vol.rfind("flat:", 0) != 0)
        fail("vol", "expected lambda1|lambda2|flat:<level>, got '" + cfg.vol + "'");
    if (!(cfg.delta > 0.0)) fail("delta", "must be positive");
    if (!(cfg.t_star > 2.0 * cfg.delta - 1e-12)) fail("t_star", "need at least two periods");
    if (cfg.method != "1" && cfg.method != "2" && cfg.method != "baseline" && cfg.method != "all")
        fail("method", "expected 1|2|baseline|all, got '" + cfg.method + "'");
    if (cfg.experiment == "dynamics" && !(cfg.fixed_maturity > 0.0))
        fail("fixed_maturity", "required for the dynamics experiment");
    if (cfg.experiment == "dynamics" && !(cfg.fixed_ttm > 0.0))
        fail("fixed_ttm", "required for the dynamics experiment");
    if (cfg.paths < 2) fail("paths", "need at least two paths");
    if (cfg.interior_points < 1) fail("interior_points", "must be positive");
    if (cfg.grid_per_period < 2) fail("grid_per_period", "must be at least 2");
    if (cfg.steps_per_period < 1) fail("steps_per_period", "must be positive");
    if (cfg.threads < 1) fail("threads", "must be positive");
    if (cfg.scheme != "pc" && cfg.scheme != "logeuler")
        fail("scheme", "expected pc|logeuler, got '" + cfg.scheme + "'");
}

}  // namespace tenorlab
