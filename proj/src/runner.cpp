#include "tenorlab/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace tenorlab {

namespace {

constexpr double kEdgeEps = 1e-9;  // offset used to sample one-sided limits

MCConfig mc_config(const ScenarioConfig& cfg) {
    MCConfig mc;
    mc.n_paths = cfg.paths;
    mc.steps_per_period = cfg.steps_per_period;
    mc.scheme = cfg.scheme == "logeuler" ? MCConfig::Scheme::LogEuler
                                         : MCConfig::Scheme::PredictorCorrector;
    mc.measure = MeasureTag::spot_rolling();
    mc.seed = cfg.seed;
    mc.antithetic = cfg.antithetic;
    mc.threads = cfg.threads;
    return mc;
}

std::string method_label(const InterpolationScheme& scheme) {
    return scheme.method == InterpMethod::DaycountFractions ? "method1" : "method2";
}

std::filesystem::path output_file(const ScenarioConfig& cfg, const std::string& stem) {
    std::filesystem::create_directories(cfg.output_dir);
    const std::string prefix = cfg.figure > 0 ? "fig" + std::to_string(cfg.figure) : "custom";
    return std::filesystem::path(cfg.output_dir) / (prefix + "_" + stem + ".csv");
}

void write_csv(const std::filesystem::path& file, const std::string& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot open output file " + file.string());
    out << header << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

ScenarioInputs resolve_inputs(const ScenarioConfig& cfg) {
    validate_config(cfg);
    VolatilitySpec vol = VolatilitySpec::lambda1();
    if (cfg.vol == "lambda2") vol = VolatilitySpec::lambda2();
    else if (cfg.vol.rfind("flat:", 0) == 0) vol = VolatilitySpec::flat(std::stod(cfg.vol.substr(5)));

    if (!cfg.curve_file.empty()) {
        std::ifstream in(cfg.curve_file);
        if (!in) throw ConfigError("config field 'curve_file': cannot open " + cfg.curve_file);
        return {read_initial_curve_csv(in), vol};
    }
    const TenorGrid grid = TenorGrid::from_horizon(0.0, cfg.delta, cfg.t_star);
    return {scenario_curve(cfg.curve, grid), vol};
}

std::vector<InterpolationScheme> resolve_methods(const ScenarioConfig& cfg) {
    std::vector<InterpolationScheme> methods;
    if (cfg.method == "1" || cfg.method == "all")
        methods.push_back(InterpolationScheme::daycount_fractions());
    if (cfg.method == "2" || cfg.method == "all")
        methods.push_back(InterpolationScheme::short_bond_volatility());
    return methods;
}

std::vector<SweepRow> forward_sweep(const ScenarioConfig& cfg, const ScenarioInputs& in) {
    const TenorGrid& g = in.initial.grid();
    const ModelState state(in.initial);
    std::vector<SweepRow> rows;

    std::vector<double> maturities;
    for (int i = 0; i < g.periods(); ++i) {
        const double a = g.date(i) + kEdgeEps;
        const double b = g.date(i + 1) - kEdgeEps;
        const int p = cfg.grid_per_period;
        for (int k = 0; k < p; ++k) maturities.push_back(a + (b - a) * k / (p - 1));
    }

    for (const auto& scheme : resolve_methods(cfg)) {
        const ForwardMode mode = scheme.method == InterpMethod::DaycountFractions
                                     ? ForwardMode::Analytic
                                     : ForwardMode::FiniteDifference;
        for (double T : maturities)
            rows.push_back({T, instantaneous_forward(state, scheme, in.vol, T, mode),
                            method_label(scheme)});
    }
    for (double T : maturities) rows.push_back({T, loglinear_forward(in.initial, T), "baseline"});
    return rows;
}

std::vector<SweepRow> libor_sweep(const ScenarioConfig& cfg, const ScenarioInputs& in) {
    const TenorGrid& g = in.initial.grid();
    const double lo = cfg.window_lo >= 0.0 ? cfg.window_lo : g.origin();
    const double hi = cfg.window_hi >= 0.0 ? cfg.window_hi : g.horizon() - g.delta();
    if (hi <= lo || hi > g.horizon() - g.delta() + kTenorTol)
        throw ConfigError("config field 'window_hi': libor window outside [T_0, T_n - delta]");

    const int points = static_cast<int>(std::ceil((hi - lo) / g.delta())) * cfg.grid_per_period;
    const ModelState state(in.initial);
    std::vector<SweepRow> rows;
    for (const auto& scheme : resolve_methods(cfg))
        for (int k = 0; k <= points; ++k) {
            const double T = lo + (hi - lo) * k / points;
            rows.push_back({T, interpolated_libor(state, scheme, in.vol, T), method_label(scheme)});
        }
    for (int k = 0; k <= points; ++k) {
        const double T = lo + (hi - lo) * k / points;
        rows.push_back({T, loglinear_libor(in.initial, T), "baseline"});
    }
    return rows;
}

std::vector<double> ttm_jump_times(const TenorGrid& grid, double ttm, double horizon) {
    std::vector<double> jumps;
    for (int k = 1; k <= grid.periods(); ++k) {
        const double t = grid.date(k) - ttm;
        if (t > grid.origin() + kTenorTol && t < horizon - kTenorTol &&
            !grid.is_tenor_date(t))  // crossings at tenor dates are eta jumps of t itself
            jumps.push_back(t);
    }
    return jumps;
}

std::vector<DynamicsRow> dynamics_trace(const ScenarioConfig& cfg, const ScenarioInputs& in) {
    const TenorGrid& g = in.initial.grid();
    const auto methods = resolve_methods(cfg);
    if (methods.size() != 1)
        throw ConfigError("config field 'method': the dynamics trace needs method=1 or method=2");
    const InterpolationScheme scheme = methods.front();
    const double fm = cfg.fixed_maturity;
    const double ttm = cfg.fixed_ttm;
    if (g.is_tenor_date(fm))
        throw ConfigError("config field 'fixed_maturity': must be a broken date");
    const double horizon = std::min(fm, g.horizon() - ttm) - kEdgeEps;

    // Substep samples plus paired samples just left/right of every tenor date
    // and every fixed-TTM jump time, to expose jumps as one-sided limits.
    std::vector<double> obs;
    const double step = g.delta() / cfg.steps_per_period;
    for (double t = 0.0; t < horizon; t += step) obs.push_back(t);
    for (int i = 1; g.date(i) < horizon; ++i) {
        obs.push_back(g.date(i) - kEdgeEps);
        obs.push_back(g.date(i) + kEdgeEps);
    }
    for (double t : ttm_jump_times(g, ttm, horizon)) {
        obs.push_back(t - kEdgeEps);
        obs.push_back(t + kEdgeEps);
    }
    std::sort(obs.begin(), obs.end());

    MCConfig mc = mc_config(cfg);
    mc.n_paths = 1;
    mc.threads = 1;

    std::vector<DynamicsRow> rows;
    simulate_paths(in.initial, in.vol, mc, horizon, obs,
                   [&](std::int64_t, std::size_t, const ModelState& state) {
                       const double t = state.time();
                       rows.push_back({t, "short_rate", 0.0, short_rate(state, scheme, in.vol)});
                       const ForwardMode mode = scheme.method == InterpMethod::DaycountFractions
                                                    ? ForwardMode::Analytic
                                                    : ForwardMode::FiniteDifference;
                       if (fm - t > kTenorTol)
                           rows.push_back({t, "fwd_fixed_maturity", fm,
                                           instantaneous_forward(state, scheme, in.vol, fm, mode)});
                       const double T = t + ttm;
                       if (!g.is_tenor_date(T) && T < g.horizon() - kTenorTol)
                           rows.push_back({t, "fwd_fixed_ttm", ttm,
                                           instantaneous_forward(state, scheme, in.vol, T, mode)});
                   });
    return rows;
}

std::vector<ImpvolRow> impvol_points(const ScenarioConfig& cfg, const ScenarioInputs& in) {
    const TenorGrid& g = in.initial.grid();
    int i0;
    if (cfg.sweep_start >= 0.0) {
        if (!g.is_tenor_date(cfg.sweep_start))
            throw ConfigError("config field 'sweep_start': must be a tenor date of the grid");
        i0 = g.index_of(cfg.sweep_start);
    } else {
        i0 = g.periods() / 2;
    }
    if (i0 < 1 || i0 > g.periods() - 2)
        throw ConfigError("config field 'sweep_start': the swept period must lie strictly inside "
                          "the tenor structure");

    const MCConfig mc = mc_config(cfg);
    std::vector<ImpvolRow> rows;
    for (const auto& scheme : resolve_methods(cfg)) {
        for (int k = 0; k <= cfg.interior_points + 1; ++k) {
            const double T = g.date(i0) + g.delta() * k / (cfg.interior_points + 1);
            const double forward = initial_forward(in.initial, in.vol, scheme, T);
            const CapletSpec spec{T, g.delta(), 1.25 * forward, 1.0};
            const double discount = initial_discount(in.initial, in.vol, scheme, T + g.delta());
            const double approx = approx_implied_vol(spec, in.initial, in.vol, scheme);
            const MCEstimate price = price_caplet_mc(spec, in.initial, in.vol, scheme, mc);

            auto invert = [&](double p) {
                const double intrinsic =
                    discount * spec.accrual * std::max(forward - spec.strike, 0.0);
                if (p <= intrinsic) return 0.0;
                return implied_vol(p, forward, spec.strike, T, discount, spec.accrual);
            };
            const double iv = invert(price.mean);
            const double lo = invert(price.mean - 2.0 * price.std_error);
            const double hi = invert(price.mean + 2.0 * price.std_error);
            rows.push_back({T, iv, lo, hi, approx, method_label(scheme), 0.25 * (hi - lo)});
        }
    }
    return rows;
}

std::vector<std::filesystem::path> run_term_structure_sweep(const ScenarioConfig& cfg) {
    const ScenarioInputs in = resolve_inputs(cfg);
    std::vector<std::vector<std::string>> fwd_rows, lib_rows;
    for (const auto& r : forward_sweep(cfg, in))
        fwd_rows.push_back({fmt(r.maturity), fmt(r.value), r.series});
    for (const auto& r : libor_sweep(cfg, in))
        lib_rows.push_back({fmt(r.maturity), fmt(r.value), r.series});
    const auto fwd_file = output_file(cfg, "forwards");
    const auto lib_file = output_file(cfg, "libors");
    write_csv(fwd_file, "maturity,value,method", fwd_rows);
    write_csv(lib_file, "maturity,value,method", lib_rows);
    return {fwd_file, lib_file};
}

std::vector<std::filesystem::path> run_dynamics_trace(const ScenarioConfig& cfg) {
    const ScenarioInputs in = resolve_inputs(cfg);
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : dynamics_trace(cfg, in))
        rows.push_back({fmt(r.time), r.kind, fmt(r.maturity_or_ttm), fmt(r.value)});
    const auto file = output_file(cfg, "dynamics");
    write_csv(file, "time,rate_kind,maturity_or_ttm,value", rows);
    return {file};
}

std::vector<std::filesystem::path> run_impvol_experiment(const ScenarioConfig& cfg) {
    const ScenarioInputs in = resolve_inputs(cfg);
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : impvol_points(cfg, in))
        rows.push_back({fmt(r.start), fmt(r.mc_implied), fmt(r.mc_lo), fmt(r.mc_hi),
                        fmt(r.approx_implied), r.method});
    const auto file = output_file(cfg, "impvol");
    write_csv(file, "T,mc_implied,mc_lo,mc_hi,approx_implied,method", rows);
    return {file};
}

std::vector<std::filesystem::path> run_experiment(const ScenarioConfig& cfg) {
    if (cfg.experiment == "sweep") return run_term_structure_sweep(cfg);
    if (cfg.experiment == "dynamics") return run_dynamics_trace(cfg);
    if (cfg.experiment == "impvol") return run_impvol_experiment(cfg);
    throw ConfigError("config field 'experiment': unknown experiment '" + cfg.experiment + "'");
}

}  // namespace tenorlab
