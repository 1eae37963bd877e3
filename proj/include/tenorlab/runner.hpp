#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tenorlab/pricing.hpp"
#include "tenorlab/scenario.hpp"

namespace tenorlab {

/// Inputs resolved from a config: grid, initial curve and volatility.
struct ScenarioInputs {
    InitialCurve initial;
    VolatilitySpec vol;
};
ScenarioInputs resolve_inputs(const ScenarioConfig& cfg);
std::vector<InterpolationScheme> resolve_methods(const ScenarioConfig& cfg);

// In-memory data series behind the figure CSVs.

struct SweepRow {
    double maturity;
    double value;
    std::string series;  // method1 | method2 | baseline
};
/// Instantaneous forwards f(0,T) on a dense grid (grid_per_period points per
/// accrual period, sampling T_i +- 1e-9 to expose the one-sided limits).
std::vector<SweepRow> forward_sweep(const ScenarioConfig& cfg, const ScenarioInputs& in);
/// Interpolated 3m LIBORs L(0,T) over [window_lo, window_hi].
std::vector<SweepRow> libor_sweep(const ScenarioConfig& cfg, const ScenarioInputs& in);

struct DynamicsRow {
    double time;
    std::string kind;  // short_rate | fwd_fixed_maturity | fwd_fixed_ttm
    double maturity_or_ttm;
    double value;
};
/// One simulated path: the continuously compounded short rate, the forward of
/// fixed maturity cfg.fixed_maturity and the forward of fixed time to
/// maturity cfg.fixed_ttm, sampled at every substep plus T_i +- 1e-9 pairs
/// (and the same pairs around the fixed-TTM jump times).
std::vector<DynamicsRow> dynamics_trace(const ScenarioConfig& cfg, const ScenarioInputs& in);

/// Jump times of f(t, t+ttm): t such that t+ttm crosses a tenor date.
std::vector<double> ttm_jump_times(const TenorGrid& grid, double ttm, double horizon);

struct ImpvolRow {
    double start;          // caplet rate start date T
    double mc_implied;
    double mc_lo, mc_hi;   // +-2 standard errors, mapped through the inversion
    double approx_implied;
    std::string method;    // method1 | method2
    double std_error;      // standard error of the implied vol
};
/// Caplet implied-vol sweep across one accrual period (inclusive endpoints,
/// cfg.interior_points broken dates in between), strike = 1.25 x the initial
/// interpolated forward per point.
std::vector<ImpvolRow> impvol_points(const ScenarioConfig& cfg, const ScenarioInputs& in);

/// Figure runners: compute the series and write CSVs under cfg.output_dir.
/// Returns the paths written.
std::vector<std::filesystem::path> run_term_structure_sweep(const ScenarioConfig& cfg);
std::vector<std::filesystem::path> run_dynamics_trace(const ScenarioConfig& cfg);
std::vector<std::filesystem::path> run_impvol_experiment(const ScenarioConfig& cfg);
std::vector<std::filesystem::path> run_experiment(const ScenarioConfig& cfg);

}  // namespace tenorlab
