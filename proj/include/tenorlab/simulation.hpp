#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tenorlab/curve.hpp"
#include "tenorlab/measure.hpp"
#include "tenorlab/volatility.hpp"

namespace tenorlab {

struct MCConfig {
    enum class Scheme { LogEuler, PredictorCorrector };

    std::int64_t n_paths = 100'000;
    int steps_per_period = 4;
    Scheme scheme = Scheme::PredictorCorrector;
    MeasureTag measure = MeasureTag::spot_rolling();
    std::uint64_t seed = 0;
    bool antithetic = false;
    int threads = 1;
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t n_paths = 0;
};

/// Sample mean and standard error (unbiased variance, pairwise summation, so
/// the result is independent of evaluation order). Requires >= 2 samples.
MCEstimate estimate(std::span<const double> samples);

/// Averages adjacent antithetic pairs; input size must be even.
std::vector<double> average_antithetic_pairs(std::span<const double> samples);

/// Called whenever a path reaches an observation time. `obs_index` refers to
/// the caller's observe_times entry; the state carries live rates and the
/// fixing history as of that time. Must be pure per (path, obs_index) slot;
/// paths may run on different threads.
using PathObserver =
    std::function<void(std::int64_t path, std::size_t obs_index, const ModelState& state)>;

/// Optional per-step tap for measure-change tests: the state *before* the
/// step and the Brownian increment that drives it.
using StepListener = std::function<void(std::int64_t path, double t0, double t1,
                                        std::span<const double> dw, const ModelState& before)>;

/// Evolves the discrete-tenor LIBOR vector under config.measure from the
/// origin to `horizon`, recording fixings as tenor dates are crossed.
/// Substeps never straddle a tenor date or an observation time; log-space
/// stepping keeps every rate positive. Per-step Gaussian increments use the
/// exact per-factor integrated variance of lambda over the step; drifts are
/// evaluated at the step start (LogEuler) or averaged with the predicted end
/// state (PredictorCorrector). Identical (seed, config, inputs) produce
/// bit-identical results for any thread count.
void simulate_paths(const InitialCurve& initial, const VolatilitySpec& vol, const MCConfig& config,
                    double horizon, std::span<const double> observe_times,
                    const PathObserver& observer, const StepListener& step_listener = {});

}  // namespace tenorlab
