#include "tenorlab/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "tenorlab/rng.hpp"

namespace tenorlab {

MCEstimate estimate(std::span<const double> samples) {
    const std::int64_t n = static_cast<std::int64_t>(samples.size());
    if (n < 2) throw std::invalid_argument("estimate: need at least two samples");
    const double mean = pairwise_sum(samples) / static_cast<double>(n);
    std::vector<double> sq(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double d = samples[i] - mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

std::vector<double> average_antithetic_pairs(std::span<const double> samples) {
    if (samples.size() % 2 != 0)
        throw std::invalid_argument("average_antithetic_pairs: odd sample count");
    std::vector<double> out(samples.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = 0.5 * (samples[2 * i] + samples[2 * i + 1]);
    return out;
}

namespace {

struct StepPlan {
    double t0 = 0, t1 = 0, dt = 0, sqrt_dt = 0;
    int period = 0;     // step lies in (T_{period-1}, T_period]
    int measure_j = 0;  // forward index governing this increment
    int fix_index = -1;
    std::vector<std::size_t> observe;   // observe_times indices reached at t1
    std::vector<double> lam0;           // lambda(t0,T_h), rates period..top, row-major d
    std::vector<double> lam1;           // lambda(t1,T_h) for the corrector
    std::vector<double> sigma;          // per-component stdev over the step
    std::vector<double> half_var;       // 1/2 sum_k sigma_k^2 per rate
};

struct SimPlan {
    std::vector<StepPlan> steps;
    std::vector<std::size_t> observe_at_origin;
    int top = 0;  // highest tenor index of a modelled rate (= n-1)
    int dim = 0;
};

SimPlan build_plan(const InitialCurve& initial, const VolatilitySpec& vol, const MCConfig& config,
                   double horizon, std::span<const double> observe_times) {
    const TenorGrid& g = initial.grid();
    if (horizon <= g.origin() + kTenorTol || horizon > g.horizon() + kTenorTol)
        throw std::invalid_argument("simulate_paths: horizon outside (T_0, T_n]");
    if (config.n_paths < 1) throw std::invalid_argument("simulate_paths: need n_paths >= 1");
    if (config.steps_per_period < 1)
        throw std::invalid_argument("simulate_paths: need steps_per_period >= 1");
    if (config.antithetic && config.n_paths % 2 != 0)
        throw std::invalid_argument("simulate_paths: antithetic pairing needs an even path count");
    if (config.measure.kind == MeasureTag::Kind::Forward) {
        const int j = config.measure.index;
        if (j < 1 || j > g.periods())
            throw std::invalid_argument("simulate_paths: forward measure index outside 1..n");
        if (horizon > g.date(j) + kTenorTol)
            throw std::invalid_argument(
                "simulate_paths: forward measure P_{T_j} only carries the simulation to T_j");
    }

    // Knots: tenor dates, the horizon and every observation time.
    std::vector<double> knots{g.origin()};
    for (int i = 1; i <= g.periods() && g.date(i) < horizon + kTenorTol; ++i)
        knots.push_back(std::min(g.date(i), horizon));
    knots.push_back(horizon);
    SimPlan plan;
    for (std::size_t oi = 0; oi < observe_times.size(); ++oi) {
        const double t = observe_times[oi];
        if (t < g.origin() - kTenorTol || t > horizon + kTenorTol)
            throw std::invalid_argument("simulate_paths: observation time outside [T_0, horizon]");
        if (t <= g.origin() + kTenorTol)
            plan.observe_at_origin.push_back(oi);
        else
            knots.push_back(t);
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end(),
                            [](double a, double b) { return std::abs(a - b) <= kTenorTol; }),
                knots.end());

    plan.top = g.periods() - 1;
    plan.dim = vol.dim();
    const int d = plan.dim;
    std::vector<double> comp(static_cast<std::size_t>(d));
    for (std::size_t ki = 0; ki + 1 < knots.size(); ++ki) {
        const double a = knots[ki], b = knots[ki + 1];
        const int m = std::max(
            1, static_cast<int>(std::ceil((b - a) / g.delta() * config.steps_per_period - 1e-9)));
        for (int s = 0; s < m; ++s) {
            StepPlan st;
            st.t0 = s == 0 ? a : a + (b - a) * s / m;
            st.t1 = s == m - 1 ? b : a + (b - a) * (s + 1) / m;
            st.dt = st.t1 - st.t0;
            st.sqrt_dt = std::sqrt(st.dt);
            st.period = g.position(st.t1).eta;
            st.measure_j = config.measure.kind == MeasureTag::Kind::Forward ? config.measure.index
                                                                            : st.period;
            if (s == m - 1) {
                if (g.is_tenor_date(b)) {
                    const int idx = g.index_of(b);
                    if (idx <= plan.top) st.fix_index = idx;
                }
                for (std::size_t oi = 0; oi < observe_times.size(); ++oi)
                    if (std::abs(observe_times[oi] - b) <= kTenorTol) st.observe.push_back(oi);
            }
            const int nr = plan.top - st.period + 1;
            st.lam0.resize(static_cast<std::size_t>(nr * d));
            st.sigma.resize(static_cast<std::size_t>(nr * d));
            st.half_var.resize(static_cast<std::size_t>(nr));
            if (config.scheme == MCConfig::Scheme::PredictorCorrector)
                st.lam1.resize(static_cast<std::size_t>(nr * d));
            for (int h = st.period; h <= plan.top; ++h) {
                const int r = h - st.period;
                const double maturity = g.date(h);
                vol.vol(st.t0, maturity,
                        std::span<double>(&st.lam0[static_cast<std::size_t>(r * d)],
                                          static_cast<std::size_t>(d)));
                if (!st.lam1.empty())
                    vol.vol(st.t1, maturity,
                            std::span<double>(&st.lam1[static_cast<std::size_t>(r * d)],
                                              static_cast<std::size_t>(d)));
                vol.integrated_component_var(maturity, st.t0, st.t1, comp);
                double hv = 0.0;
                for (int c = 0; c < d; ++c) {
                    st.sigma[static_cast<std::size_t>(r * d + c)] =
                        std::sqrt(comp[static_cast<std::size_t>(c)]);
                    hv += comp[static_cast<std::size_t>(c)];
                }
                st.half_var[static_cast<std::size_t>(r)] = 0.5 * hv;
            }
            plan.steps.push_back(std::move(st));
        }
    }
    return plan;
}

// Relative drifts mu_h / L_h for the diffusing block [step.period, top] from
// gamma prefix sums; `lam` selects the evaluation point (step start for the
// predictor, step end for the corrector).
void relative_drifts(const StepPlan& st, const TenorGrid& g, std::span<const double> rates,
                     std::span<const double> lam, int dim, int top, std::vector<double>& cum,
                     std::vector<double>& out) {
    const int lo = st.period;
    const int j = st.measure_j;
    const int nr = top - lo + 1;
    // cum row r holds sum_{q=lo}^{lo+r-1} gamma_q, componentwise
    double* cum0 = cum.data();
    for (int c = 0; c < dim; ++c) cum0[c] = 0.0;
    for (int r = 0; r < nr; ++r) {
        const double rate = rates[static_cast<std::size_t>(r)];
        const double w = g.delta() * rate / (1.0 + g.delta() * rate);
        const double* lam_r = lam.data() + r * dim;
        const double* prev = cum0 + r * dim;
        double* next = cum0 + (r + 1) * dim;
        for (int c = 0; c < dim; ++c) next[c] = prev[c] + w * lam_r[c];
    }
    for (int r = 0; r < nr; ++r) {
        const int h = lo + r;
        const double* lam_r = lam.data() + r * dim;
        double s = 0.0;
        if (h >= j) {
            // near side: + lambda_h . sum_{k=j}^{h} gamma_k
            const double* b = cum0 + (h - lo + 1) * dim;
            const double* a = cum0 + (j - lo) * dim;
            for (int c = 0; c < dim; ++c) s += (b[c] - a[c]) * lam_r[c];
        } else if (h < j - 1) {
            // terminal side: - lambda_h . sum_{k=h+1}^{j-1} gamma_k
            const double* b = cum0 + (j - lo) * dim;
            const double* a = cum0 + (h + 1 - lo) * dim;
            for (int c = 0; c < dim; ++c) s -= (b[c] - a[c]) * lam_r[c];
        }
        out[static_cast<std::size_t>(r)] = s;
    }
}

void run_path_range(const SimPlan& plan, const ModelState& initial_state, const MCConfig& config,
                    std::int64_t first, std::int64_t last, const PathObserver& observer,
                    const StepListener& listener) {
    const TenorGrid& g = initial_state.grid();
    const int d = plan.dim;
    const int top = plan.top;
    const bool pc = config.scheme == MCConfig::Scheme::PredictorCorrector;

    std::vector<double> z(static_cast<std::size_t>(d));
    std::vector<double> dw(static_cast<std::size_t>(d));
    std::vector<double> rates(static_cast<std::size_t>(top + 1));
    std::vector<double> predicted(static_cast<std::size_t>(top + 1));
    std::vector<double> drift0(static_cast<std::size_t>(top + 1));
    std::vector<double> drift1(static_cast<std::size_t>(top + 1));
    std::vector<double> cum(static_cast<std::size_t>((top + 2) * d));

    for (std::int64_t path = first; path < last; ++path) {
        const std::uint64_t stream =
            config.antithetic ? static_cast<std::uint64_t>(path / 2) : static_cast<std::uint64_t>(path);
        const double sign = config.antithetic && (path % 2 != 0) ? -1.0 : 1.0;
        CounterRng rng(config.seed, stream);
        ModelState state = initial_state;

        for (std::size_t oi : plan.observe_at_origin) observer(path, oi, state);

        for (const StepPlan& st : plan.steps) {
            const int lo = st.period;
            const int nr = top - lo + 1;
            for (int c = 0; c < d; ++c) {
                z[static_cast<std::size_t>(c)] = sign * rng.next_gaussian();
                dw[static_cast<std::size_t>(c)] = z[static_cast<std::size_t>(c)] * st.sqrt_dt;
            }
            if (listener) listener(path, st.t0, st.t1, dw, state);

            for (int h = lo; h <= top; ++h)
                rates[static_cast<std::size_t>(h - lo)] = state.libor(h);
            const std::span<const double> live(rates.data(), static_cast<std::size_t>(nr));
            relative_drifts(st, g, live, st.lam0, d, top, cum, drift0);

            auto log_step = [&](const std::vector<double>& drift, int r) {
                const double* sig_r = st.sigma.data() + r * d;
                double inc = drift[static_cast<std::size_t>(r)] * st.dt -
                             st.half_var[static_cast<std::size_t>(r)];
                for (int c = 0; c < d; ++c) inc += sig_r[c] * z[static_cast<std::size_t>(c)];
                return live[static_cast<std::size_t>(r)] * std::exp(inc);
            };
            for (int r = 0; r < nr; ++r) predicted[static_cast<std::size_t>(r)] = log_step(drift0, r);
            if (pc) {
                const std::span<const double> pred(predicted.data(), static_cast<std::size_t>(nr));
                relative_drifts(st, g, pred, st.lam1, d, top, cum, drift1);
                for (int r = 0; r < nr; ++r) {
                    drift0[static_cast<std::size_t>(r)] =
                        0.5 * (drift0[static_cast<std::size_t>(r)] + drift1[static_cast<std::size_t>(r)]);
                    predicted[static_cast<std::size_t>(r)] = log_step(drift0, r);
                }
            }
            for (int r = 0; r < nr; ++r)
                state.set_libor(lo + r, predicted[static_cast<std::size_t>(r)]);
            state.advance_to(st.t1);
            if (st.fix_index >= 0) state.record_fixing(st.fix_index);
            for (std::size_t oi : st.observe) observer(path, oi, state);
        }
    }
}

}  // namespace

void simulate_paths(const InitialCurve& initial, const VolatilitySpec& vol, const MCConfig& config,
                    double horizon, std::span<const double> observe_times,
                    const PathObserver& observer, const StepListener& step_listener) {
    const SimPlan plan = build_plan(initial, vol, config, horizon, observe_times);
    const ModelState initial_state(initial);

    const int threads = std::max(1, config.threads);
    if (threads == 1 || config.n_paths < 2 * threads) {
        run_path_range(plan, initial_state, config, 0, config.n_paths, observer, step_listener);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const std::int64_t chunk = (config.n_paths + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        const std::int64_t first = w * chunk;
        const std::int64_t last = std::min<std::int64_t>(config.n_paths, first + chunk);
        if (first >= last) break;
        pool.emplace_back([&, first, last] {
            run_path_range(plan, initial_state, config, first, last, observer, step_listener);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace tenorlab
