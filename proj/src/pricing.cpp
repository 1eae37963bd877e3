#include "tenorlab/pricing.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tenorlab/math.hpp"

namespace tenorlab {

namespace {

void validate_caplet(const CapletSpec& spec, const TenorGrid& grid) {
    if (std::abs(spec.accrual - grid.delta()) > kTenorTol)
        throw std::invalid_argument("caplet accrual must match the tenor accrual delta");
    if (spec.start <= grid.origin() + kTenorTol ||
        spec.start > grid.horizon() - grid.delta() + kTenorTol)
        throw std::invalid_argument("caplet start outside (T_0, T_n - delta]");
    if (!(spec.strike > 0.0)) throw std::invalid_argument("caplet strike must be positive");
}

}  // namespace

double black_caplet(double forward, double strike, double total_stdev, double discount,
                    double accrual) {
    if (!(forward > 0.0) || !(strike > 0.0))
        throw std::domain_error("black_caplet: forward and strike must be positive");
    if (total_stdev < 0.0) throw std::domain_error("black_caplet: negative volatility");
    if (!(discount > 0.0) || discount > 1.0 + kTenorTol)
        throw std::domain_error("black_caplet: discount outside (0,1]");
    if (accrual < 0.0) throw std::domain_error("black_caplet: negative accrual");
    if (total_stdev == 0.0) return discount * accrual * std::max(forward - strike, 0.0);
    const double d1 = (std::log(forward / strike) + 0.5 * total_stdev * total_stdev) / total_stdev;
    return discount * accrual * (forward * norm_cdf(d1) - strike * norm_cdf(d1 - total_stdev));
}

double implied_vol(double price, double forward, double strike, double maturity, double discount,
                   double accrual) {
    if (!(maturity > 0.0)) throw std::domain_error("implied_vol: maturity must be positive");
    const double intrinsic = discount * accrual * std::max(forward - strike, 0.0);
    const double upper = discount * accrual * forward;
    const double floor_eps = 1e-14 * std::max(1.0, upper);
    std::ostringstream msg;
    if (price < intrinsic - floor_eps) {
        msg << "implied_vol: price " << price << " below the intrinsic bound " << intrinsic;
        throw std::domain_error(msg.str());
    }
    if (price >= upper - floor_eps) {
        msg << "implied_vol: price " << price << " at or above the forward bound " << upper;
        throw std::domain_error(msg.str());
    }
    if (price - intrinsic <= floor_eps) return 0.0;  // precision floor

    const double sqrt_t = std::sqrt(maturity);
    double hi = 1.0;
    while (black_caplet(forward, strike, hi * sqrt_t, discount, accrual) < price) {
        hi *= 2.0;
        if (hi > 1e6) throw std::runtime_error("implied_vol: failed to bracket");
    }
    double lo = 0.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (black_caplet(forward, strike, mid * sqrt_t, discount, accrual) >= price)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double initial_forward(const InitialCurve& initial, const VolatilitySpec& vol,
                       const InterpolationScheme& scheme, double T) {
    const ModelState state(initial);
    return interpolated_libor(state, scheme, vol, T);
}

double initial_discount(const InitialCurve& initial, const VolatilitySpec& vol,
                        const InterpolationScheme& scheme, double t2) {
    const ModelState state(initial);
    return zcb(state, scheme, vol, t2);
}

MCEstimate price_caplet_mc(const CapletSpec& spec, const InitialCurve& initial,
                           const VolatilitySpec& vol, const InterpolationScheme& scheme,
                           const MCConfig& config, InterpDiagnostics* diag) {
    const TenorGrid& g = initial.grid();
    validate_caplet(spec, g);
    const double pay = spec.start + spec.accrual;

    // Fallback diagnostics are structural (method 2 in the final period), not
    // path dependent: collect them from a time-0 dry run so the hot loop can
    // skip the shared counter.
    if (diag) {
        const ModelState probe(initial);
        interpolated_libor(probe, scheme, vol, spec.start, diag);
        const auto pos = g.position(pay);
        if (scheme.method == InterpMethod::ShortBondVolatility && !pos.on_grid &&
            pos.eta >= g.periods())
            ++diag->method2_boundary_fallbacks;
    }

    std::vector<double> fixed_rate(static_cast<std::size_t>(config.n_paths));
    std::vector<double> samples(static_cast<std::size_t>(config.n_paths));
    const double observe[2] = {spec.start, pay};
    simulate_paths(initial, vol, config, pay, observe,
                   [&](std::int64_t path, std::size_t obs, const ModelState& state) {
                       if (obs == 0) {
                           fixed_rate[static_cast<std::size_t>(path)] =
                               interpolated_libor(state, scheme, vol, spec.start);
                       } else {
                           const double payoff =
                               spec.accrual *
                               std::max(fixed_rate[static_cast<std::size_t>(path)] - spec.strike,
                                        0.0) *
                               spec.notional;
                           samples[static_cast<std::size_t>(path)] =
                               payoff / rolling_numeraire(state, scheme, vol);
                       }
                   });

    MCEstimate est =
        config.antithetic ? estimate(average_antithetic_pairs(samples)) : estimate(samples);
    est.n_paths = config.n_paths;
    return est;
}

std::vector<double> interp_libor_vol(const ModelState& state, const InterpolationScheme& scheme,
                                     const VolatilitySpec& vol, double T) {
    const TenorGrid& g = state.grid();
    const double t = state.time();
    if (T < t - kTenorTol) throw std::domain_error("interp_libor_vol: T before current time");
    const auto pos = g.position(T);

    if (pos.on_grid) return vol.vol(t, T);  // interpolation weights collapse

    const int e = pos.eta;
    const double x = pos.to_next;
    const double forward = interpolated_libor(state, scheme, vol, T);
    const int d = vol.dim();
    std::vector<double> out(static_cast<std::size_t>(d), 0.0);

    auto accumulate = [&](int idx, double dl_dli) {
        if (g.date(idx) < t - kTenorTol) return;  // fixed rates no longer diffuse
        const auto lam = vol.vol(t, g.date(idx));
        const double w = dl_dli * state.libor(idx) / forward;
        for (int c = 0; c < d; ++c)
            out[static_cast<std::size_t>(c)] += w * lam[static_cast<std::size_t>(c)];
    };

    if (scheme.method == InterpMethod::DaycountFractions) {
        const double lm = state.libor(e - 1);
        const double le = state.libor(e);
        const double c = 1.0 + g.delta() * le;
        const double dd = 1.0 + x * le;
        const double a = 1.0 + x * lm;
        accumulate(e - 1, x * c / dd / g.delta());
        accumulate(e, a * (g.delta() - x) / (dd * dd) / g.delta());
        return out;
    }

    // Method 2: central finite differences in the live stencil rates.
    for (int idx : {e - 1, e, e + 1}) {
        if (idx < 0 || idx >= g.periods()) continue;
        if (state.is_fixed(idx)) continue;
        const double base = state.libor(idx);
        const double h = 1e-6 * base;
        ModelState up = state;
        up.set_libor(idx, base + h);
        ModelState dn = state;
        dn.set_libor(idx, base - h);
        const double dl_dli = (interpolated_libor(up, scheme, vol, T) -
                               interpolated_libor(dn, scheme, vol, T)) /
                              (2.0 * h);
        accumulate(idx, dl_dli);
    }
    return out;
}

StencilSensitivity libor_sensitivities(const InitialCurve& initial, const VolatilitySpec& vol,
                                       const InterpolationScheme& scheme, double T) {
    const TenorGrid& g = initial.grid();
    const auto pos = g.position(T);
    StencilSensitivity s;

    if (pos.on_grid) {
        s.indices = {pos.eta};
        s.weights = {1.0};
        s.forward = initial.libor(pos.eta);
        return s;
    }

    const int e = pos.eta;
    const double x = pos.to_next;
    s.forward = initial_forward(initial, vol, scheme, T);

    if (scheme.method == InterpMethod::DaycountFractions) {
        const double lm = initial.libor(e - 1);
        const double le = initial.libor(e);
        const double c = 1.0 + g.delta() * le;
        const double dd = 1.0 + x * le;
        const double a = 1.0 + x * lm;
        s.indices = {e - 1, e};
        s.weights = {x * c / dd / g.delta() * lm / s.forward,
                     a * (g.delta() - x) / (dd * dd) / g.delta() * le / s.forward};
        return s;
    }

    for (int idx : {e - 1, e, e + 1}) {
        if (idx < 0 || idx >= initial.size()) continue;
        const double base = initial.libor(idx);
        const double h = 1e-6 * base;
        std::vector<double> bumped = initial.libors();
        bumped[static_cast<std::size_t>(idx)] = base + h;
        const double up = initial_forward(InitialCurve(g, bumped), vol, scheme, T);
        bumped[static_cast<std::size_t>(idx)] = base - h;
        const double dn = initial_forward(InitialCurve(g, bumped), vol, scheme, T);
        s.indices.push_back(idx);
        s.weights.push_back((up - dn) / (2.0 * h) * base / s.forward);
    }
    return s;
}

double approx_implied_vol(const CapletSpec& spec, const InitialCurve& initial,
                          const VolatilitySpec& vol, const InterpolationScheme& scheme) {
    const TenorGrid& g = initial.grid();
    validate_caplet(spec, g);
    const double T = spec.start;
    const StencilSensitivity s = libor_sensitivities(initial, vol, scheme, T);

    double variance = 0.0;
    for (std::size_t i = 0; i < s.indices.size(); ++i) {
        for (std::size_t j = 0; j < s.indices.size(); ++j) {
            const double ti = g.date(s.indices[i]);
            const double tj = g.date(s.indices[j]);
            const double cut = std::min(std::min(ti, tj), T);
            variance += s.weights[i] * s.weights[j] * vol.integrated_cov(ti, tj, 0.0, cut);
        }
    }
    return std::sqrt(variance / T);
}

}  // namespace tenorlab
