#include "tenorlab/interpolation.hpp"

#include <cmath>
#include <stdexcept>

namespace tenorlab {

namespace {

void note_fallback(InterpDiagnostics* diag) {
    if (diag) ++diag->method2_boundary_fallbacks;
}

bool wants_method2(const InterpolationScheme& scheme) {
    return scheme.method == InterpMethod::ShortBondVolatility;
}

// Correction factor 1 + delta L (e^v - 1)/(1 + delta L) with v the integrated
// squared volatility of the live stencil rate over the expectation window.
double correction_factor(double delta, double live_rate, double v) {
    return 1.0 + delta * live_rate * std::expm1(v) / (1.0 + delta * live_rate);
}

}  // namespace

double InterpolationScheme::alpha_at(const TenorGrid& grid, double t) const {
    if (alpha) {
        const double a = alpha(grid, t);
        if (a < -kTenorTol || a > 1.0 + kTenorTol)
            throw std::domain_error("InterpolationScheme: alpha outside [0,1]");
        return a;
    }
    const auto pos = grid.position(t);
    return pos.to_next / grid.delta();
}

double short_bond(const ModelState& state, const InterpolationScheme& scheme,
                  const VolatilitySpec& vol, InterpDiagnostics* diag) {
    (void)vol;
    const TenorGrid& g = state.grid();
    const auto pos = g.position(state.time());
    if (pos.on_grid) return 1.0;

    const double x = pos.to_next;
    const double fix = state.fixing(pos.eta - 1);
    if (!wants_method2(scheme) || pos.eta >= g.periods()) {
        if (wants_method2(scheme)) note_fallback(diag);
        return 1.0 / (1.0 + x * fix);
    }
    const double a = scheme.alpha_at(g, state.time());
    const double live = state.libor(pos.eta);
    return 1.0 / (1.0 + x * (a * fix + (1.0 - a) * live));
}

double long_bond_ratio(const ModelState& state, const InterpolationScheme& scheme,
                       const VolatilitySpec& vol, double t2, InterpDiagnostics* diag) {
    const TenorGrid& g = state.grid();
    const double t1 = state.time();
    if (t2 < t1 - kTenorTol) throw std::domain_error("long_bond_ratio: t2 before current time");
    const auto pos = g.position(t2);
    if (pos.on_grid) return 1.0;

    const double x = pos.to_next;
    // L(t1, T_eta(t2)-1): the live forward, or the recorded fixing once dead.
    const double prev = state.libor(pos.eta - 1);
    if (!wants_method2(scheme) || pos.eta >= g.periods()) {
        if (wants_method2(scheme)) note_fallback(diag);
        return 1.0 + x * prev;
    }
    const double a = scheme.alpha_at(g, t2);
    const double live = state.libor(pos.eta);
    const double v = vol.integrated_var(g.date(pos.eta), t1, t2);
    return 1.0 + x * (a * prev + (1.0 - a) * live * correction_factor(g.delta(), live, v));
}

double zcb(const ModelState& state, const InterpolationScheme& scheme, const VolatilitySpec& vol,
           double t2, InterpDiagnostics* diag) {
    const TenorGrid& g = state.grid();
    const double t1 = state.time();
    if (t2 < t1 - kTenorTol) throw std::domain_error("zcb: t2 before current time");
    if (std::abs(t2 - t1) <= kTenorTol) return 1.0;

    const auto pos1 = g.position(t1);
    const auto pos2 = g.position(t2);
    double price = short_bond(state, scheme, vol, diag);
    for (int i = pos1.eta; i < pos2.eta; ++i) price /= 1.0 + g.delta() * state.libor(i);
    return price * long_bond_ratio(state, scheme, vol, t2, diag);
}

double interpolated_libor(const ModelState& state, const InterpolationScheme& scheme,
                          const VolatilitySpec& vol, double T, InterpDiagnostics* diag) {
    const TenorGrid& g = state.grid();
    if (T < state.time() - kTenorTol)
        throw std::domain_error("interpolated_libor: start date before current time");
    if (T > g.horizon() - g.delta() + kTenorTol)
        throw std::domain_error("interpolated_libor: rate accrues beyond the horizon");

    const auto pos = g.position(T);
    if (pos.on_grid) return state.libor(pos.eta);

    const double near = long_bond_ratio(state, scheme, vol, T, diag);
    const double mid = 1.0 + g.delta() * state.libor(pos.eta);
    const double far = long_bond_ratio(state, scheme, vol, T + g.delta(), diag);
    return (near * mid / far - 1.0) / g.delta();
}

double instantaneous_forward(const ModelState& state, const InterpolationScheme& scheme,
                             const VolatilitySpec& vol, double T, ForwardMode mode,
                             InterpDiagnostics* diag) {
    const TenorGrid& g = state.grid();
    if (T <= state.time() + kTenorTol || T >= g.horizon() - kTenorTol)
        throw std::domain_error("instantaneous_forward: T outside (t, T_n)");
    const auto pos = g.position(T);
    if (pos.on_grid)
        throw std::domain_error(
            "instantaneous_forward: forwards jump at tenor dates; request T_i +- eps");

    if (mode == ForwardMode::Analytic) {
        if (wants_method2(scheme) && pos.eta < g.periods())
            throw std::invalid_argument(
                "instantaneous_forward: analytic mode covers the daycount-fraction scheme only");
        const double rate = state.libor(pos.eta - 1);
        return rate / (1.0 + pos.to_next * rate);
    }

    const double h = 1e-6;
    const double lo_edge = std::max(g.date(pos.eta - 1), state.time());
    const double hi_edge = g.date(pos.eta);
    auto lnb = [&](double u) { return std::log(zcb(state, scheme, vol, u, diag)); };
    if (T - h < lo_edge + h) return (lnb(T) - lnb(T + h)) / h;       // one-sided up
    if (T + h > hi_edge - h) return (lnb(T - h) - lnb(T)) / h;       // one-sided down
    return (lnb(T - h) - lnb(T + h)) / (2.0 * h);
}

double short_rate(const ModelState& state, const InterpolationScheme& scheme,
                  const VolatilitySpec& vol, InterpDiagnostics* diag) {
    const TenorGrid& g = state.grid();
    const double t = state.time();
    if (t >= g.horizon() - kTenorTol) throw std::domain_error("short_rate: t at the horizon");
    const auto pos = g.position(t);
    // Right limit at tenor dates: the period just starting.
    const int e = pos.on_grid ? pos.eta + 1 : pos.eta;
    const double x = g.date(e) - t;

    if (!wants_method2(scheme) || e >= g.periods()) {
        if (wants_method2(scheme)) note_fallback(diag);
        const double fix = state.fixing(e - 1);
        return fix / (1.0 + x * fix);
    }
    const double h = std::min(1e-6, 0.5 * x);
    return -std::log(zcb(state, scheme, vol, t + h, diag)) / h;
}

double savings_account(const TenorGrid& grid, const FixingHistory& fixings,
                       const InterpolationScheme& scheme, double t) {
    if (wants_method2(scheme))
        throw std::invalid_argument(
            "savings_account: the short-bond-volatility scheme has a stochastic short rate; "
            "exp{int r} is path-dependent, use rolling_numeraire");
    const auto pos = grid.position(t);
    const int e = pos.eta;
    if (e == 0) return 1.0;

    double value = 1.0;
    for (int i = 0; i + 2 <= e; ++i) value *= 1.0 + grid.delta() * fixings.at(i);
    const double fix = fixings.at(e - 1);
    return value * (1.0 + grid.delta() * fix) / (1.0 + pos.to_next * fix);
}

double rolling_numeraire(const ModelState& state, const InterpolationScheme& scheme,
                         const VolatilitySpec& vol, InterpDiagnostics* diag) {
    const TenorGrid& g = state.grid();
    const auto pos = g.position(state.time());
    if (pos.eta == 0) return 1.0;

    double value = 1.0;
    for (int i = 0; i < pos.eta; ++i) value *= 1.0 + g.delta() * state.fixing(i);
    return value * short_bond(state, scheme, vol, diag);
}

double loglinear_zcb(const InitialCurve& initial, double T) {
    const TenorGrid& g = initial.grid();
    const auto pos = g.position(T);
    double lnb = 0.0;
    for (int i = 0; i < pos.eta; ++i) lnb -= std::log1p(g.delta() * initial.libor(i));
    if (pos.on_grid) return std::exp(lnb);
    // interpolate ln B linearly between T_{eta-1} and T_eta
    const double step = std::log1p(g.delta() * initial.libor(pos.eta - 1));
    return std::exp(lnb + step * pos.to_next / g.delta());
}

double loglinear_forward(const InitialCurve& initial, double T) {
    const TenorGrid& g = initial.grid();
    if (T < g.origin() - kTenorTol || T >= g.horizon() - kTenorTol)
        throw std::domain_error("loglinear_forward: T outside [T_0, T_n)");
    const auto pos = g.position(T);
    const int period = pos.on_grid ? pos.eta : pos.eta - 1;  // right limit on the grid
    return std::log1p(g.delta() * initial.libor(period)) / g.delta();
}

double loglinear_libor(const InitialCurve& initial, double T) {
    const TenorGrid& g = initial.grid();
    return (loglinear_zcb(initial, T) / loglinear_zcb(initial, T + g.delta()) - 1.0) / g.delta();
}

}  // namespace tenorlab
