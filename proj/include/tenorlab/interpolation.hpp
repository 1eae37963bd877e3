#pragma once

#include <functional>

#include "tenorlab/curve.hpp"
#include "tenorlab/volatility.hpp"

namespace tenorlab {

/// The two arbitrage-free continuous-tenor extensions of the discrete model.
///
/// DaycountFractions (method 1) prices the short bond off the last recorded
/// spot fixing pro-rated by the remaining accrual, which makes short-bond
/// dynamics deterministic within each period. ShortBondVolatility (method 2)
/// blends the last fixing with the next live forward LIBOR using the weight
/// alpha(t), so interpolated short rates stay stochastic; longer bonds then
/// need a lognormal-expectation correction factor.
enum class InterpMethod { DaycountFractions, ShortBondVolatility };

struct InterpolationScheme {
    InterpMethod method = InterpMethod::DaycountFractions;
    /// Optional override of the blending weight; the default is
    /// alpha(t) = (T_eta(t) - t)/delta, which tends to 1 just after a tenor
    /// date and to 0 just before the next one.
    std::function<double(const TenorGrid&, double)> alpha;

    static InterpolationScheme daycount_fractions() { return {InterpMethod::DaycountFractions, {}}; }
    static InterpolationScheme short_bond_volatility() { return {InterpMethod::ShortBondVolatility, {}}; }

    double alpha_at(const TenorGrid& grid, double t) const;
};

/// Method 2 has no live rate L(.,T_n) to blend with in the final accrual
/// period; those evaluations fall back to method 1 and are counted here.
struct InterpDiagnostics {
    int method2_boundary_fallbacks = 0;
};

/// B(t, T_eta(t)), the "short bond" to the next tenor date. Equals 1 at tenor
/// dates. Method 1 uses the recorded fixing; method 2 the alpha blend of the
/// fixing and the live L(t,T_eta(t)).
double short_bond(const ModelState& state, const InterpolationScheme& scheme,
                  const VolatilitySpec& vol, InterpDiagnostics* diag = nullptr);

/// B(t1,t2)/B(t1,T_eta(t2)) for t1 = state.time() <= t2: the no-arbitrage
/// conditional expectation of the future short bond's inverse. Exactly 1 when
/// t2 is a tenor date. Method 2 multiplies the live-rate leg by the correction
/// factor 1 + delta L (e^{int lambda^2} - 1)/(1 + delta L), the exact
/// expectation of L(t2,T_eta(t2)) under its own maturity's forward measure.
double long_bond_ratio(const ModelState& state, const InterpolationScheme& scheme,
                       const VolatilitySpec& vol, double t2, InterpDiagnostics* diag = nullptr);

/// Zero-coupon bond B(t1,t2) for any t1 <= t2 <= T_n, composed as
/// short_bond(t1) * prod_{i=eta(t1)}^{eta(t2)-1} (1+delta L(t1,T_i))^{-1}
///               * long_bond_ratio(t2).
double zcb(const ModelState& state, const InterpolationScheme& scheme, const VolatilitySpec& vol,
           double t2, InterpDiagnostics* diag = nullptr);

/// Interpolated forward LIBOR L(t,T) for a (possibly broken) start date T,
/// evaluated in the factored bond-ratio form
///   L(t,T) = ( R(T) * (1 + delta L(t,T_eta(T))) / R(T+delta) - 1 ) / delta,
/// never by differencing two nearly equal bond prices. Collapses to the
/// discrete rate exactly at T = T_i.
double interpolated_libor(const ModelState& state, const InterpolationScheme& scheme,
                          const VolatilitySpec& vol, double T, InterpDiagnostics* diag = nullptr);

enum class ForwardMode { Analytic, FiniteDifference };

/// Instantaneous forward rate f(t,T) = -d/dT ln B(t,T). T must not be an exact
/// tenor date (forwards jump there; sample T_i +- eps for one-sided limits).
/// Analytic mode is available for method 1 only: f = L/(1+(T_eta(T)-T)L) with
/// L the stored value of rate eta(T)-1. Finite differences use h = 1e-6 years
/// and switch to one-sided stencils within 2h of a tenor date.
double instantaneous_forward(const ModelState& state, const InterpolationScheme& scheme,
                             const VolatilitySpec& vol, double T, ForwardMode mode,
                             InterpDiagnostics* diag = nullptr);

/// Continuously compounded short rate r(t) implied by the scheme; at tenor
/// dates this is the right limit (the new period's value).
double short_rate(const ModelState& state, const InterpolationScheme& scheme,
                  const VolatilitySpec& vol, InterpDiagnostics* diag = nullptr);

/// Savings account beta(t) = prod_{i=0}^{eta(t)-2}(1+delta L(T_i,T_i)) *
/// exp{int_{T_eta(t)-1}}^t r}. Closed form for method 1 (the stub equals
/// (1+delta L_fix)/(1+(T_eta-t)L_fix)); method 2's short rate is stochastic,
/// exp{int r} is not a function of (fixings,t), and the call throws.
double savings_account(const TenorGrid& grid, const FixingHistory& fixings,
                       const InterpolationScheme& scheme, double t);

/// Value of the spot-LIBOR roll-over strategy
/// prod_{i=0}^{eta(t)-1}(1+delta L(T_i,T_i)) * B(t,T_eta(t)); the numeraire of
/// the rolling spot measure under either scheme (and pathwise identical to the
/// savings account under method 1).
double rolling_numeraire(const ModelState& state, const InterpolationScheme& scheme,
                         const VolatilitySpec& vol, InterpDiagnostics* diag = nullptr);

// Comparison baseline: loglinear interpolation of time-0 discount factors.
double loglinear_zcb(const InitialCurve& initial, double T);
double loglinear_forward(const InitialCurve& initial, double T);
double loglinear_libor(const InitialCurve& initial, double T);

}  // namespace tenorlab
