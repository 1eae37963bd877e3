#pragma once

#include <vector>

#include "tenorlab/interpolation.hpp"
#include "tenorlab/simulation.hpp"

namespace tenorlab {

/// Caplet on the (possibly broken-date) forward LIBOR L(.,start): pays
/// accrual * max(L(start,start) - strike, 0) at start + accrual.
struct CapletSpec {
    double start = 0.0;
    double accrual = 0.25;
    double strike = 0.0;
    double notional = 1.0;
};

/// Black formula: discount * accrual * (F N(d1) - K N(d2)) with
/// d1,2 = (ln(F/K) +- v^2/2)/v and v the total standard deviation sigma*sqrt(T).
/// At v = 0 returns the discounted intrinsic value.
double black_caplet(double forward, double strike, double total_stdev, double discount,
                    double accrual);

/// Inverts black_caplet in sigma by bracketing bisection, absolute tolerance
/// 1e-10. Prices outside (intrinsic, discount*accrual*forward) throw a
/// domain_error naming the violated bound; prices at the intrinsic floor
/// return 0.
double implied_vol(double price, double forward, double strike, double maturity, double discount,
                   double accrual);

/// Time-0 interpolated forward L(0,T) and discount B(0,t2) under a scheme.
double initial_forward(const InitialCurve& initial, const VolatilitySpec& vol,
                       const InterpolationScheme& scheme, double T);
double initial_discount(const InitialCurve& initial, const VolatilitySpec& vol,
                        const InterpolationScheme& scheme, double t2);

/// Monte Carlo caplet price per unit notional: simulates to start+accrual
/// under the rolling spot measure, fixes L(start,start) by interpolation at
/// t = start, and deflates the payoff by the rolling numeraire at payment.
MCEstimate price_caplet_mc(const CapletSpec& spec, const InitialCurve& initial,
                           const VolatilitySpec& vol, const InterpolationScheme& scheme,
                           const MCConfig& config, InterpDiagnostics* diag = nullptr);

/// Relative volatility d-vector of the interpolated L(t,T) by Ito's lemma:
/// (1/L) sum_i dL/dL_i * L_i * lambda(t,T_i) over the live stencil rates.
/// Method 1 uses the analytic two-term sensitivities; method 2 central finite
/// differences (relative step 1e-6) including the third stencil rate that
/// enters through the correction factor.
std::vector<double> interp_libor_vol(const ModelState& state, const InterpolationScheme& scheme,
                                     const VolatilitySpec& vol, double T);

/// Stencil tenor indices and logarithmic sensitivities w_i = dL(0,T)/dL(0,T_i)
/// * L(0,T_i)/L(0,T) used by the frozen-coefficient approximation.
struct StencilSensitivity {
    std::vector<int> indices;
    std::vector<double> weights;
    double forward = 0.0;
};
StencilSensitivity libor_sensitivities(const InitialCurve& initial, const VolatilitySpec& vol,
                                       const InterpolationScheme& scheme, double T);

/// Frozen-coefficient Black implied volatility of a broken-date caplet:
/// (1/sqrt(T)) sqrt( sum_{i,j} w_i w_j int_0^{u_ij} lambda(s,T_i).lambda(s,T_j) ds ),
/// u_ij = min(T_i, T_j, T) — each rate's volatility contributes until its
/// fixing or the caplet fixing, whichever is first. Collapses to
/// lbar(0,T_i)/sqrt(T_i) exactly at tenor dates.
double approx_implied_vol(const CapletSpec& spec, const InitialCurve& initial,
                          const VolatilitySpec& vol, const InterpolationScheme& scheme);

}  // namespace tenorlab
