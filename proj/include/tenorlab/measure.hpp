#pragma once

#include <span>
#include <vector>

#include "tenorlab/curve.hpp"
#include "tenorlab/volatility.hpp"

namespace tenorlab {

/// Pricing measure selector. Forward(j) is the T_j-forward measure (numeraire
/// B(.,T_j)); SpotRolling is the rolling spot LIBOR measure, realized as
/// conditional forward measures pasted together period by period: on
/// (T_{i-1}, T_i] the drift is that of Forward(i).
struct MeasureTag {
    enum class Kind { Forward, SpotRolling };
    Kind kind = Kind::SpotRolling;
    int index = 0;  // Forward(j) only, 1 <= j <= n

    static MeasureTag forward(int j) { return {Kind::Forward, j}; }
    static MeasureTag spot_rolling() { return {Kind::SpotRolling, 0}; }
};

/// Contiguous block of tenor indices whose rates' drifts are requested.
struct DriftStencil {
    int lo = 0;
    int hi = 0;
};

/// Forward index of the measure governing an increment that starts at t. For
/// Forward(j) this is j; for SpotRolling it is eta(t), or the next period's
/// index when t is itself a tenor date (the pasted measure hands over there).
int effective_forward_index(const MeasureTag& measure, const TenorGrid& grid, double t);

/// gamma(t,T_k,T_{k+1}) = delta L(t,T_k)/(1+delta L(t,T_k)) * lambda(t,T_k),
/// the Girsanov kernel between the adjacent forward measures P_{T_k} and
/// P_{T_{k+1}}. The rate must still be alive at t.
void gamma(double t, int k, const ModelState& state, const VolatilitySpec& vol,
           std::span<double> out);
std::vector<double> gamma(double t, int k, const ModelState& state, const VolatilitySpec& vol);

/// Drift coefficients mu_h of dL(t,T_h) = mu_h dt + L_h lambda_h dW for every
/// h in [stencil.lo, stencil.hi] under the given measure:
///   mu_h = -L_h lambda_h . sum_{k=h+1}^{j-1} gamma_k   (h < j-1)
///   mu_h = 0                                           (h = j-1)
///   mu_h = +L_h lambda_h . sum_{k=j}^{h} gamma_k       (h > j-1)
/// Only rates with indices between min(h, j-1) and max(h, j-1) are read.
std::vector<double> drift_under(const MeasureTag& measure, double t, const ModelState& state,
                                const VolatilitySpec& vol, const DriftStencil& stencil);

/// Discrete-time Radon-Nikodym increment dP_{T_k}/dP_{T_{k+1}} restricted to a
/// window [t0,t1], accumulated from simulation steps:
///   exp{ sum gamma(s).dW - 1/2 sum |gamma(s)|^2 ds }
/// with gamma evaluated at each step start. Feed it the engine's step stream
/// (dW under P_{T_{k+1}}) and read value() at the end of the path.
class RadonNikodymAccumulator {
public:
    RadonNikodymAccumulator(int k, double t0, double t1, const VolatilitySpec& vol);

    void add_step(double step_t0, double step_t1, std::span<const double> dw,
                  const ModelState& state_before);
    double value() const;
    void reset() { log_weight_ = 0.0; }

private:
    int k_;
    double t0_, t1_;
    const VolatilitySpec* vol_;
    double log_weight_ = 0.0;
};

}  // namespace tenorlab
