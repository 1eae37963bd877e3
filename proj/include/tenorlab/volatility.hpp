#pragma once

#include <span>
#include <variant>
#include <vector>

namespace tenorlab {

/// Deterministic d-dimensional forward-LIBOR volatility function lambda(t,T)
/// with closed-form integrated (co)variances.
///
/// Three shapes are supported:
///  - Flat(level): one factor, constant.
///  - TwoFactorExponential(a1,b1,a2,b2): (a1 e^{-b1(T-t)}, a2 e^{-b2(T-t)}).
///  - PiecewiseConstant: a d-vector per (time bucket, maturity bucket) cell;
///    integrals are exact bucket sums.
///
/// Only deterministic volatility is modelled. Level-dependent extensions would
/// slot in behind this interface by making vol() state-dependent, but every
/// closed-form integral below (and the correction factor and implied-vol
/// approximation built on them) assumes determinism.
class VolatilitySpec {
public:
    static VolatilitySpec flat(double level);
    static VolatilitySpec two_factor_exponential(double a1, double b1, double a2, double b2);
    /// `time_edges` / `maturity_edges` are ascending interior bucket edges; a
    /// value cell values[b][c] is the d-vector for time bucket b and maturity
    /// bucket c, with edges.size()+1 buckets along each axis.
    static VolatilitySpec piecewise_constant(std::vector<double> time_edges,
                                             std::vector<double> maturity_edges,
                                             std::vector<std::vector<std::vector<double>>> values);

    /// The two specifications used by the reference scenarios.
    static VolatilitySpec lambda1() { return flat(0.3); }
    static VolatilitySpec lambda2() { return two_factor_exponential(0.6, 0.8, 0.1, 0.01); }

    int dim() const;

    /// lambda(t,T); requires 0 <= t <= T.
    void vol(double t, double T, std::span<double> out) const;
    std::vector<double> vol(double t, double T) const;

    /// Integral over [s0,s1] of lambda(s,Ta) . lambda(s,Tb) ds (dot product).
    /// Requires s0 <= s1 <= min(Ta,Tb).
    double integrated_cov(double Ta, double Tb, double s0, double s1) const;

    /// integrated_cov(T,T,s0,s1).
    double integrated_var(double T, double s0, double s1) const;

    /// Per-factor integral of lambda_k^2(s,T) over [s0,s1]; the simulation
    /// engine uses these as exact per-step increment variances.
    void integrated_component_var(double T, double s0, double s1, std::span<double> out) const;

private:
    struct Flat {
        double level;
    };
    struct TwoFactorExp {
        double a1, b1, a2, b2;
    };
    struct PiecewiseConst {
        std::vector<double> time_edges;
        std::vector<double> maturity_edges;
        std::vector<std::vector<std::vector<double>>> values;  // [time][maturity] -> d-vector
        int dim;
    };

    explicit VolatilitySpec(std::variant<Flat, TwoFactorExp, PiecewiseConst> v) : v_(std::move(v)) {}
    std::variant<Flat, TwoFactorExp, PiecewiseConst> v_;
};

}  // namespace tenorlab
