#include "tenorlab/volatility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tenorlab {

namespace {

constexpr double kTol = 1e-12;

// exp-integral helper: int_{s0}^{s1} e^{2 b s} ds scaled so that
// a^2 e^{-b(Ta+Tb)} * this = int a^2 e^{-b(Ta-s)} e^{-b(Tb-s)} ds.
double exp_factor_integral(double a, double b, double Ta, double Tb, double s0, double s1) {
    if (b == 0.0) return a * a * (s1 - s0);
    // Write as a^2 * (e^{-b(Ta+Tb-2 s1)} - e^{-b(Ta+Tb-2 s0)}) / (2b) to keep
    // the exponents non-positive for s <= min(Ta,Tb).
    const double u1 = std::exp(-b * (Ta + Tb - 2.0 * s1));
    const double u0 = std::exp(-b * (Ta + Tb - 2.0 * s0));
    return a * a * (u1 - u0) / (2.0 * b);
}

std::size_t bucket(const std::vector<double>& edges, double x) {
    return static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), x) - edges.begin());
}

}  // namespace

VolatilitySpec VolatilitySpec::flat(double level) {
    if (!(level >= 0.0) || !std::isfinite(level))
        throw std::invalid_argument("VolatilitySpec::flat: level must be finite and nonnegative");
    return VolatilitySpec(Flat{level});
}

VolatilitySpec VolatilitySpec::two_factor_exponential(double a1, double b1, double a2, double b2) {
    for (double x : {a1, b1, a2, b2})
        if (!std::isfinite(x)) throw std::invalid_argument("VolatilitySpec: non-finite parameter");
    return VolatilitySpec(TwoFactorExp{a1, b1, a2, b2});
}

VolatilitySpec VolatilitySpec::piecewise_constant(std::vector<double> time_edges,
                                                  std::vector<double> maturity_edges,
                                                  std::vector<std::vector<std::vector<double>>> values) {
    if (!std::is_sorted(time_edges.begin(), time_edges.end()) ||
        !std::is_sorted(maturity_edges.begin(), maturity_edges.end()))
        throw std::invalid_argument("VolatilitySpec: bucket edges must be ascending");
    if (values.size() != time_edges.size() + 1)
        throw std::invalid_argument("VolatilitySpec: need time_edges.size()+1 rows");
    int d = -1;
    for (const auto& row : values) {
        if (row.size() != maturity_edges.size() + 1)
            throw std::invalid_argument("VolatilitySpec: need maturity_edges.size()+1 columns");
        for (const auto& cell : row) {
            if (d < 0) d = static_cast<int>(cell.size());
            if (static_cast<int>(cell.size()) != d || d == 0)
                throw std::invalid_argument("VolatilitySpec: inconsistent factor dimension");
            for (double x : cell)
                if (!std::isfinite(x)) throw std::invalid_argument("VolatilitySpec: non-finite value");
        }
    }
    PiecewiseConst pc{std::move(time_edges), std::move(maturity_edges), std::move(values), d};
    return VolatilitySpec(std::variant<Flat, TwoFactorExp, PiecewiseConst>(std::move(pc)));
}

int VolatilitySpec::dim() const {
    if (std::holds_alternative<Flat>(v_)) return 1;
    if (std::holds_alternative<TwoFactorExp>(v_)) return 2;
    return std::get<PiecewiseConst>(v_).dim;
}

void VolatilitySpec::vol(double t, double T, std::span<double> out) const {
    if (t > T + kTol) throw std::domain_error("VolatilitySpec::vol: requires t <= T");
    if (t < -kTol) throw std::domain_error("VolatilitySpec::vol: requires t >= 0");
    if (out.size() != static_cast<std::size_t>(dim()))
        throw std::invalid_argument("VolatilitySpec::vol: output span has wrong size");
    if (const auto* f = std::get_if<Flat>(&v_)) {
        out[0] = f->level;
    } else if (const auto* e = std::get_if<TwoFactorExp>(&v_)) {
        out[0] = e->a1 * std::exp(-e->b1 * (T - t));
        out[1] = e->a2 * std::exp(-e->b2 * (T - t));
    } else {
        const auto& pc = std::get<PiecewiseConst>(v_);
        const auto& cell = pc.values[bucket(pc.time_edges, t)][bucket(pc.maturity_edges, T)];
        std::copy(cell.begin(), cell.end(), out.begin());
    }
}

std::vector<double> VolatilitySpec::vol(double t, double T) const {
    std::vector<double> out(static_cast<std::size_t>(dim()));
    vol(t, T, out);
    return out;
}

double VolatilitySpec::integrated_cov(double Ta, double Tb, double s0, double s1) const {
    if (s0 > s1 + kTol) throw std::domain_error("integrated_cov: s0 > s1");
    if (s1 > std::min(Ta, Tb) + kTol) throw std::domain_error("integrated_cov: s1 beyond min(Ta,Tb)");
    if (s1 <= s0) return 0.0;

    if (const auto* f = std::get_if<Flat>(&v_)) return f->level * f->level * (s1 - s0);
    if (const auto* e = std::get_if<TwoFactorExp>(&v_))
        return exp_factor_integral(e->a1, e->b1, Ta, Tb, s0, s1) +
               exp_factor_integral(e->a2, e->b2, Ta, Tb, s0, s1);

    const auto& pc = std::get<PiecewiseConst>(v_);
    const std::size_t rowa_col = bucket(pc.maturity_edges, Ta);
    const std::size_t rowb_col = bucket(pc.maturity_edges, Tb);
    double total = 0.0;
    double lo = s0;
    while (lo < s1 - kTol) {
        const std::size_t b = bucket(pc.time_edges, lo);
        const double hi = b < pc.time_edges.size() ? std::min(pc.time_edges[b], s1) : s1;
        const auto& va = pc.values[b][rowa_col];
        const auto& vb = pc.values[b][rowb_col];
        double dot = 0.0;
        for (std::size_t k = 0; k < va.size(); ++k) dot += va[k] * vb[k];
        total += dot * (hi - lo);
        lo = hi;
    }
    return total;
}

double VolatilitySpec::integrated_var(double T, double s0, double s1) const {
    return integrated_cov(T, T, s0, s1);
}

void VolatilitySpec::integrated_component_var(double T, double s0, double s1,
                                              std::span<double> out) const {
    if (s0 > s1 + kTol) throw std::domain_error("integrated_component_var: s0 > s1");
    if (s1 > T + kTol) throw std::domain_error("integrated_component_var: s1 beyond T");
    if (out.size() != static_cast<std::size_t>(dim()))
        throw std::invalid_argument("integrated_component_var: output span has wrong size");
    std::fill(out.begin(), out.end(), 0.0);
    if (s1 <= s0) return;

    if (const auto* f = std::get_if<Flat>(&v_)) {
        out[0] = f->level * f->level * (s1 - s0);
    } else if (const auto* e = std::get_if<TwoFactorExp>(&v_)) {
        out[0] = exp_factor_integral(e->a1, e->b1, T, T, s0, s1);
        out[1] = exp_factor_integral(e->a2, e->b2, T, T, s0, s1);
    } else {
        const auto& pc = std::get<PiecewiseConst>(v_);
        const std::size_t col = bucket(pc.maturity_edges, T);
        double lo = s0;
        while (lo < s1 - kTol) {
            const std::size_t b = bucket(pc.time_edges, lo);
            const double hi = b < pc.time_edges.size() ? std::min(pc.time_edges[b], s1) : s1;
            const auto& v = pc.values[b][col];
            for (std::size_t k = 0; k < v.size(); ++k) out[k] += v[k] * v[k] * (hi - lo);
            lo = hi;
        }
    }
}

}  // namespace tenorlab
