#include "tenorlab/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace tenorlab {

int effective_forward_index(const MeasureTag& measure, const TenorGrid& grid, double t) {
    if (measure.kind == MeasureTag::Kind::Forward) {
        if (measure.index < 1 || measure.index > grid.periods())
            throw std::invalid_argument("MeasureTag: forward index outside 1..n");
        return measure.index;
    }
    const auto pos = grid.position(t);
    return pos.on_grid ? pos.eta + 1 : pos.eta;
}

void gamma(double t, int k, const ModelState& state, const VolatilitySpec& vol,
           std::span<double> out) {
    const TenorGrid& g = state.grid();
    if (k < 0 || k >= g.periods()) throw std::domain_error("gamma: tenor index out of range");
    if (g.date(k) < t - kTenorTol)
        throw std::domain_error("gamma: rate " + std::to_string(k) + " already fixed at t");
    const double rate = state.libor(k);
    if (!(rate > 0.0)) throw std::domain_error("gamma: rate must be positive");
    vol.vol(t, g.date(k), out);
    const double w = g.delta() * rate / (1.0 + g.delta() * rate);
    for (double& x : out) x *= w;
}

std::vector<double> gamma(double t, int k, const ModelState& state, const VolatilitySpec& vol) {
    std::vector<double> out(static_cast<std::size_t>(vol.dim()));
    gamma(t, k, state, vol, out);
    return out;
}

std::vector<double> drift_under(const MeasureTag& measure, double t, const ModelState& state,
                                const VolatilitySpec& vol, const DriftStencil& stencil) {
    const TenorGrid& g = state.grid();
    const int j = effective_forward_index(measure, g, t);
    if (stencil.lo > stencil.hi || stencil.lo < 0 || stencil.hi >= g.periods())
        throw std::invalid_argument("drift_under: bad stencil");

    // gamma is needed on [min(lo, j), max(hi, j-1)]; cumulative sums over that
    // range give every contiguous window in O(1) each.
    const int d = vol.dim();
    const int klo = std::min(stencil.lo, j);
    const int khi = std::max(stencil.hi, j - 1);
    const int nk = khi - klo + 1;
    std::vector<double> cum(static_cast<std::size_t>(nk + 1) * static_cast<std::size_t>(d), 0.0);
    std::vector<double> gbuf(static_cast<std::size_t>(d));
    for (int k = klo; k <= khi; ++k) {
        const double* prev = cum.data() + (k - klo) * d;
        double* next = cum.data() + (k - klo + 1) * d;
        if ((k > j - 1 && k > stencil.hi) || (k < j && k < stencil.lo + 1)) {
            // outside every window actually requested; keep the running sum
            // consistent without touching possibly dead rates
            for (int c = 0; c < d; ++c) next[c] = prev[c];
            continue;
        }
        gamma(t, k, state, vol, gbuf);
        for (int c = 0; c < d; ++c) next[c] = prev[c] + gbuf[c];
    }
    auto window = [&](int a, int b, const std::vector<double>& lam) {  // sum_{k=a}^{b} gamma_k . lam
        double dot = 0.0;
        const double* hi = cum.data() + (b - klo + 1) * d;
        const double* lo = cum.data() + (a - klo) * d;
        for (int c = 0; c < d; ++c) dot += (hi[c] - lo[c]) * lam[static_cast<std::size_t>(c)];
        return dot;
    };

    std::vector<double> mu(static_cast<std::size_t>(stencil.hi - stencil.lo + 1), 0.0);
    for (int h = stencil.lo; h <= stencil.hi; ++h) {
        if (h == j - 1) continue;  // lognormal martingale under its own measure
        const auto lam = vol.vol(t, g.date(h));
        const double rate = state.libor(h);
        const double s = h < j - 1 ? -window(h + 1, j - 1, lam) : window(j, h, lam);
        mu[static_cast<std::size_t>(h - stencil.lo)] = rate * s;
    }
    return mu;
}

RadonNikodymAccumulator::RadonNikodymAccumulator(int k, double t0, double t1,
                                                 const VolatilitySpec& vol)
    : k_(k), t0_(t0), t1_(t1), vol_(&vol) {
    if (t1 < t0) throw std::invalid_argument("RadonNikodymAccumulator: t1 < t0");
}

void RadonNikodymAccumulator::add_step(double step_t0, double step_t1, std::span<const double> dw,
                                       const ModelState& state_before) {
    if (step_t1 <= t0_ + kTenorTol || step_t0 >= t1_ - kTenorTol) return;  // outside the window
    std::vector<double> gk(static_cast<std::size_t>(vol_->dim()));
    gamma(step_t0, k_, state_before, *vol_, gk);
    double dot = 0.0, norm2 = 0.0;
    for (std::size_t c = 0; c < gk.size(); ++c) {
        dot += gk[c] * dw[c];
        norm2 += gk[c] * gk[c];
    }
    log_weight_ += dot - 0.5 * norm2 * (step_t1 - step_t0);
}

double RadonNikodymAccumulator::value() const { return std::exp(log_weight_); }

}  // namespace tenorlab
