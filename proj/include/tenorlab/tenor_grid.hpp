#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace tenorlab {

/// Absolute tolerance (in years) used when classifying a time as a tenor date.
inline constexpr double kTenorTol = 1e-12;

/// Location of a time point relative to the grid: the index of the next tenor
/// date at or after it, the (exact-zero-on-grid) gap to that date, and whether
/// the point *is* a tenor date.
struct TenorPosition {
    int eta;          // index of the next tenor date >= t
    double to_next;   // T_eta - t, exactly 0 when on_grid
    bool on_grid;
};

/// Uniformly spaced tenor structure T_i = t0 + i*delta, i = 0..n.
/// T_0 is the time origin, T_n the model horizon. Immutable once built.
class TenorGrid {
public:
    TenorGrid(double t0, double delta, int n) : t0_(t0), delta_(delta), n_(n) {
        if (!(delta > 0.0)) throw std::invalid_argument("TenorGrid: delta must be positive");
        if (n < 2) throw std::invalid_argument("TenorGrid: need at least two accrual periods");
    }

    /// Grid whose horizon is the closest multiple of delta to `horizon`.
    static TenorGrid from_horizon(double t0, double delta, double horizon) {
        const int n = static_cast<int>(std::llround((horizon - t0) / delta));
        if (std::abs(t0 + n * delta - horizon) > 1e-9)
            throw std::invalid_argument("TenorGrid: horizon is not a multiple of delta");
        return TenorGrid(t0, delta, n);
    }

    double origin() const { return t0_; }
    double delta() const { return delta_; }
    int periods() const { return n_; }
    double date(int i) const { return t0_ + i * delta_; }
    double horizon() const { return date(n_); }

    bool is_tenor_date(double t) const {
        const long long k = std::llround((t - t0_) / delta_);
        return k >= 0 && k <= n_ && std::abs(t - date(static_cast<int>(k))) <= kTenorTol;
    }

    /// Index of an exact tenor date; throws for off-grid times.
    int index_of(double t) const {
        const long long k = std::llround((t - t0_) / delta_);
        if (k < 0 || k > n_ || std::abs(t - date(static_cast<int>(k))) > kTenorTol)
            throw std::domain_error("TenorGrid::index_of: not a tenor date: t=" + std::to_string(t));
        return static_cast<int>(k);
    }

    /// eta(t) = max{i in 1..n : T_{i-1} < t}, with the empty max defined as 0
    /// (so eta(T_0) = 0 and T_eta(t) is the next tenor date at or after t).
    /// Defined on [T_0, T_n); t = T_n is rejected.
    int eta(double t) const {
        check_range(t);
        if (t >= horizon() - kTenorTol)
            throw std::domain_error("TenorGrid::eta: t at or beyond the horizon");
        return position_unchecked(t).eta;
    }

    double next_tenor_date(double t) const { return date(eta(t)); }

    /// Like eta but valid on the closed interval [T_0, T_n]; used to place bond
    /// maturities, which may equal the horizon.
    TenorPosition position(double t) const {
        check_range(t);
        if (t > horizon() + kTenorTol)
            throw std::domain_error("TenorGrid::position: t beyond the horizon");
        return position_unchecked(t);
    }

private:
    void check_range(double t) const {
        if (t < t0_ - kTenorTol)
            throw std::domain_error("TenorGrid: t before the origin: t=" + std::to_string(t));
    }

    TenorPosition position_unchecked(double t) const {
        const long long k = std::llround((t - t0_) / delta_);
        if (k >= 0 && k <= n_ && std::abs(t - date(static_cast<int>(k))) <= kTenorTol)
            return {static_cast<int>(k), 0.0, true};
        const int e = static_cast<int>(std::floor((t - t0_) / delta_)) + 1;
        return {e, date(e) - t, false};
    }

    double t0_;
    double delta_;
    int n_;
};

}  // namespace tenorlab
