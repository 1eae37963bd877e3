#pragma once

#include <iosfwd>
#include <vector>

#include "tenorlab/tenor_grid.hpp"

namespace tenorlab {

/// Initial term structure of discrete-tenor forward LIBORs L(0,T_i), i = 0..n-1.
class InitialCurve {
public:
    InitialCurve(TenorGrid grid, std::vector<double> libors);

    const TenorGrid& grid() const { return grid_; }
    int size() const { return static_cast<int>(libors_.size()); }
    double libor(int i) const;
    const std::vector<double>& libors() const { return libors_; }

private:
    TenorGrid grid_;
    std::vector<double> libors_;
};

/// The three reference term structures, read as piecewise-linear curves of
/// delta-LIBOR versus rate start date and sampled at the T_i:
///  1: 4% at 0y -> 6% at 5y -> 4% at 10y
///  2: 5% at 0y -> 6.7% at 4.25y -> 6.5% at 4.75y -> 6.8% at 5.5y -> 5% at 10y
///  3: 5% at 0y -> 10% at T_n - delta
double scenario_rate(int scenario_id, double start_date, const TenorGrid& grid);
InitialCurve scenario_curve(int scenario_id, const TenorGrid& grid);
InitialCurve flat_curve(const TenorGrid& grid, double level);

/// CSV round trip, columns (tenor_index, start_date_years, libor).
void write_initial_curve_csv(const InitialCurve& curve, std::ostream& out);
InitialCurve read_initial_curve_csv(std::istream& in);

/// Realized spot fixings L(T_i,T_i), appended in tenor order.
class FixingHistory {
public:
    bool has(int i) const { return i >= 0 && i < static_cast<int>(values_.size()); }
    double at(int i) const;
    int count() const { return static_cast<int>(values_.size()); }
    void append(int i, double value);

private:
    std::vector<double> values_;
};

/// Discrete-tenor model state along one path: the current time, the forward
/// LIBOR vector and the fixing history. A rate's stored value is its live
/// diffusion value while T_i >= t and freezes at the recorded fixing
/// thereafter (it is kept: method-1 interpolation reads it for one more
/// accrual period and the rolling numeraire for the whole path).
class ModelState {
public:
    explicit ModelState(const InitialCurve& initial);

    const TenorGrid& grid() const { return grid_; }
    double time() const { return t_; }
    int eta() const { return grid_.eta(t_); }

    double libor(int i) const;
    bool is_fixed(int i) const { return fixings_.has(i); }
    double fixing(int i) const;
    const FixingHistory& fixings() const { return fixings_; }

    void advance_to(double t);
    void set_libor(int i, double value);
    /// Records L(T_i,T_i) = current stored value; requires time() == T_i and
    /// that the rate has not fixed before (double fixing is a logic error).
    void record_fixing(int i);

private:
    TenorGrid grid_;
    double t_;
    std::vector<double> libors_;
    FixingHistory fixings_;
};

/// Product of discrete-tenor discount factors from the next tenor date to T_j:
/// prod_{i=eta(t)}^{j-1} (1 + delta L(t,T_i))^{-1}. At a tenor date t = T_k this
/// is the full bond price B(t,T_j); off grid it is the ratio B(t,T_j)/B(t,T_eta(t)).
double discrete_bond(const ModelState& state, int j);

}  // namespace tenorlab
