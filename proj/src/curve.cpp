#include "tenorlab/curve.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tenorlab {

InitialCurve::InitialCurve(TenorGrid grid, std::vector<double> libors)
    : grid_(grid), libors_(std::move(libors)) {
    if (static_cast<int>(libors_.size()) != grid_.periods())
        throw std::invalid_argument("InitialCurve: need one rate per accrual period");
    for (double l : libors_)
        if (!(l > 0.0) || !std::isfinite(l))
            throw std::invalid_argument("InitialCurve: rates must be strictly positive");
}

double InitialCurve::libor(int i) const {
    if (i < 0 || i >= size()) throw std::out_of_range("InitialCurve::libor: index out of range");
    return libors_[static_cast<std::size_t>(i)];
}

double scenario_rate(int scenario_id, double start_date, const TenorGrid& grid) {
    const double x = start_date - grid.origin();
    auto piecewise = [x](std::initializer_list<std::pair<double, double>> knots) {
        auto it = knots.begin();
        auto prev = *it++;
        for (; it != knots.end(); ++it) {
            if (x <= it->first + kTenorTol)
                return prev.second + (it->second - prev.second) * (x - prev.first) / (it->first - prev.first);
            prev = *it;
        }
        return prev.second;
    };
    switch (scenario_id) {
        case 1:
            return piecewise({{0.0, 0.04}, {5.0, 0.06}, {10.0, 0.04}});
        case 2:
            return piecewise({{0.0, 0.05}, {4.25, 0.067}, {4.75, 0.065}, {5.5, 0.068}, {10.0, 0.05}});
        case 3: {
            const double last_start = grid.horizon() - grid.delta() - grid.origin();
            return 0.05 + 0.05 * x / last_start;
        }
        default:
            throw std::invalid_argument("scenario_rate: unknown scenario id " + std::to_string(scenario_id));
    }
}

InitialCurve scenario_curve(int scenario_id, const TenorGrid& grid) {
    std::vector<double> rates(static_cast<std::size_t>(grid.periods()));
    for (int i = 0; i < grid.periods(); ++i)
        rates[static_cast<std::size_t>(i)] = scenario_rate(scenario_id, grid.date(i), grid);
    return InitialCurve(grid, std::move(rates));
}

InitialCurve flat_curve(const TenorGrid& grid, double level) {
    return InitialCurve(grid, std::vector<double>(static_cast<std::size_t>(grid.periods()), level));
}

void write_initial_curve_csv(const InitialCurve& curve, std::ostream& out) {
    out << "tenor_index,start_date_years,libor\n";
    char buf[96];
    for (int i = 0; i < curve.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g\n", i, curve.grid().date(i), curve.libor(i));
        out << buf;
    }
}

InitialCurve read_initial_curve_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("initial curve CSV: empty input");
    std::vector<double> starts, libors;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        double vals[3];
        for (int k = 0; k < 3; ++k) {
            if (!std::getline(row, field, ','))
                throw std::runtime_error("initial curve CSV: line " + std::to_string(lineno) +
                                         ": expected 3 fields");
            vals[k] = std::stod(field);
        }
        starts.push_back(vals[1]);
        libors.push_back(vals[2]);
    }
    if (starts.size() < 2) throw std::runtime_error("initial curve CSV: need at least two rows");
    const double t0 = starts.front();
    const double delta = starts[1] - starts[0];
    for (std::size_t i = 0; i < starts.size(); ++i)
        if (std::abs(starts[i] - (t0 + static_cast<double>(i) * delta)) > 1e-9)
            throw std::runtime_error("initial curve CSV: start dates are not uniformly spaced");
    TenorGrid grid(t0, delta, static_cast<int>(starts.size()));
    return InitialCurve(grid, std::move(libors));
}

double FixingHistory::at(int i) const {
    if (!has(i)) throw std::logic_error("FixingHistory: missing fixing " + std::to_string(i));
    return values_[static_cast<std::size_t>(i)];
}

void FixingHistory::append(int i, double value) {
    if (i != static_cast<int>(values_.size()))
        throw std::logic_error("FixingHistory: fixings must be appended in tenor order");
    values_.push_back(value);
}

ModelState::ModelState(const InitialCurve& initial)
    : grid_(initial.grid()), t_(initial.grid().origin()), libors_(initial.libors()) {
    // The index-0 rate fixes at the origin itself.
    fixings_.append(0, libors_[0]);
}

double ModelState::libor(int i) const {
    if (i < 0 || i >= static_cast<int>(libors_.size()))
        throw std::out_of_range("ModelState::libor: index out of range");
    return libors_[static_cast<std::size_t>(i)];
}

double ModelState::fixing(int i) const {
    if (!fixings_.has(i))
        throw std::logic_error("ModelState: fixing " + std::to_string(i) + " not yet recorded");
    return fixings_.at(i);
}

void ModelState::advance_to(double t) {
    if (t < t_ - kTenorTol) throw std::logic_error("ModelState::advance_to: time must not decrease");
    if (t > grid_.horizon() + kTenorTol)
        throw std::domain_error("ModelState::advance_to: beyond the model horizon");
    t_ = t;
}

void ModelState::set_libor(int i, double value) {
    if (i < 0 || i >= static_cast<int>(libors_.size()))
        throw std::out_of_range("ModelState::set_libor: index out of range");
    if (fixings_.has(i)) throw std::logic_error("ModelState::set_libor: rate already fixed");
    if (!(value > 0.0)) throw std::invalid_argument("ModelState::set_libor: rates stay positive");
    libors_[static_cast<std::size_t>(i)] = value;
}

void ModelState::record_fixing(int i) {
    if (i < 0 || i >= static_cast<int>(libors_.size()))
        throw std::out_of_range("ModelState::record_fixing: index out of range");
    if (std::abs(t_ - grid_.date(i)) > kTenorTol)
        throw std::logic_error("ModelState::record_fixing: time is not the fixing date T_i");
    if (fixings_.has(i)) throw std::logic_error("ModelState::record_fixing: double fixing");
    fixings_.append(i, libors_[static_cast<std::size_t>(i)]);
}

double discrete_bond(const ModelState& state, int j) {
    const TenorGrid& g = state.grid();
    if (j < 0 || j > g.periods()) throw std::domain_error("discrete_bond: index out of range");
    if (g.date(j) < state.time() - kTenorTol)
        throw std::domain_error("discrete_bond: maturity before current time");
    const auto pos = g.position(state.time());
    double price = 1.0;
    for (int i = pos.eta; i < j; ++i) price /= 1.0 + g.delta() * state.libor(i);
    return price;
}

}  // namespace tenorlab
