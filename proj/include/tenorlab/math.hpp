#pragma once

#include <span>

namespace tenorlab {

/// Standard normal CDF.
double norm_cdf(double x);

/// Standard normal density.
double norm_pdf(double x);

/// Inverse standard normal CDF on (0,1), accurate to ~1e-15 (rational
/// approximation plus one Halley refinement against erfc).
double inverse_norm_cdf(double p);

/// Deterministic pairwise (binary-tree) summation; the result does not depend
/// on how the work that produced `v` was scheduled.
double pairwise_sum(std::span<const double> v);

}  // namespace tenorlab
