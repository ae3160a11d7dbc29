#pragma once

#include <span>

namespace invdiff {

/// h * sum_{i=1}^{N-1} values_i * weights_i.
///
/// With weights vanishing at both ends this is the composite trapezoid rule.
/// Throws std::invalid_argument on a length mismatch.
double weighted_integral(std::span<const double> values, std::span<const double> weights, double h);

}  // namespace invdiff
