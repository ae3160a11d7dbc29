#include "invdiff/quadrature.hpp"

#include <stdexcept>

namespace invdiff {

double weighted_integral(std::span<const double> values, std::span<const double> weights, double h) {
    if (values.size() != weights.size()) {
        throw std::invalid_argument("weighted_integral: values and weights differ in length");
    }
    if (values.size() < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        sum += values[i] * weights[i];
    }
    return h * sum;
}

}  // namespace invdiff
