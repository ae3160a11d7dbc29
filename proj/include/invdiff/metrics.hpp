#pragma once

#include <span>

#include "invdiff/grid.hpp"
#include "invdiff/problem.hpp"

namespace invdiff {

struct ErrorReport {
    double er_u = 0.0;  ///< max_i |u_i^M - U_i^M|
    double er_p = 0.0;  ///< max_k |p^k - P^k|
    double l2_u = 0.0;  ///< sqrt(h * sum_{i=0}^{N} (u_i^M - U_i^M)^2)
    double l2_p = 0.0;  ///< sqrt(tau * sum_{k=0}^{M} (p^k - P^k)^2)
};

/// u is compared on its final time level only.
ErrorReport error_report(const Field& u, const CoefficientTrace& p, const Field& exact_u,
                         const CoefficientTrace& exact_p, const Grid& grid);

/// Least-squares slope of log(error) against log(step).
/// Needs at least two points, positive entries and strictly decreasing steps.
double measured_order(std::span<const double> errors, std::span<const double> steps);

}  // namespace invdiff
