#pragma once

#include <cstddef>
#include <span>

#include "invdiff/problem.hpp"

namespace invdiff {

/// p at level k from the differentiated overdetermination condition:
///
///   p = ( I(u, omega'') + I(f, omega) - g'[k] ) / g[k]
///
/// where I is weighted_integral(). Throws std::domain_error when |g[k]| < 1e-14.
double reconstruct_p(std::span<const double> u_row, std::span<const double> f_row,
                     const ProblemData& data, std::size_t k);

struct IntegrationResult {
    Field u;
    CoefficientTrace p;
};

/// Integration-based identification.
///
/// p[0] comes from reconstruct_p on phi. Each step k -> k+1 is solved with the
/// latest known coefficient p[k] in the implicit operator, and p[k+1] is then
/// reconstructed from the new row. No re-solve takes place.
/// Failures surface as IdentificationError holding the partial results.
IntegrationResult run_integration(const ProblemData& data);

}  // namespace invdiff
