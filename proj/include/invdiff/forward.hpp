#pragma once

#include <span>
#include <vector>

#include "invdiff/grid.hpp"
#include "invdiff/problem.hpp"
#include "invdiff/tridiagonal.hpp"

namespace invdiff {

/// Interior Crank-Nicolson operator for one step, without right-hand side.
///
/// diag = 1 + tau/h^2 + tau*p_next, off-diagonals = -tau/(2h^2), order N-1.
/// Shared verbatim by the forward step and the Newton sensitivity system.
TridiagonalSystem implicit_operator(const Grid& grid, double p_next);

/// Crank-Nicolson system advancing u from t_k to t_{k+1}. The reaction term
/// uses p at the new level. Needs grid.N >= 2 and u_prev[0] = u_prev[N] = 0.
TridiagonalSystem assemble_step(const Grid& grid, double p_next, std::span<const double> u_prev,
                                std::span<const double> f_prev, std::span<const double> f_next);

/// One time step; returns u_next with zero Dirichlet values.
std::vector<double> step(const Grid& grid, double p_next, std::span<const double> u_prev,
                         std::span<const double> f_prev, std::span<const double> f_next);

/// Direct problem for a given coefficient trace of length M+1.
/// Row 0 is phi and row k+1 is produced by step() with p[k+1].
Field solve_forward(const ProblemData& data, const CoefficientTrace& p);

}  // namespace invdiff
