#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "invdiff/problem.hpp"
#include "invdiff/tridiagonal.hpp"

namespace invdiff {

struct NewtonConfig {
    double tol = 1e-12;
    int max_iter = 50;
    /// Coefficient at t = 0. When empty, reconstruct_p() on phi is used.
    std::optional<double> p_init;

    /// Throws std::invalid_argument unless tol > 0 and max_iter >= 1.
    void validate() const;
};

/// Discrete overdetermination residual F = I(u_row, omega) - g[k].
double residual(std::span<const double> u_row, const ProblemData& data, std::size_t k);

/// Sensitivity system for s = du^{k+1}/dp^{k+1}: the forward operator with
/// right-hand side -tau * u_next on the interior.
TridiagonalSystem sensitivity_system(const Grid& grid, double p_next, std::span<const double> u_next);

/// Solves sensitivity_system(); s[0] = s[N] = 0.
std::vector<double> sensitivity_step(const Grid& grid, double p_next, std::span<const double> u_next);

/// F'(p) = I(s, omega).
double residual_derivative(std::span<const double> s, const ProblemData& data);

enum class ConvergenceFailure { derivative_underflow, iteration_limit, singular_step };

std::string to_string(ConvergenceFailure reason);

/// Newton iteration for one time level did not reach |F| < tol.
/// Records the level being solved, the iteration, and the last (p, F).
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(ConvergenceFailure reason, std::size_t level, int iteration, double p, double F);

    ConvergenceFailure reason() const { return reason_; }
    std::size_t level() const { return level_; }
    int iteration() const { return iteration_; }
    double p() const { return p_; }
    double residual() const { return residual_; }

private:
    ConvergenceFailure reason_;
    std::size_t level_;
    int iteration_;
    double p_;
    double residual_;
};

struct NewtonStep {
    double p = 0.0;
    std::vector<double> u_next;
    /// Newton updates applied before |F| < tol held.
    int iterations = 0;
    double residual = 0.0;
};

/// Solves F(p^{k+1}) = 0 for the step k -> k+1 starting from p_guess.
/// Every iteration re-solves the forward step and the sensitivity system.
NewtonStep newton_step_solve(const ProblemData& data, std::size_t k, std::span<const double> u_prev,
                             double p_guess, const NewtonConfig& cfg);

struct NewtonLogEntry {
    std::size_t level = 0;
    int iterations = 0;
    double p = 0.0;
    double residual = 0.0;
};

struct NewtonResult {
    Field u;
    CoefficientTrace p;
    std::vector<NewtonLogEntry> log;
};

/// Newton-Raphson identification, warm-starting level k+1 from p^k.
/// Failures surface as IdentificationError holding the partial results;
/// the original ConvergenceError or ZeroPivotError is nested.
NewtonResult run_newton(const ProblemData& data, const NewtonConfig& cfg);

}  // namespace invdiff
