#include "invdiff/newton.hpp"

#include <cmath>
#include <exception>

#include "invdiff/errors.hpp"
#include "invdiff/forward.hpp"
#include "invdiff/integration.hpp"
#include "invdiff/quadrature.hpp"

namespace invdiff {

namespace {
constexpr double kMinAbsDerivative = 1e-14;

std::string describe(ConvergenceFailure reason, std::size_t level, int iteration, double p, double F) {
    return "Newton " + to_string(reason) + " at level " + std::to_string(level) + ", iteration " +
           std::to_string(iteration) + " (p = " + std::to_string(p) + ", F = " + std::to_string(F) + ")";
}
}  // namespace

void NewtonConfig::validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("NewtonConfig: tol must be positive");
    if (max_iter < 1) throw std::invalid_argument("NewtonConfig: max_iter must be at least 1");
    if (p_init && !std::isfinite(*p_init)) throw std::invalid_argument("NewtonConfig: p_init must be finite");
}

std::string to_string(ConvergenceFailure reason) {
    switch (reason) {
        case ConvergenceFailure::derivative_underflow: return "derivative underflow";
        case ConvergenceFailure::iteration_limit: return "iteration limit reached";
        case ConvergenceFailure::singular_step: return "singular step";
    }
    return "unknown failure";
}

ConvergenceError::ConvergenceError(ConvergenceFailure reason, std::size_t level, int iteration, double p, double F)
    : std::runtime_error(describe(reason, level, iteration, p, F)),
      reason_(reason),
      level_(level),
      iteration_(iteration),
      p_(p),
      residual_(F) {}

double residual(std::span<const double> u_row, const ProblemData& data, std::size_t k) {
    return weighted_integral(u_row, data.omega(), data.grid().h) - data.g()[k];
}

TridiagonalSystem sensitivity_system(const Grid& grid, double p_next, std::span<const double> u_next) {
    if (u_next.size() != grid.space_nodes()) {
        throw std::invalid_argument("sensitivity_system: row width does not match the grid");
    }
    TridiagonalSystem sys = implicit_operator(grid, p_next);
    sys.rhs.resize(grid.interior());
    for (std::size_t j = 0; j < sys.rhs.size(); ++j) {
        sys.rhs[j] = -grid.tau * u_next[j + 1];
    }
    return sys;
}

std::vector<double> sensitivity_step(const Grid& grid, double p_next, std::span<const double> u_next) {
    const std::vector<double> interior = thomas_solve(sensitivity_system(grid, p_next, u_next));
    std::vector<double> s(grid.space_nodes(), 0.0);
    std::copy(interior.begin(), interior.end(), s.begin() + 1);
    return s;
}

double residual_derivative(std::span<const double> s, const ProblemData& data) {
    return weighted_integral(s, data.omega(), data.grid().h);
}

NewtonStep newton_step_solve(const ProblemData& data, std::size_t k, std::span<const double> u_prev,
                             double p_guess, const NewtonConfig& cfg) {
    cfg.validate();
    const Grid& grid = data.grid();
    if (k >= grid.M) throw std::out_of_range("newton_step_solve: no level after " + std::to_string(k));
    const std::size_t level = k + 1;
    if (!std::isfinite(p_guess)) {
        throw ConvergenceError(ConvergenceFailure::singular_step, level, 0, p_guess, std::nan(""));
    }

    double p = p_guess;
    double F = std::nan("");
    for (int j = 0;; ++j) {
        std::vector<double> u_next;
        try {
            u_next = step(grid, p, u_prev, data.f_row(k), data.f_row(k + 1));
        } catch (const ZeroPivotError&) {
            throw ConvergenceError(ConvergenceFailure::singular_step, level, j, p, F);
        }
        F = residual(u_next, data, level);
        if (std::abs(F) < cfg.tol) {
            return NewtonStep{p, std::move(u_next), j, F};
        }
        if (j >= cfg.max_iter) {
            throw ConvergenceError(ConvergenceFailure::iteration_limit, level, j, p, F);
        }
        const double dF = residual_derivative(sensitivity_step(grid, p, u_next), data);
        if (!(std::abs(dF) >= kMinAbsDerivative)) {
            throw ConvergenceError(ConvergenceFailure::derivative_underflow, level, j, p, F);
        }
        p -= F / dF;
        if (!std::isfinite(p)) {
            throw ConvergenceError(ConvergenceFailure::singular_step, level, j + 1, p, F);
        }
    }
}

NewtonResult run_newton(const ProblemData& data, const NewtonConfig& cfg) {
    cfg.validate();
    const Grid& grid = data.grid();
    RowMatrix u;
    u.reserve_rows(grid.time_levels());
    u.append_row(data.phi());
    std::vector<double> p;
    p.reserve(grid.time_levels());
    std::vector<NewtonLogEntry> log;
    log.reserve(grid.M);

    std::size_t level = 0;
    try {
        p.push_back(cfg.p_init ? *cfg.p_init : reconstruct_p(data.phi(), data.f_row(0), data, 0));
        for (std::size_t k = 0; k < grid.M; ++k) {
            level = k + 1;
            NewtonStep solved = newton_step_solve(data, k, u.row(k), p[k], cfg);
            u.append_row(solved.u_next);
            p.push_back(solved.p);
            log.push_back({level, solved.iterations, solved.p, solved.residual});
        }
    } catch (const std::exception& e) {
        std::throw_with_nested(IdentificationError("Newton method failed at level " + std::to_string(level) +
                                                       ": " + e.what(),
                                                   level, std::move(u), std::move(p)));
    }
    return {Field(std::move(u)), CoefficientTrace(std::move(p)), std::move(log)};
}

}  // namespace invdiff
