#pragma once

#include <optional>
#include <span>
#include <vector>

#include "invdiff/grid.hpp"
#include "invdiff/matrix.hpp"

namespace invdiff {

/// Numerical solution surface; entry (k, i) approximates u(x_i, t_k).
class Field {
public:
    Field() = default;
    explicit Field(RowMatrix values) : values_(std::move(values)) {}

    std::size_t levels() const { return values_.rows(); }
    std::size_t width() const { return values_.cols(); }
    std::span<const double> row(std::size_t k) const { return values_.row(k); }
    std::span<const double> final_row() const { return values_.row(values_.rows() - 1); }
    double operator()(std::size_t k, std::size_t i) const { return values_(k, i); }
    const RowMatrix& values() const { return values_; }

    friend bool operator==(const Field&, const Field&) = default;

private:
    RowMatrix values_;
};

/// Time samples p^k of the potential coefficient. Entries are always finite.
class CoefficientTrace {
public:
    CoefficientTrace() = default;
    explicit CoefficientTrace(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    std::span<const double> values() const { return values_; }

    friend bool operator==(const CoefficientTrace&, const CoefficientTrace&) = default;

private:
    std::vector<double> values_;
};

/// Grid samples of one inverse-problem instance.
///
/// Invariants checked on construction (std::invalid_argument otherwise):
/// shapes conform to the grid, phi, omega and every f row vanish at both
/// boundary nodes, and g never vanishes. Boundary entries within 1e-12 of
/// zero are snapped to exactly zero so that sin(pi*x) sampled at x = l is
/// accepted from files.
///
/// When gprime is not supplied it is estimated from g with
/// central_difference() and gprime_estimated() reports true.
class ProblemData {
public:
    ProblemData(Grid grid, RowMatrix f, std::vector<double> phi, std::vector<double> omega,
                std::vector<double> omega_xx, std::vector<double> g,
                std::optional<std::vector<double>> gprime);

    const Grid& grid() const { return grid_; }
    const RowMatrix& f() const { return f_; }
    std::span<const double> f_row(std::size_t k) const { return f_.row(k); }
    std::span<const double> phi() const { return phi_; }
    std::span<const double> omega() const { return omega_; }
    std::span<const double> omega_xx() const { return omega_xx_; }
    std::span<const double> g() const { return g_; }
    std::span<const double> gprime() const { return gprime_; }
    bool gprime_estimated() const { return gprime_estimated_; }

    /// Copy with the overdetermination data (g, g') replaced.
    ProblemData with_overdetermination(std::vector<double> g, std::vector<double> gprime) const;

private:
    Grid grid_;
    RowMatrix f_;
    std::vector<double> phi_;
    std::vector<double> omega_;
    std::vector<double> omega_xx_;
    std::vector<double> g_;
    std::vector<double> gprime_;
    bool gprime_estimated_ = false;
};

/// The smooth benchmark instance with known ground truth:
/// u = e^t sin(pi x), p = e^-t, omega = sin(pi x), g = e^t / 2 on [0,1] x [0,T].
struct ManufacturedProblem {
    ProblemData data;
    Field exact_u;
    CoefficientTrace exact_p;
};

/// Requires grid.l == 1.
ManufacturedProblem manufactured_problem(const Grid& grid);

namespace manufactured {
double u(double x, double t);
double u_t(double x, double t);
double u_xx(double x, double t);
double p(double t);
double f(double x, double t);
double omega(double x);
double omega_xx(double x);
double g(double t);
double gprime(double t);
}  // namespace manufactured

/// Derivative of uniformly sampled values. Second-order central differences
/// in the interior and second-order one-sided stencils at both ends; falls
/// back to a first-order difference when only two samples exist.
std::vector<double> central_difference(std::span<const double> values, double step);

}  // namespace invdiff
