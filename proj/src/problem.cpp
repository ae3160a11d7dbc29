#include "invdiff/problem.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace invdiff {

namespace {

constexpr double kBoundarySnap = 1e-12;

void require_size(std::string_view name, std::size_t actual, std::size_t expected) {
    if (actual != expected) {
        throw std::invalid_argument("ProblemData: " + std::string(name) + " has " + std::to_string(actual) +
                                    " samples, expected " + std::to_string(expected));
    }
}

void require_finite(std::string_view name, std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::invalid_argument("ProblemData: " + std::string(name) + "[" + std::to_string(i) +
                                        "] is not finite");
        }
    }
}

void snap_boundary_zero(std::string_view name, double& value) {
    if (std::abs(value) > kBoundarySnap) {
        throw std::invalid_argument("ProblemData: " + std::string(name) + " must vanish on the boundary, got " +
                                    std::to_string(value));
    }
    value = 0.0;
}

}  // namespace

CoefficientTrace::CoefficientTrace(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!std::isfinite(values_[k])) {
            throw std::invalid_argument("CoefficientTrace: entry " + std::to_string(k) + " is not finite");
        }
    }
}

ProblemData::ProblemData(Grid grid, RowMatrix f, std::vector<double> phi, std::vector<double> omega,
                         std::vector<double> omega_xx, std::vector<double> g,
                         std::optional<std::vector<double>> gprime)
    : grid_(grid),
      f_(std::move(f)),
      phi_(std::move(phi)),
      omega_(std::move(omega)),
      omega_xx_(std::move(omega_xx)),
      g_(std::move(g)) {
    const std::size_t nx = grid_.space_nodes();
    const std::size_t nt = grid_.time_levels();
    if (grid_.N < 2) throw std::invalid_argument("ProblemData: grid needs N >= 2");
    require_size("f rows", f_.rows(), nt);
    require_size("f columns", f_.cols(), nx);
    require_size("phi", phi_.size(), nx);
    require_size("omega", omega_.size(), nx);
    require_size("omega_xx", omega_xx_.size(), nx);
    require_size("g", g_.size(), nt);

    require_finite("f", f_.data());
    require_finite("phi", phi_);
    require_finite("omega", omega_);
    require_finite("omega_xx", omega_xx_);
    require_finite("g", g_);

    snap_boundary_zero("phi", phi_.front());
    snap_boundary_zero("phi", phi_.back());
    snap_boundary_zero("omega", omega_.front());
    snap_boundary_zero("omega", omega_.back());
    for (std::size_t k = 0; k < nt; ++k) {
        snap_boundary_zero("f", f_(k, 0));
        snap_boundary_zero("f", f_(k, grid_.N));
    }
    for (std::size_t k = 0; k < nt; ++k) {
        if (g_[k] == 0.0) {
            throw std::invalid_argument("ProblemData: g vanishes at level " + std::to_string(k));
        }
    }

    if (gprime) {
        gprime_ = std::move(*gprime);
        require_size("gprime", gprime_.size(), nt);
        require_finite("gprime", gprime_);
    } else {
        gprime_ = central_difference(g_, grid_.tau);
        gprime_estimated_ = true;
    }
}

ProblemData ProblemData::with_overdetermination(std::vector<double> g, std::vector<double> gprime) const {
    return ProblemData(grid_, f_, phi_, omega_, omega_xx_, std::move(g), std::move(gprime));
}

namespace manufactured {

using std::numbers::pi;

double u(double x, double t) { return std::exp(t) * std::sin(pi * x); }
double u_t(double x, double t) { return std::exp(t) * std::sin(pi * x); }
double u_xx(double x, double t) { return -pi * pi * std::exp(t) * std::sin(pi * x); }
double p(double t) { return std::exp(-t); }
double f(double x, double t) { return std::sin(pi * x) * (1.0 + pi * pi * std::exp(t) + std::exp(t)); }
double omega(double x) { return std::sin(pi * x); }
double omega_xx(double x) { return -pi * pi * std::sin(pi * x); }
double g(double t) { return 0.5 * std::exp(t); }
double gprime(double t) { return 0.5 * std::exp(t); }

}  // namespace manufactured

ManufacturedProblem manufactured_problem(const Grid& grid) {
    if (grid.l != 1.0) {
        throw std::invalid_argument("manufactured_problem: benchmark is defined on l = 1");
    }
    const std::size_t nx = grid.space_nodes();
    const std::size_t nt = grid.time_levels();

    // sin(pi * N * h) is O(1e-16), not zero; boundary columns are set exactly.
    auto interior = [&](std::size_t i, double value) { return (i == 0 || i == grid.N) ? 0.0 : value; };

    RowMatrix f(nt, nx);
    RowMatrix u(nt, nx);
    std::vector<double> phi(nx), omega(nx), omega_xx(nx), g(nt), gprime(nt), p(nt);
    for (std::size_t k = 0; k < nt; ++k) {
        const double t = grid.t(k);
        for (std::size_t i = 0; i < nx; ++i) {
            f(k, i) = interior(i, manufactured::f(grid.x(i), t));
            u(k, i) = interior(i, manufactured::u(grid.x(i), t));
        }
        g[k] = manufactured::g(t);
        gprime[k] = manufactured::gprime(t);
        p[k] = manufactured::p(t);
    }
    for (std::size_t i = 0; i < nx; ++i) {
        phi[i] = interior(i, manufactured::u(grid.x(i), 0.0));
        omega[i] = interior(i, manufactured::omega(grid.x(i)));
        omega_xx[i] = interior(i, manufactured::omega_xx(grid.x(i)));
    }
    return ManufacturedProblem{
        ProblemData(grid, std::move(f), std::move(phi), std::move(omega), std::move(omega_xx), std::move(g),
                    std::move(gprime)),
        Field(std::move(u)),
        CoefficientTrace(std::move(p)),
    };
}

std::vector<double> central_difference(std::span<const double> values, double step) {
    const std::size_t n = values.size();
    if (n < 2) throw std::invalid_argument("central_difference: need at least two samples");
    if (!(step > 0.0)) throw std::invalid_argument("central_difference: step must be positive");
    std::vector<double> d(n);
    if (n == 2) {
        d[0] = d[1] = (values[1] - values[0]) / step;
        return d;
    }
    d[0] = (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * step);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        d[k] = (values[k + 1] - values[k - 1]) / (2.0 * step);
    }
    d[n - 1] = (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * step);
    return d;
}

}  // namespace invdiff
