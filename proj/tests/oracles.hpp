#pragma once

// Test-only reference computations. None of these touch the tridiagonal
// solver or the quadrature used by the library.

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "invdiff/tridiagonal.hpp"

namespace invdiff::oracle {

using std::numbers::pi;

/// Eigenvalue of -D2 for the mode sin(pi x) on a uniform grid of step h.
inline double discrete_eigenvalue(double h) {
    const double s = std::sin(pi * h / 2.0);
    return 4.0 / (h * h) * s * s;
}

/// Source amplitude of the manufactured problem: f = F(t) sin(pi x).
inline double source_amplitude(double t) { return 1.0 + pi * pi * std::exp(t) + std::exp(t); }

// On the manufactured problem every Crank-Nicolson row stays a multiple a_k of
// sin(pi x_i), and h * sum sin^2(pi x_i) = 1/2 exactly. The schemes therefore
// reduce to scalar recurrences in a_k.

inline double amplitude_step(double a, double t0, double tau, double h, double p_next) {
    const double lam = discrete_eigenvalue(h);
    return (a * (1.0 - 0.5 * tau * lam) + 0.5 * tau * (source_amplitude(t0) + source_amplitude(t0 + tau))) /
           (1.0 + 0.5 * tau * lam + tau * p_next);
}

/// Amplitudes a_0..a_M of the forward solve with the exact coefficient.
inline std::vector<double> forward_amplitudes(std::size_t N, std::size_t M, double T = 1.0) {
    const double h = 1.0 / static_cast<double>(N);
    const double tau = T / static_cast<double>(M);
    std::vector<double> a{1.0};
    for (std::size_t k = 0; k < M; ++k) {
        const double t0 = static_cast<double>(k) * tau;
        a.push_back(amplitude_step(a.back(), t0, tau, h, std::exp(-(t0 + tau))));
    }
    return a;
}

struct ScalarRun {
    std::vector<double> amplitude;
    std::vector<double> p;
};

inline double reconstructed_p(double a, double t) {
    const double g = 0.5 * std::exp(t);
    return (-0.5 * pi * pi * a + 0.5 * source_amplitude(t) - g) / g;
}

/// Integration method with the p[k] lag, in scalar form.
inline ScalarRun integration_run(std::size_t N, std::size_t M) {
    const double h = 1.0 / static_cast<double>(N);
    const double tau = 1.0 / static_cast<double>(M);
    ScalarRun run{{1.0}, {reconstructed_p(1.0, 0.0)}};
    for (std::size_t k = 0; k < M; ++k) {
        const double t0 = static_cast<double>(k) * tau;
        run.amplitude.push_back(amplitude_step(run.amplitude.back(), t0, tau, h, run.p.back()));
        run.p.push_back(reconstructed_p(run.amplitude.back(), t0 + tau));
    }
    return run;
}

/// Newton method in scalar form: the constraint pins a_{k+1} = e^{t_{k+1}},
/// and p^{k+1} follows by inverting the amplitude recurrence.
inline ScalarRun newton_run(std::size_t N, std::size_t M) {
    const double h = 1.0 / static_cast<double>(N);
    const double tau = 1.0 / static_cast<double>(M);
    const double lam = discrete_eigenvalue(h);
    ScalarRun run{{1.0}, {reconstructed_p(1.0, 0.0)}};
    for (std::size_t k = 0; k < M; ++k) {
        const double t0 = static_cast<double>(k) * tau;
        const double a1 = std::exp(t0 + tau);
        const double numer =
            run.amplitude.back() * (1.0 - 0.5 * tau * lam) + 0.5 * tau * (source_amplitude(t0) + source_amplitude(t0 + tau));
        run.p.push_back((numer / a1 - 1.0 - 0.5 * tau * lam) / tau);
        run.amplitude.push_back(a1);
    }
    return run;
}

inline Eigen::MatrixXd dense(const TridiagonalSystem& sys) {
    const auto n = static_cast<Eigen::Index>(sys.order());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        A(i, i) = sys.diag[i];
        if (i + 1 < n) {
            A(i, i + 1) = sys.sup[i];
            A(i + 1, i) = sys.sub[i];
        }
    }
    return A;
}

/// Gaussian elimination with partial pivoting on the dense matrix.
inline std::vector<double> dense_solve(const TridiagonalSystem& sys) {
    const Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(sys.rhs.data(), static_cast<Eigen::Index>(sys.rhs.size()));
    const Eigen::VectorXd x = dense(sys).partialPivLu().solve(b);
    return {x.data(), x.data() + x.size()};
}

/// max_i |(A x - b)_i| by explicit multiplication.
inline double residual_inf(const TridiagonalSystem& sys, const std::vector<double>& x) {
    const std::size_t n = sys.order();
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ax = sys.diag[i] * x[i];
        if (i > 0) ax += sys.sub[i - 1] * x[i - 1];
        if (i + 1 < n) ax += sys.sup[i] * x[i + 1];
        r = std::max(r, std::abs(ax - sys.rhs[i]));
    }
    return r;
}

/// Random strictly diagonally dominant system with entries in [-10, 10].
inline TridiagonalSystem random_dominant(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> off(-5.0, 5.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> rhs(-10.0, 10.0);
    TridiagonalSystem sys;
    sys.sub.resize(n - 1);
    sys.sup.resize(n - 1);
    sys.diag.resize(n);
    sys.rhs.resize(n);
    for (auto& v : sys.sub) v = off(rng);
    for (auto& v : sys.sup) v = off(rng);
    for (std::size_t i = 0; i < n; ++i) {
        double bound = 0.0;
        if (i > 0) bound += std::abs(sys.sub[i - 1]);
        if (i + 1 < n) bound += std::abs(sys.sup[i]);
        const double mag = bound + 1e-3 + unit(rng) * (10.0 - bound - 1e-3);
        sys.diag[i] = unit(rng) < 0.5 ? -mag : mag;
        sys.rhs[i] = rhs(rng);
    }
    return sys;
}

}  // namespace invdiff::oracle
