#pragma once

#include <cstddef>

namespace invdiff {

/// Uniform space-time lattice on [0, l] x [0, T].
///
/// Nodes are x_i = i*h for i = 0..N and t_k = k*tau for k = 0..M.
struct Grid {
    double l = 1.0;
    double T = 1.0;
    std::size_t N = 0;
    std::size_t M = 0;
    double h = 0.0;
    double tau = 0.0;

    double x(std::size_t i) const { return static_cast<double>(i) * h; }
    double t(std::size_t k) const { return static_cast<double>(k) * tau; }

    std::size_t space_nodes() const { return N + 1; }
    std::size_t time_levels() const { return M + 1; }
    std::size_t interior() const { return N - 1; }
};

/// Throws std::invalid_argument unless N >= 3, M >= 1, l > 0 and T > 0.
Grid make_grid(double l, double T, std::size_t N, std::size_t M);

bool operator==(const Grid& a, const Grid& b);

}  // namespace invdiff
