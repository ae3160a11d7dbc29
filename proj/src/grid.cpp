#include "invdiff/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace invdiff {

Grid make_grid(double l, double T, std::size_t N, std::size_t M) {
    if (!(l > 0.0) || !std::isfinite(l)) {
        throw std::invalid_argument("make_grid: length l must be positive, got " + std::to_string(l));
    }
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw std::invalid_argument("make_grid: final time T must be positive, got " + std::to_string(T));
    }
    if (N < 3) {
        throw std::invalid_argument("make_grid: need N >= 3 spatial intervals, got " + std::to_string(N));
    }
    if (M < 1) {
        throw std::invalid_argument("make_grid: need M >= 1 time steps, got " + std::to_string(M));
    }
    Grid grid;
    grid.l = l;
    grid.T = T;
    grid.N = N;
    grid.M = M;
    grid.h = l / static_cast<double>(N);
    grid.tau = T / static_cast<double>(M);
    return grid;
}

bool operator==(const Grid& a, const Grid& b) {
    return a.l == b.l && a.T == b.T && a.N == b.N && a.M == b.M && a.h == b.h && a.tau == b.tau;
}

}  // namespace invdiff
