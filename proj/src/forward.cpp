#include "invdiff/forward.hpp"

#include <stdexcept>
#include <string>

namespace invdiff {

namespace {

void require_width(std::string_view name, std::span<const double> v, const Grid& grid) {
    if (v.size() != grid.space_nodes()) {
        throw std::invalid_argument("assemble_step: " + std::string(name) + " has " + std::to_string(v.size()) +
                                    " entries, grid needs " + std::to_string(grid.space_nodes()));
    }
}

}  // namespace

TridiagonalSystem implicit_operator(const Grid& grid, double p_next) {
    if (grid.N < 2) throw std::invalid_argument("implicit_operator: grid has no interior nodes");
    const std::size_t n = grid.interior();
    const double r = grid.tau / (grid.h * grid.h);
    TridiagonalSystem sys;
    sys.diag.assign(n, 1.0 + r + grid.tau * p_next);
    sys.sub.assign(n - 1, -0.5 * r);
    sys.sup.assign(n - 1, -0.5 * r);
    return sys;
}

TridiagonalSystem assemble_step(const Grid& grid, double p_next, std::span<const double> u_prev,
                                std::span<const double> f_prev, std::span<const double> f_next) {
    require_width("u_prev", u_prev, grid);
    require_width("f_prev", f_prev, grid);
    require_width("f_next", f_next, grid);
    if (u_prev.front() != 0.0 || u_prev.back() != 0.0) {
        throw std::invalid_argument("assemble_step: u_prev must vanish at both boundary nodes");
    }
    TridiagonalSystem sys = implicit_operator(grid, p_next);
    const double r = grid.tau / (grid.h * grid.h);
    const std::size_t n = grid.interior();
    sys.rhs.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t i = j + 1;
        sys.rhs[j] = (1.0 - r) * u_prev[i] + 0.5 * r * (u_prev[i + 1] + u_prev[i - 1]) +
                     0.5 * grid.tau * (f_next[i] + f_prev[i]);
    }
    return sys;
}

std::vector<double> step(const Grid& grid, double p_next, std::span<const double> u_prev,
                         std::span<const double> f_prev, std::span<const double> f_next) {
    const std::vector<double> interior = thomas_solve(assemble_step(grid, p_next, u_prev, f_prev, f_next));
    std::vector<double> u_next(grid.space_nodes(), 0.0);
    std::copy(interior.begin(), interior.end(), u_next.begin() + 1);
    return u_next;
}

Field solve_forward(const ProblemData& data, const CoefficientTrace& p) {
    const Grid& grid = data.grid();
    if (p.size() != grid.time_levels()) {
        throw std::invalid_argument("solve_forward: coefficient trace has " + std::to_string(p.size()) +
                                    " entries, expected " + std::to_string(grid.time_levels()));
    }
    RowMatrix u(grid.time_levels(), grid.space_nodes());
    std::copy(data.phi().begin(), data.phi().end(), u.row(0).begin());
    for (std::size_t k = 0; k < grid.M; ++k) {
        const std::vector<double> next = step(grid, p[k + 1], u.row(k), data.f_row(k), data.f_row(k + 1));
        std::copy(next.begin(), next.end(), u.row(k + 1).begin());
    }
    return Field(std::move(u));
}

}  // namespace invdiff
