#include "invdiff/integration.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "invdiff/errors.hpp"
#include "invdiff/forward.hpp"
#include "invdiff/quadrature.hpp"

namespace invdiff {

namespace {
constexpr double kMinAbsG = 1e-14;
}

double reconstruct_p(std::span<const double> u_row, std::span<const double> f_row, const ProblemData& data,
                     std::size_t k) {
    const double g = data.g()[k];
    if (std::abs(g) < kMinAbsG) {
        throw std::domain_error("reconstruct_p: |g| below 1e-14 at level " + std::to_string(k));
    }
    const double h = data.grid().h;
    const double numerator =
        weighted_integral(u_row, data.omega_xx(), h) + weighted_integral(f_row, data.omega(), h) - data.gprime()[k];
    return numerator / g;
}

IntegrationResult run_integration(const ProblemData& data) {
    const Grid& grid = data.grid();
    RowMatrix u;
    u.reserve_rows(grid.time_levels());
    u.append_row(data.phi());
    std::vector<double> p;
    p.reserve(grid.time_levels());

    std::size_t level = 0;
    try {
        p.push_back(reconstruct_p(data.phi(), data.f_row(0), data, 0));
        for (std::size_t k = 0; k < grid.M; ++k) {
            level = k + 1;
            const std::vector<double> next = step(grid, p[k], u.row(k), data.f_row(k), data.f_row(k + 1));
            const double p_next = reconstruct_p(next, data.f_row(k + 1), data, k + 1);
            if (!std::isfinite(p_next)) {
                throw std::domain_error("reconstructed coefficient is not finite");
            }
            u.append_row(next);
            p.push_back(p_next);
        }
    } catch (const std::exception& e) {
        throw IdentificationError("integration method failed at level " + std::to_string(level) + ": " + e.what(),
                                  level, std::move(u), std::move(p));
    }
    return {Field(std::move(u)), CoefficientTrace(std::move(p))};
}

}  // namespace invdiff
