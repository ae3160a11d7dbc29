#include "invdiff/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace invdiff {

ErrorReport error_report(const Field& u, const CoefficientTrace& p, const Field& exact_u,
                         const CoefficientTrace& exact_p, const Grid& grid) {
    if (u.levels() == 0 || exact_u.levels() == 0 || u.width() != exact_u.width() ||
        u.width() != grid.space_nodes()) {
        throw std::invalid_argument("error_report: field shapes do not conform");
    }
    if (p.size() != exact_p.size() || p.size() != grid.time_levels()) {
        throw std::invalid_argument("error_report: coefficient traces do not conform");
    }
    ErrorReport report;
    const auto uM = u.final_row();
    const auto UM = exact_u.final_row();
    double sum_u = 0.0;
    for (std::size_t i = 0; i < uM.size(); ++i) {
        const double e = std::abs(uM[i] - UM[i]);
        report.er_u = std::max(report.er_u, e);
        sum_u += e * e;
    }
    double sum_p = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double e = std::abs(p[k] - exact_p[k]);
        report.er_p = std::max(report.er_p, e);
        sum_p += e * e;
    }
    report.l2_u = std::sqrt(grid.h * sum_u);
    report.l2_p = std::sqrt(grid.tau * sum_p);
    return report;
}

double measured_order(std::span<const double> errors, std::span<const double> steps) {
    if (errors.size() != steps.size() || errors.size() < 2) {
        throw std::invalid_argument("measured_order: need at least two (error, step) pairs");
    }
    const std::size_t n = errors.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(errors[i] > 0.0) || !(steps[i] > 0.0)) {
            throw std::invalid_argument("measured_order: errors and steps must be positive");
        }
        if (i > 0 && !(steps[i] < steps[i - 1])) {
            throw std::invalid_argument("measured_order: steps must be strictly decreasing");
        }
        lx[i] = std::log(steps[i]);
        ly[i] = std::log(errors[i]);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace invdiff
