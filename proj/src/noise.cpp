#include "invdiff/noise.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace invdiff {

std::string to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::relative_gaussian: return "relative-gaussian";
        case NoiseKind::absolute_gaussian: return "absolute-gaussian";
        case NoiseKind::relative_uniform: return "relative-uniform";
    }
    return "unknown";
}

NoiseKind parse_noise_kind(std::string_view name) {
    if (name == "relative-gaussian") return NoiseKind::relative_gaussian;
    if (name == "absolute-gaussian") return NoiseKind::absolute_gaussian;
    if (name == "relative-uniform") return NoiseKind::relative_uniform;
    throw std::invalid_argument("unknown noise kind '" + std::string(name) + "'");
}

namespace {

std::vector<double> draws(std::mt19937_64& rng, NoiseKind kind, std::size_t n) {
    std::vector<double> z(n);
    if (kind == NoiseKind::relative_uniform) {
        const double a = std::sqrt(3.0);
        std::uniform_real_distribution<double> dist(-a, a);
        for (auto& v : z) v = dist(rng);
    } else {
        std::normal_distribution<double> dist(0.0, 1.0);
        for (auto& v : z) v = dist(rng);
    }
    return z;
}

std::vector<double> apply(std::span<const double> clean, std::span<const double> z, const NoiseSpec& spec) {
    std::vector<double> out(clean.size());
    for (std::size_t k = 0; k < clean.size(); ++k) {
        out[k] = spec.kind == NoiseKind::absolute_gaussian ? clean[k] + spec.delta * z[k]
                                                            : clean[k] * (1.0 + spec.delta * z[k]);
    }
    return out;
}

}  // namespace

ProblemData perturb(const ProblemData& data, const NoiseSpec& spec) {
    if (!(spec.delta >= 0.0) || !std::isfinite(spec.delta)) {
        throw std::invalid_argument("perturb: delta must be a finite non-negative number");
    }
    if (spec.delta == 0.0) return data;

    std::mt19937_64 rng(spec.seed);
    const std::size_t n = data.g().size();
    const std::vector<double> zeta = draws(rng, spec.kind, n);
    const std::vector<double> xi = draws(rng, spec.kind, n);
    return data.with_overdetermination(apply(data.g(), zeta, spec), apply(data.gprime(), xi, spec));
}

std::vector<double> smooth(std::span<const double> signal, std::size_t window, std::size_t poly_order) {
    const std::size_t n = signal.size();
    if (window % 2 == 0) throw std::invalid_argument("smooth: window must be odd");
    if (poly_order >= window) throw std::invalid_argument("smooth: poly_order must be below the window length");
    if (window > n) throw std::invalid_argument("smooth: window longer than the signal");

    const std::size_t half = window / 2;
    const std::size_t min_points = poly_order + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t lo = i >= half ? i - half : 0;
        std::size_t hi = std::min(n - 1, i + half);
        // Widen a truncated edge window until the fit is determined.
        while (hi - lo + 1 < min_points) {
            if (hi + 1 < n && (lo == 0 || hi - i <= i - lo)) {
                ++hi;
            } else {
                --lo;
            }
        }
        const std::size_t m = hi - lo + 1;
        const double scale = static_cast<double>(std::max<std::size_t>(half, 1));
        Eigen::MatrixXd A(m, poly_order + 1);
        Eigen::VectorXd y(m);
        for (std::size_t r = 0; r < m; ++r) {
            const double offset = (static_cast<double>(lo + r) - static_cast<double>(i)) / scale;
            double power = 1.0;
            for (std::size_t c = 0; c <= poly_order; ++c) {
                A(r, c) = power;
                power *= offset;
            }
            y(r) = signal[lo + r];
        }
        // The fitted polynomial evaluated at offset 0 is its constant coefficient.
        out[i] = A.colPivHouseholderQr().solve(y)(0);
    }
    return out;
}

}  // namespace invdiff
