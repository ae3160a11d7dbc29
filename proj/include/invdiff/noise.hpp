#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invdiff/problem.hpp"

namespace invdiff {

/// Perturbation law applied to the measured signals.
enum class NoiseKind {
    relative_gaussian,  ///< v * (1 + delta * z), z ~ N(0, 1)
    absolute_gaussian,  ///< v + delta * z
    relative_uniform,   ///< v * (1 + delta * z), z ~ U(-sqrt 3, sqrt 3)
};

std::string to_string(NoiseKind kind);
/// Throws std::invalid_argument for unknown names.
NoiseKind parse_noise_kind(std::string_view name);

struct NoiseSpec {
    double delta = 0.0;
    std::uint64_t seed = 0;
    NoiseKind kind = NoiseKind::relative_gaussian;
};

/// Noisy copy of the overdetermination data.
///
/// g and g' receive independent draws from one mt19937_64 stream seeded with
/// spec.seed: all M+1 draws for g first, then M+1 for g'. Nothing else changes.
ProblemData perturb(const ProblemData& data, const NoiseSpec& spec);

/// Savitzky-Golay smoothing.
///
/// Each output sample is the value at that sample of the least-squares
/// polynomial of degree poly_order fitted over the centred window. Near the
/// ends the window is truncated to the available samples, and widened on the
/// inner side when it would hold fewer than poly_order+1 points.
/// Requires an odd window, poly_order < window and window <= signal size.
std::vector<double> smooth(std::span<const double> signal, std::size_t window, std::size_t poly_order);

}  // namespace invdiff
