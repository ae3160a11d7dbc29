#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "invdiff/csv_io.hpp"
#include "invdiff/metrics.hpp"
#include "invdiff/newton.hpp"
#include "invdiff/noise.hpp"
#include "invdiff/problem.hpp"

namespace invdiff {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Method { integration, newton };

std::string to_string(Method method);
Method parse_method(std::string_view name);

/// Outcome of one identification run. On failure u and p hold the levels
/// computed before the failing one.
struct RunOutcome {
    Method method = Method::integration;
    bool converged = false;
    std::string failure;
    std::size_t failed_level = 0;
    Field u;
    std::vector<double> p;
    std::vector<NewtonLogEntry> log;
};

RunOutcome run_identification(const ProblemData& data, Method method, const NewtonConfig& cfg);

struct SmoothingSpec {
    std::size_t window = 0;
    std::size_t order = 0;
    bool enabled() const { return window > 0; }
};

/// Savitzky-Golay smoothing of g and g'; identity when disabled.
ProblemData apply_smoothing(const ProblemData& data, const SmoothingSpec& smoothing);

Metadata run_metadata(const Grid& grid, std::string_view method, const NewtonConfig* cfg,
                      const NoiseSpec& noise, const SmoothingSpec& smoothing);

/// Columns t, p_exact, p_numeric. p_exact is omitted when exact_p is null.
CsvTable p_trace_csv(const Grid& grid, std::span<const double> p, const CoefficientTrace* exact_p,
                     const Metadata& meta);
/// Long format: t, x, u_numeric[, u_exact].
CsvTable u_surface_csv(const Grid& grid, const Field& u, const Field* exact_u, const Metadata& meta);
/// Columns method, h, tau, er_u, er_p, l2_u, l2_p, converged.
CsvTable report_csv(std::string_view method, const Grid& grid, const ErrorReport& report, bool converged,
                    const Metadata& meta);
/// Columns level, iterations, p, residual.
CsvTable newton_log_csv(const std::vector<NewtonLogEntry>& log, const Metadata& meta);

// Classical error tables on the manufactured problem (T = l = 1).
struct TableCell {
    std::size_t N = 0;
    std::size_t M = 0;
};

/// Resolutions of tables 1 to 4: tables 1 and 3 fix h = 1/100 and use
/// tau = 1/200..1/1600, tables 2 and 4 use tau = h = 1/100..1/800.
std::vector<TableCell> table_cells(int table);
/// Tables 1-2 use the integration method, tables 3-4 Newton.
Method table_method(int table);

struct TableRow {
    double h = 0.0;
    double tau = 0.0;
    ErrorReport report;
    bool converged = false;
    std::string failure;
};

TableRow run_table_cell(Method method, TableCell cell, const NewtonConfig& cfg);
/// Cells run concurrently; rows come back in table order.
std::vector<TableRow> run_table(int table, const NewtonConfig& cfg);
/// Columns h, tau, er_u, er_p, l2_u, l2_p.
CsvTable table_csv(int table, const std::vector<TableRow>& rows, const NewtonConfig& cfg);

/// Both classical methods at h = tau = 1/100; columns approach, er_u, er_p, l2_u, l2_p.
CsvTable comparison_csv(const NewtonConfig& cfg);

struct NoiseRun {
    NoiseSpec spec;
    ProblemData noisy;
    RunOutcome outcome;
};

NoiseRun run_noise_case(const ManufacturedProblem& problem, Method method, const NoiseSpec& spec,
                        const SmoothingSpec& smoothing, const NewtonConfig& cfg);

/// Columns t, g_clean, g_noisy, p_exact, p_numeric over the computed levels.
CsvTable noise_csv(const ManufacturedProblem& problem, const NoiseRun& run, const Metadata& meta);

/// Largest |p^k - P^k| over the levels that were computed.
double max_p_error(std::span<const double> p, const CoefficientTrace& exact_p);

}  // namespace invdiff
