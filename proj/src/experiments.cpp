#include "invdiff/experiments.hpp"

#include <fmt/format.h>

#include <cmath>
#include <exception>
#include <future>
#include <limits>
#include <stdexcept>

#include "invdiff/errors.hpp"
#include "invdiff/integration.hpp"

namespace invdiff {

std::string to_string(Method method) { return method == Method::integration ? "integration" : "newton"; }

Method parse_method(std::string_view name) {
    if (name == "integration") return Method::integration;
    if (name == "newton") return Method::newton;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

RunOutcome run_identification(const ProblemData& data, Method method, const NewtonConfig& cfg) {
    RunOutcome out;
    out.method = method;
    try {
        if (method == Method::integration) {
            IntegrationResult r = run_integration(data);
            out.u = std::move(r.u);
            out.p.assign(r.p.values().begin(), r.p.values().end());
        } else {
            NewtonResult r = run_newton(data, cfg);
            out.u = std::move(r.u);
            out.p.assign(r.p.values().begin(), r.p.values().end());
            out.log = std::move(r.log);
        }
        out.converged = true;
    } catch (const IdentificationError& e) {
        out.converged = false;
        out.failure = e.what();
        out.failed_level = e.failed_level();
        out.u = Field(e.partial_u());
        out.p = e.partial_p();
    }
    return out;
}

ProblemData apply_smoothing(const ProblemData& data, const SmoothingSpec& smoothing) {
    if (!smoothing.enabled()) return data;
    return data.with_overdetermination(smooth(data.g(), smoothing.window, smoothing.order),
                                       smooth(data.gprime(), smoothing.window, smoothing.order));
}

Metadata run_metadata(const Grid& grid, std::string_view method, const NewtonConfig* cfg, const NoiseSpec& noise,
                      const SmoothingSpec& smoothing) {
    Metadata m;
    m.set("artifact", "invdiff");
    m.set("version", std::string(kVersion));
    m.set("l", grid.l);
    m.set("T", grid.T);
    m.set("N", std::to_string(grid.N));
    m.set("M", std::to_string(grid.M));
    m.set("method", std::string(method));
    if (cfg) {
        m.set("tol", cfg->tol);
        m.set("max_iter", std::to_string(cfg->max_iter));
        m.set("p_init", cfg->p_init ? fmt::format("{}", *cfg->p_init) : std::string("reconstructed"));
    }
    m.set("noise_kind", to_string(noise.kind));
    m.set("noise_delta", noise.delta);
    m.set("seed", std::to_string(noise.seed));
    m.set("smooth_window", std::to_string(smoothing.window));
    m.set("smooth_order", std::to_string(smoothing.order));
    return m;
}

CsvTable p_trace_csv(const Grid& grid, std::span<const double> p, const CoefficientTrace* exact_p,
                     const Metadata& meta) {
    CsvTable t;
    t.meta = meta;
    t.header = exact_p ? std::vector<std::string>{"t", "p_exact", "p_numeric"}
                       : std::vector<std::string>{"t", "p_numeric"};
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (exact_p) {
            t.add_row({grid.t(k), (*exact_p)[k], p[k]});
        } else {
            t.add_row({grid.t(k), p[k]});
        }
    }
    return t;
}

CsvTable u_surface_csv(const Grid& grid, const Field& u, const Field* exact_u, const Metadata& meta) {
    CsvTable t;
    t.meta = meta;
    t.header = exact_u ? std::vector<std::string>{"t", "x", "u_numeric", "u_exact"}
                       : std::vector<std::string>{"t", "x", "u_numeric"};
    t.rows.reserve(u.levels() * u.width());
    for (std::size_t k = 0; k < u.levels(); ++k) {
        for (std::size_t i = 0; i < u.width(); ++i) {
            if (exact_u) {
                t.add_row({grid.t(k), grid.x(i), u(k, i), (*exact_u)(k, i)});
            } else {
                t.add_row({grid.t(k), grid.x(i), u(k, i)});
            }
        }
    }
    return t;
}

CsvTable report_csv(std::string_view method, const Grid& grid, const ErrorReport& report, bool converged,
                    const Metadata& meta) {
    CsvTable t;
    t.meta = meta;
    t.header = {"method", "h", "tau", "er_u", "er_p", "l2_u", "l2_p", "converged"};
    t.rows.push_back({std::string(method), format_number(grid.h), format_number(grid.tau),
                      format_number(report.er_u), format_number(report.er_p), format_number(report.l2_u),
                      format_number(report.l2_p), converged ? "1" : "0"});
    return t;
}

CsvTable newton_log_csv(const std::vector<NewtonLogEntry>& log, const Metadata& meta) {
    CsvTable t;
    t.meta = meta;
    t.header = {"level", "iterations", "p", "residual"};
    for (const auto& e : log) {
        t.rows.push_back(
            {std::to_string(e.level), std::to_string(e.iterations), format_number(e.p), format_number(e.residual)});
    }
    return t;
}

std::vector<TableCell> table_cells(int table) {
    switch (table) {
        case 1:
        case 3: return {{100, 200}, {100, 400}, {100, 800}, {100, 1600}};
        case 2:
        case 4: return {{100, 100}, {200, 200}, {400, 400}, {800, 800}};
    }
    throw std::invalid_argument("table must be 1, 2, 3 or 4");
}

Method table_method(int table) {
    if (table < 1 || table > 4) throw std::invalid_argument("table must be 1, 2, 3 or 4");
    return table <= 2 ? Method::integration : Method::newton;
}

TableRow run_table_cell(Method method, TableCell cell, const NewtonConfig& cfg) {
    const Grid grid = make_grid(1.0, 1.0, cell.N, cell.M);
    const ManufacturedProblem problem = manufactured_problem(grid);
    const RunOutcome outcome = run_identification(problem.data, method, cfg);
    TableRow row;
    row.h = grid.h;
    row.tau = grid.tau;
    row.converged = outcome.converged;
    row.failure = outcome.failure;
    if (outcome.converged) {
        row.report = error_report(outcome.u, CoefficientTrace(outcome.p), problem.exact_u, problem.exact_p, grid);
    } else {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.report = {nan, nan, nan, nan};
    }
    return row;
}

std::vector<TableRow> run_table(int table, const NewtonConfig& cfg) {
    const Method method = table_method(table);
    std::vector<std::future<TableRow>> jobs;
    for (const TableCell cell : table_cells(table)) {
        jobs.push_back(std::async(std::launch::async, run_table_cell, method, cell, cfg));
    }
    std::vector<TableRow> rows;
    rows.reserve(jobs.size());
    for (auto& job : jobs) rows.push_back(job.get());
    return rows;
}

CsvTable table_csv(int table, const std::vector<TableRow>& rows, const NewtonConfig& cfg) {
    CsvTable t;
    t.meta.set("artifact", "invdiff");
    t.meta.set("version", std::string(kVersion));
    t.meta.set("table", std::to_string(table));
    t.meta.set("method", to_string(table_method(table)));
    t.meta.set("problem", "manufactured");
    t.meta.set("l", 1.0);
    t.meta.set("T", 1.0);
    if (table_method(table) == Method::newton) {
        t.meta.set("tol", cfg.tol);
        t.meta.set("max_iter", std::to_string(cfg.max_iter));
        t.meta.set("p_init", cfg.p_init ? fmt::format("{}", *cfg.p_init) : std::string("reconstructed"));
    }
    t.meta.set("noise_delta", 0.0);
    t.header = {"h", "tau", "er_u", "er_p", "l2_u", "l2_p"};
    for (const auto& r : rows) {
        t.add_row({r.h, r.tau, r.report.er_u, r.report.er_p, r.report.l2_u, r.report.l2_p});
    }
    return t;
}

CsvTable comparison_csv(const NewtonConfig& cfg) {
    auto integration = std::async(std::launch::async, run_table_cell, Method::integration, TableCell{100, 100}, cfg);
    auto newton = std::async(std::launch::async, run_table_cell, Method::newton, TableCell{100, 100}, cfg);
    CsvTable t;
    t.meta.set("artifact", "invdiff");
    t.meta.set("version", std::string(kVersion));
    t.meta.set("table", "comparison");
    t.meta.set("problem", "manufactured");
    t.meta.set("N", "100");
    t.meta.set("M", "100");
    t.meta.set("tol", cfg.tol);
    t.meta.set("max_iter", std::to_string(cfg.max_iter));
    t.meta.set("noise_delta", 0.0);
    t.header = {"approach", "er_u", "er_p", "l2_u", "l2_p"};
    for (auto [name, row] : {std::pair{"integration", integration.get()}, std::pair{"newton", newton.get()}}) {
        t.rows.push_back({name, format_number(row.report.er_u), format_number(row.report.er_p),
                          format_number(row.report.l2_u), format_number(row.report.l2_p)});
    }
    return t;
}

NoiseRun run_noise_case(const ManufacturedProblem& problem, Method method, const NoiseSpec& spec,
                        const SmoothingSpec& smoothing, const NewtonConfig& cfg) {
    ProblemData noisy = perturb(problem.data, spec);
    RunOutcome outcome = run_identification(apply_smoothing(noisy, smoothing), method, cfg);
    return NoiseRun{spec, std::move(noisy), std::move(outcome)};
}

CsvTable noise_csv(const ManufacturedProblem& problem, const NoiseRun& run, const Metadata& meta) {
    CsvTable t;
    t.meta = meta;
    t.header = {"t", "g_clean", "g_noisy", "p_exact", "p_numeric"};
    const Grid& grid = problem.data.grid();
    for (std::size_t k = 0; k < run.outcome.p.size(); ++k) {
        t.add_row({grid.t(k), problem.data.g()[k], run.noisy.g()[k], problem.exact_p[k], run.outcome.p[k]});
    }
    return t;
}

double max_p_error(std::span<const double> p, const CoefficientTrace& exact_p) {
    double err = 0.0;
    for (std::size_t k = 0; k < p.size() && k < exact_p.size(); ++k) {
        err = std::max(err, std::abs(p[k] - exact_p[k]));
    }
    return err;
}

}  // namespace invdiff
