// Benchmark harness for identifying p(t) in u_t = u_xx - p(t) u + f from
// integral measurements. Every subcommand writes CSV files into --out-dir.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "invdiff/csv_io.hpp"
#include "invdiff/experiments.hpp"
#include "invdiff/forward.hpp"
#include "invdiff/metrics.hpp"

namespace fs = std::filesystem;
using namespace invdiff;

namespace {

struct ProblemOptions {
    std::string problem = "manufactured";
    std::optional<std::size_t> N;
    std::optional<std::size_t> M;
    double T = 1.0;
};

struct NewtonOptions {
    double tol = 1e-12;
    int max_iter = 50;
    std::optional<double> p_init;

    NewtonConfig config() const { return NewtonConfig{tol, max_iter, p_init}; }
};

struct NoiseOptions {
    double delta = 0.0;
    std::vector<double> deltas;
    std::uint64_t seed = 0;
    std::string kind = "relative-gaussian";
    std::size_t smooth_window = 0;
    std::size_t smooth_order = 0;

    SmoothingSpec smoothing() const { return {smooth_window, smooth_order}; }
};

struct LoadedProblem {
    ProblemData data;
    std::optional<ManufacturedProblem> manufactured;
    fs::path bundle;
};

void add_problem_flags(CLI::App* cmd, ProblemOptions& o) {
    cmd->add_option("--problem", o.problem, "'manufactured' or a problem bundle directory");
    cmd->add_option("--N", o.N, "spatial intervals (manufactured default 100)");
    cmd->add_option("--M", o.M, "time steps (manufactured default 100)");
    cmd->add_option("--T", o.T, "final time of the manufactured problem");
}

void add_newton_flags(CLI::App* cmd, NewtonOptions& o) {
    cmd->add_option("--tol", o.tol, "Newton residual tolerance");
    cmd->add_option("--max-iter", o.max_iter, "Newton iteration cap per time level");
    cmd->add_option("--p-init", o.p_init, "coefficient at t = 0 (default: reconstructed from phi)");
}

void add_noise_flags(CLI::App* cmd, NoiseOptions& o, bool many_deltas) {
    if (many_deltas) {
        cmd->add_option("--noise-delta", o.deltas, "noise levels to sweep");
    } else {
        cmd->add_option("--noise-delta", o.delta, "relative noise level on g and g'");
    }
    cmd->add_option("--seed", o.seed, "noise generator seed");
    cmd->add_option("--noise-kind", o.kind, "relative-gaussian | absolute-gaussian | relative-uniform");
    cmd->add_option("--smooth-window", o.smooth_window, "Savitzky-Golay window for g and g' (0 = off)");
    cmd->add_option("--smooth-order", o.smooth_order, "Savitzky-Golay polynomial order");
}

LoadedProblem load_problem(const ProblemOptions& o) {
    if (o.problem == "manufactured") {
        const Grid grid = make_grid(1.0, o.T, o.N.value_or(100), o.M.value_or(100));
        ManufacturedProblem mp = manufactured_problem(grid);
        ProblemData data = mp.data;
        return {std::move(data), std::move(mp), {}};
    }
    const fs::path dir(o.problem);
    ProblemData data = read_problem_bundle(dir);
    if ((o.N && *o.N != data.grid().N) || (o.M && *o.M != data.grid().M)) {
        throw std::runtime_error("--N/--M disagree with the grid stored in " + dir.string());
    }
    if (data.gprime_estimated()) {
        std::cerr << "warning: " << (dir / "gprime.csv").string()
                  << " missing; g' estimated by central differences\n";
    }
    return {std::move(data), std::nullopt, dir};
}

void print_report(const ErrorReport& r) {
    fmt::print("er_u={:.6e} er_p={:.6e} l2_u={:.6e} l2_p={:.6e}\n", r.er_u, r.er_p, r.l2_u, r.l2_p);
}

int cmd_forward(const ProblemOptions& po, const fs::path& out_dir) {
    const LoadedProblem lp = load_problem(po);
    const Grid& grid = lp.data.grid();
    CoefficientTrace p;
    if (lp.manufactured) {
        p = lp.manufactured->exact_p;
    } else if (auto stored = read_bundle_coefficient(lp.bundle, grid)) {
        p = *stored;
    } else {
        throw std::runtime_error("forward needs p.csv in the problem bundle");
    }
    const Field u = solve_forward(lp.data, p);

    const NoiseSpec no_noise;
    Metadata meta = run_metadata(grid, "forward", nullptr, no_noise, {});
    meta.set("problem", po.problem);
    fs::create_directories(out_dir);
    const Field* exact = lp.manufactured ? &lp.manufactured->exact_u : nullptr;
    write_csv(out_dir / "u_surface.csv", u_surface_csv(grid, u, exact, meta));
    if (lp.manufactured) {
        const ErrorReport r = error_report(u, p, lp.manufactured->exact_u, p, grid);
        write_csv(out_dir / "report.csv", report_csv("forward", grid, r, true, meta));
        print_report(r);
    }
    return 0;
}

int cmd_invert(const ProblemOptions& po, const NewtonOptions& no, const NoiseOptions& nz, const std::string& method_name,
               const fs::path& out_dir) {
    const Method method = parse_method(method_name);
    const NewtonConfig cfg = no.config();
    cfg.validate();
    const NoiseSpec noise{nz.delta, nz.seed, parse_noise_kind(nz.kind)};

    const LoadedProblem lp = load_problem(po);
    const Grid& grid = lp.data.grid();
    const ProblemData noisy = perturb(lp.data, noise);
    const RunOutcome outcome = run_identification(apply_smoothing(noisy, nz.smoothing()), method, cfg);

    Metadata meta = run_metadata(grid, to_string(method), method == Method::newton ? &cfg : nullptr, noise,
                                 nz.smoothing());
    meta.set("problem", po.problem);
    fs::create_directories(out_dir);
    const CoefficientTrace* exact_p = lp.manufactured ? &lp.manufactured->exact_p : nullptr;
    const Field* exact_u = lp.manufactured ? &lp.manufactured->exact_u : nullptr;
    write_csv(out_dir / "p_trace.csv", p_trace_csv(grid, outcome.p, exact_p, meta));
    write_csv(out_dir / "u_surface.csv", u_surface_csv(grid, outcome.u, exact_u, meta));
    if (method == Method::newton) write_csv(out_dir / "newton_log.csv", newton_log_csv(outcome.log, meta));

    if (!outcome.converged) {
        std::cerr << "error: " << outcome.failure << "\n"
                  << "partial trace with " << outcome.p.size() << " levels written to "
                  << (out_dir / "p_trace.csv").string() << "\n";
        return 2;
    }
    if (lp.manufactured) {
        const ErrorReport r = error_report(outcome.u, CoefficientTrace(outcome.p), lp.manufactured->exact_u,
                                           lp.manufactured->exact_p, grid);
        write_csv(out_dir / "report.csv", report_csv(to_string(method), grid, r, true, meta));
        print_report(r);
    }
    return 0;
}

int cmd_tables(const NewtonOptions& no, const fs::path& out_dir) {
    const NewtonConfig cfg = no.config();
    cfg.validate();
    fs::create_directories(out_dir);

    std::vector<std::future<std::vector<TableRow>>> jobs;
    for (int table = 1; table <= 4; ++table) {
        jobs.push_back(std::async(std::launch::async, run_table, table, cfg));
    }
    auto comparison = std::async(std::launch::async, comparison_csv, cfg);

    bool all_converged = true;
    for (int table = 1; table <= 4; ++table) {
        const std::vector<TableRow> rows = jobs[table - 1].get();
        write_csv(out_dir / fmt::format("table{}.csv", table), table_csv(table, rows, cfg));
        fmt::print("table {} ({})\n", table, to_string(table_method(table)));
        for (const auto& r : rows) {
            if (!r.converged) {
                all_converged = false;
                std::cerr << "error: " << r.failure << "\n";
            }
            fmt::print("  h={:.6g} tau={:.6g} er_u={:.3e} er_p={:.3e} l2_u={:.3e} l2_p={:.3e}\n", r.h, r.tau,
                       r.report.er_u, r.report.er_p, r.report.l2_u, r.report.l2_p);
        }
    }
    write_csv(out_dir / "table5_classical.csv", comparison.get());
    return all_converged ? 0 : 2;
}

int cmd_noise_sweep(const ProblemOptions& po, const NewtonOptions& no, NoiseOptions nz, const std::string& method_name,
                    bool allow_unstable, const fs::path& out_dir) {
    const Method method = parse_method(method_name);
    if (method == Method::newton && !allow_unstable) {
        throw std::runtime_error("noise-sweep with --method newton requires --allow-unstable");
    }
    if (po.problem != "manufactured") {
        throw std::runtime_error("noise-sweep runs on the manufactured problem only");
    }
    const NewtonConfig cfg = no.config();
    cfg.validate();
    if (nz.deltas.empty()) nz.deltas = {0.0, 0.01, 0.03, 0.05};
    const NoiseKind kind = parse_noise_kind(nz.kind);

    const LoadedProblem lp = load_problem(po);
    const ManufacturedProblem& mp = *lp.manufactured;
    std::vector<std::future<NoiseRun>> jobs;
    for (double delta : nz.deltas) {
        const NoiseSpec spec{delta, nz.seed, kind};
        jobs.push_back(std::async(std::launch::async, run_noise_case, std::cref(mp), method, spec, nz.smoothing(), cfg));
    }
    fs::create_directories(out_dir);
    bool all_converged = true;
    for (auto& job : jobs) {
        const NoiseRun run = job.get();
        Metadata meta = run_metadata(mp.data.grid(), to_string(method), method == Method::newton ? &cfg : nullptr,
                                     run.spec, nz.smoothing());
        meta.set("problem", "manufactured");
        const fs::path file = out_dir / fmt::format("noise_{}_delta_{}.csv", to_string(method), run.spec.delta);
        write_csv(file, noise_csv(mp, run, meta));
        const double err = max_p_error(run.outcome.p, mp.exact_p);
        if (run.outcome.converged) {
            fmt::print("delta={} max |p - p_exact| = {:.6e}\n", run.spec.delta, err);
        } else {
            all_converged = false;
            fmt::print("delta={} FAILED after {} levels (max |p - p_exact| so far {:.6e})\n", run.spec.delta,
                       run.outcome.p.size(), err);
            std::cerr << "error: " << run.outcome.failure << "\n";
        }
    }
    return all_converged ? 0 : 2;
}

int cmd_bundle(const ProblemOptions& po, const NoiseOptions& nz, const fs::path& out_dir) {
    if (po.problem != "manufactured") throw std::runtime_error("bundle exports the manufactured problem only");
    const NoiseSpec noise{nz.delta, nz.seed, parse_noise_kind(nz.kind)};
    const LoadedProblem lp = load_problem(po);
    const ProblemData data = apply_smoothing(perturb(lp.data, noise), nz.smoothing());
    Metadata meta = run_metadata(data.grid(), "bundle", nullptr, noise, nz.smoothing());
    meta.set("problem", "manufactured");
    write_problem_bundle(out_dir, data, meta);
    write_bundle_coefficient(out_dir, lp.manufactured->exact_p, meta);
    fmt::print("bundle written to {}\n", out_dir.string());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invdiff: identification of a time-dependent potential from integral data"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    std::string out_dir = ".";
    ProblemOptions problem;
    NewtonOptions newton;
    NoiseOptions noise;
    std::string method = "integration";
    bool allow_unstable = false;

    auto* forward = app.add_subcommand("forward", "solve the direct problem with a known coefficient");
    add_problem_flags(forward, problem);
    forward->add_option("--out-dir", out_dir, "output directory");

    auto* invert = app.add_subcommand("invert", "identify p(t) with one method");
    add_problem_flags(invert, problem);
    add_newton_flags(invert, newton);
    add_noise_flags(invert, noise, false);
    invert->add_option("--method", method, "integration | newton");
    invert->add_option("--out-dir", out_dir, "output directory");

    auto* tables = app.add_subcommand("tables", "regenerate the classical error tables");
    add_newton_flags(tables, newton);
    tables->add_option("--out-dir", out_dir, "output directory");

    auto* sweep = app.add_subcommand("noise-sweep", "identify p(t) from noisy data at several noise levels");
    add_problem_flags(sweep, problem);
    add_newton_flags(sweep, newton);
    add_noise_flags(sweep, noise, true);
    sweep->add_option("--method", method, "integration | newton");
    sweep->add_flag("--allow-unstable", allow_unstable, "permit the Newton method on noisy data");
    sweep->add_option("--out-dir", out_dir, "output directory");

    auto* bundle = app.add_subcommand("bundle", "export the manufactured problem as a CSV bundle");
    add_problem_flags(bundle, problem);
    add_noise_flags(bundle, noise, false);
    bundle->add_option("--out-dir", out_dir, "bundle directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*forward) return cmd_forward(problem, out_dir);
        if (*invert) return cmd_invert(problem, newton, noise, method, out_dir);
        if (*tables) return cmd_tables(newton, out_dir);
        if (*sweep) return cmd_noise_sweep(problem, newton, noise, method, allow_unstable, out_dir);
        if (*bundle) return cmd_bundle(problem, noise, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
