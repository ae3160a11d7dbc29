#include <gtest/gtest.h>

#include <cmath>

#include "invdiff/errors.hpp"
#include "invdiff/integration.hpp"
#include "invdiff/metrics.hpp"
#include "oracles.hpp"

using namespace invdiff;

namespace {

ProblemData zero_problem(std::size_t N, std::size_t M, std::vector<double> g) {
    const Grid grid = make_grid(1.0, 1.0, N, M);
    std::vector<double> omega(N + 1), omega_xx(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
        omega[i] = manufactured::omega(grid.x(i));
        omega_xx[i] = manufactured::omega_xx(grid.x(i));
    }
    omega.front() = omega.back() = omega_xx.front() = omega_xx.back() = 0.0;
    return ProblemData(grid, RowMatrix(M + 1, N + 1, 0.0), std::vector<double>(N + 1, 0.0), omega, omega_xx,
                       std::move(g), std::vector<double>(M + 1, 0.0));
}

bool within(double value, double target, double rel) { return std::abs(value - target) <= rel * target; }

}  // namespace

TEST(ReconstructP, ExactRowsRecoverCoefficient) {
    const ManufacturedProblem mp = manufactured_problem(make_grid(1.0, 1.0, 100, 10));
    EXPECT_NEAR(reconstruct_p(mp.exact_u.row(0), mp.data.f_row(0), mp.data, 0), 1.0, 5e-3);
    EXPECT_NEAR(reconstruct_p(mp.exact_u.row(10), mp.data.f_row(10), mp.data, 10), std::exp(-1.0), 5e-3);
}

TEST(ReconstructP, VanishingNumerator) {
    const ProblemData data = zero_problem(10, 4, std::vector<double>(5, 1.0));
    const std::vector<double> zero(11, 0.0);
    EXPECT_EQ(reconstruct_p(zero, zero, data, 2), 0.0);
}

TEST(ReconstructP, GuardsTinyMeasurement) {
    const ProblemData data = zero_problem(10, 4, {1.0, 1.0, 1e-15, 1.0, 1.0});
    const std::vector<double> zero(11, 0.0);
    EXPECT_THROW(reconstruct_p(zero, zero, data, 2), std::domain_error);
    EXPECT_NO_THROW(reconstruct_p(zero, zero, data, 1));
}

TEST(RunIntegration, MatchesScalarRecurrence) {
    const ManufacturedProblem mp = manufactured_problem(make_grid(1.0, 1.0, 100, 200));
    const IntegrationResult r = run_integration(mp.data);
    const oracle::ScalarRun ref = oracle::integration_run(100, 200);
    ASSERT_EQ(r.p.size(), 201u);
    for (std::size_t k = 0; k <= 200; ++k) {
        EXPECT_NEAR(r.p[k], ref.p[k], 1e-9) << "level " << k;
        EXPECT_NEAR(r.u(k, 50), ref.amplitude[k], 1e-10) << "level " << k;
    }
}

TEST(RunIntegration, FirstRowOfVaryingTauTable) {
    const ManufacturedProblem mp = manufactured_problem(make_grid(1.0, 1.0, 100, 200));
    const IntegrationResult r = run_integration(mp.data);
    const ErrorReport e = error_report(r.u, r.p, mp.exact_u, mp.exact_p, mp.data.grid());
    EXPECT_TRUE(within(e.er_u, 2.76e-3, 0.10)) << e.er_u;
    EXPECT_TRUE(within(e.er_p, 1.05e-2, 0.10)) << e.er_p;
}

TEST(RunIntegration, FirstRowOfEqualStepTable) {
    const ManufacturedProblem mp = manufactured_problem(make_grid(1.0, 1.0, 100, 100));
    const IntegrationResult r = run_integration(mp.data);
    const ErrorReport e = error_report(r.u, r.p, mp.exact_u, mp.exact_p, mp.data.grid());
    EXPECT_TRUE(within(e.er_u, 6.65e-3, 0.10)) << e.er_u;
    EXPECT_TRUE(within(e.er_p, 2.44e-2, 0.10)) << e.er_p;
}

TEST(RunIntegration, ZeroProblemStaysZero) {
    const IntegrationResult r = run_integration(zero_problem(20, 10, std::vector<double>(11, 1.0)));
    for (double v : r.u.values().data()) EXPECT_EQ(v, 0.0);
    for (double v : r.p.values()) EXPECT_EQ(v, 0.0);
}

TEST(RunIntegration, FailureCarriesPartialTrace) {
    std::vector<double> g(11, 1.0);
    g[4] = 1e-15;
    try {
        run_integration(zero_problem(20, 10, g));
        FAIL() << "expected IdentificationError";
    } catch (const IdentificationError& e) {
        EXPECT_EQ(e.failed_level(), 4u);
        EXPECT_EQ(e.partial_p().size(), 4u);
        EXPECT_EQ(e.partial_u().rows(), 4u);
    }
}
