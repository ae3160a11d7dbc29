#include <gtest/gtest.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

#include "invdiff/csv_io.hpp"
#include "invdiff/problem.hpp"

using namespace invdiff;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("invdiff_csv_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

double parse(const std::string& s) {
    double v = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

}  // namespace

TEST(MetadataLine, RoundTrip) {
    Metadata m;
    m.set("method", "newton");
    m.set("tol", 1e-12);
    m.set("N", "100");
    m.set("method", "integration");
    EXPECT_EQ(m.line(), "# method=integration;tol=1e-12;N=100");
    const Metadata back = Metadata::parse(m.line());
    EXPECT_EQ(back.entries(), m.entries());
    EXPECT_EQ(back.get("tol"), "1e-12");
    EXPECT_FALSE(back.get("seed").has_value());
}

TEST(FormatNumber, RoundTripsEveryDouble) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-300, 300);
    for (int trial = 0; trial < 5000; ++trial) {
        const double v = std::ldexp(mant(rng), expo(rng));
        ASSERT_EQ(parse(format_number(v)), v) << format_number(v);
    }
    EXPECT_EQ(format_number(0.5), "5.0000000000000000e-01");
}

TEST(CsvFile, WriteReadRoundTrip) {
    const fs::path dir = scratch("table");
    CsvTable t;
    t.meta.set("artifact", "invdiff");
    t.header = {"t", "p"};
    t.add_row({0.0, 1.0});
    t.add_row({0.5, std::exp(-0.5)});
    write_csv(dir / "t.csv", t);
    const CsvTable back = read_csv(dir / "t.csv");
    EXPECT_EQ(back.header, t.header);
    EXPECT_EQ(back.rows, t.rows);
    EXPECT_EQ(back.meta.entries(), t.meta.entries());
    EXPECT_EQ(back.numeric_column("p")[1], std::exp(-0.5));
    EXPECT_THROW(back.column("q"), std::out_of_range);
    fs::remove_all(dir);
}

TEST(CsvFile, IoErrors) {
    EXPECT_THROW(read_csv("/nonexistent/dir/x.csv"), std::runtime_error);
    EXPECT_THROW(write_csv("/nonexistent/dir/x.csv", CsvTable{}), std::runtime_error);
    const fs::path dir = scratch("bad");
    std::ofstream(dir / "bad.csv") << "# a=1\nv\nnot-a-number\n";
    EXPECT_THROW(read_csv(dir / "bad.csv").numeric_column("v"), std::runtime_error);
    fs::remove_all(dir);
}

TEST(ProblemBundle, RoundTripIsExact) {
    const fs::path dir = scratch("bundle");
    const ManufacturedProblem mp = manufactured_problem(make_grid(1.0, 0.7, 12, 9));
    Metadata meta;
    meta.set("problem", "manufactured");
    write_problem_bundle(dir, mp.data, meta);
    write_bundle_coefficient(dir, mp.exact_p, meta);

    const ProblemData back = read_problem_bundle(dir);
    EXPECT_EQ(back.grid(), mp.data.grid());
    EXPECT_EQ(back.f(), mp.data.f());
    EXPECT_TRUE(std::equal(back.phi().begin(), back.phi().end(), mp.data.phi().begin()));
    EXPECT_TRUE(std::equal(back.omega_xx().begin(), back.omega_xx().end(), mp.data.omega_xx().begin()));
    EXPECT_TRUE(std::equal(back.g().begin(), back.g().end(), mp.data.g().begin()));
    EXPECT_TRUE(std::equal(back.gprime().begin(), back.gprime().end(), mp.data.gprime().begin()));
    EXPECT_FALSE(back.gprime_estimated());
    EXPECT_EQ(read_bundle_coefficient(dir, back.grid()), mp.exact_p);
    EXPECT_EQ(read_csv(dir / "f.csv").header.back(), "x_12");
    fs::remove_all(dir);
}

TEST(ProblemBundle, MissingDerivativeFallsBackToDifferences) {
    const fs::path dir = scratch("nogprime");
    const ManufacturedProblem mp = manufactured_problem(make_grid(1.0, 1.0, 10, 50));
    write_problem_bundle(dir, mp.data, Metadata{});
    fs::remove(dir / "gprime.csv");
    const ProblemData back = read_problem_bundle(dir);
    EXPECT_TRUE(back.gprime_estimated());
    for (std::size_t k = 0; k <= 50; ++k) EXPECT_NEAR(back.gprime()[k], mp.data.gprime()[k], 1e-3);
    EXPECT_FALSE(read_bundle_coefficient(dir, back.grid()).has_value());
    fs::remove_all(dir);
}

TEST(ProblemBundle, ReportsBrokenBundles) {
    EXPECT_THROW(read_problem_bundle("/nonexistent/bundle"), std::runtime_error);
    const fs::path dir = scratch("broken");
    const ManufacturedProblem mp = manufactured_problem(make_grid(1.0, 1.0, 6, 4));
    write_problem_bundle(dir, mp.data, Metadata{});
    std::ofstream(dir / "g.csv") << "g\n1\n2\n";
    EXPECT_THROW(read_problem_bundle(dir), std::runtime_error);
    std::ofstream(dir / "grid.csv") << "l,T,N,M\n1,1,1,4\n";
    EXPECT_THROW(read_problem_bundle(dir), std::runtime_error);
    fs::remove(dir / "f.csv");
    EXPECT_THROW(read_problem_bundle(dir), std::runtime_error);
    fs::remove_all(dir);
}
