#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invdiff/problem.hpp"

namespace invdiff {

/// Ordered key=value pairs written as the first line of every CSV:
///   # key=value;key=value
class Metadata {
public:
    void set(std::string key, std::string value);
    void set(std::string key, double value);
    std::optional<std::string> get(std::string_view key) const;
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

    std::string line() const;
    static Metadata parse(std::string_view line);

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// Scientific notation with 17 significant digits; round-trips exactly.
std::string format_number(double value);

struct CsvTable {
    Metadata meta;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(const std::vector<double>& values);
    /// Throws std::out_of_range for an unknown column.
    std::size_t column(std::string_view name) const;
    std::vector<double> numeric_column(std::string_view name) const;
};

std::string to_csv_string(const CsvTable& table);
/// Throws std::runtime_error on IO failure.
void write_csv(const std::filesystem::path& path, const CsvTable& table);
/// Lines starting with '#' before the header are metadata; the first one is parsed.
CsvTable read_csv(const std::filesystem::path& path);

/// Problem bundle layout, one file per field:
///   grid.csv      header l,T,N,M and one value row
///   phi.csv, omega.csv, omega_xx.csv   one column, N+1 rows
///   g.csv, gprime.csv                  one column, M+1 rows (gprime optional)
///   f.csv         header x_0..x_N, M+1 rows of N+1 values
void write_problem_bundle(const std::filesystem::path& dir, const ProblemData& data, const Metadata& meta);

/// Reads a bundle written by write_problem_bundle() or by hand. A missing
/// gprime.csv yields a ProblemData with gprime_estimated() == true.
/// Throws std::runtime_error on IO or format errors.
ProblemData read_problem_bundle(const std::filesystem::path& dir);

/// Optional p.csv of a bundle (one column, M+1 rows); empty when absent.
std::optional<CoefficientTrace> read_bundle_coefficient(const std::filesystem::path& dir, const Grid& grid);
void write_bundle_coefficient(const std::filesystem::path& dir, const CoefficientTrace& p, const Metadata& meta);

}  // namespace invdiff
