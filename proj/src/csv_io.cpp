#include "invdiff/csv_io.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace invdiff {

void Metadata::set(std::string key, std::string value) {
    for (auto& [k, v] : entries_) {
        if (k == key) {
            v = std::move(value);
            return;
        }
    }
    entries_.emplace_back(std::move(key), std::move(value));
}

void Metadata::set(std::string key, double value) { set(std::move(key), fmt::format("{}", value)); }

std::optional<std::string> Metadata::get(std::string_view key) const {
    for (const auto& [k, v] : entries_) {
        if (k == key) return v;
    }
    return std::nullopt;
}

std::string Metadata::line() const {
    std::string out = "# ";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) out += ';';
        out += entries_[i].first;
        out += '=';
        out += entries_[i].second;
    }
    return out;
}

Metadata Metadata::parse(std::string_view line) {
    Metadata meta;
    const std::string text(line);
    std::size_t pos = text.find_first_not_of("# ");
    while (pos != std::string::npos && pos < text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        const std::string item = text.substr(pos, end - pos);
        const std::size_t eq = item.find('=');
        if (eq != std::string::npos) meta.set(item.substr(0, eq), item.substr(eq + 1));
        pos = end + 1;
    }
    return meta;
}

std::string format_number(double value) { return fmt::format("{:.16e}", value); }

void CsvTable::add_row(const std::vector<double>& values) {
    std::vector<std::string> row;
    row.reserve(values.size());
    for (double v : values) row.push_back(format_number(v));
    rows.push_back(std::move(row));
}

std::size_t CsvTable::column(std::string_view name) const {
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == name) return c;
    }
    throw std::out_of_range("CSV has no column '" + std::string(name) + "'");
}

namespace {

double parse_double(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::runtime_error("CSV: cannot parse number '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> fields;
    while (true) {
        const std::size_t comma = line.find(',');
        fields.emplace_back(line.substr(0, comma));
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return fields;
}

}  // namespace

std::vector<double> CsvTable::numeric_column(std::string_view name) const {
    const std::size_t c = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (c >= row.size()) throw std::runtime_error("CSV: short row in column '" + std::string(name) + "'");
        out.push_back(parse_double(row[c]));
    }
    return out;
}

std::string to_csv_string(const CsvTable& table) {
    std::string out = table.meta.line();
    out += '\n';
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c > 0) out += ',';
        out += table.header[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << to_csv_string(table);
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    CsvTable table;
    std::string line;
    bool have_meta = false;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!have_header && line.front() == '#') {
            if (!have_meta) table.meta = Metadata::parse(line);
            have_meta = true;
            continue;
        }
        if (!have_header) {
            table.header = split(line);
            have_header = true;
            continue;
        }
        table.rows.push_back(split(line));
    }
    if (!have_header) throw std::runtime_error("'" + path.string() + "' has no header row");
    return table;
}

namespace {

CsvTable column_table(const Metadata& meta, std::string name, std::span<const double> values) {
    CsvTable t;
    t.meta = meta;
    t.header = {std::move(name)};
    for (double v : values) t.rows.push_back({format_number(v)});
    return t;
}

std::vector<double> read_column(const std::filesystem::path& path, std::size_t expected) {
    const CsvTable t = read_csv(path);
    std::vector<double> values;
    values.reserve(t.rows.size());
    for (const auto& row : t.rows) {
        if (row.size() != 1) throw std::runtime_error("'" + path.string() + "' must have exactly one column");
        values.push_back(parse_double(row[0]));
    }
    if (values.size() != expected) {
        throw std::runtime_error("'" + path.string() + "' has " + std::to_string(values.size()) +
                                 " values, expected " + std::to_string(expected));
    }
    return values;
}

std::size_t parse_count(const std::string& text, std::string_view what) {
    const double v = parse_double(text);
    if (!(v >= 0.0) || v != std::floor(v)) {
        throw std::runtime_error("grid.csv: " + std::string(what) + " must be a non-negative integer");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

void write_problem_bundle(const std::filesystem::path& dir, const ProblemData& data, const Metadata& meta) {
    std::filesystem::create_directories(dir);
    const Grid& grid = data.grid();

    CsvTable g;
    g.meta = meta;
    g.header = {"l", "T", "N", "M"};
    g.rows.push_back({format_number(grid.l), format_number(grid.T), std::to_string(grid.N), std::to_string(grid.M)});
    write_csv(dir / "grid.csv", g);

    write_csv(dir / "phi.csv", column_table(meta, "phi", data.phi()));
    write_csv(dir / "omega.csv", column_table(meta, "omega", data.omega()));
    write_csv(dir / "omega_xx.csv", column_table(meta, "omega_xx", data.omega_xx()));
    write_csv(dir / "g.csv", column_table(meta, "g", data.g()));
    write_csv(dir / "gprime.csv", column_table(meta, "gprime", data.gprime()));

    CsvTable f;
    f.meta = meta;
    for (std::size_t i = 0; i <= grid.N; ++i) f.header.push_back("x_" + std::to_string(i));
    for (std::size_t k = 0; k <= grid.M; ++k) {
        const auto row = data.f_row(k);
        f.add_row(std::vector<double>(row.begin(), row.end()));
    }
    write_csv(dir / "f.csv", f);
}

ProblemData read_problem_bundle(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw std::runtime_error("problem bundle '" + dir.string() + "' is not a directory");
    }
    const CsvTable gt = read_csv(dir / "grid.csv");
    if (gt.rows.size() != 1) throw std::runtime_error("grid.csv must hold exactly one value row");
    const auto& row = gt.rows.front();
    auto field = [&](std::string_view name) -> const std::string& {
        const std::size_t c = gt.column(name);
        if (c >= row.size()) throw std::runtime_error("grid.csv: missing value for " + std::string(name));
        return row[c];
    };
    Grid grid;
    try {
        grid = make_grid(parse_double(field("l")), parse_double(field("T")), parse_count(field("N"), "N"),
                         parse_count(field("M"), "M"));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("grid.csv: ") + e.what());
    }

    const std::size_t nx = grid.space_nodes();
    const std::size_t nt = grid.time_levels();
    const CsvTable ft = read_csv(dir / "f.csv");
    if (ft.rows.size() != nt) throw std::runtime_error("f.csv must hold M+1 rows");
    RowMatrix f(nt, nx);
    for (std::size_t k = 0; k < nt; ++k) {
        if (ft.rows[k].size() != nx) throw std::runtime_error("f.csv rows must hold N+1 values");
        for (std::size_t i = 0; i < nx; ++i) f(k, i) = parse_double(ft.rows[k][i]);
    }

    std::optional<std::vector<double>> gprime;
    if (std::filesystem::exists(dir / "gprime.csv")) gprime = read_column(dir / "gprime.csv", nt);

    try {
        return ProblemData(grid, std::move(f), read_column(dir / "phi.csv", nx), read_column(dir / "omega.csv", nx),
                           read_column(dir / "omega_xx.csv", nx), read_column(dir / "g.csv", nt), std::move(gprime));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("invalid problem bundle: ") + e.what());
    }
}

std::optional<CoefficientTrace> read_bundle_coefficient(const std::filesystem::path& dir, const Grid& grid) {
    if (!std::filesystem::exists(dir / "p.csv")) return std::nullopt;
    try {
        return CoefficientTrace(read_column(dir / "p.csv", grid.time_levels()));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("p.csv: ") + e.what());
    }
}

void write_bundle_coefficient(const std::filesystem::path& dir, const CoefficientTrace& p, const Metadata& meta) {
    std::filesystem::create_directories(dir);
    write_csv(dir / "p.csv", column_table(meta, "p", p.values()));
}

}  // namespace invdiff
