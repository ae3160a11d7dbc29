#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace invdiff {

/// Dense row-major matrix; rows are time levels, columns are spatial nodes.
class RowMatrix {
public:
    RowMatrix() = default;
    RowMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) {
        check_row(r);
        return {data_.data() + r * cols_, cols_};
    }
    std::span<const double> row(std::size_t r) const {
        check_row(r);
        return {data_.data() + r * cols_, cols_};
    }

    void append_row(std::span<const double> values) {
        if (rows_ != 0 && values.size() != cols_) {
            throw std::invalid_argument("RowMatrix::append_row: width mismatch");
        }
        if (rows_ == 0) cols_ = values.size();
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    void reserve_rows(std::size_t n) { data_.reserve(n * cols_); }

    const std::vector<double>& data() const { return data_; }

    friend bool operator==(const RowMatrix&, const RowMatrix&) = default;

private:
    void check_row(std::size_t r) const {
        if (r >= rows_) throw std::out_of_range("RowMatrix: row index out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace invdiff
