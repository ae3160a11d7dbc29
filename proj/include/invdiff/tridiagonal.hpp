#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace invdiff {

/// Linear system with three nonzero diagonals.
/// sub[i] couples row i+1 to column i, sup[i] couples row i to column i+1.
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> sup;
    std::vector<double> rhs;

    std::size_t order() const { return diag.size(); }

    /// Throws std::invalid_argument if the vector lengths are inconsistent.
    void check_shape() const;
};

class ZeroPivotError : public std::runtime_error {
public:
    explicit ZeroPivotError(std::size_t row);
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

/// Thomas algorithm (forward elimination, back substitution), no pivoting.
/// Throws ZeroPivotError naming the first row whose pivot is zero or not finite.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

}  // namespace invdiff
