#include "invdiff/tridiagonal.hpp"

#include <cmath>

namespace invdiff {

void TridiagonalSystem::check_shape() const {
    const std::size_t n = diag.size();
    if (n == 0) throw std::invalid_argument("TridiagonalSystem: empty system");
    if (sub.size() != n - 1 || sup.size() != n - 1 || rhs.size() != n) {
        throw std::invalid_argument("TridiagonalSystem: inconsistent diagonal lengths for order " +
                                    std::to_string(n));
    }
}

ZeroPivotError::ZeroPivotError(std::size_t row)
    : std::runtime_error("thomas_solve: zero pivot at row " + std::to_string(row)), row_(row) {}

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    sys.check_shape();
    const std::size_t n = sys.order();
    std::vector<double> c(n, 0.0);  // modified super-diagonal
    std::vector<double> x(n);

    double pivot = sys.diag[0];
    if (pivot == 0.0 || !std::isfinite(pivot)) throw ZeroPivotError(0);
    if (n > 1) c[0] = sys.sup[0] / pivot;
    x[0] = sys.rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = sys.diag[i] - sys.sub[i - 1] * c[i - 1];
        if (pivot == 0.0 || !std::isfinite(pivot)) throw ZeroPivotError(i);
        if (i + 1 < n) c[i] = sys.sup[i] / pivot;
        x[i] = (sys.rhs[i] - sys.sub[i - 1] * x[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] -= c[i] * x[i + 1];
    }
    return x;
}

}  // namespace invdiff
