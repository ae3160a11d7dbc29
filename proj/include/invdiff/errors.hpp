#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "invdiff/matrix.hpp"

namespace invdiff {

/// An identifier stopped before reaching t = T.
///
/// Carries everything computed up to the failure: rows 0..failed_level-1 of
/// the field and the matching entries of the coefficient trace.
class IdentificationError : public std::runtime_error {
public:
    IdentificationError(const std::string& what, std::size_t failed_level, RowMatrix partial_u,
                        std::vector<double> partial_p)
        : std::runtime_error(what),
          failed_level_(failed_level),
          partial_u_(std::move(partial_u)),
          partial_p_(std::move(partial_p)) {}

    /// Time level that could not be computed.
    std::size_t failed_level() const { return failed_level_; }
    const RowMatrix& partial_u() const { return partial_u_; }
    const std::vector<double>& partial_p() const { return partial_p_; }

private:
    std::size_t failed_level_;
    RowMatrix partial_u_;
    std::vector<double> partial_p_;
};

}  // namespace invdiff
