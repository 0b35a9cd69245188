#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specopt {

/// A one-sided pair outside the domain of A: both +inf or both -inf.
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A hypothesis violation at entry (row, col) of a specular Jacobian.
class JacobianEntryError : public HypothesisViolation {
 public:
  JacobianEntryError(std::size_t row, std::size_t col, const std::string& what)
      : HypothesisViolation("specular_jacobian entry (" + std::to_string(row) + ", " +
                            std::to_string(col) + "): " + what),
        row_(row),
        col_(col) {}

  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(const std::string& where, std::size_t expected, std::size_t got)
      : std::invalid_argument(where + ": expected dimension " + std::to_string(expected) +
                              ", got " + std::to_string(got)) {}
};

}  // namespace specopt
