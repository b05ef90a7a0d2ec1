#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hpcoh {

enum class ErrorKind {
  division_by_zero,
  dimension_mismatch,
  index_out_of_range,
  jacobi_violation,
  not_nilpotent,
  center_dimension_not_one,
  center_not_coordinate,
  not_bidegree_2_0,
  not_holomorphic,
  not_poisson,
  not_bidegree_0_2,
  not_integrable,
  t_not_in_layer,
  invalid_parameters,
  malformed_rational,
  unknown_field,
  duplicate_constant,
  parse_error,
  unknown_label,
  too_large,
};

std::string_view to_string(ErrorKind kind);

// Invalid input or an unmet precondition. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// A computed result contradicts a proven identity (an implementation bug,
// never a property of the input). The CLI maps these to exit code 2.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what)
      : std::logic_error("internal consistency failure: " + what) {}
};

}  // namespace hpcoh
