#include "hpcoh/errors.hpp"

namespace hpcoh {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::division_by_zero: return "division_by_zero";
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::index_out_of_range: return "index_out_of_range";
    case ErrorKind::jacobi_violation: return "jacobi_violation";
    case ErrorKind::not_nilpotent: return "not_nilpotent";
    case ErrorKind::center_dimension_not_one: return "center_dimension_not_one";
    case ErrorKind::center_not_coordinate: return "center_not_coordinate";
    case ErrorKind::not_bidegree_2_0: return "not_bidegree_2_0";
    case ErrorKind::not_holomorphic: return "not_holomorphic";
    case ErrorKind::not_poisson: return "not_poisson";
    case ErrorKind::not_bidegree_0_2: return "not_bidegree_0_2";
    case ErrorKind::not_integrable: return "not_integrable";
    case ErrorKind::t_not_in_layer: return "t_not_in_layer";
    case ErrorKind::invalid_parameters: return "invalid_parameters";
    case ErrorKind::malformed_rational: return "malformed_rational";
    case ErrorKind::unknown_field: return "unknown_field";
    case ErrorKind::duplicate_constant: return "duplicate_constant";
    case ErrorKind::parse_error: return "parse_error";
    case ErrorKind::unknown_label: return "unknown_label";
    case ErrorKind::too_large: return "too_large";
  }
  return "unknown";
}

}  // namespace hpcoh
