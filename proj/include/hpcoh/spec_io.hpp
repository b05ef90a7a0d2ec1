#pragma once

#include <string>
#include <string_view>

#include "hpcoh/lie_algebra.hpp"

namespace hpcoh {

// Spec files are JSON:
//   {"name": str, "n": int, "labels": [str],
//    "constants": [{"k": int, "j": int, "m": int, "re": "p/q", "im": "p/q"}]}
// with 1-based indices; each constant is A^m_{kj}. "re"/"im" default to "0".
// Throws Error(parse_error | unknown_field | duplicate_constant |
// malformed_rational | index_out_of_range | invalid_parameters); messages name
// the offending location, e.g. "constants[2].im".
AlgebraSpec parse_spec(std::string_view text);

// Deterministic output: constants sorted by (k, j, m), zero parts omitted.
std::string emit_spec(const AlgebraSpec& spec);

AlgebraSpec load_spec_file(const std::string& path);

}  // namespace hpcoh
