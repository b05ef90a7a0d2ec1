#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hpcoh/exterior.hpp"
#include "hpcoh/lie_algebra.hpp"

namespace hpcoh {

// Names of the 2n generators of L: the spec's vector labels, then forms
// "w1_bar" .. "wn_bar" (1-based). When c^{1,0} is spanned by a single basis
// vector its dual form is also called "rho_bar", and printed that way.
class Labels {
 public:
  Labels(const AlgebraSpec& spec, int center_index);

  std::optional<int> generator(std::string_view name) const;
  const std::string& name(int g) const { return names_.at(g); }

  std::string format_monomial(Mask m) const;
  // Canonical rendering, e.g. "V^T1 - (1/2)T2^w1_bar"; "0" for zero.
  std::string format(const GradedElement& x) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<std::string, int>> aliases_;
};

std::string format_coefficient(const GaussianRational& c);

// Grammar:
//   expr  := ["-"] term (("+" | "-") term)*
//   term  := COEFF? ["*"] label ("^" label)*  |  COEFF
//   COEFF := rational | "(" rational ")" | "(" rational ("+"|"-") rational "i" ")"
// "^" is the wedge product, taken in the written order. Unicode minus is
// accepted. Throws Error(parse_error | unknown_label | malformed_rational).
GradedElement parse_expression(std::string_view text, const Labels& labels);

}  // namespace hpcoh
