#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hpcoh/lie_algebra.hpp"

namespace hpcoh {

enum class Family { torus, heisenberg_ext, double_heisenberg, p_family, w_family };

struct FamilyInfo {
  Family family;
  std::string prefix;     // "w4n6"
  std::string signature;  // "w4n6:N"
  int arity;              // number of parameters
  std::vector<int> minimum;
  std::string description;
};

const std::vector<FamilyInfo>& families();
const FamilyInfo& family_info(Family f);

struct CatalogEntry {
  Family family;
  std::vector<int> parameters;
  AlgebraSpec spec;
};

// Throws Error(invalid_parameters) for a wrong parameter count or values
// below the family minimum.
CatalogEntry build_catalog_entry(Family family, const std::vector<int>& parameters);

// "w4n6:0", "double-heisenberg:2,1", ... Returns false when the prefix is not
// a family name; throws Error(invalid_parameters) when it is but the
// parameters are malformed.
bool is_catalog_name(std::string_view name);
CatalogEntry lookup_catalog(std::string_view name);

// Real dimension of the algebra, 2n.
inline int real_dimension(const AlgebraSpec& spec) { return 2 * spec.n(); }

}  // namespace hpcoh
