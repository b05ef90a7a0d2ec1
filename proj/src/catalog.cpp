#include "hpcoh/catalog.hpp"

#include <charconv>

#include "hpcoh/errors.hpp"

namespace hpcoh {

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> all = {
      {Family::torus, "torus", "torus:N", 1, {1}, "abelian algebra C^N, all constants zero"},
      {Family::heisenberg_ext, "heisenberg-ext", "heisenberg-ext:N", 1, {1},
       "central extension of the Heisenberg algebra, real dim 2N+2, E_jj = -i/2"},
      {Family::double_heisenberg, "double-heisenberg", "double-heisenberg:M,N", 2, {1, 1},
       "real dim 2M+2N+2, E_jj = -i/2 on S1..SM, E_kk = 1/2 on T1..TN"},
      {Family::p_family, "p4n2", "p4n2:N", 1, {1},
       "P_{4N+2}, E_{2k+1,2k+1} = i/4, E_{2k+1,2k+2} = E_{2k+2,2k+1} = -1/4"},
      {Family::w_family, "w4n6", "w4n6:N", 1, {0}, "W_{4N+6}, E_{2k+1,2k+2} = -1/2"},
  };
  return all;
}

const FamilyInfo& family_info(Family f) {
  for (const auto& info : families())
    if (info.family == f) return info;
  throw Error(ErrorKind::invalid_parameters, "unknown family");
}

namespace {

std::vector<std::string> numbered(const std::string& stem, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::string entry_name(const FamilyInfo& info, const std::vector<int>& params) {
  std::string out = info.prefix + ":";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out;
}

}  // namespace

CatalogEntry build_catalog_entry(Family family, const std::vector<int>& parameters) {
  const auto& info = family_info(family);
  if (static_cast<int>(parameters.size()) != info.arity)
    throw Error(ErrorKind::invalid_parameters, info.signature + " takes " + std::to_string(info.arity) + " parameter(s)");
  for (int i = 0; i < info.arity; ++i)
    if (parameters[i] < info.minimum[i])
      throw Error(ErrorKind::invalid_parameters, info.signature + ": parameter " + std::to_string(i + 1) +
                                                     " must be at least " + std::to_string(info.minimum[i]));

  const GaussianRational half(Rational(1, 2));
  const GaussianRational quarter(Rational(1, 4));
  const GaussianRational minus_i_half(Rational(0), Rational(-1, 2));
  std::map<ConstantKey, GaussianRational> c;
  std::vector<std::string> labels;
  int n = 0;
  switch (family) {
    case Family::torus:
      n = parameters[0];
      labels = numbered("X", n);
      break;
    case Family::heisenberg_ext: {
      const int t = parameters[0];
      n = t + 1;
      labels = numbered("T", t);
      for (int j = 0; j < t; ++j) c[{j, j, t}] = minus_i_half;
      break;
    }
    case Family::double_heisenberg: {
      const int s = parameters[0];
      const int t = parameters[1];
      n = s + t + 1;
      labels = numbered("S", s);
      auto ts = numbered("T", t);
      labels.insert(labels.end(), ts.begin(), ts.end());
      for (int j = 0; j < s; ++j) c[{j, j, s + t}] = minus_i_half;
      for (int k = s; k < s + t; ++k) c[{k, k, s + t}] = half;
      break;
    }
    case Family::p_family: {
      const int t = 2 * parameters[0];
      n = t + 1;
      labels = numbered("T", t);
      for (int k = 0; k < t; k += 2) {
        c[{k, k, t}] = GaussianRational(Rational(0), Rational(1, 4));
        c[{k, k + 1, t}] = -quarter;
        c[{k + 1, k, t}] = -quarter;
      }
      break;
    }
    case Family::w_family: {
      const int t = 2 * parameters[0] + 2;
      n = t + 1;
      labels = numbered("T", t);
      for (int k = 0; k < t; k += 2) c[{k, k + 1, t}] = -half;
      break;
    }
  }
  if (family != Family::torus) labels.push_back("V");
  return {family, parameters, AlgebraSpec(entry_name(info, parameters), n, std::move(labels), std::move(c))};
}

namespace {

const FamilyInfo* find_prefix(std::string_view name) {
  auto colon = name.find(':');
  auto prefix = name.substr(0, colon);
  for (const auto& info : families())
    if (info.prefix == prefix) return &info;
  return nullptr;
}

}  // namespace

bool is_catalog_name(std::string_view name) {
  return name.find(':') != std::string_view::npos && find_prefix(name) != nullptr;
}

CatalogEntry lookup_catalog(std::string_view name) {
  const FamilyInfo* info = find_prefix(name);
  auto colon = name.find(':');
  if (!info || colon == std::string_view::npos)
    throw Error(ErrorKind::invalid_parameters, "'" + std::string(name) + "' is not a catalog name");
  std::vector<int> params;
  std::string_view rest = name.substr(colon + 1);
  while (true) {
    auto comma = rest.find(',');
    auto tok = rest.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::invalid_parameters,
                  "'" + std::string(name) + "': expected " + info->signature + " with integer parameters");
    params.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return build_catalog_entry(info->family, params);
}

}  // namespace hpcoh
