#include "hpcoh/spec_io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hpcoh/errors.hpp"

namespace hpcoh {

using nlohmann::ordered_json;

namespace {

void check_fields(const ordered_json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw Error(ErrorKind::unknown_field, "'" + key + "' at " + where);
}

const ordered_json& require(const ordered_json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorKind::parse_error, "missing field '" + key + "' at " + where);
  return *it;
}

int require_int(const ordered_json& obj, const std::string& key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_number_integer()) throw Error(ErrorKind::parse_error, where + "." + key + " must be an integer");
  return v.get<int>();
}

Rational rational_field(const ordered_json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return Rational(0);
  if (!it->is_string())
    throw Error(ErrorKind::malformed_rational, where + "." + key + " must be a string \"p/q\"");
  auto r = Rational::parse(it->get<std::string>());
  if (!r) throw Error(ErrorKind::malformed_rational, "'" + it->get<std::string>() + "' at " + where + "." + key);
  return *r;
}

void check_labels(const std::vector<std::string>& labels) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  static const std::regex reserved("rho_bar|w[0-9]+_bar");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& l = labels[i];
    const std::string where = "labels[" + std::to_string(i) + "]";
    if (!std::regex_match(l, ident)) throw Error(ErrorKind::invalid_parameters, "'" + l + "' at " + where + " is not an identifier");
    if (std::regex_match(l, reserved)) throw Error(ErrorKind::invalid_parameters, "'" + l + "' at " + where + " is reserved for forms");
    if (!seen.insert(l).second) throw Error(ErrorKind::invalid_parameters, "duplicate label '" + l + "' at " + where);
  }
}

}  // namespace

AlgebraSpec parse_spec(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse_error, std::string("invalid JSON at byte ") + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw Error(ErrorKind::parse_error, "top level must be an object");
  check_fields(doc, {"name", "n", "labels", "constants"}, "top level");

  const auto& name = require(doc, "name", "top level");
  if (!name.is_string()) throw Error(ErrorKind::parse_error, "name must be a string");
  const int n = require_int(doc, "n", "top level");

  std::vector<std::string> labels;
  const auto& jl = require(doc, "labels", "top level");
  if (!jl.is_array()) throw Error(ErrorKind::parse_error, "labels must be an array");
  for (std::size_t i = 0; i < jl.size(); ++i) {
    if (!jl[i].is_string()) throw Error(ErrorKind::parse_error, "labels[" + std::to_string(i) + "] must be a string");
    labels.push_back(jl[i].get<std::string>());
  }
  check_labels(labels);

  std::map<ConstantKey, GaussianRational> constants;
  auto jc = doc.find("constants");
  if (jc != doc.end()) {
    if (!jc->is_array()) throw Error(ErrorKind::parse_error, "constants must be an array");
    for (std::size_t i = 0; i < jc->size(); ++i) {
      const auto& e = (*jc)[i];
      const std::string where = "constants[" + std::to_string(i) + "]";
      if (!e.is_object()) throw Error(ErrorKind::parse_error, where + " must be an object");
      check_fields(e, {"k", "j", "m", "re", "im"}, where);
      const int k = require_int(e, "k", where);
      const int j = require_int(e, "j", where);
      const int m = require_int(e, "m", where);
      if (k < 1 || k > n || j < 1 || j > n || m < 1 || m > n)
        throw Error(ErrorKind::index_out_of_range, where + " has an index outside 1.." + std::to_string(n));
      GaussianRational value(rational_field(e, "re", where), rational_field(e, "im", where));
      if (!constants.emplace(ConstantKey{k - 1, j - 1, m - 1}, value).second)
        throw Error(ErrorKind::duplicate_constant, "(k, j, m) = (" + std::to_string(k) + ", " + std::to_string(j) +
                                                       ", " + std::to_string(m) + ") repeated at " + where);
    }
  }
  return AlgebraSpec(name.get<std::string>(), n, std::move(labels), std::move(constants));
}

std::string emit_spec(const AlgebraSpec& spec) {
  ordered_json doc;
  doc["name"] = spec.name();
  doc["n"] = spec.n();
  doc["labels"] = spec.labels();
  auto constants = ordered_json::array();
  for (const auto& [key, value] : spec.constants()) {
    auto [k, j, m] = key;
    ordered_json e;
    e["k"] = k + 1;
    e["j"] = j + 1;
    e["m"] = m + 1;
    if (!value.re().is_zero()) e["re"] = value.re().str();
    if (!value.im().is_zero()) e["im"] = value.im().str();
    constants.push_back(std::move(e));
  }
  doc["constants"] = std::move(constants);
  return doc.dump(2) + "\n";
}

AlgebraSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spec(buf.str());
  } catch (const Error& e) {
    // Prefix the file name; keep the kind.
    std::string what = e.what();
    auto colon = what.find(": ");
    throw Error(e.kind(), path + ": " + (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
}

}  // namespace hpcoh
