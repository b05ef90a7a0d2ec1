#include "hpcoh/expression.hpp"

#include <cctype>

#include "hpcoh/errors.hpp"

namespace hpcoh {

Labels::Labels(const AlgebraSpec& spec, int center_index) {
  const int n = spec.n();
  names_ = spec.labels();
  for (int i = 0; i < n; ++i) names_.push_back("w" + std::to_string(i + 1) + "_bar");
  if (center_index >= 0) {
    aliases_.emplace_back(names_[n + center_index], n + center_index);
    names_[n + center_index] = "rho_bar";
  }
}

std::optional<int> Labels::generator(std::string_view name) const {
  for (std::size_t g = 0; g < names_.size(); ++g)
    if (names_[g] == name) return static_cast<int>(g);
  for (const auto& [alias, g] : aliases_)
    if (alias == name) return g;
  return std::nullopt;
}

std::string Labels::format_monomial(Mask m) const {
  if (m == 0) return "1";
  std::string out;
  while (m) {
    int g = std::countr_zero(m);
    m &= m - 1;
    if (!out.empty()) out += "^";
    out += names_[g];
  }
  return out;
}

std::string format_coefficient(const GaussianRational& c) {
  if (c.is_real()) {
    const auto& r = c.re();
    if (r.is_small() && r.to_mpq().get_den() == 1) return r.str();
    return "(" + r.str() + ")";
  }
  Rational im = c.im();
  std::string sign = im.sign() < 0 ? "-" : "+";
  if (im.sign() < 0) im = -im;
  return "(" + c.re().str() + sign + im.str() + "i)";
}

std::string Labels::format(const GradedElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    GaussianRational coeff = c;
    bool negative = false;
    if (c.is_real() && c.re().sign() < 0) {
      negative = true;
      coeff = -c;
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m == 0) {
      out += format_coefficient(coeff);
      continue;
    }
    if (!coeff.is_one()) out += format_coefficient(coeff);
    out += format_monomial(m);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Labels& labels) : labels_(labels) {
    // Normalize U+2212 MINUS SIGN to '-'.
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text.substr(i, 3) == "\xE2\x88\x92") {
        text_ += '-';
        i += 2;
      } else {
        text_ += text[i];
      }
    }
  }

  GradedElement parse() {
    GradedElement out;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      GradedElement term = parse_term();
      out += sign > 0 ? term : -term;
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      sign = c == '+' ? 1 : -1;
      ++pos_;
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse_error, what + " at column " + std::to_string(pos_ + 1) + " in \"" + text_ + "\"");
  }

  Rational parse_rational() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
    std::string_view tok(text_.data() + start, pos_ - start);
    auto r = Rational::parse(tok);
    if (!r)
      throw Error(ErrorKind::malformed_rational,
                  "'" + std::string(tok) + "' at column " + std::to_string(start + 1) + " in \"" + text_ + "\"");
    return *r;
  }

  GaussianRational parse_paren_coefficient() {
    ++pos_;  // '('
    Rational re = parse_rational();
    skip_ws();
    GaussianRational value(re);
    if (peek() == 'i') {
      ++pos_;
      value = GaussianRational(Rational(0), re);
    } else if (peek() == '+' || peek() == '-') {
      int sign = peek() == '+' ? 1 : -1;
      ++pos_;
      Rational im = parse_rational();
      skip_ws();
      if (peek() != 'i') fail("expected 'i'");
      ++pos_;
      value = GaussianRational(re, sign > 0 ? im : -im);
    }
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return value;
  }

  std::string parse_label() {
    skip_ws();
    std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected a generator label");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  GradedElement parse_term() {
    skip_ws();
    GaussianRational coeff(1);
    bool has_coeff = false;
    if (peek() == '(') {
      coeff = parse_paren_coefficient();
      has_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = GaussianRational(parse_rational());
      has_coeff = true;
    }
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
    }
    if (has_coeff && (at_end() || peek() == '+' || peek() == '-')) return {0, coeff};
    GradedElement term(0, coeff);
    while (true) {
      std::size_t start = pos_;
      std::string name = parse_label();
      auto g = labels_.generator(name);
      if (!g)
        throw Error(ErrorKind::unknown_label,
                    "'" + name + "' at column " + std::to_string(start + 1) + " in \"" + text_ + "\"");
      term = wedge(term, GradedElement::generator(*g));
      skip_ws();
      if (peek() != '^') break;
      ++pos_;
    }
    return term;
  }

  std::string text_;
  std::size_t pos_ = 0;
  const Labels& labels_;
};

}  // namespace

GradedElement parse_expression(std::string_view text, const Labels& labels) { return Parser(text, labels).parse(); }

}  // namespace hpcoh
