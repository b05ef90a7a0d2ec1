#include "hpcoh/schouten_complex.hpp"

#include <bit>

namespace hpcoh {

std::string_view to_string(PoissonVerdict v) {
  switch (v) {
    case PoissonVerdict::valid: return "valid";
    case PoissonVerdict::not_bidegree_2_0: return "not_bidegree_2_0";
    case PoissonVerdict::not_holomorphic: return "not_holomorphic";
    case PoissonVerdict::not_poisson: return "not_poisson";
  }
  return "unknown";
}

GradedElement Derivation::apply(Mask m) const {
  GradedElement out;
  Mask rest_bits = m;
  int s = 0;
  while (rest_bits) {
    int g = std::countr_zero(rest_bits);
    rest_bits &= rest_bits - 1;
    const Mask rest = m ^ (Mask{1} << g);
    // m = (-1)^s g ^ rest and the image has even degree.
    for (const auto& [im, c] : images_[g].terms()) {
      int sign = wedge_sign(im, rest);
      if (sign == 0) continue;
      if (s & 1) sign = -sign;
      out.add(im | rest, sign > 0 ? c : -c);
    }
    ++s;
  }
  return out;
}

GradedElement Derivation::apply(const GradedElement& x) const {
  GradedElement out;
  for (const auto& [m, c] : x.terms()) out += c * apply(m);
  return out;
}

Derivation operator+(const Derivation& a, const Derivation& b) {
  std::vector<GradedElement> images = a.images_;
  for (std::size_t g = 0; g < images.size(); ++g) images[g] += b.images_.at(g);
  return Derivation(std::move(images));
}

namespace {

std::vector<GradedElement> dbar_images(const AlgebraSpec& spec) {
  const int n = spec.n();
  std::vector<GradedElement> images(2 * n);
  // dbar X_j = sum_{k,m} A^m_{kj} conj(w^k) ^ X_m; dbar conj(w^m) = 0.
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int m = 0; m < n; ++m) {
        const auto& a = spec.a(k, j, m);
        if (a.is_zero()) continue;
        images[j] += wedge(GradedElement(Mask{1} << (n + k), a), GradedElement::generator(m));
      }
  return images;
}

}  // namespace

SchoutenComplex::SchoutenComplex(AlgebraSpec spec)
    : spec_(std::move(spec)), structure_(validate(spec_)), dbar_(dbar_images(spec_)) {}

GradedElement SchoutenComplex::generator_bracket(int g, int h) const {
  const int n = spec_.n();
  const bool g_vec = g < n;
  const bool h_vec = h < n;
  if (g_vec == h_vec) return {};
  if (!g_vec) return -generator_bracket(h, g);
  GradedElement out;
  const int i = g;
  const int m = h - n;
  for (int b = 0; b < n; ++b) {
    const auto& a = spec_.a(i, b, m);
    if (!a.is_zero()) out.add(Mask{1} << (n + b), -a.conj());
  }
  return out;
}

namespace {

GradedElement bracket_monomials(const SchoutenComplex& cx, Mask a, Mask b) {
  if (a == 0 || b == 0) return {};
  const int da = degree(a);
  const int db = degree(b);
  if (da == 1 && db == 1) return cx.generator_bracket(std::countr_zero(a), std::countr_zero(b));
  if (db >= 2) {
    // [a, b1 ^ rest] = [a, b1] ^ rest + (-1)^{|a|-1} b1 ^ [a, rest]
    const Mask b1 = b & (~b + 1);
    const Mask rest = b ^ b1;
    GradedElement out = wedge(bracket_monomials(cx, a, b1), GradedElement(rest, GaussianRational(1)));
    GradedElement second = wedge(GradedElement(b1, GaussianRational(1)), bracket_monomials(cx, a, rest));
    if ((da - 1) & 1)
      out -= second;
    else
      out += second;
    return out;
  }
  // db == 1: [a, b] = -(-1)^{(|a|-1)(|b|-1)} [b, a] = -[b, a]
  return -bracket_monomials(cx, b, a);
}

}  // namespace

GradedElement SchoutenComplex::schouten(const GradedElement& a, const GradedElement& b) const {
  GradedElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out += (ca * cb) * bracket_monomials(*this, ma, mb);
  return out;
}

Derivation SchoutenComplex::ad(const GradedElement& a) const {
  std::vector<GradedElement> images;
  images.reserve(dim_L());
  for (int g = 0; g < dim_L(); ++g) images.push_back(schouten(a, GradedElement::generator(g)));
  return Derivation(std::move(images));
}

PoissonVerdict SchoutenComplex::validate_poisson(const GradedElement& lambda) const {
  if (!lambda.is_homogeneous(n(), {2, 0})) return PoissonVerdict::not_bidegree_2_0;
  if (!dbar(lambda).is_zero()) return PoissonVerdict::not_holomorphic;
  if (!schouten(lambda, lambda).is_zero()) return PoissonVerdict::not_poisson;
  return PoissonVerdict::valid;
}

void SchoutenComplex::require_poisson(const GradedElement& lambda) const {
  switch (validate_poisson(lambda)) {
    case PoissonVerdict::valid: return;
    case PoissonVerdict::not_bidegree_2_0:
      throw Error(ErrorKind::not_bidegree_2_0, "the Poisson bivector must lie in B^{2,0}");
    case PoissonVerdict::not_holomorphic: throw Error(ErrorKind::not_holomorphic, "dbar(Lambda) != 0");
    case PoissonVerdict::not_poisson: throw Error(ErrorKind::not_poisson, "[Lambda, Lambda] != 0");
  }
}

std::string memo_key(const GradedElement& x) {
  std::string key;
  for (const auto& [m, c] : x.terms()) key += std::to_string(m) + ":" + c.re().str() + "," + c.im().str() + ";";
  return key;
}

OperatorMatrix SchoutenComplex::operator_block(OperatorKind kind, int p, int q, const GradedElement* lambda) const {
  const bool is_ad = kind == OperatorKind::ad_lambda;
  if (is_ad && lambda == nullptr) throw Error(ErrorKind::not_bidegree_2_0, "ad_lambda block requires a bivector");
  auto key = std::make_tuple(static_cast<int>(kind), p, q, is_ad ? memo_key(*lambda) : std::string());
  {
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  OperatorMatrix op;
  op.source = {p, q};
  op.target = is_ad ? Bidegree{p + 1, q} : Bidegree{p, q + 1};
  BlockBasis source(n(), p, q);
  BlockBasis target(n(), op.target.p, op.target.q);
  if (is_ad) {
    require_poisson(*lambda);
    op.matrix = ad(*lambda).matrix(source, target);
  } else {
    op.matrix = dbar_.matrix(source, target);
  }
  std::lock_guard lock(memo_mutex_);
  return memo_.try_emplace(key, std::move(op)).first->second;
}

SparseMatrix SchoutenComplex::total_differential(int d, const GradedElement& lambda) const {
  TotalBasis source(n(), d);
  TotalBasis target(n(), d + 1);
  std::vector<Triplet> t;
  auto place = [&](const OperatorMatrix& op, std::size_t row0, std::size_t col0) {
    for (std::size_t r = 0; r < op.matrix.rows(); ++r)
      for (const auto& e : op.matrix.row(r)) t.push_back({row0 + r, col0 + e.col, e.value});
  };
  for (int p = 0; p <= d; ++p) {
    const int q = d - p;
    if (p > n() || q > n()) continue;
    if (q + 1 <= n()) place(operator_block(OperatorKind::dbar, p, q), target.offset(p), source.offset(p));
    if (!lambda.is_zero() && p + 1 <= n())
      place(operator_block(OperatorKind::ad_lambda, p, q, &lambda), target.offset(p + 1), source.offset(p));
  }
  return SparseMatrix::from_triplets(target.size(), source.size(), std::move(t));
}

}  // namespace hpcoh
