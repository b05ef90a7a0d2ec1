#include "hpcoh/exterior.hpp"

#include <algorithm>

namespace hpcoh {

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j: each is one transposition.
  int swaps = 0;
  Mask bb = b;
  while (bb) {
    int j = std::countr_zero(bb);
    bb &= bb - 1;
    swaps += std::popcount(a >> j);
  }
  return (swaps & 1) ? -1 : 1;
}

GradedElement::GradedElement(Mask m, GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

GaussianRational GradedElement::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void GradedElement::add(Mask m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::set<Bidegree> GradedElement::bidegrees(int n) const {
  std::set<Bidegree> out;
  for (const auto& [m, c] : terms_) out.insert(bidegree(m, n));
  return out;
}

bool GradedElement::is_homogeneous(int n, Bidegree b) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return bidegree(t.first, n) == b; });
}

GradedElement GradedElement::part(int n, Bidegree b) const {
  GradedElement out;
  for (const auto& [m, c] : terms_)
    if (bidegree(m, n) == b) out.terms_.emplace(m, c);
  return out;
}

int GradedElement::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, degree(m));
  return d;
}

GradedElement GradedElement::operator-() const {
  GradedElement out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

GradedElement operator*(const GaussianRational& c, const GradedElement& e) {
  GradedElement out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : e.terms_) out.terms_.emplace(m, c * v);
  return out;
}

GradedElement wedge(const GradedElement& a, const GradedElement& b) {
  GradedElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      GaussianRational c = ca * cb;
      out.add(ma | mb, s > 0 ? c : -c);
    }
  return out;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

namespace {

std::vector<Mask> subsets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {0};
  // Gosper's hack enumerates k-subsets in increasing numeric order.
  Mask m = (Mask{1} << k) - 1;
  const Mask limit = Mask{1} << n;
  while (m < limit) {
    out.push_back(m);
    Mask c = m & (~m + 1);
    Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
    if (m == 0) break;
  }
  return out;
}

// Position of a k-subset in increasing numeric order (combinatorial number system).
std::size_t colex_rank(Mask m) {
  std::size_t r = 0;
  int i = 0;
  while (m) {
    int s = std::countr_zero(m);
    m &= m - 1;
    r += binomial(s, ++i);
  }
  return r;
}

}  // namespace

BlockBasis::BlockBasis(int n, int p, int q) : n_(n), p_(p), q_(q), vecs_(subsets(n, p)), forms_(subsets(n, q)) {}

Mask BlockBasis::mask(std::size_t i) const {
  return vecs_[i / forms_.size()] | (forms_[i % forms_.size()] << n_);
}

std::size_t BlockBasis::index(Mask m) const {
  return colex_rank(vector_part(m, n_)) * forms_.size() + colex_rank(form_part(m, n_));
}

TotalBasis::TotalBasis(int n, int d) : n_(n), d_(d) {
  for (int p = 0; p <= d; ++p) {
    offsets_.push_back(size_);
    blocks_.emplace_back(n, p, d - p);
    size_ += blocks_.back().size();
  }
}

Mask TotalBasis::mask(std::size_t i) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
  // The last block starting at or before i is the nonempty one.
  auto p = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return blocks_[p].mask(i - offsets_[p]);
}

std::size_t TotalBasis::index(Mask m) const {
  auto p = static_cast<std::size_t>(std::popcount(vector_part(m, n_)));
  return offsets_[p] + blocks_[p].index(m);
}

}  // namespace hpcoh
