#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hpcoh/gaussian_rational.hpp"

namespace hpcoh {

// A canonical exterior monomial T_P ^ w_Q in the exterior algebra of
// L = g^{1,0} + g^{*(0,1)} of an n-dimensional g^{1,0}. Bit i < n is the
// vector X_i, bit n + i the form conj(w^i). Canonical order is ascending bit
// position, so vectors precede forms and each block is ascending.
using Mask = std::uint32_t;

struct Bidegree {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

inline int degree(Mask m) { return std::popcount(m); }
inline Mask vector_part(Mask m, int n) { return m & ((Mask{1} << n) - 1); }
inline Mask form_part(Mask m, int n) { return m >> n; }
inline Bidegree bidegree(Mask m, int n) {
  return {std::popcount(vector_part(m, n)), std::popcount(form_part(m, n))};
}

// Sign of a ^ b relative to the canonical monomial a | b, or 0 when they
// share a generator. All generators have degree one and anticommute.
int wedge_sign(Mask a, Mask b);

// Sparse linear combination of canonical monomials; never stores zeros.
class GradedElement {
 public:
  GradedElement() = default;
  GradedElement(Mask m, GaussianRational c);

  static GradedElement one() { return {0, GaussianRational(1)}; }
  static GradedElement generator(int g) { return {Mask{1} << g, GaussianRational(1)}; }

  const std::map<Mask, GaussianRational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  GaussianRational coefficient(Mask m) const;

  void add(Mask m, const GaussianRational& c);
  std::set<Bidegree> bidegrees(int n) const;
  // True when every term has bidegree (p, q); the zero element qualifies.
  bool is_homogeneous(int n, Bidegree b) const;
  GradedElement part(int n, Bidegree b) const;
  int max_degree() const;

  GradedElement operator-() const;
  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const GaussianRational& c, const GradedElement& e);
  friend bool operator==(const GradedElement& a, const GradedElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Mask, GaussianRational> terms_;
};

GradedElement wedge(const GradedElement& a, const GradedElement& b);

// Canonical basis of B^{p,q}: vector subsets of size p (ascending as bit
// masks) crossed with form subsets of size q.
class BlockBasis {
 public:
  BlockBasis(int n, int p, int q);

  std::size_t size() const noexcept { return vecs_.size() * forms_.size(); }
  Bidegree bidegree() const noexcept { return {p_, q_}; }
  Mask mask(std::size_t i) const;
  bool contains(Mask m) const { return hpcoh::bidegree(m, n_) == Bidegree{p_, q_}; }
  // Position of a monomial of this bidegree.
  std::size_t index(Mask m) const;

 private:
  int n_;
  int p_;
  int q_;
  std::vector<Mask> vecs_;
  std::vector<Mask> forms_;
};

// Basis of K^d = sum_{p+q=d} B^{p,q}, blocks concatenated by increasing p.
class TotalBasis {
 public:
  TotalBasis(int n, int d);

  std::size_t size() const noexcept { return size_; }
  int degree() const noexcept { return d_; }
  const std::vector<BlockBasis>& blocks() const noexcept { return blocks_; }
  // Offset of B^{p, d-p}; p in [0, d].
  std::size_t offset(int p) const { return offsets_.at(p); }
  Mask mask(std::size_t i) const;
  bool contains(Mask m) const { return hpcoh::degree(m) == d_; }
  std::size_t index(Mask m) const;

 private:
  int n_;
  int d_;
  std::vector<BlockBasis> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t size_ = 0;
};

std::size_t binomial(int n, int k);

}  // namespace hpcoh
