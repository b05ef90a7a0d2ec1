#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "hpcoh/errors.hpp"
#include "hpcoh/exterior.hpp"
#include "hpcoh/lie_algebra.hpp"
#include "hpcoh/sparse_matrix.hpp"

namespace hpcoh {

enum class PoissonVerdict { valid, not_bidegree_2_0, not_holomorphic, not_poisson };
std::string_view to_string(PoissonVerdict v);

enum class OperatorKind { dbar, ad_lambda };

struct OperatorMatrix {
  Bidegree source;
  Bidegree target;
  SparseMatrix matrix;  // rows index the target block, columns the source block
};

// An odd derivation of the exterior algebra of L, fixed by its values on the
// 2n generators (each of total degree 2).
class Derivation {
 public:
  explicit Derivation(std::vector<GradedElement> images) : images_(std::move(images)) {}

  const GradedElement& image(int g) const { return images_.at(g); }
  GradedElement apply(Mask m) const;
  GradedElement apply(const GradedElement& x) const;

  // Matrix from the monomials of `source` into the basis `target`; terms of
  // the image outside the target basis are an error.
  template <typename Source, typename Target>
  SparseMatrix matrix(const Source& source, const Target& target) const;

  friend Derivation operator+(const Derivation& a, const Derivation& b);

 private:
  std::vector<GradedElement> images_;
};

// Exterior algebra of L = g^{1,0} + g^{*(0,1)} for a validated algebra, with
// dbar, the Schouten bracket, and memoized operator blocks.
class SchoutenComplex {
 public:
  // Validates the spec; propagates validate() errors.
  explicit SchoutenComplex(AlgebraSpec spec);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const StructureReport& structure() const noexcept { return structure_; }
  int n() const noexcept { return spec_.n(); }
  int dim_L() const noexcept { return 2 * spec_.n(); }

  int vector_generator(int i) const { return i; }
  int form_generator(int i) const { return n() + i; }

  // Generator rules: [X_i, X_j] = [w_i, w_j] = 0 and
  // [X_i, conj(w^m)] = -sum_b conj(A^m_{ib}) conj(w^b).
  GradedElement generator_bracket(int g, int h) const;

  GradedElement dbar(const GradedElement& x) const { return dbar_.apply(x); }
  const Derivation& dbar_derivation() const noexcept { return dbar_; }

  // Schouten bracket of arbitrary elements, evaluated recursively through
  // graded antisymmetry and the Leibniz rule in the second argument.
  GradedElement schouten(const GradedElement& a, const GradedElement& b) const;

  // ad_a as a derivation; meaningful for a of even total degree (2).
  Derivation ad(const GradedElement& a) const;

  PoissonVerdict validate_poisson(const GradedElement& lambda) const;
  // Throws Error for any verdict other than valid.
  void require_poisson(const GradedElement& lambda) const;

  // Block of dbar (p,q) -> (p,q+1) or ad_lambda (p,q) -> (p+1,q). Memoized
  // per (kind, p, q, lambda); safe for concurrent callers.
  OperatorMatrix operator_block(OperatorKind kind, int p, int q, const GradedElement* lambda = nullptr) const;

  // dbar + ad_lambda : K^d -> K^{d+1}, assembled from the blocks.
  SparseMatrix total_differential(int d, const GradedElement& lambda) const;

 private:
  AlgebraSpec spec_;
  StructureReport structure_;
  Derivation dbar_;

  mutable std::mutex memo_mutex_;
  mutable std::map<std::tuple<int, int, int, std::string>, OperatorMatrix> memo_;
};

std::string memo_key(const GradedElement& x);

template <typename Source, typename Target>
SparseMatrix Derivation::matrix(const Source& source, const Target& target) const {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < source.size(); ++i) {
    const auto image = apply(source.mask(i));
    for (const auto& [m, c] : image.terms()) {
      if (!target.contains(m)) throw ConsistencyError("derivation image leaves the target basis");
      t.push_back({target.index(m), i, c});
    }
  }
  return SparseMatrix::from_triplets(target.size(), source.size(), std::move(t));
}

}  // namespace hpcoh
