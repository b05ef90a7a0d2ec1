#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hpcoh/gaussian_rational.hpp"
#include "hpcoh/sparse_matrix.hpp"

namespace hpcoh {

// (k, j, m), 0-based: the coefficient A^m_{kj} of X_m in [conj(X_k), X_j].
using ConstantKey = std::tuple<int, int, int>;

// A nilpotent Lie algebra with abelian complex structure, described by the
// (1,0)-components of the mixed brackets
//
//   [conj(X_k), X_j] = sum_m A^m_{kj} X_m - sum_m conj(A^m_{jk}) conj(X_m).
//
// [g^{1,0}, g^{1,0}] = [g^{0,1}, g^{0,1}] = 0 is built in, and the (0,1)-side
// coefficients are always derived from A, so every spec satisfies reality.
class AlgebraSpec {
 public:
  AlgebraSpec() = default;
  // Throws Error(index_out_of_range) for constants outside [0, n) and
  // Error(invalid_parameters) when labels do not match n.
  AlgebraSpec(std::string name, int n, std::vector<std::string> labels, std::map<ConstantKey, GaussianRational> constants);

  const std::string& name() const noexcept { return name_; }
  int n() const noexcept { return n_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::map<ConstantKey, GaussianRational>& constants() const noexcept { return constants_; }

  // A^m_{kj}; zero when not stored.
  const GaussianRational& a(int k, int j, int m) const { return dense_[(k * n_ + j) * n_ + m]; }

  // Coefficient of conj(X_m) in [conj(X_k), X_j]: -conj(A^m_{jk}).
  GaussianRational b(int k, int j, int m) const { return -a(j, k, m).conj(); }

  // Bracket on the complexification g_C with basis X_0..X_{n-1}, conj(X_0)..conj(X_{n-1}).
  Vector bracket(const Vector& u, const Vector& v) const;

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b);

 private:
  std::string name_;
  int n_ = 0;
  std::vector<std::string> labels_;
  std::map<ConstantKey, GaussianRational> constants_;
  std::vector<GaussianRational> dense_;
};

// One graded piece t_l^{1,0} of g^{1,0}: its chosen basis vectors (length n)
// and, for those that are basis vectors X_i, their 0-based indices.
struct Layer {
  std::vector<Vector> basis;
  std::vector<int> indices;

  bool coordinate() const { return indices.size() == basis.size(); }
  int dim() const { return static_cast<int>(basis.size()); }
};

struct StructureReport {
  int step = 0;
  bool jacobi_ok = false;
  std::vector<int> lcs_dims;          // complex dimensions of g^0_C, g^1_C, ..., ending in 0
  std::vector<Vector> center_basis;   // basis of c^{1,0}, vectors of length n
  std::vector<int> center_indices;    // 0-based i with X_i central
  int dim_center = 0;
  std::vector<Layer> t_layers;        // t_1 ... t_k

  // The center generator V when c^{1,0} is one-dimensional and spanned by a
  // basis vector, -1 otherwise.
  int single_center_index() const {
    return dim_center == 1 && center_indices.size() == 1 ? center_indices.front() : -1;
  }
};

// Jacobi identity on every basis triple of g_C, lower central series, center
// and the J-invariant layers. Throws Error(jacobi_violation | not_nilpotent).
StructureReport validate(const AlgebraSpec& spec);

std::vector<Layer> layers(const AlgebraSpec& spec);

// Matrix of iota_X d(rho) : t^{1,0} -> t^{*(0,1)}, D(b, j) = A^V_{bj}, with
// rows and columns indexed by the non-center basis vectors in increasing order.
// Throws Error(center_dimension_not_one) unless c^{1,0} = span{X_v}.
SparseMatrix d_rho_matrix(const AlgebraSpec& spec, int v_index);

// The 0-based basis indices spanning t^{1,0} (everything except v_index).
std::vector<int> t_indices(const AlgebraSpec& spec, int v_index);

}  // namespace hpcoh
