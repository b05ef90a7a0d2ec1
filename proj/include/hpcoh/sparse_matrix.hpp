#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hpcoh/gaussian_rational.hpp"

namespace hpcoh {

using Vector = std::vector<GaussianRational>;

struct SparseEntry {
  std::uint32_t col;
  GaussianRational value;
};

// Sorted by column, no stored zeros.
using SparseRow = std::vector<SparseEntry>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  GaussianRational value;
};

// Immutable exact sparse matrix stored row-wise.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  // Duplicate positions are summed; zero results are dropped. Throws
  // Error(index_out_of_range) on any out-of-range index.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static SparseMatrix from_dense(const std::vector<Vector>& rows, std::size_t cols);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept;
  bool is_zero() const noexcept { return nnz() == 0; }

  const SparseRow& row(std::size_t r) const { return data_.at(r); }
  GaussianRational at(std::size_t r, std::size_t c) const;

  Vector multiply(const Vector& x) const;
  SparseMatrix transpose() const;
  std::vector<Vector> to_dense() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

// Results of solve(): a solution, or the explicit inconsistent marker.
struct SolveResult {
  bool consistent = false;
  Vector x;
};

// Size-dispatched entry points: blocks below 64x64 use the dense kernel.
std::size_t rank(const SparseMatrix& m);
std::vector<Vector> kernel_basis(const SparseMatrix& m);
SolveResult solve(const SparseMatrix& m, const Vector& b);

// Reference kernel: dense Gauss-Jordan with first-nonzero pivoting.
namespace dense {
std::size_t rank(const SparseMatrix& m);
std::vector<Vector> kernel_basis(const SparseMatrix& m);
SolveResult solve(const SparseMatrix& m, const Vector& b);
// Nonzero rows of the reduced row echelon form (a canonical row-space basis).
std::vector<Vector> row_space_basis(std::vector<Vector> rows);
}  // namespace dense

// Sparse right-looking elimination with Markowitz pivot selection.
namespace sparse {
std::size_t rank(const SparseMatrix& m);
std::vector<SparseRow> kernel_basis(const SparseMatrix& m);
SolveResult solve(const SparseMatrix& m, const Vector& b);
}  // namespace sparse

constexpr std::size_t kDenseThreshold = 64;

}  // namespace hpcoh
