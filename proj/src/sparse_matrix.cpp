#include "hpcoh/sparse_matrix.hpp"

#include <algorithm>
#include <string>

#include "hpcoh/errors.hpp"

namespace hpcoh {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  SparseMatrix m(rows, cols);
  for (const auto& t : triplets) {
    if (t.row >= rows || t.col >= cols)
      throw Error(ErrorKind::index_out_of_range, "entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                                                     ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 0; i < triplets.size();) {
    std::size_t j = i;
    GaussianRational sum;
    while (j < triplets.size() && triplets[j].row == triplets[i].row && triplets[j].col == triplets[i].col) {
      sum += triplets[j].value;
      ++j;
    }
    if (!sum.is_zero())
      m.data_[triplets[i].row].push_back({static_cast<std::uint32_t>(triplets[i].col), std::move(sum)});
    i = j;
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& rows, std::size_t cols) {
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::dimension_mismatch, "ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (!rows[r][c].is_zero()) t.push_back({r, c, rows[r][c]});
  }
  return from_triplets(rows.size(), cols, std::move(t));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({static_cast<std::uint32_t>(i), GaussianRational(1)});
  return m;
}

std::size_t SparseMatrix::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

GaussianRational SparseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::index_out_of_range, "matrix index");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return {};
}

Vector SparseMatrix::multiply(const Vector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::dimension_mismatch, "matrix-vector product");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r])
      if (!x[e.col].is_zero()) y[r] += e.value * x[e.col];
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) t.data_[e.col].push_back({static_cast<std::uint32_t>(r), e.value});
  return t;
}

std::vector<Vector> SparseMatrix::to_dense() const {
  std::vector<Vector> d(rows_, Vector(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) d[r][e.col] = e.value;
  return d;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::dimension_mismatch, "matrix product");
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (const auto& e : a.data_[r])
      for (const auto& f : b.data_[e.col]) t.push_back({r, f.col, e.value * f.value});
  return SparseMatrix::from_triplets(a.rows_, b.cols_, std::move(t));
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::dimension_mismatch, "matrix sum");
  std::vector<Triplet> t;
  for (const SparseMatrix* m : {&a, &b})
    for (std::size_t r = 0; r < m->rows_; ++r)
      for (const auto& e : m->data_[r]) t.push_back({r, e.col, e.value});
  return SparseMatrix::from_triplets(a.rows_, a.cols_, std::move(t));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    const auto& x = a.data_[r];
    const auto& y = b.data_[r];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].col != y[i].col || !(x[i].value == y[i].value)) return false;
  }
  return true;
}

namespace {

bool use_dense(const SparseMatrix& m) { return m.rows() < kDenseThreshold && m.cols() < kDenseThreshold; }

}  // namespace

std::size_t rank(const SparseMatrix& m) { return use_dense(m) ? dense::rank(m) : sparse::rank(m); }

std::vector<Vector> kernel_basis(const SparseMatrix& m) {
  if (use_dense(m)) return dense::kernel_basis(m);
  std::vector<Vector> out;
  for (const auto& v : sparse::kernel_basis(m)) {
    Vector d(m.cols());
    for (const auto& e : v) d[e.col] = e.value;
    out.push_back(std::move(d));
  }
  return out;
}

SolveResult solve(const SparseMatrix& m, const Vector& b) {
  return use_dense(m) ? dense::solve(m, b) : sparse::solve(m, b);
}

}  // namespace hpcoh
