#include <string>

#include "hpcoh/errors.hpp"
#include "hpcoh/sparse_matrix.hpp"

namespace hpcoh::dense {

namespace {

// Reduced row echelon form of [m | extra], pivoting only inside the first
// m.cols() columns. Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(std::vector<Vector>& a, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    GaussianRational inv = a[r][c].reciprocal();
    for (auto& x : a[r])
      if (!x.is_zero()) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      GaussianRational f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  auto a = m.to_dense();
  return rref(a, m.cols()).size();
}

std::vector<Vector> kernel_basis(const SparseMatrix& m) {
  auto a = m.to_dense();
  auto pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = GaussianRational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const SparseMatrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw Error(ErrorKind::dimension_mismatch,
                "right-hand side has length " + std::to_string(b.size()) + ", expected " + std::to_string(m.rows()));
  auto a = m.to_dense();
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  auto pivots = rref(a, m.cols());
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (!a[r][m.cols()].is_zero()) return {};
  SolveResult res{true, Vector(m.cols())};
  for (std::size_t i = 0; i < pivots.size(); ++i) res.x[pivots[i]] = a[i][m.cols()];
  return res;
}

std::vector<Vector> row_space_basis(std::vector<Vector> rows) {
  if (rows.empty()) return rows;
  auto pivots = rref(rows, rows.front().size());
  rows.resize(pivots.size());
  return rows;
}

}  // namespace hpcoh::dense
