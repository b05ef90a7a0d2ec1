#include "hpcoh/lie_algebra.hpp"

#include <string>

#include "hpcoh/errors.hpp"

namespace hpcoh {

AlgebraSpec::AlgebraSpec(std::string name, int n, std::vector<std::string> labels,
                         std::map<ConstantKey, GaussianRational> constants)
    : name_(std::move(name)), n_(n), labels_(std::move(labels)) {
  if (n_ < 1 || n_ > 16)
    throw Error(ErrorKind::invalid_parameters, "complex dimension n = " + std::to_string(n_) + " must be in 1..16");
  if (static_cast<int>(labels_.size()) != n_)
    throw Error(ErrorKind::invalid_parameters,
                std::to_string(labels_.size()) + " labels given for n = " + std::to_string(n_));
  dense_.assign(static_cast<std::size_t>(n_) * n_ * n_, GaussianRational());
  for (auto& [key, value] : constants) {
    auto [k, j, m] = key;
    if (k < 0 || k >= n_ || j < 0 || j >= n_ || m < 0 || m >= n_)
      throw Error(ErrorKind::index_out_of_range, "constant (k, j, m) = (" + std::to_string(k + 1) + ", " +
                                                     std::to_string(j + 1) + ", " + std::to_string(m + 1) +
                                                     ") outside 1.." + std::to_string(n_));
    if (value.is_zero()) continue;
    dense_[(k * n_ + j) * n_ + m] = value;
    constants_.emplace(key, value);
  }
}

Vector AlgebraSpec::bracket(const Vector& u, const Vector& v) const {
  const int dim = 2 * n_;
  if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim)
    throw Error(ErrorKind::dimension_mismatch, "bracket operands must have length 2n");
  Vector out(dim);
  // Only mixed pairs contribute; [X, Y] and [conj X, conj Y] vanish.
  auto add_mixed = [&](int k, int j, const GaussianRational& coeff) {
    // coeff * [conj(X_k), X_j]
    for (int m = 0; m < n_; ++m) {
      const auto& am = a(k, j, m);
      if (!am.is_zero()) out[m] += coeff * am;
      const auto& ajk = a(j, k, m);
      if (!ajk.is_zero()) out[n_ + m] -= coeff * ajk.conj();
    }
  };
  for (int p = 0; p < dim; ++p) {
    if (u[p].is_zero()) continue;
    for (int q = 0; q < dim; ++q) {
      if (v[q].is_zero()) continue;
      if (p >= n_ && q < n_) add_mixed(p - n_, q, u[p] * v[q]);
      if (p < n_ && q >= n_) add_mixed(q - n_, p, -(u[p] * v[q]));
    }
  }
  return out;
}

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
  return a.name_ == b.name_ && a.n_ == b.n_ && a.labels_ == b.labels_ && a.constants_ == b.constants_;
}

namespace {

Vector unit(int dim, int i) {
  Vector v(dim);
  v[i] = GaussianRational(1);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::size_t span_dim(const std::vector<Vector>& vs) { return dense::row_space_basis(vs).size(); }

std::string triple_name(const AlgebraSpec& spec, int a, int b, int c) {
  auto name = [&](int i) {
    return i < spec.n() ? spec.labels()[i] : "conj(" + spec.labels()[i - spec.n()] + ")";
  };
  return "(" + name(a) + ", " + name(b) + ", " + name(c) + ")";
}

void check_jacobi(const AlgebraSpec& spec) {
  const int dim = 2 * spec.n();
  std::vector<Vector> basis;
  for (int i = 0; i < dim; ++i) basis.push_back(unit(dim, i));
  std::vector<std::vector<Vector>> table(dim, std::vector<Vector>(dim));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) table[a][b] = spec.bracket(basis[a], basis[b]);
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b)
      for (int c = b + 1; c < dim; ++c) {
        Vector j = spec.bracket(table[a][b], basis[c]);
        Vector t1 = spec.bracket(table[b][c], basis[a]);
        Vector t2 = spec.bracket(table[c][a], basis[b]);
        for (int i = 0; i < dim; ++i) j[i] += t1[i] + t2[i];
        if (!is_zero(j)) throw Error(ErrorKind::jacobi_violation, "Jacobi identity fails on " + triple_name(spec, a, b, c));
      }
}

// Lower central series of g_C as row-space bases, g^0 first, ending with the
// first zero term.
std::vector<std::vector<Vector>> lower_central_series(const AlgebraSpec& spec) {
  const int dim = 2 * spec.n();
  std::vector<std::vector<Vector>> series;
  std::vector<Vector> current;
  for (int i = 0; i < dim; ++i) current.push_back(unit(dim, i));
  series.push_back(current);
  while (!current.empty()) {
    std::vector<Vector> gens;
    for (const auto& u : current)
      for (int i = 0; i < dim; ++i) {
        Vector w = spec.bracket(u, unit(dim, i));
        if (!is_zero(w)) gens.push_back(std::move(w));
      }
    auto next = dense::row_space_basis(std::move(gens));
    if (next.size() == current.size())
      throw Error(ErrorKind::not_nilpotent, "lower central series stabilizes at complex dimension " +
                                                std::to_string(next.size()) + " after " +
                                                std::to_string(series.size() - 1) + " steps");
    series.push_back(next);
    current = std::move(next);
  }
  return series;
}

// (1,0)-part of g^l + J g^l: the projection of g^l_C onto the first n coordinates.
std::vector<Vector> project_10(const std::vector<Vector>& vs, int n) {
  std::vector<Vector> out;
  for (const auto& v : vs) {
    Vector p(v.begin(), v.begin() + n);
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  return dense::row_space_basis(std::move(out));
}

std::vector<Layer> compute_layers(const std::vector<std::vector<Vector>>& series, int n) {
  const int k = static_cast<int>(series.size()) - 1;
  std::vector<std::vector<Vector>> filtration;  // S_0 ... S_k
  for (const auto& g : series) filtration.push_back(project_10(g, n));
  std::vector<Layer> out;
  for (int l = 1; l <= k; ++l) {
    const auto& outer = filtration[l - 1];
    std::vector<Vector> acc = filtration[l];
    const std::size_t target = outer.size();
    Layer layer;
    auto try_add = [&](const Vector& v, int index) {
      auto with = acc;
      with.push_back(v);
      if (span_dim(with) != acc.size() + 1) return;
      acc = std::move(with);
      layer.basis.push_back(v);
      if (index >= 0) layer.indices.push_back(index);
    };
    // Lowest basis indices first; fall back to echelon vectors when S_{l-1}
    // is not spanned by basis vectors.
    for (int i = 0; i < n && acc.size() < target; ++i) {
      Vector e = unit(n, i);
      auto with = outer;
      with.push_back(e);
      if (span_dim(with) == outer.size()) try_add(e, i);
    }
    for (std::size_t i = 0; i < outer.size() && acc.size() < target; ++i) try_add(outer[i], -1);
    out.push_back(std::move(layer));
  }
  return out;
}

}  // namespace

StructureReport validate(const AlgebraSpec& spec) {
  const int n = spec.n();
  const int dim = 2 * n;
  StructureReport report;
  check_jacobi(spec);
  report.jacobi_ok = true;

  auto series = lower_central_series(spec);
  report.step = static_cast<int>(series.size()) - 1;
  for (const auto& g : series) report.lcs_dims.push_back(static_cast<int>(g.size()));

  // c^{1,0}: z in g^{1,0} with [z, e] = 0 for every basis vector e of g_C.
  std::vector<Triplet> t;
  std::size_t row = 0;
  for (int e = 0; e < dim; ++e) {
    for (int j = 0; j < n; ++j) {
      Vector w = spec.bracket(unit(dim, j), unit(dim, e));
      for (int c = 0; c < dim; ++c)
        if (!w[c].is_zero()) t.push_back({row + c, static_cast<std::size_t>(j), w[c]});
    }
    row += dim;
  }
  SparseMatrix centralizer = SparseMatrix::from_triplets(row, n, std::move(t));
  report.center_basis = dense::row_space_basis(kernel_basis(centralizer));
  report.dim_center = static_cast<int>(report.center_basis.size());
  auto cols = centralizer.transpose();
  for (int j = 0; j < n; ++j)
    if (cols.row(j).empty()) report.center_indices.push_back(j);

  report.t_layers = compute_layers(series, n);
  return report;
}

std::vector<Layer> layers(const AlgebraSpec& spec) { return validate(spec).t_layers; }

std::vector<int> t_indices(const AlgebraSpec& spec, int v_index) {
  std::vector<int> out;
  for (int i = 0; i < spec.n(); ++i)
    if (i != v_index) out.push_back(i);
  return out;
}

SparseMatrix d_rho_matrix(const AlgebraSpec& spec, int v_index) {
  auto report = validate(spec);
  if (report.dim_center != 1)
    throw Error(ErrorKind::center_dimension_not_one,
                "c^{1,0} has complex dimension " + std::to_string(report.dim_center));
  if (report.single_center_index() != v_index)
    throw Error(ErrorKind::center_not_coordinate,
                "c^{1,0} is not spanned by basis vector " + std::to_string(v_index + 1));
  auto idx = t_indices(spec, v_index);
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const auto& v = spec.a(idx[r], idx[c], v_index);
      if (!v.is_zero()) t.push_back({r, c, v});
    }
  return SparseMatrix::from_triplets(idx.size(), idx.size(), std::move(t));
}

}  // namespace hpcoh
