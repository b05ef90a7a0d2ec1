#include "hpcoh/cohomology.hpp"

#include <algorithm>

#include "hpcoh/errors.hpp"

namespace hpcoh {

std::string_view to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::trivial_action: return "trivial_action";
    case ObstructionKind::solvable: return "solvable";
    case ObstructionKind::unsolvable: return "unsolvable";
  }
  return "unknown";
}

CohomologyEngine::CohomologyEngine(AlgebraSpec spec) : complex_(std::move(spec)) {}

int CohomologyEngine::clamp_degree(int max_degree) const { return std::clamp(max_degree, 0, complex_.dim_L()); }

std::size_t CohomologyEngine::dbar_rank(int p, int q) const {
  const int n = complex_.n();
  if (p < 0 || q < 0 || p > n || q >= n) return 0;
  {
    std::lock_guard lock(cache_mutex_);
    auto it = dbar_rank_cache_.find({p, q});
    if (it != dbar_rank_cache_.end()) return it->second;
  }
  std::size_t r = rank(complex_.operator_block(OperatorKind::dbar, p, q).matrix);
  std::lock_guard lock(cache_mutex_);
  dbar_rank_cache_.emplace(std::make_pair(p, q), r);
  return r;
}

std::size_t CohomologyEngine::total_rank(int d, const GradedElement& lambda) const {
  if (d < 0 || d >= complex_.dim_L()) return 0;
  auto key = std::make_pair(d, memo_key(lambda));
  {
    std::lock_guard lock(cache_mutex_);
    auto it = total_rank_cache_.find(key);
    if (it != total_rank_cache_.end()) return it->second;
  }
  std::size_t r = rank(complex_.total_differential(d, lambda));
  std::lock_guard lock(cache_mutex_);
  total_rank_cache_.emplace(std::move(key), r);
  return r;
}

BidegreeTable CohomologyEngine::dolbeault_dims(int max_degree) const {
  const int n = complex_.n();
  max_degree = clamp_degree(max_degree);
  BidegreeTable out;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n && p + q <= max_degree; ++q) {
      std::size_t dim = binomial(n, p) * binomial(n, q);
      out[{p, q}] = dim - dbar_rank(p, q) - dbar_rank(p, q - 1);
    }
  return out;
}

std::vector<std::size_t> CohomologyEngine::total_cohomology(const GradedElement& lambda, int max_degree) const {
  complex_.require_poisson(lambda);
  max_degree = clamp_degree(max_degree);
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d)
    out.push_back(binomial(complex_.dim_L(), d) - total_rank(d, lambda) - total_rank(d - 1, lambda));
  return out;
}

// rank of d_1 : H^q(g^{p,0}) -> H^q(g^{p+1,0}): lift a basis of ker dbar on
// B^{p,q}, apply ad_Lambda and count what survives modulo im dbar from
// B^{p+1,q-1}.
std::size_t CohomologyEngine::d1_rank(int p, int q, const GradedElement& lambda) const {
  const int n = complex_.n();
  if (lambda.is_zero() || p + 1 > n) return 0;
  auto ad = complex_.operator_block(OperatorKind::ad_lambda, p, q, &lambda).matrix;
  if (ad.is_zero()) return 0;

  auto z = sparse::kernel_basis(complex_.operator_block(OperatorKind::dbar, p, q).matrix);
  if (z.empty()) return 0;

  std::vector<Triplet> t;
  std::size_t col = 0;
  if (q >= 1) {
    const auto exact = complex_.operator_block(OperatorKind::dbar, p + 1, q - 1).matrix;
    for (std::size_t r = 0; r < exact.rows(); ++r)
      for (const auto& e : exact.row(r)) t.push_back({r, e.col, e.value});
    col = exact.cols();
  }
  const auto ad_cols = ad.transpose();
  for (const auto& v : z) {
    std::map<std::size_t, GaussianRational> image;
    for (const auto& [c, coeff] : v)
      for (const auto& e : ad_cols.row(c)) image[e.col] += coeff * e.value;
    for (auto& [r, value] : image)
      if (!value.is_zero()) t.push_back({r, col, std::move(value)});
    ++col;
  }
  const std::size_t combined = rank(SparseMatrix::from_triplets(ad.rows(), col, std::move(t)));
  return combined - dbar_rank(p + 1, q - 1);
}

FirstPage CohomologyEngine::first_page(const GradedElement& lambda, int max_degree) const {
  complex_.require_poisson(lambda);
  FirstPage page;
  page.e1 = dolbeault_dims(max_degree);
  for (const auto& [b, dim] : page.e1) {
    std::size_t r = 0;
    auto target = page.e1.find({b.p + 1, b.q});
    const bool target_known = target != page.e1.end();
    // Skip when either end is zero; the target may lie one degree past the table.
    if (dim != 0 && (!target_known || target->second != 0)) r = d1_rank(b.p, b.q, lambda);
    page.d1_rank[b] = r;
    if (r != 0) page.degenerate = false;
  }
  return page;
}

BidegreeTable CohomologyEngine::second_page(const FirstPage& page) const {
  BidegreeTable out;
  for (const auto& [b, dim] : page.e1) {
    std::size_t outgoing = page.d1_rank.count(b) ? page.d1_rank.at(b) : 0;
    auto in = page.d1_rank.find({b.p - 1, b.q});
    std::size_t incoming = in == page.d1_rank.end() ? 0 : in->second;
    out[b] = dim - outgoing - incoming;
  }
  return out;
}

namespace {

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  auto rows = basis;
  const std::size_t before = dense::row_space_basis(rows).size();
  rows.push_back(v);
  return dense::row_space_basis(std::move(rows)).size() == before;
}

Vector coordinates_10(const GradedElement& t, int n) {
  Vector out(n);
  for (const auto& [m, c] : t.terms()) out[std::countr_zero(m)] = c;
  return out;
}

}  // namespace

ObstructionResult CohomologyEngine::obstruction(const GradedElement& t) const {
  const auto& st = complex_.structure();
  const auto& spec = complex_.spec();
  const int n = complex_.n();
  if (st.dim_center != 1)
    throw Error(ErrorKind::center_dimension_not_one,
                "c^{1,0} has dimension " + std::to_string(st.dim_center) + ", the obstruction needs exactly 1");
  const int v = st.single_center_index();
  if (v < 0) throw Error(ErrorKind::center_not_coordinate, "c^{1,0} is not spanned by a basis vector");
  if (t.is_zero() || !t.is_homogeneous(n, {1, 0}))
    throw Error(ErrorKind::t_not_in_layer, "T must be a nonzero element of g^{1,0}");
  if (st.step < 2 || !in_span(st.t_layers[st.step - 2].basis, coordinates_10(t, n)))
    throw Error(ErrorKind::t_not_in_layer, "T does not lie in the layer t_{k-1}");

  ObstructionResult res;
  res.v_index = v;
  res.t_indices = t_indices(spec, v);
  res.lambda = wedge(GradedElement::generator(v), t);
  const auto rho_bar = GradedElement::generator(n + v);
  res.ad_rho_bar = complex_.schouten(res.lambda, rho_bar);

  if (complex_.schouten(t, rho_bar).is_zero()) {
    res.kind = ObstructionKind::trivial_action;
    res.x.assign(res.t_indices.size(), GaussianRational());
    return res;
  }

  // dbar X = ad_Lambda(rho_bar) for X in t^{1,0}, written in B^{1,1}.
  BlockBasis target(n, 1, 1);
  std::vector<Triplet> trip;
  for (std::size_t c = 0; c < res.t_indices.size(); ++c) {
    const auto image = complex_.dbar(GradedElement::generator(res.t_indices[c]));
    for (const auto& [m, coeff] : image.terms()) trip.push_back({target.index(m), c, coeff});
  }
  auto system = SparseMatrix::from_triplets(target.size(), res.t_indices.size(), std::move(trip));
  Vector rhs(target.size());
  for (const auto& [m, coeff] : res.ad_rho_bar.terms()) rhs[target.index(m)] = coeff;
  auto sol = solve(system, rhs);

  if (st.step == 2) {
    // Independent route through the E-matrix: D x = conj(E)^T t.
    auto d = d_rho_matrix(spec, v);
    Vector t_coords = coordinates_10(t, n);
    Vector rhs_e(res.t_indices.size());
    for (std::size_t b = 0; b < res.t_indices.size(); ++b)
      for (std::size_t j = 0; j < res.t_indices.size(); ++j)
        rhs_e[b] += t_coords[res.t_indices[j]] * spec.a(res.t_indices[j], res.t_indices[b], v).conj();
    auto sol_e = solve(d, rhs_e);
    if (sol_e.consistent != sol.consistent)
      throw ConsistencyError("obstruction: the E-matrix system and the dbar system disagree on solvability");
  }

  if (!sol.consistent) {
    res.kind = ObstructionKind::unsolvable;
    return res;
  }
  res.kind = ObstructionKind::solvable;
  res.x = sol.x;
  for (std::size_t c = 0; c < res.t_indices.size(); ++c)
    if (!sol.x[c].is_zero()) res.x_element.add(Mask{1} << res.t_indices[c], sol.x[c]);
  if (!(complex_.dbar(res.x_element) == res.ad_rho_bar))
    throw ConsistencyError("obstruction: solution X does not satisfy dbar X = [Lambda, rho_bar]");
  return res;
}

std::optional<GradedElement> CohomologyEngine::split_v_wedge_t(const GradedElement& lambda) const {
  const auto& st = complex_.structure();
  const int n = complex_.n();
  const int v = st.single_center_index();
  if (v < 0 || st.step < 2 || lambda.is_zero()) return std::nullopt;
  const Mask vbit = Mask{1} << v;
  GradedElement t;
  for (const auto& [m, c] : lambda.terms()) {
    if (!(m & vbit) || degree(m) != 2 || form_part(m, n) != 0) return std::nullopt;
    const Mask other = m ^ vbit;
    // V ^ X_j is +monomial when V comes first, -monomial otherwise.
    t.add(other, other > vbit ? c : -c);
  }
  if (!in_span(st.t_layers[st.step - 2].basis, coordinates_10(t, n))) return std::nullopt;
  return t;
}

namespace {

bool ad_vanishes(const SchoutenComplex& cx, const GradedElement& lambda) {
  for (int g = 0; g < cx.dim_L(); ++g)
    if (!cx.schouten(lambda, GradedElement::generator(g)).is_zero()) return false;
  return true;
}

HodgeVerdict compare(const BidegreeTable& hpq, const std::vector<std::size_t>& hn, bool implied) {
  HodgeVerdict verdict;
  verdict.theorem_implied = implied;
  verdict.hodge = true;
  for (std::size_t d = 0; d < hn.size(); ++d) {
    DegreeComparison c;
    c.degree = static_cast<int>(d);
    c.h_lambda = hn[d];
    for (const auto& [b, dim] : hpq)
      if (static_cast<std::size_t>(b.p + b.q) == d) c.sum_hpq += dim;
    if (c.h_lambda > c.sum_hpq)
      throw ConsistencyError("dim H^" + std::to_string(d) + "_Lambda = " + std::to_string(c.h_lambda) +
                             " exceeds the Dolbeault sum " + std::to_string(c.sum_hpq));
    if (!c.equal()) {
      verdict.hodge = false;
      if (implied)
        throw ConsistencyError("Hodge equality is theorem-implied but fails in degree " + std::to_string(d) + ": " +
                               std::to_string(c.h_lambda) + " < " + std::to_string(c.sum_hpq));
    }
    verdict.degrees.push_back(c);
  }
  return verdict;
}

}  // namespace

HodgeVerdict CohomologyEngine::hodge_verdict(const GradedElement& lambda, int max_degree) const {
  complex_.require_poisson(lambda);
  bool implied = ad_vanishes(complex_, lambda);
  if (auto t = split_v_wedge_t(lambda); t && !implied)
    implied = obstruction(*t).kind != ObstructionKind::unsolvable;
  return compare(dolbeault_dims(max_degree), total_cohomology(lambda, max_degree), implied);
}

DeformedResult CohomologyEngine::deformed_complex(const GradedElement& lambda, const GradedElement& omega_bar,
                                                  int max_degree) const {
  const int n = complex_.n();
  complex_.require_poisson(lambda);
  if (!omega_bar.is_homogeneous(n, {0, 2}))
    throw Error(ErrorKind::not_bidegree_0_2, "the deformation must lie in B^{0,2}");
  if (!(complex_.dbar(omega_bar) + complex_.schouten(lambda, omega_bar)).is_zero())
    throw Error(ErrorKind::not_integrable, "dbar_Lambda(Omega_bar) != 0");
  if (!complex_.schouten(omega_bar, omega_bar).is_zero())
    throw Error(ErrorKind::not_integrable, "[Omega_bar, Omega_bar] != 0");

  max_degree = clamp_degree(max_degree);
  const Derivation delta = complex_.dbar_derivation() + complex_.ad(lambda) + complex_.ad(omega_bar);
  DeformedResult res;
  for (int g = 0; g < complex_.dim_L(); ++g) res.generator_images.push_back(delta.image(g));

  std::vector<SparseMatrix> maps;
  const int top = std::min(max_degree, complex_.dim_L() - 1);
  for (int d = 0; d <= top; ++d) maps.push_back(delta.matrix(TotalBasis(n, d), TotalBasis(n, d + 1)));
  for (std::size_t d = 0; d + 1 < maps.size(); ++d)
    if (!(maps[d + 1] * maps[d]).is_zero())
      throw ConsistencyError("delta^2 != 0 on K^" + std::to_string(d));
  res.square_zero = true;

  std::vector<std::size_t> ranks;
  for (const auto& m : maps) ranks.push_back(rank(m));
  for (int d = 0; d <= max_degree; ++d) {
    std::size_t out = d < static_cast<int>(ranks.size()) ? ranks[d] : 0;
    std::size_t in = d >= 1 ? ranks[d - 1] : 0;
    res.dims.push_back(binomial(complex_.dim_L(), d) - out - in);
  }
  if (!maps.empty() && maps.size() > 1) {
    TotalBasis k1(n, 1);
    for (const auto& v : kernel_basis(maps[1])) {
      GradedElement e;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) e.add(k1.mask(i), v[i]);
      res.kernel_k1.push_back(std::move(e));
    }
  }
  return res;
}

CohomologyReport CohomologyEngine::analyze(const GradedElement& lambda, int max_degree) const {
  complex_.require_poisson(lambda);
  CohomologyReport rep;
  rep.name = complex_.spec().name();
  rep.dim_L = complex_.dim_L();
  rep.max_degree = clamp_degree(max_degree);
  rep.hpq = dolbeault_dims(rep.max_degree);
  rep.hn_lambda = total_cohomology(lambda, rep.max_degree);

  FirstPage page = first_page(lambda, rep.max_degree);
  rep.e1_d1_ranks = page.d1_rank;
  rep.e2 = second_page(page);
  rep.degenerate = page.degenerate;

  bool implied = ad_vanishes(complex_, lambda);
  if (implied && !page.degenerate) throw ConsistencyError("ad_Lambda vanishes but d_1 is nonzero");
  if (auto t = split_v_wedge_t(lambda)) {
    rep.obstruction = obstruction(*t);
    const bool solvable = rep.obstruction->kind != ObstructionKind::unsolvable;
    // The witness of non-degeneracy sits in degree 1, so the comparison
    // needs at least that much of the first page.
    if (rep.max_degree >= 1) {
      if (solvable != page.degenerate)
        throw ConsistencyError(std::string("obstruction is ") + std::string(to_string(rep.obstruction->kind)) +
                               " but the first page is " + (page.degenerate ? "degenerate" : "not degenerate"));
      rep.degeneracy_theorem_backed = true;
    }
    implied = implied || solvable;
  }
  rep.hodge = compare(rep.hpq, rep.hn_lambda, implied);

  // Invariants that tie the tables together.
  for (std::size_t d = 0; d < rep.hn_lambda.size(); ++d) {
    std::size_t e1 = 0, e2 = 0;
    for (const auto& [b, dim] : page.e1)
      if (static_cast<std::size_t>(b.p + b.q) == d) e1 += dim, e2 += rep.e2.at(b);
    if (rep.hn_lambda[d] > e2 || e2 > e1)
      throw ConsistencyError("E_2 sandwich fails in degree " + std::to_string(d));
  }
  if (rep.max_degree == rep.dim_L && rep.dim_L > 0) {
    long long euler = 0;
    for (std::size_t d = 0; d < rep.hn_lambda.size(); ++d)
      euler += (d % 2 ? -1 : 1) * static_cast<long long>(rep.hn_lambda[d]);
    if (euler != 0) throw ConsistencyError("Euler characteristic of the Poisson complex is nonzero");
  }
  return rep;
}

}  // namespace hpcoh
