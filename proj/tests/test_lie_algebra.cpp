#include <doctest.h>

#include "hpcoh/catalog.hpp"
#include "hpcoh/errors.hpp"
#include "hpcoh/lie_algebra.hpp"

using namespace hpcoh;

namespace {

GaussianRational gr(std::int64_t rn, std::int64_t rd, std::int64_t in = 0, std::int64_t id = 1) {
  return {Rational(rn, rd), Rational(in, id)};
}

Vector unit(int dim, int i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::parse_error;
}

// [conj X2, X3] = -X1, [conj X3, X3] = -X2: a 3-step algebra, center X1.
AlgebraSpec three_step() {
  return AlgebraSpec("three-step", 3, {"A", "B", "C"}, {{{1, 2, 0}, gr(-1, 1)}, {{2, 2, 1}, gr(-1, 1)}});
}

}  // namespace

TEST_CASE("torus: abelian, everything central") {
  auto spec = lookup_catalog("torus:2").spec;
  auto r = validate(spec);
  CHECK(r.jacobi_ok);
  CHECK(r.step == 1);
  CHECK(r.dim_center == 2);
  CHECK(r.center_indices == std::vector<int>{0, 1});
  REQUIRE(r.t_layers.size() == 1);
  CHECK(r.t_layers[0].indices == std::vector<int>{0, 1});
  CHECK(r.single_center_index() == -1);
}

TEST_CASE("Example 1: step 2 with center V") {
  auto spec = lookup_catalog("heisenberg-ext:1").spec;
  auto r = validate(spec);
  CHECK(r.step == 2);
  CHECK(r.dim_center == 1);
  CHECK(r.single_center_index() == 1);
  CHECK(spec.labels()[1] == "V");

  auto r2 = validate(lookup_catalog("heisenberg-ext:2").spec);
  REQUIRE(r2.t_layers.size() == 2);
  CHECK(r2.t_layers[0].indices == std::vector<int>{0, 1});
  CHECK(r2.t_layers[1].indices == std::vector<int>{2});
}

TEST_CASE("W_6 layers") {
  auto r = validate(lookup_catalog("w4n6:0").spec);
  REQUIRE(r.t_layers.size() == 2);
  CHECK(r.t_layers[0].indices == std::vector<int>{0, 1});
  CHECK(r.t_layers[1].indices == std::vector<int>{2});
  CHECK(r.t_layers[0].coordinate());
}

TEST_CASE("non-nilpotent constants are rejected") {
  // [conj X1, X1] = X1 - conj X1: the series stalls at a nonzero ideal.
  AlgebraSpec spec("bad", 1, {"X"}, {{{0, 0, 0}, 1}});
  CHECK(kind_of([&] { validate(spec); }) == ErrorKind::not_nilpotent);
}

TEST_CASE("Jacobi violations are rejected") {
  AlgebraSpec spec("bad", 3, {"A", "B", "C"}, {{{0, 2, 1}, GaussianRational::i()}, {{2, 2, 2}, -1}});
  CHECK(kind_of([&] { validate(spec); }) == ErrorKind::jacobi_violation);
}

TEST_CASE("construction errors") {
  CHECK(kind_of([] { AlgebraSpec("x", 2, {"A", "B"}, {{{0, 0, 2}, 1}}); }) == ErrorKind::index_out_of_range);
  CHECK(kind_of([] { AlgebraSpec("x", 2, {"A"}, {}); }) == ErrorKind::invalid_parameters);
  CHECK(kind_of([] { AlgebraSpec("x", 0, {}, {}); }) == ErrorKind::invalid_parameters);
}

TEST_CASE("three-step algebra") {
  auto r = validate(three_step());
  CHECK(r.step == 3);
  // g^1 = span{A, conj A, B - conj B}: the series itself is not J-invariant.
  CHECK(r.lcs_dims == std::vector<int>{6, 3, 2, 0});
  CHECK(r.single_center_index() == 0);
  REQUIRE(r.t_layers.size() == 3);
  CHECK(r.t_layers[0].indices == std::vector<int>{2});
  CHECK(r.t_layers[1].indices == std::vector<int>{1});
  CHECK(r.t_layers[2].indices == std::vector<int>{0});
}

TEST_CASE("d_rho_matrix examples") {
  auto e1 = d_rho_matrix(lookup_catalog("heisenberg-ext:1").spec, 1);
  CHECK(e1.rows() == 1);
  CHECK(e1.at(0, 0) == gr(0, 1, -1, 2));

  auto p6 = d_rho_matrix(lookup_catalog("p4n2:1").spec, 2);
  CHECK(p6.to_dense() == std::vector<Vector>{{gr(0, 1, 1, 4), gr(-1, 4)}, {gr(-1, 4), 0}});
  CHECK(rank(p6) == 2);

  auto w6 = d_rho_matrix(lookup_catalog("w4n6:0").spec, 2);
  CHECK(w6.to_dense() == std::vector<Vector>{{0, gr(-1, 2)}, {0, 0}});
  CHECK(rank(w6) == 1);

  CHECK(kind_of([] { d_rho_matrix(lookup_catalog("torus:2").spec, 0); }) == ErrorKind::center_dimension_not_one);
}

TEST_CASE("d_rho_matrix agrees with -rho([X_j, conj X_b]) from the raw bracket") {
  for (const char* name : {"heisenberg-ext:2", "double-heisenberg:2,1", "p4n2:2", "w4n6:1"}) {
    auto spec = lookup_catalog(name).spec;
    const int n = spec.n();
    const int v = n - 1;
    auto d = d_rho_matrix(spec, v);
    auto t = t_indices(spec, v);
    for (std::size_t b = 0; b < t.size(); ++b)
      for (std::size_t j = 0; j < t.size(); ++j) {
        Vector w = spec.bracket(unit(2 * n, t[j]), unit(2 * n, n + t[b]));
        CHECK(d.at(b, j) == -w[v]);
      }
  }
}

TEST_CASE("reality: B derived from A re-derives A") {
  for (const auto& f : families()) {
    std::vector<int> params = f.minimum;
    for (auto& p : params) p = std::max(p, 1);
    auto spec = build_catalog_entry(f.family, params).spec;
    const int n = spec.n();
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m) CHECK(-spec.b(j, k, m).conj() == spec.a(k, j, m));
  }
}

TEST_CASE("lower central series terminates exactly at the step") {
  std::vector<AlgebraSpec> specs{three_step()};
  for (const char* name : {"torus:3", "heisenberg-ext:3", "double-heisenberg:1,2", "p4n2:2", "w4n6:2"})
    specs.push_back(lookup_catalog(name).spec);
  for (const auto& spec : specs) {
    auto r = validate(spec);
    REQUIRE(static_cast<int>(r.lcs_dims.size()) == r.step + 1);
    CHECK(r.lcs_dims[r.step] == 0);
    CHECK(r.lcs_dims[r.step - 1] > 0);
    int total = 0;
    for (const auto& l : r.t_layers) total += l.dim();
    CHECK(total == spec.n());
    // The top layer lies in the center.
    for (const auto& v : r.t_layers.back().basis) {
      Vector full(2 * spec.n());
      std::copy(v.begin(), v.end(), full.begin());
      for (int e = 0; e < 2 * spec.n(); ++e) {
        Vector w = spec.bracket(full, unit(2 * spec.n(), e));
        CHECK(std::all_of(w.begin(), w.end(), [](const GaussianRational& x) { return x.is_zero(); }));
      }
    }
  }
}

TEST_CASE("bracket is antisymmetric and real") {
  auto spec = lookup_catalog("p4n2:1").spec;
  const int n = spec.n();
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b) {
      Vector x = spec.bracket(unit(2 * n, a), unit(2 * n, b));
      Vector y = spec.bracket(unit(2 * n, b), unit(2 * n, a));
      for (int c = 0; c < 2 * n; ++c) CHECK(x[c] == -y[c]);
      // conj([conj a, conj b]) = [a, b] with conj swapping the two halves.
      auto swap = [n](int i) { return i < n ? i + n : i - n; };
      Vector z = spec.bracket(unit(2 * n, swap(a)), unit(2 * n, swap(b)));
      for (int c = 0; c < 2 * n; ++c) CHECK(z[swap(c)].conj() == x[c]);
    }
}
