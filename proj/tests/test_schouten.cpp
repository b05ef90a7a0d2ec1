#include <doctest.h>

#include <random>

#include "hpcoh/catalog.hpp"
#include "hpcoh/errors.hpp"
#include "hpcoh/expression.hpp"
#include "hpcoh/schouten_complex.hpp"
#include "oracle.hpp"

using namespace hpcoh;

namespace {

GaussianRational gr(std::int64_t rn, std::int64_t rd, std::int64_t in = 0, std::int64_t id = 1) {
  return {Rational(rn, rd), Rational(in, id)};
}

GradedElement g(int i) { return GradedElement::generator(i); }

struct Fixture {
  explicit Fixture(const std::string& name)
      : cx(lookup_catalog(name).spec), labels(cx.spec(), cx.structure().single_center_index()) {}
  GradedElement e(const std::string& text) const { return parse_expression(text, labels); }
  SchoutenComplex cx;
  Labels labels;
};

GradedElement random_element(std::mt19937& rng, int n, int degree) {
  std::uniform_int_distribution<int> gen(0, 2 * n - 1), coeff(-3, 3);
  GradedElement out;
  for (int term = 0; term < 3; ++term) {
    Mask m = 0;
    while (std::popcount(m) < degree) m |= Mask{1} << gen(rng);
    out.add(m, GaussianRational(Rational(coeff(rng)), Rational(coeff(rng) % 2)));
  }
  return out;
}

// Random homogeneous element of a fixed bidegree.
GradedElement random_homogeneous(std::mt19937& rng, int n, int p, int q) {
  std::uniform_int_distribution<int> idx(0, n - 1), coeff(-2, 2);
  GradedElement out;
  for (int term = 0; term < 3; ++term) {
    Mask v = 0, f = 0;
    while (std::popcount(v) < p) v |= Mask{1} << idx(rng);
    while (std::popcount(f) < q) f |= Mask{1} << idx(rng);
    out.add(v | (f << n), GaussianRational(Rational(coeff(rng)), Rational(coeff(rng))));
  }
  return out;
}

std::vector<std::string> catalog_upto_2() {
  return {"torus:1", "torus:2", "heisenberg-ext:1", "heisenberg-ext:2", "double-heisenberg:1,1",
          "double-heisenberg:1,2", "double-heisenberg:2,1", "double-heisenberg:2,2", "p4n2:1", "p4n2:2",
          "w4n6:0", "w4n6:1", "w4n6:2"};
}

}  // namespace

TEST_CASE("wedge examples") {
  CHECK(wedge(g(0), g(0)).is_zero());
  // conj(w^1) ^ T1 = -(T1 ^ conj(w^1)) on W_6 (n = 3).
  CHECK(wedge(g(3), g(0)) == GradedElement(0b1001, -1));
  // (V ^ T1) ^ conj(w^2) with V after T1 in the basis: V ^ T1 = -T1 ^ V.
  CHECK(wedge(wedge(g(2), g(0)), g(4)) == GradedElement(0b10101, -1));
  // And +1 when V precedes T1 in vector order (V at index 0 here).
  CHECK(wedge(wedge(g(0), g(1)), g(4)) == GradedElement(0b10011, 1));
}

TEST_CASE("wedge is associative and graded commutative") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto a = random_element(rng, 4, 1 + t % 3), b = random_element(rng, 4, 1 + t % 2), c = random_element(rng, 4, 2);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    const int da = 1 + t % 3, db = 1 + t % 2;
    auto ab = wedge(a, b), ba = wedge(b, a);
    CHECK(ab == ((da * db) % 2 ? -ba : ba));
  }
}

TEST_CASE("dbar examples") {
  Fixture w6("w4n6:0");
  for (int k = 3; k < 6; ++k) CHECK(w6.cx.dbar(g(k)).is_zero());
  CHECK(w6.cx.dbar(w6.e("T2")) == gr(-1, 2) * wedge(w6.e("w1_bar"), w6.e("V")));
  CHECK(w6.cx.dbar(w6.e("T1^w1_bar")).is_zero());
}

TEST_CASE("golden anchor: [T_j, rho_bar] = -sum_i conj(E_ji) w^i") {
  for (const char* name : {"w4n6:0", "w4n6:1", "w4n6:2", "heisenberg-ext:2", "double-heisenberg:2,1", "p4n2:2"}) {
    SchoutenComplex cx(lookup_catalog(name).spec);
    const int n = cx.n();
    const int v = n - 1;
    for (int j = 0; j < v; ++j) {
      GradedElement expected;
      for (int i = 0; i < v; ++i) {
        const auto& e = cx.spec().a(j, i, v);
        if (!e.is_zero()) expected.add(Mask{1} << (n + i), -e.conj());
      }
      CHECK(cx.schouten(g(j), g(n + v)) == expected);
    }
  }
}

TEST_CASE("golden anchor: dbar T_{2k+2} = -1/2 w^{2k+1} ^ V on W_{4n+6}") {
  for (int p = 0; p <= 2; ++p) {
    SchoutenComplex cx(lookup_catalog("w4n6:" + std::to_string(p)).spec);
    const int n = cx.n();
    const int v = n - 1;
    for (int k = 0; 2 * k + 1 < v; ++k) {
      CHECK(cx.dbar(g(2 * k + 1)) == gr(-1, 2) * wedge(g(n + 2 * k), g(v)));
      CHECK(cx.dbar(g(2 * k)).is_zero());
    }
  }
}

TEST_CASE("W_6: [V ^ T1, rho_bar] = +1/2 V ^ w^2") {
  Fixture w6("w4n6:0");
  CHECK(w6.cx.schouten(w6.e("V^T1"), w6.e("rho_bar")) == gr(1, 2) * w6.e("V^w2_bar"));
  CHECK(w6.cx.schouten(w6.e("V^T2"), w6.e("rho_bar")).is_zero());
  CHECK(w6.cx.schouten(w6.e("T1"), w6.e("T2")).is_zero());
  CHECK(w6.cx.schouten(w6.e("w1_bar"), w6.e("rho_bar")).is_zero());
}

TEST_CASE("validate_poisson examples") {
  Fixture w6("w4n6:0");
  CHECK(w6.cx.validate_poisson(w6.e("V^T1")) == PoissonVerdict::valid);
  CHECK(w6.cx.validate_poisson(w6.e("V")) == PoissonVerdict::not_bidegree_2_0);
  CHECK(w6.cx.validate_poisson(w6.e("V^w1_bar")) == PoissonVerdict::not_bidegree_2_0);
  // dbar(T1 ^ T2) = T1 ^ dbar T2 != 0.
  CHECK(w6.cx.validate_poisson(w6.e("T1^T2")) == PoissonVerdict::not_holomorphic);

  Fixture torus("torus:2");
  CHECK(torus.cx.validate_poisson(torus.e("X1^X2")) == PoissonVerdict::valid);

  // [conj B, C] = -A, [conj C, C] = -B is three-step with center A; adding an
  // abelian summand D makes the center {A, D}. dbar(C ^ D) = dbar C ^ D != 0.
  AlgebraSpec spec("x", 4, {"A", "B", "C", "D"}, {{{1, 2, 0}, -1}, {{2, 2, 1}, -1}});
  SchoutenComplex cx(spec);
  REQUIRE(cx.structure().dim_center == 2);
  Labels labels(spec, -1);
  auto lam = parse_expression("C^D", labels);
  // Expand by hand: dbar C = -(w^2 ^ A) - w^3 ^ B.
  CHECK(cx.dbar(g(2)) == -wedge(g(5), g(0)) - wedge(g(6), g(1)));
  CHECK(cx.validate_poisson(lam) == PoissonVerdict::not_holomorphic);
  CHECK_THROWS_AS(cx.require_poisson(lam), Error);
  CHECK(cx.validate_poisson(parse_expression("A^D", labels)) == PoissonVerdict::valid);
}

TEST_CASE("operator_block examples") {
  Fixture w6("w4n6:0");
  for (int q = 0; q < 3; ++q) CHECK(w6.cx.operator_block(OperatorKind::dbar, 0, q).matrix.is_zero());
  auto l2 = w6.e("V^T2");
  auto l1 = w6.e("V^T1");
  auto b2 = w6.cx.operator_block(OperatorKind::ad_lambda, 0, 1, &l2);
  CHECK(b2.matrix.is_zero());
  CHECK(b2.matrix.rows() == 9);
  CHECK(b2.matrix.cols() == 3);
  auto b1 = w6.cx.operator_block(OperatorKind::ad_lambda, 0, 1, &l1);
  CHECK(rank(b1.matrix) == 1);
  CHECK(b1.target == Bidegree{1, 1});
  auto bad = w6.e("T1^T2");
  CHECK_THROWS_AS(w6.cx.operator_block(OperatorKind::ad_lambda, 0, 1, &bad), Error);
  CHECK_THROWS_AS(w6.cx.operator_block(OperatorKind::ad_lambda, 0, 1), Error);
  // Blocks have binomial dimensions.
  auto d = w6.cx.operator_block(OperatorKind::dbar, 2, 1).matrix;
  CHECK(d.rows() == 3 * 3);
  CHECK(d.cols() == 3 * 3);
}

TEST_CASE("bi-complex identities on every catalog entry with random V^T") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& name : catalog_upto_2()) {
    SchoutenComplex cx(lookup_catalog(name).spec);
    const int n = cx.n();
    const int v = cx.structure().single_center_index();
    for (int trial = 0; trial < 4; ++trial) {
      GradedElement lambda;
      if (v >= 0 && cx.structure().step >= 2) {
        GradedElement t;
        for (int j : cx.structure().t_layers[cx.structure().step - 2].indices) t.add(Mask{1} << j, coeff(rng));
        lambda = wedge(g(v), t);
      } else {
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) lambda.add((Mask{1} << i) | (Mask{1} << j), coeff(rng));
      }
      REQUIRE(cx.validate_poisson(lambda) == PoissonVerdict::valid);
      CHECK(cx.schouten(lambda, lambda).is_zero());
      for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
          auto d = cx.operator_block(OperatorKind::dbar, p, q).matrix;
          if (q + 2 <= n)
            CHECK((cx.operator_block(OperatorKind::dbar, p, q + 1).matrix * d).is_zero());
          if (p + 1 > n) continue;
          auto ad = cx.operator_block(OperatorKind::ad_lambda, p, q, &lambda).matrix;
          if (q + 1 <= n) {
            auto lhs = cx.operator_block(OperatorKind::ad_lambda, p, q + 1, &lambda).matrix * d;
            auto rhs = cx.operator_block(OperatorKind::dbar, p + 1, q).matrix * ad;
            CHECK((lhs + rhs).is_zero());
          }
          if (p + 2 <= n) CHECK((cx.operator_block(OperatorKind::ad_lambda, p + 1, q, &lambda).matrix * ad).is_zero());
        }
    }
  }
}

TEST_CASE("derivation compatibility of dbar with wedge and bracket") {
  std::mt19937 rng(3);
  for (const char* name : {"w4n6:1", "p4n2:1", "double-heisenberg:1,1"}) {
    SchoutenComplex cx(lookup_catalog(name).spec);
    const int n = cx.n();
    for (int t = 0; t < 100; ++t) {
      const int da = 1 + t % 3, db = 1 + (t / 3) % 3;
      const int pa = t % (da + 1), pb = (t / 2) % (db + 1);
      auto a = random_homogeneous(rng, n, pa, da - pa);
      auto b = random_homogeneous(rng, n, pb, db - pb);
      const int sa = da % 2 ? -1 : 1;
      // dbar(a ^ b) = dbar a ^ b + (-1)^{|a|} a ^ dbar b
      CHECK(cx.dbar(wedge(a, b)) == wedge(cx.dbar(a), b) + GaussianRational(sa) * wedge(a, cx.dbar(b)));
      // dbar [a, b] = [dbar a, b] + (-1)^{|a|+1} [a, dbar b]
      CHECK(cx.dbar(cx.schouten(a, b)) ==
            cx.schouten(cx.dbar(a), b) + GaussianRational(-sa) * cx.schouten(a, cx.dbar(b)));
    }
  }
}

TEST_CASE("graded antisymmetry and Jacobi for the Schouten bracket") {
  std::mt19937 rng(17);
  for (const char* name : {"w4n6:0", "p4n2:1", "heisenberg-ext:2"}) {
    SchoutenComplex cx(lookup_catalog(name).spec);
    const int n = cx.n();
    auto sgn = [](int e) { return GaussianRational(e % 2 ? -1 : 1); };
    for (int t = 0; t < 60; ++t) {
      const int da = 1 + t % 2, db = 1 + (t / 2) % 2, dc = 1 + (t / 4) % 2;
      auto a = random_element(rng, n, da), b = random_element(rng, n, db), c = random_element(rng, n, dc);
      // [b, a] = -(-1)^{(|a|-1)(|b|-1)} [a, b]
      CHECK(cx.schouten(b, a) == -(sgn((da - 1) * (db - 1)) * cx.schouten(a, b)));
      // [a, [b, c]] = [[a, b], c] + (-1)^{(|a|-1)(|b|-1)} [b, [a, c]]
      CHECK(cx.schouten(a, cx.schouten(b, c)) ==
            cx.schouten(cx.schouten(a, b), c) + sgn((da - 1) * (db - 1)) * cx.schouten(b, cx.schouten(a, c)));
    }
  }
}

TEST_CASE("bracket and dbar agree with the left-expanded oracle") {
  std::mt19937 rng(23);
  for (const char* name : {"w4n6:1", "p4n2:1", "double-heisenberg:2,1"}) {
    SchoutenComplex cx(lookup_catalog(name).spec);
    oracle::Model mo(cx.spec());
    const int n = cx.n();
    for (int t = 0; t < 80; ++t) {
      auto a = random_element(rng, n, 1 + t % 3), b = random_element(rng, n, 1 + (t / 3) % 3);
      CHECK(oracle::same(mo.bracket(oracle::from(a), oracle::from(b)), cx.schouten(a, b)));
      CHECK(oracle::same(mo.dbar(oracle::from(a)), cx.dbar(a)));
      CHECK(oracle::same(oracle::wedge(oracle::from(a), oracle::from(b)), wedge(a, b)));
    }
  }
}

TEST_CASE("layer degree rule: [t_a, t_h^*] = 0 for h <= a") {
  std::vector<AlgebraSpec> specs;
  for (const auto& name : catalog_upto_2()) specs.push_back(lookup_catalog(name).spec);
  specs.push_back(AlgebraSpec("three-step", 3, {"A", "B", "C"}, {{{1, 2, 0}, -1}, {{2, 2, 1}, -1}}));
  for (const auto& spec : specs) {
    SchoutenComplex cx(spec);
    const int n = cx.n();
    const auto& layers = cx.structure().t_layers;
    for (std::size_t a = 0; a < layers.size(); ++a)
      for (std::size_t h = 0; h <= a; ++h) {
        REQUIRE(layers[a].coordinate());
        REQUIRE(layers[h].coordinate());
        for (int i : layers[a].indices)
          for (int m : layers[h].indices) CHECK(cx.schouten(g(i), g(n + m)).is_zero());
      }
  }
}

TEST_CASE("memoized blocks are stable") {
  Fixture w6("w4n6:1");
  auto l = w6.e("V^T1 + (1/2)V^T3");
  auto a = w6.cx.operator_block(OperatorKind::ad_lambda, 1, 2, &l);
  auto b = w6.cx.operator_block(OperatorKind::ad_lambda, 1, 2, &l);
  CHECK(a.matrix == b.matrix);
  CHECK(a.matrix == w6.cx.ad(l).matrix(BlockBasis(5, 1, 2), BlockBasis(5, 2, 2)));
}
