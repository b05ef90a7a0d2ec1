#pragma once

// Independent reference computations for the tests. Nothing here goes through
// the library's exterior algebra, bracket recursion or elimination kernels:
// scalars are raw GMP pairs, elements are maps from generator words, the
// bracket is expanded through the left Leibniz rule, and ranks come from a
// textbook dense elimination.

#include <algorithm>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "hpcoh/exterior.hpp"
#include "hpcoh/lie_algebra.hpp"

namespace oracle {

struct Q {
  mpq_class re = 0;
  mpq_class im = 0;
  bool zero() const { return re == 0 && im == 0; }
};

inline Q operator+(const Q& a, const Q& b) { return {a.re + b.re, a.im + b.im}; }
inline Q operator*(const Q& a, const Q& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Q neg(const Q& a) { return {-a.re, -a.im}; }
inline Q conj(const Q& a) { return {a.re, -a.im}; }
inline Q inv(const Q& a) {
  mpq_class n = a.re * a.re + a.im * a.im;
  return {a.re / n, -a.im / n};
}

inline Q from(const hpcoh::GaussianRational& c) { return {c.re().to_mpq(), c.im().to_mpq()}; }

using Word = std::vector<int>;  // generators in written order
using Elem = std::map<Word, Q>;  // keys are sorted words

inline void add_term(Elem& e, Word w, Q c) {
  // Bubble into ascending order, counting transpositions.
  bool odd = false;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
      if (w[j] == w[j + 1]) return;
      if (w[j] > w[j + 1]) std::swap(w[j], w[j + 1]), odd = !odd;
    }
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (w[j] == w[j + 1]) return;
  Q& slot = e[w];
  slot = slot + (odd ? neg(c) : c);
  if (slot.zero()) e.erase(w);
}

inline Elem plus(Elem a, const Elem& b) {
  for (const auto& [w, c] : b) add_term(a, w, c);
  return a;
}

inline Elem scale(const Q& s, const Elem& a) {
  Elem out;
  for (const auto& [w, c] : a) add_term(out, w, s * c);
  return out;
}

inline Elem wedge(const Elem& a, const Elem& b) {
  Elem out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_term(out, w, ca * cb);
    }
  return out;
}

inline Elem gen(int g) { return {{{g}, Q{1, 0}}}; }

class Model {
 public:
  explicit Model(const hpcoh::AlgebraSpec& spec) : n_(spec.n()), a_(n_ * n_ * n_) {
    for (const auto& [key, value] : spec.constants()) {
      auto [k, j, m] = key;
      a_[(k * n_ + j) * n_ + m] = from(value);
    }
  }

  int n() const { return n_; }
  const Q& a(int k, int j, int m) const { return a_[(k * n_ + j) * n_ + m]; }

  // [X_i, w^m] = -sum_b conj(A^m_{ib}) w^b, antisymmetric in the other order,
  // zero between generators of the same type.
  Elem gen_bracket(int g, int h) const {
    const bool gv = g < n_, hv = h < n_;
    if (gv == hv) return {};
    if (!gv) return scale(Q{-1, 0}, gen_bracket(h, g));
    Elem out;
    for (int b = 0; b < n_; ++b)
      if (!a(g, b, h - n_).zero()) add_term(out, {n_ + b}, neg(conj(a(g, b, h - n_))));
    return out;
  }

  // [a ^ b, c] = a ^ [b, c] + (-1)^{|b|(|c|-1)} [a, c] ^ b, splitting the
  // first generator off the left argument.
  Elem bracket_words(const Word& u, const Word& v) const {
    if (u.empty() || v.empty()) return {};
    if (u.size() == 1 && v.size() == 1) return gen_bracket(u[0], v[0]);
    if (u.size() == 1) {
      // [u, v] = -(-1)^{(|u|-1)(|v|-1)} [v, u] with |u| = 1.
      return scale(Q{-1, 0}, bracket_words(v, u));
    }
    Word head{u[0]};
    Word tail(u.begin() + 1, u.end());
    Elem first = wedge(Elem{{head, Q{1, 0}}}, bracket_words(tail, v));
    Elem second = wedge(bracket_words(head, v), Elem{{tail, Q{1, 0}}});
    const bool odd = (tail.size() * (v.size() - 1)) % 2 == 1;
    return plus(first, odd ? scale(Q{-1, 0}, second) : second);
  }

  Elem bracket(const Elem& x, const Elem& y) const {
    Elem out;
    for (const auto& [u, cu] : x)
      for (const auto& [v, cv] : y) out = plus(out, scale(cu * cv, bracket_words(u, v)));
    return out;
  }

  // dbar X_j = sum A^m_{kj} w^k ^ X_m, dbar w = 0, odd derivation.
  Elem dbar_word(const Word& w) const {
    Elem out;
    for (std::size_t s = 0; s < w.size(); ++s) {
      if (w[s] >= n_) continue;
      const int j = w[s];
      for (int k = 0; k < n_; ++k)
        for (int m = 0; m < n_; ++m) {
          if (a(k, j, m).zero()) continue;
          Word r(w.begin(), w.begin() + s);
          r.push_back(n_ + k);
          r.push_back(m);
          r.insert(r.end(), w.begin() + s + 1, w.end());
          add_term(out, r, s % 2 ? neg(a(k, j, m)) : a(k, j, m));
        }
    }
    return out;
  }

  Elem dbar(const Elem& x) const {
    Elem out;
    for (const auto& [w, c] : x) out = plus(out, scale(c, dbar_word(w)));
    return out;
  }

 private:
  int n_;
  std::vector<Q> a_;
};

inline std::size_t rank(std::vector<std::vector<Q>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q piv = inv(m[r][c]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].zero()) continue;
      Q f = neg(m[i][c] * piv);
      for (std::size_t k = c; k < cols; ++k) m[i][k] = m[i][k] + f * m[r][k];
    }
    ++r;
  }
  return r;
}

// All sorted words of length d over 2n generators, filtered by bidegree when p >= 0.
inline std::vector<Word> words(int n, int d, int p = -1) {
  std::vector<Word> out;
  std::vector<int> sel(2 * n, 0);
  std::fill(sel.begin(), sel.begin() + std::min(d, 2 * n), 1);
  if (d > 2 * n) return out;
  std::sort(sel.begin(), sel.end(), std::greater<int>());
  do {
    Word w;
    int vec = 0;
    for (int g = 0; g < 2 * n; ++g)
      if (sel[g]) w.push_back(g), vec += g < n;
    if (p < 0 || vec == p) out.push_back(w);
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return out;
}

template <typename Op>
std::vector<std::vector<Q>> matrix(const std::vector<Word>& src, const std::vector<Word>& dst, Op op) {
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
  std::vector<std::vector<Q>> m(dst.size(), std::vector<Q>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c)
    for (const auto& [w, v] : op(Elem{{src[c], Q{1, 0}}})) m.at(index.at(w))[c] = v;
  return m;
}

// dim H^q(g^{p,0}).
inline std::size_t hpq(const Model& mo, int p, int q) {
  const int n = mo.n();
  auto op = [&](const Elem& x) { return mo.dbar(x); };
  auto src = words(n, p + q, p);
  std::size_t out_rank = rank(matrix(src, words(n, p + q + 1, p), op));
  std::size_t in_rank = q == 0 ? 0 : rank(matrix(words(n, p + q - 1, p), src, op));
  return src.size() - out_rank - in_rank;
}

// dim H^d of dbar + [lambda, -] + [omega, -].
inline std::size_t hn(const Model& mo, const Elem& lambda, int d, const Elem& omega = {}) {
  const int n = mo.n();
  auto op = [&](const Elem& x) { return plus(plus(mo.dbar(x), mo.bracket(lambda, x)), mo.bracket(omega, x)); };
  auto src = words(n, d);
  std::size_t out_rank = rank(matrix(src, words(n, d + 1), op));
  std::size_t in_rank = d == 0 ? 0 : rank(matrix(words(n, d - 1), src, op));
  return src.size() - out_rank - in_rank;
}

inline Elem from(const hpcoh::GradedElement& x) {
  Elem out;
  for (const auto& [m, c] : x.terms()) {
    Word w;
    for (int g = 0; g < 32; ++g)
      if (m >> g & 1u) w.push_back(g);
    add_term(out, w, from(c));
  }
  return out;
}

inline bool same(const Elem& a, const hpcoh::GradedElement& b) {
  Elem fb = from(b);
  if (a.size() != fb.size()) return false;
  for (const auto& [w, c] : a) {
    auto it = fb.find(w);
    if (it == fb.end() || it->second.re != c.re || it->second.im != c.im) return false;
  }
  return true;
}

}  // namespace oracle
