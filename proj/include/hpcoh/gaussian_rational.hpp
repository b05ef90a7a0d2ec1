#pragma once

#include <optional>
#include <string>

#include "hpcoh/rational.hpp"

namespace hpcoh {

// Exact element re + im*i of the Gaussian rationals Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(std::int64_t re) : re_(re) {}         // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  // Human form: "1/2", "-i/2", "1/2+3i", ...
  std::string str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  // Throws Error(division_by_zero); use checked_div for an explicit error value.
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

  GaussianRational& operator+=(const GaussianRational& b);
  GaussianRational& operator-=(const GaussianRational& b);
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational reciprocal() const;

 private:
  Rational re_;
  Rational im_;
};

std::optional<GaussianRational> checked_div(const GaussianRational& a, const GaussianRational& b);

enum class ArithOp { add, sub, mul, div, conj };

// Single entry point for the field operations; conj ignores b. Division by
// zero yields nullopt rather than throwing.
std::optional<GaussianRational> arith(const GaussianRational& a, const GaussianRational& b, ArithOp op);

}  // namespace hpcoh
