#include "hpcoh/gaussian_rational.hpp"

#include "hpcoh/errors.hpp"

namespace hpcoh {

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  // Render the imaginary part as "i", "-i", "3i", "i/2", "-3i/4".
  Rational mag = im_.sign() < 0 ? -im_ : im_;
  mpq_class q = mag.to_mpq();
  std::string num = q.get_num() == 1 ? "" : q.get_num().get_str();
  imag = num + "i";
  if (q.get_den() != 1) imag += "/" + q.get_den().get_str();
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
  return re_.str() + (im_.sign() < 0 ? "-" : "+") + imag;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  if (a.im_.is_zero()) {
    if (b.im_.is_zero()) return {a.re_ * b.re_};
    return {a.re_ * b.re_, a.re_ * b.im_};
  }
  if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
  if (a.re_.is_zero() && b.re_.is_zero()) return {-(a.im_ * b.im_)};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& b) {
  if (!b.re_.is_zero()) re_ += b.re_;
  if (!b.im_.is_zero()) im_ += b.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& b) {
  if (!b.re_.is_zero()) re_ -= b.re_;
  if (!b.im_.is_zero()) im_ -= b.im_;
  return *this;
}

GaussianRational GaussianRational::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::division_by_zero, "reciprocal of zero");
  if (im_.is_zero()) return {re_.reciprocal()};
  if (re_.is_zero()) return {Rational(0), (-im_).reciprocal()};
  Rational inv = norm().reciprocal();
  return {re_ * inv, -(im_ * inv)};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  return a * b.reciprocal();
}

std::optional<GaussianRational> checked_div(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) return std::nullopt;
  return a * b.reciprocal();
}

std::optional<GaussianRational> arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return checked_div(a, b);
    case ArithOp::conj: return a.conj();
  }
  return std::nullopt;
}

}  // namespace hpcoh
