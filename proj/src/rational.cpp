#include "hpcoh/rational.hpp"

#include <charconv>
#include <limits>

#include "hpcoh/errors.hpp"

namespace hpcoh {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      auto x = static_cast<std::uint64_t>(a);
      auto y = static_cast<std::uint64_t>(b);
      while (y != 0) {
        std::uint64_t t = x % y;
        x = y;
        y = t;
      }
      return x;
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  std::uint64_t x = a < 0 ? -static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  std::uint64_t y = b < 0 ? -static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return static_cast<std::int64_t>(x);
}

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

mpz_class to_mpz(i128 v) {
  u128 u = abs128(v);
  mpz_class r = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  if (v < 0) r = -r;
  return r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::division_by_zero, "rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_)
    big_ = std::make_unique<mpq_class>(*other.big_);
  else
    big_.reset();
  return *this;
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (fits(num) && den <= kMax) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
  return r;
}

Rational Rational::from_mpq(mpq_class value) {
  value.canonicalize();
  Rational r;
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != std::numeric_limits<long>::min()) {
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(std::move(value));
  return r;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s, bool allow_sign) -> std::optional<mpz_class> {
    if (s.empty()) return std::nullopt;
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return std::nullopt;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return mpz_class(digits, 10);
  };
  std::size_t slash = text.find('/');
  auto num = parse_int(text.substr(0, slash), true);
  if (!num) return std::nullopt;
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    auto d = parse_int(text.substr(slash + 1), false);
    if (!d || *d == 0) return std::nullopt;
    den = *d;
  }
  return from_mpq(mpq_class(*num, den));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::division_by_zero, "reciprocal of zero");
  if (big_) return from_mpq(1 / *big_);
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
  if (b.num_ == 0) return a;
  if (a.num_ == 0) return b;
  if (a.den_ == b.den_) return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
  return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                             static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() * b.to_mpq());
  if (a.num_ == 0 || b.num_ == 0) return {};
  // Cross-cancel first so that the common case never leaves 64 bits.
  std::int64_t g1 = gcd64(a.num_, b.den_);
  std::int64_t g2 = gcd64(b.num_, a.den_);
  i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
  i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
  Rational r;
  if (fits(n) && d <= kMax) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(to_mpz(n), to_mpz(d));
  return r;
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;  // always canonical
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

}  // namespace hpcoh
