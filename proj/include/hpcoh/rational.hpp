#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hpcoh {

// Exact rational number in lowest terms with positive denominator.
//
// Values whose numerator and denominator fit in 64 bits are stored inline and
// combined with 128-bit intermediates; anything larger is promoted to a GMP
// rational and demoted again as soon as it fits.
class Rational {
 public:
  Rational() noexcept = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  Rational(std::int64_t value) : num_(value) {
    // The small form keeps |num| <= INT64_MAX so that negation cannot overflow.
    if (value == std::numeric_limits<std::int64_t>::min()) *this = from_wide(value, 1);
  }
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  // Accepts "p", "-p", "p/q"; rejects q = 0 and anything else.
  static std::optional<Rational> parse(std::string_view text);

  // "p/q", or "p" when q = 1.
  std::string str() const;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const noexcept { return !big_; }
  int sign() const noexcept;

  mpq_class to_mpq() const;

  Rational operator-() const;
  Rational reciprocal() const;  // throws Error(division_by_zero) on zero

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace hpcoh
