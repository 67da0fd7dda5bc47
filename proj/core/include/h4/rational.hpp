#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace h4 {

/// Arbitrary-precision rational number, always reduced with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num) : value_(num) {}  // NOLINT
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Accepts "p", "p/q", and optional surrounding whitespace.
  static Rational parse(std::string_view text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return value_.get_str(); }
  std::size_t hash() const;

 private:
  mpq_class value_;
};

mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace h4
