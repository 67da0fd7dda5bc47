#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>

#include "h4/rational.hpp"

namespace h4 {

/// An element a + b*phi of Q(sqrt 5), phi = (1 + sqrt 5) / 2.
///
/// The representation on the basis {1, phi} is unique, so equality is
/// componentwise. Products are reduced with phi^2 = phi + 1.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational a) : a_(std::move(a)) {}  // NOLINT
  FieldElement(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static FieldElement phi() { return {Rational(0), Rational(1)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  /// True when both coordinates are integers, i.e. the element lies in Z[phi].
  bool is_integral() const { return a_.is_integer() && b_.is_integer(); }

  /// Field norm N(a + b phi) = a^2 + ab - b^2.
  Rational norm() const;
  FieldElement conjugate() const;
  /// Throws DivisionByZero on zero.
  FieldElement inv() const;
  /// Exact sign of the real number a + b*phi.
  int sign() const;

  FieldElement operator-() const { return {-a_, -b_}; }
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
  friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  /// Lexicographic on (a, b); a total order for containers, not the real order.
  friend std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

  FieldElement pow(unsigned e) const;

  /// Human-readable form such as "1/2 + 3*phi".
  std::string to_string() const;
  std::size_t hash() const;

 private:
  Rational a_;
  Rational b_;
};

FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement mul(const FieldElement& x, const FieldElement& y);
FieldElement inv(const FieldElement& x);
FieldElement conjugate(const FieldElement& x);

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace h4

template <>
struct std::hash<h4::FieldElement> {
  std::size_t operator()(const h4::FieldElement& x) const noexcept { return x.hash(); }
};
