#include "h4/field.hpp"

#include "h4/errors.hpp"

namespace h4 {

Rational FieldElement::norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

FieldElement FieldElement::conjugate() const { return {a_ + b_, -b_}; }

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DivisionByZero();
  // x * conj(x) = N(x), a nonzero rational.
  Rational n = norm();
  FieldElement c = conjugate();
  return {c.a_ / n, c.b_ / n};
}

int FieldElement::sign() const {
  // a + b*phi = u + v*sqrt5 with u = a + b/2, v = b/2.
  Rational u = a_ + b_ / Rational(2);
  Rational v = b_ / Rational(2);
  int su = u.sign();
  int sv = v.sign();
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: compare u^2 with 5 v^2.
  auto c = (u * u) <=> (Rational(5) * v * v);
  if (c == 0) return 0;  // unreachable for rational u, v != 0
  return c > 0 ? su : sv;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  // (a1 + b1 phi)(a2 + b2 phi) = (a1 a2 + b1 b2) + (a1 b2 + a2 b1 + b1 b2) phi
  Rational bb = b_ * o.b_;
  Rational na = a_ * o.a_ + bb;
  Rational nb = a_ * o.b_ + o.a_ * b_ + bb;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  if (o.is_rational()) {
    if (o.a_.is_zero()) throw DivisionByZero();
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inv();
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result(1);
  FieldElement base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string FieldElement::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string bpart = b_ == Rational(1) ? "phi" : (b_ == Rational(-1) ? "-phi" : b_.to_string() + "*phi");
  if (a_.is_zero()) return bpart;
  if (b_.sign() < 0) {
    std::string pos = (-b_) == Rational(1) ? "phi" : (-b_).to_string() + "*phi";
    return a_.to_string() + " - " + pos;
  }
  return a_.to_string() + " + " + bpart;
}

std::size_t FieldElement::hash() const { return a_.hash() * 1000003U ^ b_.hash(); }

FieldElement add(const FieldElement& x, const FieldElement& y) { return x + y; }
FieldElement mul(const FieldElement& x, const FieldElement& y) { return x * y; }
FieldElement inv(const FieldElement& x) { return x.inv(); }
FieldElement conjugate(const FieldElement& x) { return x.conjugate(); }

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace h4
