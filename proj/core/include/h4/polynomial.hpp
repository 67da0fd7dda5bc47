#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "h4/field.hpp"

namespace h4 {

inline constexpr int kMaxVars = 4;
using Exponents = std::array<int, kMaxVars>;

int total_degree(const Exponents& e);

/// Graded lexicographic order with x0 > x1 > x2 > x3, descending; the first
/// map entry is the grlex-leading term.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial in at most kMaxVars variables over Q(sqrt5).
/// Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Exponents, FieldElement, GrlexGreater>;

  explicit Poly(int nvars = 0);
  static Poly constant(int nvars, const FieldElement& c);
  static Poly variable(int nvars, int var);
  static Poly monomial(int nvars, const Exponents& e, const FieldElement& c);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// -1 for the zero polynomial.
  int degree_in(int var) const;
  bool is_homogeneous() const;
  const FieldElement& coefficient(const Exponents& e) const;
  /// Coefficient of the grlex-leading term; throws on zero.
  const FieldElement& leading_coefficient() const;

  void add_term(const Exponents& e, const FieldElement& c);

  FieldElement evaluate(std::span<const FieldElement> x) const;
  Poly derivative(int var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const FieldElement& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElement& s) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int nvars_;
  Terms terms_;
};

Poly pow(const Poly& p, unsigned e);

/// Coefficients of p viewed as a polynomial in `var`; entry k multiplies var^k.
std::vector<Poly> coefficients_in(const Poly& p, int var);
Poly from_coefficients(std::span<const Poly> coeffs, int var);
Poly leading_coefficient_in(const Poly& p, int var);

/// Replaces `var` by a constant; the variable count is unchanged.
Poly substitute(const Poly& p, int var, const FieldElement& value);

/// Scales p so that its grlex-leading coefficient is 1 (zero stays zero).
Poly make_monic(const Poly& p);

/// Quotient a / b if b divides a exactly, otherwise nullopt. Throws
/// DivisionByZero when b is zero.
std::optional<Poly> exact_quotient(const Poly& a, const Poly& b);
/// Like exact_quotient but throws ConsistencyError on a nonzero remainder.
Poly divide_exact(const Poly& a, const Poly& b);

struct PseudoDivision {
  Poly quotient;
  Poly remainder;
  int exponent;  ///< lc_var(b)^exponent * a = quotient * b + remainder
};

/// Pseudo-division in the principal variable `var`. Throws DivisionByZero.
PseudoDivision pseudo_divide(const Poly& a, const Poly& b, int var);

/// Gcd of the coefficients of p with respect to `var` (monic).
Poly content_in(const Poly& p, int var);
Poly primitive_part_in(const Poly& p, int var);

/// Monic greatest common divisor, by subresultant remainder sequences in the
/// highest occurring variable with recursive content removal. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Resultant with respect to `var`, by the subresultant algorithm.
Poly resultant(const Poly& a, const Poly& b, int var);

}  // namespace h4
