#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "h4/polynomial.hpp"
#include "h4/projective.hpp"

namespace h4 {

/// Homogeneous polynomial in 3 or 4 variables (x, y, z[, w]) over Q(sqrt5).
class HomForm {
 public:
  /// The zero form of the given shape.
  HomForm(int nvars, int degree);
  /// Throws DimensionMismatch unless `p` is homogeneous of `degree` in 3 or 4
  /// variables (the zero polynomial is accepted for any degree).
  HomForm(Poly p, int degree);

  /// c0*x + c1*y + ... from a coefficient list of length 3 or 4.
  static HomForm linear(std::span<const FieldElement> coeffs);

  int nvars() const { return poly_.nvars(); }
  int degree() const { return degree_; }
  const Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  const FieldElement& coefficient(const Exponents& e) const { return poly_.coefficient(e); }

  FieldElement evaluate(std::span<const FieldElement> x) const;
  FieldElement evaluate(const ProjPoint& p) const;
  FieldElement evaluate(const PlanePoint& p) const;

  HomForm derivative(int var) const;
  /// Scaled so the first nonzero coefficient in graded-lex order is 1.
  HomForm canonical() const;

  friend bool operator==(const HomForm&, const HomForm&) = default;
  std::string to_string() const { return poly_.to_string(); }

 private:
  Poly poly_;
  int degree_;
};

using FormBasis = std::vector<HomForm>;

/// Monomials of the given degree, in descending graded-lex order (x > y > z > w).
std::vector<Exponents> monomials(int nvars, int degree);

/// Throws DimensionMismatch when the variable counts differ.
HomForm multiply(const HomForm& f, const HomForm& g);

/// Basis of the degree-d forms vanishing at every point, from the exact
/// nullspace of the evaluation matrix (rows = points, columns = monomials in
/// graded-lex order). Each basis form is canonical.
FormBasis vanishing_space(std::span<const ProjPoint> points, int degree);
FormBasis vanishing_space(std::span<const PlanePoint> points, int degree);
/// Generic entry point: coordinates given as rows of length nvars.
FormBasis vanishing_space(std::span<const std::vector<FieldElement>> points, int degree, int nvars);

struct Divisibility {
  bool divides = false;
  std::optional<HomForm> quotient;  ///< set when divides, with f * quotient == g
};

/// Decides whether f divides g by pseudo-division in the last variable
/// followed by an exactness check. Throws ZeroDivisor when f is zero.
Divisibility divides(const HomForm& f, const HomForm& g);

/// Canonical greatest common divisor; the two forms may differ in degree.
/// Throws ZeroDivisor when both are zero.
HomForm gcd_forms(const HomForm& f, const HomForm& g);

/// f(A y) for a 3x3 or 4x4 matrix A given row-major.
HomForm substitute_linear(const HomForm& f, std::span<const std::vector<FieldElement>> rows);

/// Restriction to the line s*p + t*q, as a binary form in (s, t) stored
/// with nvars 3 (third exponent zero).
Poly restrict_to_line(const HomForm& f, const PlanePoint& p, const PlanePoint& q);

/// The linear form of the line through two distinct points of P^2.
HomForm line_form(const PlanePoint& p, const PlanePoint& q);

}  // namespace h4
