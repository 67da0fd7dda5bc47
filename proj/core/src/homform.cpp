#include "h4/homform.hpp"

#include <algorithm>

#include "h4/errors.hpp"
#include "h4/linalg.hpp"

namespace h4 {

HomForm::HomForm(int nvars, int degree) : poly_(nvars), degree_(degree) {
  if (nvars != 3 && nvars != 4) throw DimensionMismatch("forms have 3 or 4 variables");
  if (degree < 0) throw DimensionMismatch("negative degree");
}

HomForm::HomForm(Poly p, int degree) : poly_(std::move(p)), degree_(degree) {
  if (poly_.nvars() != 3 && poly_.nvars() != 4) throw DimensionMismatch("forms have 3 or 4 variables");
  if (degree < 0) throw DimensionMismatch("negative degree");
  for (const auto& [e, c] : poly_.terms()) {
    if (total_degree(e) != degree) throw DimensionMismatch("polynomial is not homogeneous of the stated degree");
  }
}

HomForm HomForm::linear(std::span<const FieldElement> coeffs) {
  int n = static_cast<int>(coeffs.size());
  Poly p(n);
  for (int i = 0; i < n; ++i) {
    Exponents e{};
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return HomForm(std::move(p), 1);
}

FieldElement HomForm::evaluate(std::span<const FieldElement> x) const {
  if (static_cast<int>(x.size()) != nvars()) throw DimensionMismatch("point dimension does not match the form");
  return poly_.evaluate(x);
}

FieldElement HomForm::evaluate(const ProjPoint& p) const { return evaluate(std::span<const FieldElement>(p.coords())); }

FieldElement HomForm::evaluate(const PlanePoint& p) const { return evaluate(std::span<const FieldElement>(p.coords())); }

HomForm HomForm::derivative(int var) const {
  if (degree_ == 0) return HomForm(nvars(), 0);
  return HomForm(poly_.derivative(var), degree_ - 1);
}

HomForm HomForm::canonical() const { return HomForm(make_monic(poly_), degree_); }

std::vector<Exponents> monomials(int nvars, int degree) {
  std::vector<Exponents> out;
  Exponents e{};
  // Recursive fill in lexicographically descending order.
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  if (nvars > 0) rec(rec, 0, degree);
  return out;
}

HomForm multiply(const HomForm& f, const HomForm& g) {
  if (f.nvars() != g.nvars()) throw DimensionMismatch("multiplying forms in different rings");
  return HomForm(f.poly() * g.poly(), f.degree() + g.degree());
}

FormBasis vanishing_space(std::span<const std::vector<FieldElement>> points, int degree, int nvars) {
  auto monos = monomials(nvars, degree);
  Matrix m(points.size(), monos.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto& p = points[r];
    if (static_cast<int>(p.size()) != nvars) throw DimensionMismatch("point dimension does not match nvars");
    std::vector<std::vector<FieldElement>> powers(nvars);
    for (int v = 0; v < nvars; ++v) {
      powers[v].emplace_back(1);
      for (int k = 1; k <= degree; ++k) powers[v].push_back(powers[v].back() * p[v]);
    }
    for (std::size_t c = 0; c < monos.size(); ++c) {
      FieldElement t(1);
      for (int v = 0; v < nvars; ++v) {
        if (monos[c][v] != 0) t *= powers[v][monos[c][v]];
      }
      m(r, c) = std::move(t);
    }
  }
  FormBasis basis;
  for (const auto& vec : nullspace(m)) {
    Poly p(nvars);
    for (std::size_t c = 0; c < monos.size(); ++c) p.add_term(monos[c], vec[c]);
    basis.emplace_back(std::move(p), degree);
  }
  return basis;
}

namespace {

template <typename Point>
std::vector<std::vector<FieldElement>> as_rows(std::span<const Point> points) {
  std::vector<std::vector<FieldElement>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.emplace_back(p.coords().begin(), p.coords().end());
  return rows;
}

}  // namespace

FormBasis vanishing_space(std::span<const ProjPoint> points, int degree) {
  auto rows = as_rows(points);
  return vanishing_space(rows, degree, 4);
}

FormBasis vanishing_space(std::span<const PlanePoint> points, int degree) {
  auto rows = as_rows(points);
  return vanishing_space(rows, degree, 3);
}

Divisibility divides(const HomForm& f, const HomForm& g) {
  if (f.is_zero()) throw ZeroDivisor();
  if (f.nvars() != g.nvars()) throw DimensionMismatch("divisibility across different rings");
  if (g.is_zero()) return {true, HomForm(g.nvars(), std::max(g.degree() - f.degree(), 0))};
  if (f.degree() > g.degree()) return {};
  int var = f.nvars() - 1;
  PseudoDivision pd = pseudo_divide(g.poly(), f.poly(), var);
  if (!pd.remainder.is_zero()) return {};
  Poly lc_power = pow(leading_coefficient_in(f.poly(), var), static_cast<unsigned>(pd.exponent));
  auto q = exact_quotient(pd.quotient, lc_power);
  if (!q) return {};
  if (f.poly() * *q != g.poly()) throw ConsistencyError("divides: quotient does not reproduce the dividend");
  return {true, HomForm(std::move(*q), g.degree() - f.degree())};
}

HomForm gcd_forms(const HomForm& f, const HomForm& g) {
  if (f.nvars() != g.nvars()) throw DimensionMismatch("gcd across different rings");
  if (f.is_zero() && g.is_zero()) throw ZeroDivisor();
  if (f.is_zero()) return g.canonical();
  if (g.is_zero()) return f.canonical();
  const int v = f.nvars() - 1;
  auto valuation = [v](const Poly& p) {
    int m = p.total_degree();
    for (const auto& [e, c] : p.terms()) m = std::min(m, e[v]);
    return m;
  };
  int k = std::min(valuation(f.poly()), valuation(g.poly()));
  Poly d = gcd(substitute(f.poly(), v, FieldElement(1)), substitute(g.poly(), v, FieldElement(1)));
  int dd = d.total_degree();
  Poly h(f.nvars());
  for (const auto& [e, c] : d.terms()) {
    Exponents ne = e;
    ne[v] = dd - total_degree(e) + k;
    h.add_term(ne, c);
  }
  return HomForm(make_monic(h), dd + k);
}

HomForm substitute_linear(const HomForm& f, std::span<const std::vector<FieldElement>> rows) {
  const int n = f.nvars();
  if (static_cast<int>(rows.size()) != n) throw DimensionMismatch("substitution matrix has wrong size");
  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw DimensionMismatch("substitution matrix has wrong size");
    Poly li(n);
    for (int j = 0; j < n; ++j) {
      Exponents e{};
      e[j] = 1;
      li.add_term(e, rows[i][j]);
    }
    images.push_back(std::move(li));
  }
  std::vector<std::vector<Poly>> powers(n);
  for (int i = 0; i < n; ++i) {
    powers[i].push_back(Poly::constant(n, FieldElement(1)));
    for (int k = 1; k <= f.degree(); ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Poly out(n);
  for (const auto& [e, c] : f.poly().terms()) {
    Poly t = Poly::constant(n, c);
    for (int i = 0; i < n; ++i) {
      if (e[i] != 0) t = t * powers[i][e[i]];
    }
    out += t;
  }
  return HomForm(std::move(out), f.degree());
}

Poly restrict_to_line(const HomForm& f, const PlanePoint& p, const PlanePoint& q) {
  if (f.nvars() != 3) throw DimensionMismatch("restrict_to_line expects a plane form");
  // x_i = p_i s + q_i t
  std::vector<std::vector<FieldElement>> rows(3, std::vector<FieldElement>(3));
  for (int i = 0; i < 3; ++i) {
    rows[i][0] = p[i];
    rows[i][1] = q[i];
  }
  return substitute_linear(f, rows).poly();
}

HomForm line_form(const PlanePoint& p, const PlanePoint& q) {
  if (p == q) throw DegenerateSpan("line through coincident plane points");
  std::array<FieldElement, 3> c{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
  return HomForm::linear(c).canonical();
}

}  // namespace h4
