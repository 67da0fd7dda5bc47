#include "h4/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "h4/errors.hpp"

namespace h4 {

int total_degree(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

namespace {

const FieldElement kZero;

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

bool divides_monomial(const Exponents& d, const Exponents& e) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

// r -= c * x^e * b
void subtract_shifted(Poly::Terms& r, const Poly& b, const Exponents& e, const FieldElement& c) {
  for (const auto& [eb, cb] : b.terms()) {
    Exponents key = add_exponents(eb, e);
    FieldElement prod = cb * c;
    auto it = r.find(key);
    if (it == r.end()) {
      r.emplace(key, -prod);
    } else {
      it->second -= prod;
      if (it->second.is_zero()) r.erase(it);
    }
  }
}

bool is_one(const Poly& p) {
  return p.size() == 1 && p.is_constant() && p.terms().begin()->second == FieldElement(1);
}

int main_variable(const Poly& a, const Poly& b) {
  for (int v = std::max(a.nvars(), b.nvars()) - 1; v >= 0; --v) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return -1;
}

Poly one_like(const Poly& p) { return Poly::constant(p.nvars(), FieldElement(1)); }

// Last nonzero element of the subresultant remainder sequence of a, b in var.
Poly subresultant_last(Poly a, Poly b, int var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  Poly g = one_like(a);
  Poly h = one_like(a);
  while (true) {
    int delta = a.degree_in(var) - b.degree_in(var);
    Poly r = pseudo_divide(a, b, var).remainder;
    if (r.is_zero()) return b;
    if (r.degree_in(var) == 0) return r;
    a = std::move(b);
    b = divide_exact(r, g * pow(h, static_cast<unsigned>(delta)));
    g = leading_coefficient_in(a, var);
    if (delta > 0) h = divide_exact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
  }
}

}  // namespace

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw DimensionMismatch("unsupported variable count");
}

Poly Poly::constant(int nvars, const FieldElement& c) {
  Poly p(nvars);
  p.add_term(Exponents{}, c);
  return p;
}

Poly Poly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw DimensionMismatch("variable index out of range");
  Exponents e{};
  e[var] = 1;
  return monomial(nvars, e, FieldElement(1));
}

Poly Poly::monomial(int nvars, const Exponents& e, const FieldElement& c) {
  Poly p(nvars);
  for (int i = nvars; i < kMaxVars; ++i) {
    if (e[i] != 0) throw DimensionMismatch("exponent outside the variable range");
  }
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || total_degree() == 0; }

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return h4::total_degree(terms_.begin()->first);
}

int Poly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return h4::total_degree(t.first) == d; });
}

const FieldElement& Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? kZero : it->second;
}

const FieldElement& Poly::leading_coefficient() const {
  if (terms_.empty()) throw DivisionByZero();
  return terms_.begin()->second;
}

void Poly::add_term(const Exponents& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElement Poly::evaluate(std::span<const FieldElement> x) const {
  if (static_cast<int>(x.size()) != nvars_) throw DimensionMismatch("evaluation point has wrong dimension");
  // Cache powers per variable.
  std::array<std::vector<FieldElement>, kMaxVars> powers;
  for (int v = 0; v < nvars_; ++v) {
    int d = std::max(degree_in(v), 0);
    powers[v].reserve(d + 1);
    powers[v].emplace_back(1);
    for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * x[v]);
  }
  FieldElement sum;
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] != 0) t *= powers[v][e[v]];
    }
    sum += t;
  }
  return sum;
}

Poly Poly::derivative(int var) const {
  Poly d(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents ne = e;
    --ne[var];
    d.add_term(ne, c * FieldElement(e[var]));
  }
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("adding polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("subtracting polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const FieldElement& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("multiplying polynomials in different rings");
  Poly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
  }
  return r;
}

std::string Poly::to_string() const {
  static constexpr const char* names[] = {"x", "y", "z", "w"};
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [e, coeff] : terms_) {
    bool negative = coeff.is_rational() && coeff.sign() < 0;
    FieldElement c = negative ? -coeff : coeff;
    std::vector<std::string> factors;
    if (!(c == FieldElement(1) && h4::total_degree(e) > 0)) {
      factors.push_back(c.is_rational() ? c.to_string() : "(" + c.to_string() + ")");
    }
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      factors.push_back(e[v] == 1 ? names[v] : std::string(names[v]) + "^" + std::to_string(e[v]));
    }
    if (first_term) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first_term = false;
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(p.nvars(), FieldElement(1));
  Poly base = p;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

std::vector<Poly> coefficients_in(const Poly& p, int var) {
  int d = p.degree_in(var);
  std::vector<Poly> out(std::max(d + 1, 0), Poly(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    ne[var] = 0;
    out[e[var]].add_term(ne, c);
  }
  return out;
}

Poly from_coefficients(std::span<const Poly> coeffs, int var) {
  Poly r(coeffs.empty() ? 0 : coeffs.front().nvars());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms()) {
      Exponents ne = e;
      ne[var] += static_cast<int>(k);
      r.add_term(ne, c);
    }
  }
  return r;
}

Poly leading_coefficient_in(const Poly& p, int var) {
  int d = p.degree_in(var);
  Poly lc(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != d) continue;
    Exponents ne = e;
    ne[var] = 0;
    lc.add_term(ne, c);
  }
  return lc;
}

Poly substitute(const Poly& p, int var, const FieldElement& value) {
  Poly r(p.nvars());
  std::vector<FieldElement> powers{FieldElement(1)};
  for (const auto& [e, c] : p.terms()) {
    while (static_cast<int>(powers.size()) <= e[var]) powers.push_back(powers.back() * value);
    Exponents ne = e;
    ne[var] = 0;
    r.add_term(ne, c * powers[e[var]]);
  }
  return r;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * p.leading_coefficient().inv();
}

std::optional<Poly> exact_quotient(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.nvars() != b.nvars()) throw DimensionMismatch("dividing polynomials in different rings");
  if (b.is_constant()) return a * b.leading_coefficient().inv();
  Poly q(a.nvars());
  Poly::Terms r = a.terms();
  const auto& [eb, cb] = *b.terms().begin();
  FieldElement cb_inv = cb.inv();
  while (!r.empty()) {
    const auto& [er, cr] = *r.begin();
    if (!divides_monomial(eb, er)) return std::nullopt;
    Exponents e{};
    for (int i = 0; i < kMaxVars; ++i) e[i] = er[i] - eb[i];
    FieldElement c = cr * cb_inv;
    q.add_term(e, c);
    subtract_shifted(r, b, e, c);
  }
  return q;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  auto q = exact_quotient(a, b);
  if (!q) throw ConsistencyError("inexact polynomial division");
  return std::move(*q);
}

PseudoDivision pseudo_divide(const Poly& a, const Poly& b, int var) {
  if (b.is_zero()) throw DivisionByZero();
  int n = b.degree_in(var);
  int m = a.degree_in(var);
  int e = std::max(m - n + 1, 0);
  Poly lc = leading_coefficient_in(b, var);
  Poly q(a.nvars());
  Poly r = a;
  Exponents shift{};
  while (!r.is_zero() && r.degree_in(var) >= n) {
    int dr = r.degree_in(var);
    shift[var] = dr - n;
    Poly t = leading_coefficient_in(r, var) * Poly::monomial(a.nvars(), shift, FieldElement(1));
    q = q * lc + t;
    r = r * lc - t * b;
    --e;
  }
  Poly scale = pow(lc, static_cast<unsigned>(e));
  int used = std::max(m - n + 1, 0);
  return {q * scale, r * scale, used};
}

Poly content_in(const Poly& p, int var) {
  Poly g(p.nvars());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (is_one(g)) break;
  }
  return g;
}

Poly primitive_part_in(const Poly& p, int var) {
  if (p.is_zero()) return p;
  return make_monic(divide_exact(p, content_in(p, var)));
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("gcd of polynomials in different rings");
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return one_like(a);
  int v = main_variable(a, b);
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);
  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly c = gcd(ca, cb);
  Poly last = subresultant_last(divide_exact(a, ca), divide_exact(b, cb), v);
  if (last.degree_in(v) <= 0) return c;
  return make_monic(c * primitive_part_in(last, v));
}

Poly resultant(const Poly& a_in, const Poly& b_in, int var) {
  if (a_in.is_zero() || b_in.is_zero()) return Poly(a_in.nvars());
  Poly a = a_in;
  Poly b = b_in;
  int da = a.degree_in(var);
  int db = b.degree_in(var);
  if (da == 0) return pow(a, static_cast<unsigned>(db));
  if (db == 0) return pow(b, static_cast<unsigned>(da));
  FieldElement sign(1);
  if (da < db) {
    std::swap(a, b);
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;
  }
  Poly g = one_like(a);
  Poly h = one_like(a);
  while (true) {
    int dA = a.degree_in(var);
    int dB = b.degree_in(var);
    int delta = dA - dB;
    if (dA % 2 == 1 && dB % 2 == 1) sign = -sign;
    Poly r = pseudo_divide(a, b, var).remainder;
    a = std::move(b);
    if (r.is_zero()) return Poly(a.nvars());
    b = divide_exact(r, g * pow(h, static_cast<unsigned>(delta)));
    g = leading_coefficient_in(a, var);
    if (delta > 0) h = divide_exact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    if (b.degree_in(var) > 0) continue;
    int dA2 = a.degree_in(var);
    // h <- h^(1 - deg A) * lc(B)^deg A, B constant in var
    Poly res = dA2 >= 1 ? divide_exact(pow(b, static_cast<unsigned>(dA2)), pow(h, static_cast<unsigned>(dA2 - 1)))
                        : h;
    return res * sign;
  }
}

}  // namespace h4
