#include "h4/smoothness.hpp"

#include <random>

#include "h4/errors.hpp"

namespace h4 {

std::string to_string(SmoothStatus s) {
  switch (s) {
    case SmoothStatus::smooth:
      return "smooth";
    case SmoothStatus::singular:
      return "singular";
    case SmoothStatus::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

namespace {

using IntMatrix = std::vector<std::vector<long>>;

IntMatrix identity3() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

long det3(const IntMatrix& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

IntMatrix random_change(std::mt19937_64& rng) {
  while (true) {
    IntMatrix a(3, std::vector<long>(3));
    for (auto& row : a) {
      for (auto& x : row) x = static_cast<long>(rng() % 7) - 3;
    }
    if (det3(a) != 0) return a;
  }
}

std::vector<std::vector<FieldElement>> to_field(const IntMatrix& a) {
  std::vector<std::vector<FieldElement>> out;
  for (const auto& row : a) out.emplace_back(row.begin(), row.end());
  return out;
}

bool all_partials_vanish(const HomForm& f, const Vec3& x) {
  for (int v = 0; v < 3; ++v) {
    if (!f.derivative(v).evaluate(std::span<const FieldElement>(x)).is_zero()) return false;
  }
  return true;
}

// Root of a univariate polynomial in `var` of degree 1.
FieldElement linear_root(const Poly& p, int var) {
  auto c = coefficients_in(p, var);
  if (c[0].is_zero()) return FieldElement(0);
  return -c[0].leading_coefficient() / c[1].leading_coefficient();
}

struct ChartOutcome {
  ChartTrail trail;
  std::optional<Vec3> singular;  // in the chart's (changed) coordinates
};

ChartOutcome examine_chart(const std::vector<HomForm>& partials, int chart_var) {
  ChartOutcome out;
  out.trail.chart_var = chart_var;
  int rest[2];
  int n = 0;
  for (int v = 0; v < 3; ++v) {
    if (v != chart_var) rest[n++] = v;
  }
  const int u = rest[0];
  const int e = rest[1];
  out.trail.eliminated_var = e;

  std::vector<Poly> eqs;
  for (const auto& d : partials) {
    Poly p = substitute(d.poly(), chart_var, FieldElement(1));
    if (p.is_zero()) continue;
    if (p.is_constant()) {
      out.trail.outcome = "clear";
      return out;
    }
    eqs.push_back(std::move(p));
  }
  if (eqs.size() < 2) {
    out.trail.outcome = "zero-resultant";
    return out;
  }
  Poly g(3);
  for (std::size_t i = 1; i < eqs.size(); ++i) {
    Poly r = resultant(eqs[0], eqs[i], e);
    out.trail.resultant_degrees.push_back(r.is_zero() ? -1 : r.degree_in(u));
    if (r.is_zero()) {
      out.trail.outcome = "zero-resultant";
      return out;
    }
    g = gcd(g, r);
  }
  out.trail.gcd_degree = g.degree_in(u);
  if (g.is_constant()) {
    out.trail.outcome = "clear";
    return out;
  }
  out.trail.outcome = "common-root";
  if (out.trail.gcd_degree != 1) return out;
  FieldElement u0 = linear_root(g, u);
  Poly h(3);
  for (const auto& p : eqs) h = gcd(h, substitute(p, u, u0));
  if (h.degree_in(e) != 1) return out;
  FieldElement e0 = linear_root(h, e);
  Vec3 x;
  x[chart_var] = FieldElement(1);
  x[u] = u0;
  x[e] = e0;
  out.singular = x;
  out.trail.outcome = "singular-point";
  return out;
}

}  // namespace

SmoothnessResult plane_curve_is_smooth(const HomForm& f, int max_retries, std::uint64_t seed) {
  if (f.nvars() != 3) throw DimensionMismatch("plane_curve_is_smooth expects a form in 3 variables");
  if (f.is_zero()) throw ZeroDivisor();
  SmoothnessResult result;
  result.coordinate_change = identity3();
  if (f.degree() <= 1) {
    result.status = SmoothStatus::smooth;
    result.squarefree = true;
    result.note = f.degree() == 0 ? "empty curve" : "line";
    return result;
  }

  // Repeated or singular components: gcd(f, f_x, f_y, f_z).
  HomForm common = f;
  for (int v = 0; v < 3 && common.degree() > 0; ++v) {
    HomForm d = f.derivative(v);
    if (!d.is_zero()) common = gcd_forms(common, d);
  }
  result.squarefree = common.degree() == 0;
  if (!result.squarefree) {
    result.status = SmoothStatus::singular;
    result.note = "f shares the component " + common.to_string() + " with all its partial derivatives";
    return result;
  }

  std::mt19937_64 rng(seed);
  IntMatrix change = identity3();
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    result.attempts = attempt + 1;
    if (attempt > 0) change = random_change(rng);
    HomForm g = attempt == 0 ? f : substitute_linear(f, to_field(change));
    std::vector<HomForm> partials{g.derivative(0), g.derivative(1), g.derivative(2)};
    bool all_clear = true;
    for (int chart = 2; chart >= 0; --chart) {
      ChartOutcome co = examine_chart(partials, chart);
      co.trail.attempt = attempt;
      result.trail.push_back(co.trail);
      if (co.singular) {
        // y singular for g(y) = f(Ay)  =>  A y singular for f.
        Vec3 x;
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) x[i] += FieldElement(change[i][j]) * (*co.singular)[j];
        }
        if (!all_partials_vanish(f, x)) throw ConsistencyError("smoothness witness failed verification");
        result.status = SmoothStatus::singular;
        result.singular_point = PlanePoint(x);
        result.coordinate_change = change;
        return result;
      }
      if (co.trail.outcome != "clear") {
        all_clear = false;
        break;
      }
    }
    if (all_clear) {
      result.status = SmoothStatus::smooth;
      result.coordinate_change = change;
      return result;
    }
  }
  result.status = SmoothStatus::indeterminate;
  result.note = "retry budget exhausted";
  return result;
}

}  // namespace h4
