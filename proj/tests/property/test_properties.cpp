#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "h4/h4config.hpp"
#include "h4/homform.hpp"

using namespace h4;

namespace {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Rational rational() {
    long den = small(1, 12);
    return Rational(small(-50, 50), den);
  }
  FieldElement field() { return {rational(), rational()}; }
  FieldElement nonzero() {
    for (;;) {
      auto x = field();
      if (!x.is_zero()) return x;
    }
  }
  ProjMatrix invertible() {
    for (;;) {
      ProjMatrix::Rows rows;
      for (auto& r : rows) {
        for (auto& c : r) c = FieldElement(Rational(small(-3, 3)), Rational(small(-2, 2)));
      }
      ProjMatrix m(rows);
      if (!m.determinant().is_zero()) return m;
    }
  }
};

const H4Configuration& cfg() {
  static const H4Configuration c = build_h4();
  return c;
}

}  // namespace

TEST_CASE("field axioms on random triples") {
  Gen g(20240601);
  for (int i = 0; i < 10000; ++i) {
    auto a = g.field();
    auto b = g.field();
    auto c = g.field();
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + FieldElement(0) == a);
    REQUIRE(a * FieldElement(1) == a);
    REQUIRE(a - a == FieldElement(0));
    if (!a.is_zero()) REQUIRE(a * a.inv() == FieldElement(1));
    REQUIRE((a * b).norm() == a.norm() * b.norm());
    REQUIRE((a * b).conjugate() == a.conjugate() * b.conjugate());
  }
}

TEST_CASE("canonicalization is idempotent and scale invariant") {
  Gen g(7);
  for (int i = 0; i < 2000; ++i) {
    Vec4 v{g.field(), g.field(), g.field(), g.nonzero()};
    ProjPoint p(v);
    CHECK(ProjPoint(p.coords()) == p);
    auto s = g.nonzero();
    Vec4 scaled;
    for (int k = 0; k < 4; ++k) scaled[k] = v[k] * s;
    CHECK(ProjPoint(scaled) == p);
    auto first = std::find_if(p.coords().begin(), p.coords().end(), [](const FieldElement& x) { return !x.is_zero(); });
    CHECK(first->is_rational());
    CHECK(first->a().is_integer());
    CHECK(first->sign() > 0);
  }
}

TEST_CASE("incidences are invariant under coordinate changes") {
  Gen g(99);
  auto base_planes = incidence_table_planes(cfg());
  for (int trial = 0; trial < 100; ++trial) {
    auto m = g.invertible();
    std::vector<ProjPoint> pts;
    for (const auto& p : cfg().points()) pts.push_back(change_of_coords(m, p));
    for (int i = 1; i <= 60; ++i) {
      auto plane = change_of_coords(m, cfg().plane(i));
      for (int j = 1; j <= 60; ++j) {
        REQUIRE(point_on_plane(pts[j - 1], plane) == base_planes[i - 1].contains(j));
      }
    }
    for (int l = 1; l <= 72; ++l) {
      auto line = change_of_coords(m, cfg().line(l).line);
      for (int j = 1; j <= 60; ++j) REQUIRE(point_on_line(pts[j - 1], line) == cfg().line(l).points.contains(j));
    }
  }
}

TEST_CASE("vanishing space basis vanishes at every input point") {
  Gen g(31337);
  for (int trial = 0; trial < 40; ++trial) {
    int nvars = trial % 2 == 0 ? 3 : 4;
    int degree = static_cast<int>(g.small(1, 4));
    int npts = static_cast<int>(g.small(1, 20));
    std::vector<std::vector<FieldElement>> pts;
    for (int i = 0; i < npts; ++i) {
      std::vector<FieldElement> p;
      for (int k = 0; k < nvars; ++k) p.push_back(g.field());
      pts.push_back(p);
    }
    auto basis = vanishing_space(pts, degree, nvars);
    long nmon = static_cast<long>(monomials(nvars, degree).size());
    CHECK(static_cast<long>(basis.size()) >= nmon - npts);
    for (const auto& f : basis) {
      CHECK(f.degree() == degree);
      for (const auto& p : pts) REQUIRE(f.evaluate(p).is_zero());
    }
  }
  // and on the configuration itself
  for (int d = 1; d <= 3; ++d) {
    auto basis = vanishing_space(cfg().points(), d);
    for (const auto& f : basis) {
      for (const auto& p : cfg().points()) REQUIRE(f.evaluate(p).is_zero());
    }
  }
}
