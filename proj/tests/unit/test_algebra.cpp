#include <doctest.h>

#include "h4/errors.hpp"
#include "h4/homform.hpp"
#include "h4/linalg.hpp"
#include "h4/polynomial.hpp"
#include "h4/smoothness.hpp"

using namespace h4;

namespace {

const FieldElement phi = FieldElement::phi();

Poly var(int n, int i) { return Poly::variable(n, i); }
Poly cst(int n, const FieldElement& c) { return Poly::constant(n, c); }

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("arithmetic and evaluation") {
    Poly x = var(2, 0);
    Poly y = var(2, 1);
    Poly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    std::vector<FieldElement> pt{phi, 1};
    CHECK(p.evaluate(pt) == phi * phi - 1);
    CHECK(p.total_degree() == 2);
    CHECK(Poly(2).total_degree() == -1);
  }

  TEST_CASE("derivative") {
    Poly x = var(3, 0);
    Poly z = var(3, 2);
    Poly p = pow(x, 3) * z + z * cst(3, phi);
    CHECK(p.derivative(0) == pow(x, 2) * z * cst(3, 3));
    CHECK(p.derivative(2) == pow(x, 3) + cst(3, phi));
  }

  TEST_CASE("exact division") {
    Poly x = var(3, 0);
    Poly y = var(3, 1);
    Poly a = (x + y * cst(3, phi)) * (x * x - y);
    auto q = exact_quotient(a, x * x - y);
    REQUIRE(q.has_value());
    CHECK(*q == x + y * cst(3, phi));
    CHECK_FALSE(exact_quotient(a, x + cst(3, 1)).has_value());
    CHECK_THROWS_AS(exact_quotient(a, Poly(3)), DivisionByZero);
  }

  TEST_CASE("gcd recovers a common factor") {
    Poly x = var(3, 0);
    Poly y = var(3, 1);
    Poly z = var(3, 2);
    Poly common = x * y - z * z * cst(3, phi);
    Poly a = common * (x + z);
    Poly b = common * (y * y - x * z + cst(3, 7));
    CHECK(gcd(a, b) == make_monic(common));
    CHECK(gcd(x + cst(3, 1), y).is_constant());
  }

  TEST_CASE("resultant of two univariate polynomials") {
    // (x - 1)(x - 2) and (x - 3): resultant = (3-1)(3-2) = 2 up to sign
    Poly x = var(1, 0);
    Poly a = (x - cst(1, 1)) * (x - cst(1, 2));
    Poly b = x - cst(1, 3);
    Poly r = resultant(a, b, 0);
    REQUIRE(r.is_constant());
    CHECK((r == cst(1, 2) || r == cst(1, -2)));
    CHECK(resultant(a, x - cst(1, 2), 0).is_zero());
  }

  TEST_CASE("printing") {
    Poly x = var(3, 0);
    Poly y = var(3, 1);
    CHECK((x * x * cst(3, 2) - y).to_string() == "2*x^2 - y");
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("rank and nullspace") {
    Matrix m(2, 3);
    m(0, 0) = 1;
    m(0, 1) = phi;
    m(0, 2) = 0;
    m(1, 0) = 2;
    m(1, 1) = phi * 2;
    m(1, 2) = 0;
    CHECK(rank(m) == 1);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) {
      for (std::size_t r = 0; r < 2; ++r) {
        FieldElement s;
        for (std::size_t c = 0; c < 3; ++c) s += m(r, c) * v[c];
        CHECK(s.is_zero());
      }
    }
  }

  TEST_CASE("full rank square matrix has trivial nullspace") {
    Matrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = phi + FieldElement(static_cast<long>(i));
    m(0, 2) = 5;
    CHECK(rank(m) == 3);
    CHECK(nullspace(m).empty());
  }
}

TEST_SUITE("homforms") {
  TEST_CASE("monomials in graded-lex order") {
    auto ms = monomials(3, 2);
    REQUIRE(ms.size() == 6);
    CHECK(ms.front() == Exponents{2, 0, 0, 0});
    CHECK(ms[1] == Exponents{1, 1, 0, 0});
    CHECK(ms.back() == Exponents{0, 0, 2, 0});
    CHECK(monomials(4, 6).size() == 84);
  }

  TEST_CASE("inhomogeneous input is rejected") {
    Poly p = var(3, 0) * var(3, 0) + var(3, 1);
    CHECK_THROWS_AS(HomForm(p, 2), DimensionMismatch);
  }

  TEST_CASE("conic through five points is unique") {
    std::vector<PlanePoint> pts;
    for (long t : {0L, 1L, 2L, 3L, -1L}) pts.emplace_back(Vec3{FieldElement(t * t), FieldElement(t), 1});
    auto basis = vanishing_space(pts, 2);
    REQUIRE(basis.size() == 1);
    // x z - y^2
    HomForm expected(var(3, 0) * var(3, 2) - var(3, 1) * var(3, 1), 2);
    CHECK(basis.front() == expected.canonical());
    for (const auto& p : pts) CHECK(basis.front().evaluate(p).is_zero());
  }

  TEST_CASE("too few points leave a larger space") {
    std::vector<PlanePoint> pts{PlanePoint(Vec3{1, 0, 0}), PlanePoint(Vec3{0, 1, 0})};
    CHECK(vanishing_space(pts, 1).size() == 1);
    CHECK(vanishing_space(pts, 2).size() == 4);
  }

  TEST_CASE("divisibility") {
    HomForm l(var(3, 0) - var(3, 1) * cst(3, phi), 1);
    HomForm q(var(3, 2) * var(3, 2) + var(3, 0) * var(3, 1), 2);
    auto d = divides(l, multiply(l, q));
    CHECK(d.divides);
    REQUIRE(d.quotient.has_value());
    CHECK(multiply(l, *d.quotient) == multiply(l, q));
    CHECK_FALSE(divides(l, q).divides);
    CHECK_THROWS_AS(divides(HomForm(3, 1), q), ZeroDivisor);
  }

  TEST_CASE("gcd of forms keeps powers of the last variable") {
    Poly x = var(3, 0);
    Poly z = var(3, 2);
    HomForm a(z * z * x, 3);
    HomForm b(z * (x + z), 2);
    CHECK(gcd_forms(a, b) == HomForm(z, 1));
  }

  TEST_CASE("restriction to a line") {
    HomForm f(var(3, 0) * var(3, 1), 2);
    PlanePoint p(Vec3{1, 0, 0});
    PlanePoint q(Vec3{0, 1, 0});
    Poly r = restrict_to_line(f, p, q);
    CHECK(r.total_degree() == 2);
    HomForm x(var(3, 0), 1);
    CHECK(restrict_to_line(x, PlanePoint(Vec3{0, 1, 0}), PlanePoint(Vec3{0, 0, 1})).is_zero());
    HomForm lf = line_form(p, q);
    CHECK(lf.evaluate(p).is_zero());
    CHECK(lf.evaluate(q).is_zero());
  }

  TEST_CASE("linear substitution") {
    HomForm f(var(3, 0) * var(3, 1), 2);
    std::vector<std::vector<FieldElement>> swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    CHECK(substitute_linear(f, swap) == f);
  }
}

TEST_SUITE("smoothness") {
  TEST_CASE("Fermat curves are smooth") {
    Poly x = var(3, 0);
    Poly y = var(3, 1);
    Poly z = var(3, 2);
    HomForm fermat(pow(x, 4) + pow(y, 4) + pow(z, 4), 4);
    auto r = plane_curve_is_smooth(fermat);
    CHECK(r.status == SmoothStatus::smooth);
    CHECK(r.squarefree);
  }

  TEST_CASE("nodal cubic is singular at the node") {
    Poly x = var(3, 0);
    Poly y = var(3, 1);
    Poly z = var(3, 2);
    // y^2 z = x^3 + x^2 z, node at [0:0:1]
    HomForm nodal(y * y * z - pow(x, 3) - x * x * z, 3);
    auto r = plane_curve_is_smooth(nodal);
    CHECK(r.status == SmoothStatus::singular);
    REQUIRE(r.singular_point.has_value());
    CHECK(*r.singular_point == PlanePoint(Vec3{0, 0, 1}));
  }

  TEST_CASE("a repeated component is singular") {
    Poly x = var(3, 0);
    Poly y = var(3, 1);
    Poly z = var(3, 2);
    Poly l = x + y + z;
    HomForm f(l * l * (x * x + y * y - z * z), 4);
    auto r = plane_curve_is_smooth(f);
    CHECK(r.status == SmoothStatus::singular);
    CHECK_FALSE(r.squarefree);
  }

  TEST_CASE("two lines meet in a singular point") {
    HomForm f(var(3, 0) * var(3, 1), 2);
    CHECK(plane_curve_is_smooth(f).status == SmoothStatus::singular);
  }

  TEST_CASE("smooth conic with golden-ratio coefficients") {
    Poly x = var(3, 0);
    Poly y = var(3, 1);
    Poly z = var(3, 2);
    HomForm f(x * x * cst(3, phi) + y * y - z * z, 2);
    CHECK(plane_curve_is_smooth(f).smooth());
  }
}
