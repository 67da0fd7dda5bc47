#include <doctest.h>

#include "h4/errors.hpp"
#include "h4/projective.hpp"

using namespace h4;

namespace {
const FieldElement phi = FieldElement::phi();
}

TEST_SUITE("projective") {
  TEST_CASE("canonical representative ignores scaling") {
    ProjPoint a(Vec4{2, 4, 0, 6});
    ProjPoint b(Vec4{-1, -2, 0, -3});
    ProjPoint c(Vec4{phi, phi * 2, 0, phi * 3});
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.coords() == Vec4{1, 2, 0, 3});
  }

  TEST_CASE("canonical representative clears denominators") {
    ProjPoint p(Vec4{FieldElement(Rational(1, 2)), FieldElement(Rational(1, 3)), phi, 0});
    CHECK(p.coords()[0] == FieldElement(3));
    CHECK(p.coords()[1] == FieldElement(2));
    CHECK(p.coords()[2] == phi * 6);
  }

  TEST_CASE("zero vector is rejected") {
    CHECK_THROWS_AS(ProjPoint(0, 0, 0, 0), DegenerateSpan);
  }

  TEST_CASE("point on plane") {
    ProjPlane v(Vec4{1, 1, 0, 0});
    CHECK(point_on_plane(ProjPoint(1, -1, 5, 7), v));
    CHECK_FALSE(point_on_plane(ProjPoint(1, 1, 0, 0), v));
  }

  TEST_CASE("lines meet or are skew") {
    ProjLine x_axis(ProjPoint(1, 0, 0, 0), ProjPoint(0, 0, 0, 1));
    ProjLine y_axis(ProjPoint(0, 1, 0, 0), ProjPoint(0, 0, 0, 1));
    ProjLine skew(ProjPoint(0, 1, 0, 1), ProjPoint(0, 0, 1, 1));
    CHECK(lines_meet(x_axis, y_axis));
    CHECK_FALSE(lines_meet(x_axis, skew));
    CHECK_THROWS_AS(lines_meet(x_axis, x_axis), IdenticalLines);
    CHECK(intersection_point(x_axis, y_axis) == ProjPoint(0, 0, 0, 1));
  }

  TEST_CASE("line identity does not depend on spanning points") {
    ProjLine a(ProjPoint(1, 0, 0, 0), ProjPoint(0, 1, 0, 0));
    ProjLine b(ProjPoint(1, 1, 0, 0), ProjPoint(1, -1, 0, 0));
    CHECK(a == b);
    CHECK(point_on_line(ProjPoint(3, 5, 0, 0), a));
    CHECK_FALSE(point_on_line(ProjPoint(3, 5, 1, 0), a));
    CHECK_THROWS_AS(ProjLine(ProjPoint(1, 2, 3, 4), ProjPoint(2, 4, 6, 8)), DegenerateSpan);
  }

  TEST_CASE("planes through points and lines") {
    ProjPlane v = plane_through(ProjPoint(1, 0, 0, 0), ProjPoint(0, 1, 0, 0), ProjPoint(0, 0, 1, 0));
    CHECK(v == ProjPlane(Vec4{0, 0, 0, 1}));
    ProjLine l(ProjPoint(1, 0, 0, 0), ProjPoint(0, 1, 0, 0));
    CHECK(plane_through(l, ProjPoint(0, 0, 0, 1)) == ProjPlane(Vec4{0, 0, 1, 0}));
    CHECK(line_in_plane(l, ProjPlane(Vec4{0, 0, 1, 0})));
    CHECK_THROWS_AS(plane_through(ProjPoint(1, 0, 0, 0), ProjPoint(2, 0, 0, 0), ProjPoint(0, 1, 0, 0)),
                    DegenerateSpan);
  }

  TEST_CASE("collinearity") {
    CHECK(collinear(ProjPoint(1, 0, 0, 0), ProjPoint(0, 1, 0, 0), ProjPoint(1, 1, 0, 0)));
    CHECK_FALSE(collinear(ProjPoint(1, 0, 0, 0), ProjPoint(0, 1, 0, 0), ProjPoint(0, 0, 1, 0)));
  }

  TEST_CASE("matrix inverse and determinant") {
    ProjMatrix m(ProjMatrix::Rows{Vec4{1, phi, 0, 0}, Vec4{0, 1, 2, 0}, Vec4{0, 0, 1, phi}, Vec4{1, 0, 0, 1}});
    CHECK(m * m.inverse() == ProjMatrix::identity());
    CHECK(m.determinant() * m.inverse().determinant() == FieldElement(1));
    ProjMatrix s(ProjMatrix::Rows{Vec4{1, 2, 0, 0}, Vec4{2, 4, 0, 0}, Vec4{0, 0, 1, 0}, Vec4{0, 0, 0, 1}});
    CHECK_THROWS_AS(s.inverse(), SingularMatrix);
  }

  TEST_CASE("coordinate changes preserve incidence") {
    ProjMatrix m(ProjMatrix::Rows{Vec4{2, 1, 0, phi}, Vec4{0, 1, 3, 0}, Vec4{1, 0, 1, 0}, Vec4{0, phi, 0, 1}});
    ProjPoint p(1, -1, 0, 0);
    ProjPlane v(Vec4{1, 1, 7, 0});
    REQUIRE(point_on_plane(p, v));
    CHECK(point_on_plane(change_of_coords(m, p), change_of_coords(m, v)));
  }

  TEST_CASE("vertex goes to the last coordinate point") {
    for (const auto& vertex : {ProjPoint(3, -2, 7, 5), ProjPoint(1, 0, 0, 0), ProjPoint(0, 0, 4, 0)}) {
      ProjMatrix m = vertex_to_origin(vertex);
      CHECK(change_of_coords(m, vertex) == ProjPoint(0, 0, 0, 1));
      CHECK_FALSE(m.determinant().is_zero());
    }
  }
}
