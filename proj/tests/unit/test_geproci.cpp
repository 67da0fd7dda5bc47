#include <doctest.h>

#include <algorithm>

#include "h4/coverings.hpp"
#include "h4/errors.hpp"
#include "h4/geproci.hpp"
#include "h4/reference_data.hpp"

using namespace h4;

namespace {

const H4Configuration& cfg() {
  static const H4Configuration c = build_h4();
  return c;
}

const FieldElement phi = FieldElement::phi();

// A point of Q1 off the configuration flats, found by solving for x.
ProjPoint point_on_q1() {
  for (long y = 1; y < 10; ++y) {
    for (long z = 1; z < 10; ++z) {
      for (long w = 1; w < 10; ++w) {
        FieldElement x = (FieldElement(y * y) - (phi - 1) * (z * z) + phi * (w * w)) / FieldElement(2 * y);
        ProjPoint p(Vec4{x, y, z, w});
        auto proj = make_projection(cfg(), p);
        if (proj.checklist.reason == "on quadric Q1") return p;
      }
    }
  }
  FAIL("no point of Q1 found");
  return ProjPoint(1, 0, 0, 0);
}

}  // namespace

TEST_SUITE("geproci") {
  TEST_CASE("quadrics contain their grids") {
    for (int i : reference::kGrid1Points) CHECK(quadric_q1().evaluate(cfg().point(i)).is_zero());
  }

  TEST_CASE("sampler is deterministic and passes the gate") {
    auto a = sample_generic_vertex(cfg(), 1);
    auto b = sample_generic_vertex(cfg(), 1);
    CHECK(a.vertex == b.vertex);
    CHECK(a.checklist.passed());
    CHECK(a.checklist.items.size() == 6);
    CHECK(std::all_of(a.checklist.items.begin(), a.checklist.items.end(), [](const Check& c) { return c.passed; }));
    CHECK(change_of_coords(a.change, a.vertex) == ProjPoint(0, 0, 0, 1));
    CHECK_FALSE(sample_generic_vertex(cfg(), 2).vertex == a.vertex);
  }

  TEST_CASE("configuration point as vertex is rejected") {
    auto p = make_projection(cfg(), cfg().point(1));
    CHECK_FALSE(p.checklist.passed());
    CHECK(p.checklist.reason == "coincides with P1");
    auto planes = std::find_if(p.checklist.items.begin(), p.checklist.items.end(),
                               [](const Check& c) { return c.name == "off_planes"; });
    REQUIRE(planes != p.checklist.items.end());
    CHECK_FALSE(planes->passed);
  }

  TEST_CASE("vertex on V_1 is rejected") {
    // V_1 is x = 0.
    auto p = make_projection(cfg(), ProjPoint(0, 7, 11, 13));
    CHECK(p.checklist.reason.rfind("on plane V_", 0) == 0);
  }

  TEST_CASE("vertex on Q1 is rejected with its reason") {
    auto p = make_projection(cfg(), point_on_q1());
    CHECK(p.checklist.reason == "on quadric Q1");
  }

  TEST_CASE("first grid certificate") {
    auto g = verify_grid(cfg(), reference::kGrid1L, reference::kGrid1M);
    CHECK(g.points == PointSet(reference::kGrid1Points));
    CHECK(g.quadric_name == "Q1");
    CHECK(g.quadric == quadric_q1().canonical());
  }

  TEST_CASE("second grid certificate") {
    auto g = verify_grid(cfg(), reference::kGrid2L, reference::kGrid2M);
    CHECK(g.quadric_name == "Q2");
    CHECK(g.quadric == quadric_q2().canonical());
    CHECK_FALSE(g.points.intersects(PointSet(reference::kGrid1Points)));
  }

  TEST_CASE("degenerate grids are rejected") {
    CHECK_THROWS_WITH_AS(verify_grid(cfg(), reference::kGrid1L, reference::kGrid1L),
                         doctest::Contains("single line"), NotAGrid);
    std::array<int, 5> meeting{1, 2, 32, 37, 44};
    CHECK_THROWS_WITH_AS(verify_grid(cfg(), meeting, reference::kGrid1M), doctest::Contains("not skew"), NotAGrid);
    std::array<int, 5> bad_index{1, 25, 32, 37, 99};
    CHECK_THROWS_AS(verify_grid(cfg(), bad_index, reference::kGrid1M), NotAGrid);
  }

  TEST_CASE("every enumerated grid lies on a unique quadric") {
    // verify_grid throws unless the quadric is unique
    int q1 = 0;
    int q2 = 0;
    for (const auto& g : enumerate_grids(cfg())) {
      auto cert = verify_grid(cfg(), g.l, g.m);
      q1 += cert.quadric_name == "Q1";
      q2 += cert.quadric_name == "Q2";
    }
    CHECK(q1 == 1);
    CHECK(q2 == 1);
  }

  TEST_CASE("quintic cone through the first half") {
    auto proj = sample_generic_vertex(cfg(), 3);
    auto grid = verify_grid(cfg(), reference::kGrid1L, reference::kGrid1M);
    CHECK(special_lines(cfg(), grid) == std::vector<int>{17, 24});
    auto anchor = grid_anchor(cfg(), grid, 24);
    CHECK(anchor.anchor == 4);
    auto cone = build_quintic_cone(cfg(), proj, grid, 4, 24);
    CHECK(cone.form.degree() == 5);
    CHECK(cone.base_locus == grid.points);
    CHECK(set_difference(half_points(Half::z1), cone.zeros).empty());
    CHECK_THROWS_AS(build_quintic_cone(cfg(), proj, grid, 5, 24), std::invalid_argument);
    CHECK_THROWS_AS(grid_anchor(cfg(), grid, 1), std::invalid_argument);
  }

  TEST_CASE("the first grid also completes with the other special line") {
    auto proj = sample_generic_vertex(cfg(), 3);
    auto grid = verify_grid(cfg(), reference::kGrid1L, reference::kGrid1M);
    auto cone = build_quintic_cone(cfg(), proj, grid, 3, 17);
    CHECK(set_difference(cfg().line(17).points, cone.zeros).empty());
  }

  TEST_CASE("halves partition the configuration") {
    auto z1 = half_points(Half::z1);
    auto z2 = half_points(Half::z2);
    CHECK(z1.size() == 30);
    CHECK(z2.size() == 30);
    CHECK_FALSE(z1.intersects(z2));
  }

  TEST_CASE("half-grid certificates") {
    for (Half h : {Half::z1, Half::z2}) {
      CAPTURE(to_string(h));
      auto cert = verify_half_grid(cfg(), 1, h);
      CHECK(cert.passed());
      CHECK(recheck(cfg(), cert).empty());
      CHECK(cert.restriction_degrees.size() == 6);
    }
  }

  TEST_CASE("half-grid with a wrong line fails the covering check") {
    auto lines = half_cover(Half::z1);
    lines[1] = 23;
    auto cert = verify_half_grid(cfg(), 1, Half::z1, lines);
    CHECK_FALSE(cert.passed());
    auto cover = std::find_if(cert.checks.begin(), cert.checks.end(),
                              [](const Check& c) { return c.name == "lines_cover"; });
    REQUIRE(cover != cert.checks.end());
    CHECK_FALSE(cover->passed);
  }

  TEST_CASE("not-half-grid refutation") {
    auto rep = verify_not_half_grid(cfg().points(), 1);
    CHECK(rep.refuted);
    CHECK(rep.max_collinear == 5);
    CHECK(rep.dimension_table == std::vector<int>{0, 0, 0, 0, 0, 1});
    CHECK(rep.min_degree == 6);
    CHECK(rep.types == std::vector<HalfGridType>{{6, 10, true}, {10, 6, true}});
  }

  TEST_CASE("refutation fails on the first half") {
    auto rep = verify_not_half_grid(cfg().subset(half_points(Half::z1)), 1);
    CHECK_FALSE(rep.refuted);
    CHECK(rep.min_degree == 5);
  }

  TEST_CASE("refutation fails on a (6,10)-grid") {
    std::vector<ProjPoint> grid;
    for (long i = 1; i <= 6; ++i) {
      for (long j = 1; j <= 10; ++j) grid.emplace_back(i * j, i, j, 1);
    }
    auto rep = verify_not_half_grid(grid, 1);
    CHECK_FALSE(rep.refuted);
    CHECK(rep.max_collinear == 10);
  }
}
