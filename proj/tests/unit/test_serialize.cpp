#include <doctest.h>

#include "h4/errors.hpp"
#include "h4/reference_data.hpp"
#include "h4/serialize.hpp"

using namespace h4;

namespace {

const H4Configuration& cfg() {
  static const H4Configuration c = build_h4();
  return c;
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("field elements") {
    FieldElement x(Rational(3, 4), Rational(-2));
    Json j = to_json(x);
    CHECK(j.dump() == R"({"a":"3/4","b":"-2"})");
    CHECK(parse_field(j) == x);
    CHECK(parse_field(Json::parse(R"({"a":5,"b":"1/2"})")) == FieldElement(Rational(5), Rational(1, 2)));
    CHECK_THROWS_AS(parse_field(Json::parse(R"({"a":"x","b":0})")), ParseError);
    CHECK_THROWS_AS(parse_field(Json::parse(R"({"a":1})")), ParseError);
  }

  TEST_CASE("forms round-trip") {
    auto q = quadric_q1();
    CHECK(parse_form(to_json(q)) == q);
    CHECK_THROWS_AS(parse_form(Json::parse(R"({"nvars":3,"degree":2,"terms":[{"exponents":[1,0,0],"coeff":{"a":1,"b":0}}]})")),
                    ParseError);
  }

  TEST_CASE("config document round-trips byte for byte") {
    auto text = dump(to_json(make_config_document(cfg())));
    auto doc = parse_config(Json::parse(text));
    CHECK(doc.points.size() == 60);
    CHECK(doc.planes.size() == 60);
    CHECK(doc.lines.size() == 72);
    CHECK(dump(to_json(doc)) == text);
  }

  TEST_CASE("coverings and grids round-trip") {
    std::vector<CoverCertificate> covers{{{1, 2, 3}}, {{4, 5, 6}}};
    CHECK(parse_coverings(to_json(covers)) == covers);
    std::vector<GridLines> grids{{{1, 25, 32, 37, 44}, {2, 26, 31, 38, 43}}};
    CHECK(parse_grids(to_json(grids)) == grids);
  }

  TEST_CASE("half-grid certificate round-trips") {
    auto cert = verify_half_grid(cfg(), 2, Half::z2, std::nullopt, false);
    auto text = dump(to_json(cert));
    auto back = parse_halfgrid_certificate(Json::parse(text));
    CHECK(dump(to_json(back)) == text);
    CHECK(recheck(cfg(), back).empty());
  }

  TEST_CASE("refutation report round-trips") {
    auto rep = verify_not_half_grid(cfg().subset(half_points(Half::z1)), 4);
    auto text = dump(to_json(rep));
    CHECK(dump(to_json(parse_refutation(Json::parse(text)))) == text);
  }

  TEST_CASE("inconsistent pass flag is rejected") {
    auto cert = verify_half_grid(cfg(), 2, Half::z1);
    Json j = to_json(cert);
    j["passed"] = false;
    CHECK_THROWS_AS(parse_halfgrid_certificate(j), ParseError);
  }
}

TEST_SUITE("geproci_certificate") {
  TEST_CASE("full certificate round-trips and rechecks") {
    auto cert = verify_geproci(cfg(), 1);
    REQUIRE(cert.passed());
    auto text = dump(to_json(cert));
    auto back = parse_geproci_certificate(Json::parse(text));
    CHECK(dump(to_json(back)) == text);
    CHECK(recheck(cfg(), back).empty());

    Json tampered = Json::parse(text);
    tampered["c6"]["terms"][1]["coeff"]["a"] = "12345";
    auto bad = parse_geproci_certificate(tampered);
    CHECK_FALSE(recheck(cfg(), bad).empty());
  }
}
