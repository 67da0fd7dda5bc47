#include <doctest.h>

#include "h4/errors.hpp"
#include "h4/field.hpp"
#include "h4/rational.hpp"

using h4::FieldElement;
using h4::Rational;

TEST_SUITE("exactfield") {
  TEST_CASE("rational parsing and normalization") {
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse(" -7 ") == Rational(-7));
    CHECK(Rational::parse("3/-6") == Rational(-1, 2));
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), h4::Error);
    CHECK_THROWS_AS(Rational::parse("abc"), h4::ParseError);
  }

  TEST_CASE("phi squared is phi plus one") {
    auto phi = FieldElement::phi();
    CHECK(phi * phi == phi + 1);
    CHECK((phi * phi).to_string() == "1 + phi");
  }

  TEST_CASE("inverse of phi is phi minus one") {
    auto phi = FieldElement::phi();
    CHECK(phi.inv() == phi - 1);
    CHECK(phi * (phi - 1) == FieldElement(1));
  }

  TEST_CASE("norm and conjugate") {
    FieldElement x(Rational(2), Rational(3));
    CHECK(x.norm() == Rational(4 + 6 - 9));
    CHECK(x * x.conjugate() == FieldElement(x.norm()));
    CHECK(FieldElement::phi().conjugate() == FieldElement(Rational(1), Rational(-1)));
  }

  TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(FieldElement(0).inv(), h4::DivisionByZero);
    CHECK_THROWS_AS(FieldElement(1) / FieldElement(0), h4::DivisionByZero);
  }

  TEST_CASE("exact sign") {
    auto phi = FieldElement::phi();
    CHECK(phi.sign() == 1);
    CHECK((phi - 2).sign() == -1);
    CHECK((1 - phi).sign() == -1);
    CHECK((phi * 1000 - 1618).sign() == 1);
    CHECK((phi * 1000 - 1619).sign() == -1);
    CHECK(FieldElement(0).sign() == 0);
  }

  TEST_CASE("powers") {
    auto phi = FieldElement::phi();
    // phi^n = F(n-1) + F(n) phi
    CHECK(phi.pow(10) == FieldElement(Rational(34), Rational(55)));
    CHECK(phi.pow(0) == FieldElement(1));
  }

  TEST_CASE("formatting") {
    CHECK(FieldElement(Rational(1, 2), Rational(-3)).to_string() == "1/2 - 3*phi");
    CHECK(FieldElement(0).to_string() == "0");
    CHECK(FieldElement::phi().to_string() == "phi");
  }
}
