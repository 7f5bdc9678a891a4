#include <doctest.h>

#include "support/properties.hpp"

using namespace tropsched;
using Q = Scalar<Rational>;

TEST_CASE("addition is max with bottom as identity") {
  CHECK(Q::of(3) + Q::of(5) == Q::of(5));
  CHECK(Q::bottom() + Q::of(-1) == Q::of(-1));
  CHECK(Q::of(2) + Q::of(2) == Q::of(2));
  CHECK(trop_add(Q::bottom(), Q::bottom()).is_bottom());
}

TEST_CASE("multiplication is conventional addition with bottom absorbing") {
  CHECK(Q::of(4) * Q::of(-1) == Q::of(3));
  CHECK((Q::bottom() * Q::of(7)).is_bottom());
  CHECK(Q::of(0) * Q::of(9) == Q::of(9));
  CHECK(trop_mul(Q::of(7), Q::bottom()).is_bottom());
}

TEST_CASE("inverse, powers and roots") {
  CHECK(Q::of(5).inverse() == Q::of(-5));
  CHECK_THROWS_AS(Q::bottom().inverse(), DomainError);
  CHECK(Q::of(6).pow(Rational(1, 3)) == Q::of(2));
  CHECK(Q::of(-4).pow(Rational(3, 2)) == Q::of(-6));
  CHECK(Q::bottom().pow(Rational(2)).is_bottom());
  CHECK_THROWS_AS(Q::bottom().pow(Rational(0)), DomainError);
  CHECK_THROWS_AS(Q::bottom().pow(Rational(-1)), DomainError);
  CHECK(Q::of(7).root(2) == Q(Rational(7, 2)));
  CHECK(Q::bottom().root(3).is_bottom());
  CHECK_THROWS_AS(Q::of(1).root(0), DomainError);
}

TEST_CASE("bottom lies below every finite value") {
  CHECK(Q::bottom() < Q::of(-1000000));
  CHECK(Q::bottom() == Q::bottom());
  CHECK(Q::bottom() != Q::of(0));
  CHECK_THROWS_AS(Q::bottom().value(), DomainError);
  CHECK(Q::bottom().to_string() == "-inf");
  CHECK(Q(Rational(-7, 3)).to_string() == "-7/3");
}

TEST_CASE("float scalars follow the same laws") {
  using F = Scalar<double>;
  CHECK(F(1.5) + F(-2.0) == F(1.5));
  CHECK(F(1.5) * F(-2.0) == F(-0.5));
  CHECK((F::bottom() * F(3.0)).is_bottom());
  CHECK(F(3.0).root(4) == F(0.75));
}

TEST_CASE("exact number parsing") {
  CHECK(NumberTraits<Rational>::parse("12") == 12);
  CHECK(NumberTraits<Rational>::parse("-2.5") == Rational(-5, 2));
  CHECK(NumberTraits<Rational>::parse("+.125") == Rational(1, 8));
  CHECK(NumberTraits<Rational>::parse("7/3") == Rational(7, 3));
  CHECK(NumberTraits<Rational>::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(NumberTraits<Rational>::parse("1e3"), ParseError);
  CHECK_THROWS_AS(NumberTraits<Rational>::parse("1/0"), ParseError);
  CHECK_THROWS_AS(NumberTraits<Rational>::parse("abc"), ParseError);
  CHECK_THROWS_AS(NumberTraits<Rational>::parse("."), ParseError);
  CHECK_THROWS_AS(NumberTraits<Rational>::parse(""), ParseError);
  CHECK(NumberTraits<Rational>::format(Rational(-3, 2)) == "-3/2");
  CHECK(NumberTraits<Rational>::format(Rational(8)) == "8");
}

TEST_CASE("float number parsing") {
  CHECK(NumberTraits<double>::parse("1e3") == 1000.0);
  CHECK(NumberTraits<double>::parse("7/2") == 3.5);
  CHECK(NumberTraits<double>::parse("+2") == 2.0);
  CHECK_THROWS_AS(NumberTraits<double>::parse("x"), ParseError);
  CHECK(NumberTraits<double>::format(0.1) == "0.1");
}

TEST_CASE("semifield laws on random scalars") {
  gen::Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    const Q a = gen::fraction(rng, -9, 9, 0.2), b = gen::fraction(rng, -9, 9, 0.2),
            c = gen::fraction(rng, -9, 9, 0.2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + Q::bottom() == a);
    CHECK((a * Q::bottom()).is_bottom());
    CHECK(a * Q::one() == a);
    CHECK((a <= b) == (a + b == b));
    if (a.is_finite() && b.is_finite()) {
      CHECK(a * a.inverse() == Q::one());
      CHECK((a <= b) == (b.inverse() <= a.inverse()));
    }
  }
}

TEST_CASE("property suites") {
  gen::Rng rng(2024);
  for (auto [name, outcome] : {std::pair{"idempotency", props::idempotency(rng, 500)},
                               std::pair{"distributivity", props::distributivity(rng, 500)},
                               std::pair{"isotonicity", props::isotonicity(rng, 500)},
                               std::pair{"binomial identity", props::binomial_identity(rng, 500)},
                               std::pair{"means inequality", props::means_inequality(rng, 500)}}) {
    INFO(name, ": ", outcome.first);
    CHECK(outcome.ok());
    CHECK(outcome.cases == 500);
  }
}
