#include <doctest.h>

#include "plucker/field_elem.hpp"
#include "test_support.hpp"

using plucker::Errc;
using plucker::alg::FieldElem;
using plucker::alg::Rational;
using testsupport::errcOf;
using testsupport::randElem;
using testsupport::randNonzero;

TEST_CASE("field axioms and conjugation under fuzzing") {
  testsupport::Rng rng(20'01);
  for (int t = 0; t < 60; ++t) {
    const FieldElem a = randElem(rng), b = randElem(rng), c = randElem(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a * a.conj() == FieldElem(a.normSq()));
    if (!a.isZero()) {
      CHECK(a * a.inverse() == FieldElem(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("i squares to -1 and normSq is positive definite") {
  CHECK(FieldElem::i() * FieldElem::i() == FieldElem(-1));
  CHECK(FieldElem::i().normSq() == Rational(1));
  CHECK(FieldElem(0).normSq() == Rational(0));
  CHECK(FieldElem(Rational(3, 4), Rational(-1, 2)).normSq() ==
        Rational(13, 16));
}

TEST_CASE("division by zero fails loudly") {
  CHECK(errcOf([] { FieldElem(1) / FieldElem(0); }) == Errc::ZeroInput);
  CHECK(errcOf([] { FieldElem(0).inverse(); }) == Errc::ZeroInput);
}

TEST_CASE("serialization round-trips through parse") {
  testsupport::Rng rng(20'02);
  for (int t = 0; t < 80; ++t) {
    const FieldElem x = randElem(rng);
    CHECK(FieldElem::parse(x.toString()) == x);
  }
}

TEST_CASE("golden serialized forms") {
  CHECK(FieldElem(3).toString() == "3");
  CHECK(FieldElem(Rational(-1, 2)).toString() == "-1/2");
  CHECK(FieldElem::i().toString() == "1*i");
  CHECK((-FieldElem::i()).toString() == "-1*i");
  CHECK(FieldElem(Rational(1, 2), Rational(-3, 4)).toString() == "1/2-3/4*i");
  CHECK(FieldElem(Rational(0), Rational(2, 7)).toString() == "2/7*i");
}

TEST_CASE("parser accepts shorthands and rejects malformed input") {
  CHECK(FieldElem::parse("i") == FieldElem::i());
  CHECK(FieldElem::parse("-i") == -FieldElem::i());
  CHECK(FieldElem::parse("+i") == FieldElem::i());
  CHECK(FieldElem::parse("2*i") == FieldElem(Rational(0), Rational(2)));
  CHECK(FieldElem::parse("2i") == FieldElem(Rational(0), Rational(2)));
  CHECK(FieldElem::parse(" 1/2 - 3/4*i ") ==
        FieldElem(Rational(1, 2), Rational(-3, 4)));
  CHECK(FieldElem::parse("-4/6") == FieldElem(Rational(-2, 3)));

  for (const char* bad : {"", "x", "1//2", "3/", "/4", "1+2", "i*i", "1.5"})
    CHECK(errcOf([bad] { FieldElem::parse(bad); }) == Errc::ParseError);
  CHECK(errcOf([] { FieldElem::parse("3/0"); }) == Errc::ParseError);
}

TEST_CASE("compareLex is a total order compatible with equality") {
  testsupport::Rng rng(20'03);
  for (int t = 0; t < 40; ++t) {
    const FieldElem a = randElem(rng), b = randElem(rng), c = randElem(rng);
    CHECK(FieldElem::compareLex(a, a) == 0);
    CHECK(FieldElem::compareLex(a, b) == -FieldElem::compareLex(b, a));
    if (FieldElem::compareLex(a, b) < 0 && FieldElem::compareLex(b, c) < 0)
      CHECK(FieldElem::compareLex(a, c) < 0);
    CHECK((FieldElem::compareLex(a, b) == 0) == (a == b));
  }
  CHECK(FieldElem::compareLex(FieldElem(0), FieldElem::i()) < 0);
}
