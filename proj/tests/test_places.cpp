#include <doctest.h>

#include "plucker/places.hpp"
#include "plucker/ratfunc.hpp"
#include "test_support.hpp"

using plucker::Errc;
using plucker::alg::Divisor;
using plucker::alg::FieldElem;
using plucker::alg::Place;
using plucker::alg::RatFunction;
using plucker::alg::UniPoly;
using testsupport::errcOf;

namespace {
const UniPoly Z = UniPoly::z();
const UniPoly ONE{FieldElem(1)};
}  // namespace

TEST_CASE("place construction and ordering") {
  const Place zero = Place::finite(FieldElem(0));
  const Place one = Place::finite(FieldElem(1));
  const Place inf = Place::infinity();
  const Place quad = Place::locus(Z * Z - UniPoly(FieldElem(2)));

  CHECK(zero.degree() == 1);
  CHECK(inf.degree() == 1);
  CHECK(quad.degree() == 2);

  // degree-1 loci collapse to finite points, with scaling normalized away
  CHECK(Place::locus(FieldElem(3) * Z - FieldElem(3) * ONE) == one);
  CHECK(Place::locus(Z * Z - UniPoly(FieldElem(2))) == quad);

  CHECK(zero < one);
  CHECK(one < quad);
  CHECK(quad < inf);
  CHECK(Place::compare(inf, inf) == 0);
}

TEST_CASE("valuations at the three kinds of places") {
  const UniPoly h = Z.pow(3) * (Z - ONE);
  CHECK(plucker::alg::valuation(h, Place::finite(FieldElem(0))) == 3);
  CHECK(plucker::alg::valuation(h, Place::finite(FieldElem(1))) == 1);
  CHECK(plucker::alg::valuation(h, Place::finite(FieldElem(2))) == 0);
  CHECK(plucker::alg::valuation(h, Place::infinity()) == -4);
  CHECK(errcOf([] {
          plucker::alg::valuation(UniPoly(), Place::infinity());
        }) == Errc::ZeroInput);

  // locus valuation must be uniform across the roots
  const Place pm1 = Place::locus(Z * Z - ONE);
  CHECK(plucker::alg::valuation((Z * Z - ONE).pow(2), pm1) == 2);
  CHECK(errcOf([&] { plucker::alg::valuation(Z - ONE, pm1); }) ==
        Errc::NonUniformLocus);

  // rational functions subtract denominator valuations
  const RatFunction f(Z.pow(2), (Z - ONE).pow(3));
  CHECK(plucker::alg::valuation(f, Place::finite(FieldElem(0))) == 2);
  CHECK(plucker::alg::valuation(f, Place::finite(FieldElem(1))) == -3);
  CHECK(plucker::alg::valuation(f, Place::infinity()) == 1);
}

TEST_CASE("divisor arithmetic and degree") {
  const Place zero = Place::finite(FieldElem(0));
  const Place inf = Place::infinity();
  Divisor d = Divisor::single(zero, 2);
  d.add(inf, 1);
  CHECK(d.degree() == 3);
  CHECK(d.multiplicity(zero) == 2);
  CHECK(d.multiplicity(Place::finite(FieldElem(5))) == 0);

  const Divisor e = d + Divisor::single(zero, -2);
  CHECK(e.multiplicity(zero) == 0);
  CHECK(e.degree() == 1);
  CHECK((d - d).degree() == 0);
  CHECK((d * 3).degree() == 9);
  CHECK(d.toString() == "2*(0) + (inf)");
  CHECK(Divisor().toString() == "0");
}

TEST_CASE("divisor equality is semantic across locus refinements") {
  // (z^2 - 1) as one locus equals the sum of its two points
  const Divisor asLocus = Divisor::single(Place::locus(Z * Z - ONE));
  Divisor asPoints = Divisor::single(Place::finite(FieldElem(1)));
  asPoints.add(Place::finite(FieldElem(-1)), 1);
  CHECK(asLocus == asPoints);
  CHECK(asLocus.degree() == asPoints.degree());

  // partial overlaps refine correctly
  const Divisor cube = plucker::alg::divisorOfZeros(Z.pow(3) - Z);
  Divisor split = Divisor::single(Place::finite(FieldElem(0)));
  split.add(Place::locus(Z * Z - ONE), 1);
  CHECK(cube == split);

  // multiplicity mismatch is detected
  CHECK(asLocus != asPoints * 2);
  CHECK(Divisor::single(Place::locus(Z * Z - ONE)) !=
        Divisor::single(Place::finite(FieldElem(1))));
}

TEST_CASE("divisor of zeros accounts for the full degree") {
  testsupport::Rng rng(60'01);
  for (int t = 0; t < 20; ++t) {
    const UniPoly h =
        testsupport::randPoly(rng, 2 + t % 3) * (Z - ONE).pow(t % 3);
    if (h.isZero()) continue;
    const Divisor d = plucker::alg::divisorOfZeros(h);
    CHECK(d.degree() == h.degreeOrThrow());
  }
  CHECK(plucker::alg::divisorOfZeros(ONE * FieldElem(5)).degree() == 0);
}

TEST_CASE("refinement bases are coprime, squarefree, and uniform") {
  const UniPoly a = Z.pow(2) * (Z - ONE);
  const UniPoly b = Z * (Z + ONE).pow(3);
  for (const auto& basis :
       {plucker::alg::coprimeSquarefreeBasis({a, b}),
        plucker::alg::uniformBasisFor({a, b})}) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i].squarefreePart() == basis[i].monic());
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        CHECK(gcd(basis[i], basis[j]).isConstant());
    }
  }

  // uniform basis elements give well-defined valuations of every input
  const auto uniform = plucker::alg::uniformBasisFor({a, b});
  for (const UniPoly& g : uniform) {
    const Place p = Place::locus(g);
    CHECK_NOTHROW(plucker::alg::valuation(a, p));
    CHECK_NOTHROW(plucker::alg::valuation(b, p));
  }

  // the squarefree part of each input is a product of basis elements
  const auto cs = plucker::alg::coprimeSquarefreeBasis({a, b});
  for (const UniPoly& input : {a, b}) {
    UniPoly rebuilt = ONE;
    for (const UniPoly& g : cs)
      if (gcd(input, g) == g) rebuilt *= g;
    CHECK(rebuilt == input.squarefreePart());
  }
}

TEST_CASE("placesOf turns basis elements into places") {
  const auto basis =
      plucker::alg::uniformBasisFor({Z * (Z * Z - ONE * FieldElem(2))});
  const auto places = plucker::alg::placesOf(basis);
  CHECK(places.size() == basis.size());
  long total = 0;
  for (const Place& p : places) total += p.degree();
  CHECK(total == 3);
}

TEST_CASE("locus rejects non-squarefree and constant polynomials") {
  CHECK(errcOf([] { Place::locus((Z - ONE).pow(2)); }) ==
        Errc::BadParameters);
  CHECK(errcOf([] { Place::locus(ONE); }) == Errc::ZeroInput);
  CHECK(errcOf([] { Place::locus(UniPoly()); }) == Errc::ZeroInput);
}
