#include <doctest.h>

#include "plucker/curve.hpp"
#include "test_support.hpp"

using plucker::Errc;
using plucker::alg::Divisor;
using plucker::alg::FieldElem;
using plucker::alg::Place;
using plucker::alg::UniPoly;
using plucker::curves::ProjectiveCurve;
using testsupport::errcOf;

namespace {

const UniPoly Z = UniPoly::z();
const UniPoly ONE{FieldElem(1)};

ProjectiveCurve rationalNormalCurve(int n) {
  std::vector<UniPoly> cs;
  for (int k = 0; k <= n; ++k) cs.push_back(Z.pow(static_cast<unsigned>(k)));
  return ProjectiveCurve(std::move(cs));
}

// Coordinates transformed by an invertible matrix m (rows = new coords).
ProjectiveCurve applyMatrix(const std::vector<std::vector<long>>& m,
                            const ProjectiveCurve& f) {
  std::vector<UniPoly> out;
  for (const auto& row : m) {
    UniPoly c;
    for (std::size_t j = 0; j < row.size(); ++j)
      c = c + FieldElem(row[j]) * f.coords()[j];
    out.push_back(c);
  }
  return ProjectiveCurve(std::move(out));
}

}  // namespace

TEST_CASE("normalization: scaling and common factors do not matter") {
  const std::vector<UniPoly> base{ONE, Z, Z.pow(3)};
  const ProjectiveCurve f(base);
  std::vector<UniPoly> scaled;
  const UniPoly common = (Z - ONE) * FieldElem(-7);
  for (const UniPoly& c : base) scaled.push_back(c * common);
  CHECK(ProjectiveCurve(scaled) == f);
  CHECK(f.coords()[0] == ONE);  // first nonzero coordinate made monic

  CHECK(errcOf([] {
          ProjectiveCurve({UniPoly(), UniPoly(), UniPoly()});
        }) == Errc::AllZero);
}

TEST_CASE("degree and nondegeneracy bookkeeping") {
  const ProjectiveCurve rnc = rationalNormalCurve(3);
  CHECK(rnc.ambientDim() == 3);
  CHECK(rnc.degree() == 3);
  CHECK(rnc.isNondegenerate());

  const ProjectiveCurve plane({ONE, Z, Z * FieldElem(2), Z.pow(2)});
  CHECK_FALSE(plane.isNondegenerate());
  CHECK(errcOf([&] { plane.ramificationProfile(); }) ==
        Errc::DegenerateCurve);
}

TEST_CASE("the rational normal curve is unramified everywhere") {
  for (int n : {2, 3, 4}) {
    const ProjectiveCurve rnc = rationalNormalCurve(n);
    const auto prof = rnc.ramificationProfile();
    for (int i = 1; i <= n; ++i) {
      CHECK(prof.R(i) == Divisor());
      CHECK(prof.r(i) == 0);
    }
    const auto vinf = rnc.vanishingSequence(Place::infinity());
    for (int k = 0; k <= n; ++k)
      CHECK(vinf.a[static_cast<std::size_t>(k)] == k);
  }
}

TEST_CASE("vanishing sequence goldens") {
  const ProjectiveCurve f({ONE, Z.pow(2), Z.pow(3), Z.pow(5)});
  const auto at0 = f.vanishingSequence(Place::finite(FieldElem(0)));
  CHECK(at0.a == std::vector<long>{0, 2, 3, 5});
  CHECK(at0.ramification(1) == 1);
  CHECK(at0.ramification(2) == 0);
  CHECK(at0.ramification(3) == 1);
  const auto at1 = f.vanishingSequence(Place::finite(FieldElem(1)));
  CHECK(at1.a == std::vector<long>{0, 1, 2, 3});
  const auto atInf = f.vanishingSequence(Place::infinity());
  CHECK(atInf.a == std::vector<long>{0, 2, 3, 5});

  Divisor both = Divisor::single(Place::finite(FieldElem(0)));
  both.add(Place::infinity(), 1);
  CHECK(f.ramificationDivisor(1) == both);
  CHECK(f.ramificationDivisor(2) == Divisor());
  CHECK(f.ramificationDivisor(3) == both);
}

TEST_CASE("plucker identity audit passes on a random corpus") {
  testsupport::Rng rng(80'01);
  for (int t = 0; t < 12; ++t) {
    const ProjectiveCurve f = testsupport::randomCurve(rng, 3, 6);
    const auto rep = plucker::curves::pluckerReport(f);
    CHECK(rep.passed);
    // degree balance, restated independently:
    long rhs = 0;
    for (int i = 1; i <= 3; ++i) rhs += (4 - i) * rep.profile.r(i);
    CHECK(4 * rep.degF - 12 == rhs);
  }
  for (int t = 0; t < 6; ++t) {
    const ProjectiveCurve f = testsupport::randomCurve(rng, 4, 6);
    const auto rep = plucker::curves::pluckerReport(f);
    CHECK(rep.passed);
    long rhs = 0;
    for (int i = 1; i <= 4; ++i) rhs += (5 - i) * rep.profile.r(i);
    CHECK(5 * rep.degF - 20 == rhs);
  }
}

TEST_CASE("associated curves transfer ramification") {
  const ProjectiveCurve f({ONE, Z.pow(2), Z.pow(3), Z.pow(5)});
  const auto prof = f.ramificationProfile();
  for (int i = 1; i <= 3; ++i) {
    const ProjectiveCurve fi = f.associatedCurve(i);
    CHECK(plucker::curves::branchDivisor(fi) == prof.R(i));
  }
  CHECK(f.associatedCurve(1) == f);
  CHECK(errcOf([&] { f.associatedCurve(0); }) == Errc::IndexOutOfRange);
  CHECK(errcOf([&] { f.associatedCurve(4); }) == Errc::IndexOutOfRange);
}

TEST_CASE("dual symmetry and involution") {
  testsupport::Rng rng(80'02);
  for (int t = 0; t < 8; ++t) {
    const ProjectiveCurve f = testsupport::randomCurve(rng, 3, 5);
    const ProjectiveCurve dual = f.dualCurve();
    const auto prof = f.ramificationProfile();
    const auto dprof = dual.ramificationProfile();
    for (int i = 1; i <= 3; ++i) CHECK(dprof.R(i) == prof.R(4 - i));
    CHECK(dual.dualCurve() == f);
  }
  const ProjectiveCurve quartic({ONE, Z, Z.pow(3), Z.pow(4)});
  const auto prof = quartic.ramificationProfile();
  const auto dprof = quartic.dualCurve().ramificationProfile();
  for (int i = 1; i <= 3; ++i) CHECK(dprof.R(i) == prof.R(4 - i));
  CHECK(quartic.dualCurve().dualCurve() == quartic);
}

TEST_CASE("projective invariance of every profile invariant") {
  const std::vector<std::vector<long>> m{
      {1, 2, 0, -1}, {0, 1, 3, 0}, {2, 0, 1, 0}, {0, 0, -1, 1}};  // det != 0
  testsupport::Rng rng(80'03);
  for (int t = 0; t < 5; ++t) {
    const ProjectiveCurve f = testsupport::randomCurve(rng, 3, 5);
    const ProjectiveCurve g = applyMatrix(m, f);
    CHECK(g.degree() == f.degree());
    const auto pf = f.ramificationProfile();
    const auto pg = g.ramificationProfile();
    for (int i = 1; i <= 3; ++i) {
      CHECK(pf.R(i) == pg.R(i));
      CHECK(pf.r(i) == pg.r(i));
    }
    CHECK(f.vanishingSequence(Place::infinity()).a ==
          g.vanishingSequence(Place::infinity()).a);
  }
}

TEST_CASE("branch divisor tolerates degenerate images but not constants") {
  // a plane curve inside P^3 still has a branch divisor
  const ProjectiveCurve plane({ONE, Z, Z.pow(2), Z.pow(2) * FieldElem(3)});
  CHECK(plucker::curves::branchDivisor(plane) == Divisor());
  const ProjectiveCurve branched({ONE, Z.pow(2), Z.pow(4), UniPoly()});
  CHECK(plucker::curves::branchDivisor(branched).multiplicity(
            Place::finite(FieldElem(0))) == 1);
  CHECK(errcOf([] {
          plucker::curves::branchDivisor(ProjectiveCurve({ONE, ONE * FieldElem(2)}));
        }) == Errc::DegenerateCurve);
}

TEST_CASE("chart swap at infinity") {
  const ProjectiveCurve f({ONE, Z.pow(2), Z.pow(3), Z.pow(5)});
  const ProjectiveCurve rev = f.reversed();
  CHECK(rev.degree() == f.degree());
  // orders at infinity become orders at zero
  CHECK(rev.vanishingSequence(Place::finite(FieldElem(0))).a ==
        f.vanishingSequence(Place::infinity()).a);
  CHECK(rev.reversed() == f);
}
