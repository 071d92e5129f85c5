#include <doctest.h>

#include "plucker/linalg.hpp"
#include "plucker/multipoly.hpp"
#include "test_support.hpp"

using plucker::alg::FieldElem;
using plucker::alg::Mat;
using plucker::alg::MatF;
using plucker::alg::MultiPoly;
using plucker::alg::VecF;
using testsupport::randElem;

namespace {

MatF randMat(testsupport::Rng& rng, int r, int c) {
  MatF m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = randElem(rng);
  return m;
}

// Cofactor expansion along the first row: the independent determinant oracle.
FieldElem cofactorDet(const MatF& m) {
  const auto n = m.rows();
  if (n == 1) return m(0, 0);
  FieldElem det(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    MatF sub(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, sc = 0; c < n; ++c)
        if (c != j) sub(r - 1, sc++) = m(r, c);
    const FieldElem term = m(0, j) * cofactorDet(sub);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace

TEST_CASE("rref yields a reduced basis whose kernel annihilates the matrix") {
  testsupport::Rng rng(50'01);
  for (int t = 0; t < 25; ++t) {
    std::uniform_int_distribution<int> dim(1, 6);
    const int r = dim(rng), c = dim(rng);
    const MatF m = randMat(rng, r, c);
    const auto res = plucker::alg::rref(m);

    // pivot columns are reduced to unit vectors
    for (std::size_t k = 0; k < res.pivotCols.size(); ++k) {
      const int pc = res.pivotCols[k];
      for (Eigen::Index i = 0; i < res.m.rows(); ++i)
        CHECK(res.m(i, pc) ==
              (i == static_cast<Eigen::Index>(k) ? FieldElem(1)
                                                 : FieldElem(0)));
    }
    CHECK(res.pivotCols.size() + res.freeCols.size() ==
          static_cast<std::size_t>(c));

    // rank-nullity, and the kernel really is the kernel
    const auto kernel = plucker::alg::kernelBasis(m);
    CHECK(kernel.size() == res.freeCols.size());
    for (const VecF& v : kernel) {
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        FieldElem dot(0);
        for (Eigen::Index j = 0; j < m.cols(); ++j) dot += m(i, j) * v(j);
        CHECK(dot == FieldElem(0));
      }
    }
  }
}

TEST_CASE("rank is invariant under row scaling and swaps") {
  testsupport::Rng rng(50'02);
  for (int t = 0; t < 15; ++t) {
    MatF m = randMat(rng, 4, 5);
    const int before = plucker::alg::rankExact(m);
    m.row(2) *= randElem(rng) + FieldElem(7);  // nonzero scale
    m.row(0).swap(m.row(3));
    CHECK(plucker::alg::rankExact(m) == before);
  }
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
  testsupport::Rng rng(50'03);
  for (int t = 0; t < 20; ++t) {
    std::uniform_int_distribution<int> dim(1, 4);
    const int n = dim(rng);
    const MatF m = randMat(rng, n, n);
    MatF copy = m;
    CHECK(plucker::alg::bareissDet(std::move(copy)) == cofactorDet(m));
  }

  // duplicated row: determinant vanishes
  MatF s = randMat(rng, 4, 4);
  s.row(3) = s.row(1);
  CHECK(plucker::alg::bareissDet(std::move(s)) == FieldElem(0));
}

TEST_CASE("fraction-free determinant reproduces the Vandermonde product") {
  const MultiPoly a = MultiPoly::var('a'), b = MultiPoly::var('b'),
                  c = MultiPoly::var('c');
  Mat<MultiPoly> m(3, 3);
  m(0, 0) = MultiPoly(1); m(0, 1) = a; m(0, 2) = a * a;
  m(1, 0) = MultiPoly(1); m(1, 1) = b; m(1, 2) = b * b;
  m(2, 0) = MultiPoly(1); m(2, 1) = c; m(2, 2) = c * c;
  CHECK(plucker::alg::fractionFreeDet(std::move(m)) ==
        (b - a) * (c - a) * (c - b));

  // fractional entries and a zero row
  Mat<MultiPoly> f(2, 2);
  f(0, 0) = MultiPoly(plucker::alg::Rational(1, 2)); f(0, 1) = a;
  f(1, 0) = b; f(1, 1) = MultiPoly(plucker::alg::Rational(2, 3));
  CHECK(plucker::alg::fractionFreeDet(std::move(f)) ==
        MultiPoly(plucker::alg::Rational(1, 3)) - a * b);

  Mat<MultiPoly> zrow(2, 2);
  zrow(0, 0) = MultiPoly(); zrow(0, 1) = MultiPoly();
  zrow(1, 0) = a; zrow(1, 1) = b;
  CHECK(plucker::alg::fractionFreeDet(std::move(zrow)).isZero());
}

TEST_CASE("canonicalizeVector pins the scale deterministically") {
  VecF v(3);
  v(0) = FieldElem(0);
  v(1) = FieldElem(plucker::alg::Rational(-2, 3));
  v(2) = FieldElem(4);
  const VecF w = plucker::alg::canonicalizeVector(v);
  CHECK(w(0) == FieldElem(0));
  CHECK(w(1) == FieldElem(1));  // first nonzero becomes 1
  CHECK(w(2) == FieldElem(-6));
  // idempotent and scale-invariant
  const VecF w2 = plucker::alg::canonicalizeVector(w);
  for (int k = 0; k < 3; ++k) CHECK(w2(k) == w(k));
  VecF scaled = v;
  for (int k = 0; k < 3; ++k) scaled(k) *= FieldElem(-7);
  const VecF w3 = plucker::alg::canonicalizeVector(scaled);
  for (int k = 0; k < 3; ++k) CHECK(w3(k) == w(k));
}
