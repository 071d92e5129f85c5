#pragma once

#include <vector>

#include "plucker/eigen_support.hpp"

namespace plucker::alg {

// Exact reduced row echelon form over a field scalar (FieldElem or
// RatFunction).  Pivoting is "first nonzero" — exact arithmetic needs no
// magnitude heuristics, and determinism matters for canonical output.
template <class F>
struct RrefResult {
  Mat<F> m;
  std::vector<int> pivotCols;
  std::vector<int> freeCols;
};

template <class F>
RrefResult<F> rref(Mat<F> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  RrefResult<F> out;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!m(i, c).isZero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    m.row(r).swap(m.row(piv));
    F inv = F(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).isZero()) continue;
      F f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        m(i, j) = m(i, j) - f * m(r, j);
    }
    out.pivotCols.push_back(static_cast<int>(c));
    ++r;
  }
  for (int c = 0, p = 0; c < cols; ++c) {
    if (p < static_cast<int>(out.pivotCols.size()) && out.pivotCols[p] == c)
      ++p;
    else
      out.freeCols.push_back(c);
  }
  out.m = std::move(m);
  return out;
}

template <class F>
int rankExact(const Mat<F>& m) {
  return static_cast<int>(rref(m).pivotCols.size());
}

// Canonical scale for a Q(i) vector: divide by the first nonzero entry (so it
// leads with 1), then clear denominators and divide out the integer content of
// all real/imaginary parts.  The result is the unique "primitive" representative
// of the line with positive rational leading entry.
VecF canonicalizeVector(VecF v);

// Kernel basis via RREF: one vector per free column, entries filled from the
// pivot rows, each canonicalized, ordered by free column.  Deterministic.
std::vector<VecF> kernelBasis(const MatF& m);

// Bareiss fraction-free determinant over any exact integral domain providing
// exactDiv (FieldElem, UniPoly, MultiPoly, Poly<MultiPoly>).  All divisions
// are by the previous pivot and provably exact.
template <class T>
T bareissDet(Mat<T> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) fail(Errc::BadParameters, "determinant of non-square matrix");
  if (n == 0) return T(1);
  bool negate = false;
  T prev = T(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).isZero()) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (!m(i, k).isZero()) {
          piv = i;
          break;
        }
      }
      if (piv < 0) return T(0);
      m.row(k).swap(m.row(piv));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        T t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exactDiv(t, prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? -det : det;
}

// Bareiss with per-row rational content removal (multivariate entries grow
// fast without it).  Row contents are tracked in a restore factor so the
// returned value is the exact determinant.
MultiPoly fractionFreeDet(Mat<MultiPoly> m);

}  // namespace plucker::alg
