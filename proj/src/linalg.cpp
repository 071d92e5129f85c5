#include "plucker/linalg.hpp"

namespace plucker::alg {

VecF canonicalizeVector(VecF v) {
  Eigen::Index first = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).isZero()) {
      first = i;
      break;
    }
  }
  if (first < 0) return v;
  FieldElem inv = v(first).inverse();
  for (Eigen::Index i = first; i < v.size(); ++i) v(i) = v(i) * inv;

  // Entries are now in Q(i) with leading entry 1.  Scale by L/g where L is the
  // lcm of all re/im denominators and g the gcd of all numerators: primitive
  // Gaussian-integer entries, leading entry a positive rational.
  mpz_class L = 1, g = 0;
  for (Eigen::Index i = first; i < v.size(); ++i) {
    for (const Rational& part : {v(i).re(), v(i).im()}) {
      if (part == 0) continue;
      L = lcm(L, part.get_den());
      g = gcd(g, part.get_num());
    }
  }
  if (g == 0) return v;
  Rational scale(L, abs(g));
  scale.canonicalize();
  FieldElem s{scale};
  for (Eigen::Index i = first; i < v.size(); ++i) v(i) = v(i) * s;
  return v;
}

std::vector<VecF> kernelBasis(const MatF& m) {
  RrefResult<FieldElem> r = rref(m);
  std::vector<VecF> out;
  out.reserve(r.freeCols.size());
  for (int fc : r.freeCols) {
    VecF v = VecF::Constant(m.cols(), FieldElem());
    v(fc) = FieldElem(1);
    for (std::size_t p = 0; p < r.pivotCols.size(); ++p)
      v(r.pivotCols[p]) = -r.m(static_cast<Eigen::Index>(p), fc);
    out.push_back(canonicalizeVector(std::move(v)));
  }
  return out;
}

MultiPoly fractionFreeDet(Mat<MultiPoly> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols())
    fail(Errc::BadParameters, "determinant of non-square matrix");
  if (n == 0) return MultiPoly(1);

  // Stripping rational content from row i multiplies every later minor that
  // uses row i — in particular the final determinant — by 1/content, and
  // leaves Bareiss' exact-division property intact (the working matrix is
  // just a row-rescaled input).  Restore at the end.
  Rational restore = 1;
  auto stripRow = [&](Eigen::Index i) {
    Rational c = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      Rational rc = m(i, j).content();
      c = (c == 0) ? rc : Rational(gcd(c.get_num(), rc.get_num()),
                                   lcm(c.get_den(), rc.get_den()));
      c.canonicalize();
    }
    if (c == 0 || c == 1) return;
    Rational invc(c.get_den(), c.get_num());
    invc.canonicalize();
    MultiPoly inv{invc};
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) *= inv;
    restore *= c;
  };
  for (Eigen::Index i = 0; i < n; ++i) stripRow(i);

  bool negate = false;
  MultiPoly prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).isZero()) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (!m(i, k).isZero()) {
          piv = i;
          break;
        }
      }
      if (piv < 0) return MultiPoly();
      m.row(k).swap(m.row(piv));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)).dividedExactBy(prev);
      m(i, k) = MultiPoly();
    }
    // Per-step content removal keeps multivariate coefficient growth in check;
    // only not-yet-pivoted rows are rescaled, so earlier divisions stay exact.
    for (Eigen::Index i = k + 1; i < n; ++i) stripRow(i);
    prev = m(k, k);
  }
  MultiPoly det = m(n - 1, n - 1) * MultiPoly(restore);
  return negate ? -det : det;
}

}  // namespace plucker::alg
