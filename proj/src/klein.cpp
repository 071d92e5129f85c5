#include "plucker/klein.hpp"

#include <algorithm>

#include "plucker/linalg.hpp"

namespace plucker::klein {

using alg::Mat;
using alg::Rational;
using alg::Vec;
using alg::VecF;

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
// Complementary pair index and signs of the Lambda^4 pairing: the coefficient
// of v0^v1^v2^v3 in w ^ w' is sum_m kSign[m] w[m] w'[kComp[m]].
constexpr int kComp[6] = {5, 4, 3, 2, 1, 0};
constexpr int kSign[6] = {1, -1, 1, 1, -1, 1};

FieldElem wedge4(const VecF& v, const VecF& w) {
  FieldElem s(0);
  for (int m = 0; m < 6; ++m) {
    FieldElem t = v(m) * w(kComp[m]);
    s = kSign[m] > 0 ? s + t : s - t;
  }
  return s;
}

UniPoly lcmPoly(const UniPoly& a, const UniPoly& b) {
  return divideExact(a * b, gcd(a, b)).monic();
}

// Kernel vectors read off a reduced row echelon form, one per free column.
template <class F>
std::vector<Vec<F>> kernelFromRref(const alg::RrefResult<F>& r) {
  const Eigen::Index cols = r.m.cols();
  std::vector<Vec<F>> out;
  for (int fc : r.freeCols) {
    Vec<F> v(cols);
    for (Eigen::Index i = 0; i < cols; ++i) v(i) = F(0);
    v(fc) = F(1);
    for (std::size_t p = 0; p < r.pivotCols.size(); ++p)
      v(r.pivotCols[p]) = -r.m(static_cast<Eigen::Index>(p), fc);
    out.push_back(std::move(v));
  }
  return out;
}

MatF zeroMat(int rows, int cols) {
  MatF m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = FieldElem(0);
  return m;
}

// X = T x : W-model coordinates of the standard form to standard-quadric
// coordinates.  Splits X1^2 + X2^2 = (X1 + iX2)(X1 - iX2) over Q(i) so that
// q_W = 2 (q_X o T) holds exactly.
const MatF& modelMapT() {
  static const MatF t = [] {
    MatF m = zeroMat(5, 5);
    const Rational half(1, 2);
    m(0, 0) = FieldElem(1);
    m(1, 1) = FieldElem(half);
    m(1, 3) = FieldElem(half);
    m(2, 1) = FieldElem(Rational(0), -half);
    m(2, 3) = FieldElem(Rational(0), half);
    m(3, 2) = FieldElem(1);
    m(4, 4) = FieldElem(1);
    return m;
  }();
  return t;
}

const MatF& modelMapTInv() {
  static const MatF t = [] {
    MatF m = zeroMat(5, 5);
    m(0, 0) = FieldElem(1);
    m(1, 1) = FieldElem(1);
    m(1, 2) = FieldElem::i();
    m(2, 3) = FieldElem(1);
    m(3, 1) = FieldElem(1);
    m(3, 2) = -FieldElem::i();
    m(4, 4) = FieldElem(1);
    return m;
  }();
  return t;
}

std::vector<UniPoly> applyLinear(const MatF& m,
                                 const std::vector<UniPoly>& v) {
  std::vector<UniPoly> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    UniPoly s;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).isZero()) s = s + v[static_cast<std::size_t>(j)] * m(i, j);
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

MatF identityMat(int n) {
  MatF m = zeroMat(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = FieldElem(1);
  return m;
}

MatF inverseMat(const MatF& m) {
  const int n = static_cast<int>(m.rows());
  MatF aug(n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      aug(i, j) = m(i, j);
      aug(i, n + j) = i == j ? FieldElem(1) : FieldElem(0);
    }
  const alg::RrefResult<FieldElem> rr = alg::rref(aug);
  for (int k = 0; k < n; ++k)
    if (static_cast<int>(rr.pivotCols.size()) <= k || rr.pivotCols[static_cast<std::size_t>(k)] != k)
      fail(Errc::Internal, "matrix must be invertible");
  MatF inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = rr.m(i, n + j);
  return inv;
}

// Induced action on bivectors in lex pair coordinates.
MatF lambda2(const MatF& s) {
  MatF m(6, 6);
  for (int a = 0; a < 6; ++a)
    for (int c = 0; c < 6; ++c) {
      const int i = kPairs[a][0], j = kPairs[a][1];
      const int k = kPairs[c][0], l = kPairs[c][1];
      m(a, c) = s(i, k) * s(j, l) - s(i, l) * s(j, k);
    }
  return m;
}

MatF standardBetaMatrix() {
  MatF b = zeroMat(4, 4);
  b(0, 3) = b(1, 2) = FieldElem(1);
  b(3, 0) = b(2, 1) = FieldElem(-1);
  return b;
}

// Darboux basis: columns u0, u1, v1, v0 with beta(u0,v0) = beta(u1,v1) = 1
// and all other pairings zero, so S^T B S is the matrix of the standard form.
// Purely rational, hence available over Q(i) without extending the field.
MatF darboux(const MatF& b) {
  const MatF bstd = standardBetaMatrix();
  bool standard = true;
  for (int i = 0; i < 4 && standard; ++i)
    for (int j = 0; j < 4; ++j)
      if (!(b(i, j) == bstd(i, j))) {
        standard = false;
        break;
      }
  if (standard) return identityMat(4);

  using Col = std::array<FieldElem, 4>;
  auto pairing = [&b](const Col& x, const Col& y) {
    FieldElem s(0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!b(i, j).isZero())
          s += x[static_cast<std::size_t>(i)] * b(i, j) * y[static_cast<std::size_t>(j)];
    return s;
  };
  auto unit = [](int k) {
    Col c{FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(0)};
    c[static_cast<std::size_t>(k)] = FieldElem(1);
    return c;
  };

  const Col u0 = unit(0);
  int l = -1;
  for (int j = 1; j < 4; ++j)
    if (!b(0, j).isZero()) {
      l = j;
      break;
    }
  if (l < 0) fail(Errc::Internal, "symplectic form must pair e0 with something");
  Col v0 = unit(l);
  const FieldElem inv0 = b(0, l).inverse();
  for (auto& c : v0) c = c * inv0;

  std::vector<Col> rest;
  for (int j = 1; j < 4; ++j) {
    if (j == l) continue;
    Col w = unit(j);
    const FieldElem cu = pairing(w, v0);
    const FieldElem cv = pairing(u0, w);
    for (int i = 0; i < 4; ++i)
      w[static_cast<std::size_t>(i)] =
          w[static_cast<std::size_t>(i)] - cu * u0[static_cast<std::size_t>(i)] -
          cv * v0[static_cast<std::size_t>(i)];
    rest.push_back(w);
  }
  const Col u1 = rest[0];
  const FieldElem c = pairing(u1, rest[1]);
  if (c.isZero())
    fail(Errc::Internal, "complement of the first hyperbolic pair degenerated");
  Col v1 = rest[1];
  const FieldElem inv1 = c.inverse();
  for (auto& e : v1) e = e * inv1;

  MatF s(4, 4);
  const std::array<Col, 4> cols{u0, u1, v1, v0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      s(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      FieldElem acc(0);
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          if (!b(p, q).isZero()) acc += s(p, i) * b(p, q) * s(q, j);
      if (!(acc == bstd(i, j)))
        fail(Errc::Internal, "Darboux change must normalize the form");
    }
  return s;
}

}  // namespace

SymplecticForm standardContactForm() {
  return SymplecticForm::fromUpper({FieldElem(0), FieldElem(0), FieldElem(1),
                                    FieldElem(1), FieldElem(0), FieldElem(0)});
}

WModel buildWModel(const SymplecticForm& beta) {
  const std::array<FieldElem, 6> b = beta.upper();
  MatF row(1, 6);
  for (int m = 0; m < 6; ++m) row(0, m) = b[static_cast<std::size_t>(m)];
  const alg::RrefResult<FieldElem> rr = alg::rref(row);
  const std::vector<VecF> kernel = alg::kernelBasis(row);
  if (kernel.size() != 5 || rr.freeCols.size() != 5)
    fail(Errc::Internal, "beta-perp must have dimension 5");

  MatF basis(6, 5);
  std::array<int, 5> freeRows{};
  for (int m = 0; m < 5; ++m) {
    freeRows[static_cast<std::size_t>(m)] = rr.freeCols[static_cast<std::size_t>(m)];
    for (int r = 0; r < 6; ++r)
      basis(r, m) = kernel[static_cast<std::size_t>(m)](r);
  }
  for (int m = 0; m < 5; ++m) {
    const int fr = freeRows[static_cast<std::size_t>(m)];
    if (basis(fr, m).isZero())
      fail(Errc::Internal, "basis column lost its free row");
    for (int l = 0; l < 5; ++l)
      if (l != m && !basis(fr, l).isZero())
        fail(Errc::Internal, "free rows must single out basis columns");
    FieldElem s(0);
    for (int r = 0; r < 6; ++r) s += b[static_cast<std::size_t>(r)] * basis(r, m);
    if (!s.isZero())
      fail(Errc::Internal, "basis vectors must pair to zero with beta");
  }

  const FieldElem pf = beta.pfaffian();
  MatF gram(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      gram(i, j) = pf * wedge4(basis.col(i), basis.col(j));
  if (alg::bareissDet<FieldElem>(gram).isZero())
    fail(Errc::Internal, "W inner product must be nondegenerate");
  return WModel{beta, std::move(basis), freeRows, std::move(gram)};
}

MatF standardGram() {
  MatF g = zeroMat(5, 5);
  g(0, 4) = g(4, 0) = FieldElem(1);
  g(1, 1) = g(2, 2) = g(3, 3) = FieldElem(-2);
  return g;
}

UniPoly gramPairing(const MatF& gram, const std::vector<UniPoly>& g,
                    const std::vector<UniPoly>& h) {
  if (gram.rows() != gram.cols() ||
      static_cast<std::size_t>(gram.rows()) != g.size() || g.size() != h.size())
    fail(Errc::BadParameters, "Gram pairing dimension mismatch");
  UniPoly s;
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = 0; j < gram.cols(); ++j)
      if (!gram(i, j).isZero())
        s = s + (g[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(j)]) *
                    gram(i, j);
  return s;
}

bool isNullCurve(const ProjectiveCurve& g, const MatF& gram) {
  if (g.ambientDim() != 4)
    fail(Errc::BadParameters, "null curves live in P^4");
  const std::vector<UniPoly>& G = g.coords();
  std::vector<UniPoly> dG;
  dG.reserve(G.size());
  for (const auto& c : G) dG.push_back(c.derivative());
  const UniPoly gg = gramPairing(gram, G, G);
  const UniPoly gdg = gramPairing(gram, G, dG);
  if (gg.isZero() && !gdg.isZero())
    fail(Errc::Internal, "<G,G'> must vanish once <G,G> does");
  return gg.isZero() && gramPairing(gram, dG, dG).isZero();
}

NullCurve::NullCurve(ProjectiveCurve curve, NullModel model)
    : curve_(std::move(curve)), model_(std::move(model)) {
  if (!isNullCurve(curve_, gram()))
    fail(Errc::NotNull, "curve does not satisfy the null identities");
}

const MatF& NullCurve::gram() const {
  if (const WModel* w = std::get_if<WModel>(&model_)) return w->gram;
  static const MatF std_ = standardGram();
  return std_;
}

NullCurve kleinForward(const ProjectiveCurve& f, const SymplecticForm& beta) {
  if (f.ambientDim() != 3)
    fail(Errc::BadParameters, "the Klein transform needs a curve in P^3");
  const int rank = alg::rankExact(f.coefficientMatrix());
  if (rank <= 2)
    fail(Errc::LinearCurve, "image spans at most a line");
  if (rank == 3)
    fail(Errc::DegenerateCurve, "the Klein transform needs a nondegenerate curve");
  if (!contact::contactPairing(f, beta).isZero())
    fail(Errc::NotContact, "beta(F, F') does not vanish");

  WModel w = buildWModel(beta);
  const std::vector<UniPoly>& V = f.subsetWronskians(2);
  std::vector<UniPoly> x(5);
  for (int m = 0; m < 5; ++m) {
    const int fr = w.freeRows[static_cast<std::size_t>(m)];
    x[static_cast<std::size_t>(m)] =
        V[static_cast<std::size_t>(fr)] * w.basis(fr, m).inverse();
  }
  // All six bivector rows must be consistent; this is exactly the contact
  // condition, already checked, so a mismatch is an internal fault.
  for (int r = 0; r < 6; ++r) {
    UniPoly s;
    for (int m = 0; m < 5; ++m)
      if (!w.basis(r, m).isZero())
        s = s + x[static_cast<std::size_t>(m)] * w.basis(r, m);
    if (!(s == V[static_cast<std::size_t>(r)]))
      fail(Errc::Internal, "bivector curve escaped W");
  }

  ProjectiveCurve g(std::move(x));
  if (!g.isNondegenerate())
    fail(Errc::IdentityViolated, "the null image must span P^4");
  if (!isNullCurve(g, w.gram))
    fail(Errc::IdentityViolated, "the null identities must hold for the image");
  return NullCurve(std::move(g), std::move(w));
}

NullCurve kleinForward(const ProjectiveCurve& f) {
  return kleinForward(f, contact::recoverBeta(f));
}

ProjectiveCurve kleinInverse(const NullCurve& g) {
  if (!g.isWModel()) return kleinInverse(modelChange(g));
  const WModel& w = std::get<WModel>(g.model());
  const ProjectiveCurve& c = g.curve();
  if (alg::rankExact(c.coefficientMatrix()) <= 2)
    fail(Errc::LinearCurve, "the inverse transform needs a nonlinear curve");
  if (!isNullCurve(c, w.gram))
    fail(Errc::NotNull, "input does not satisfy the null identities");

  // Bivector coordinates of the curve.
  std::vector<UniPoly> V(6);
  for (int r = 0; r < 6; ++r) {
    UniPoly s;
    for (int m = 0; m < 5; ++m)
      if (!w.basis(r, m).isZero())
        s = s + c.coords()[static_cast<std::size_t>(m)] * w.basis(r, m);
    V[static_cast<std::size_t>(r)] = s;
  }
  const UniPoly pluck = V[0] * V[5] - V[1] * V[4] + V[2] * V[3];
  if (!pluck.isZero())
    fail(Errc::NotDecomposable, "G ^ G does not vanish");

  // Contraction matrices of G and G' side by side over the function field.
  Mat<RatFunction> M(4, 8);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 8; ++j) M(i, j) = RatFunction(0);
  for (int m = 0; m < 6; ++m) {
    const int i = kPairs[m][0], j = kPairs[m][1];
    const UniPoly& v = V[static_cast<std::size_t>(m)];
    const UniPoly dv = v.derivative();
    M(i, j) = RatFunction(v);
    M(j, i) = RatFunction(-v);
    M(i, j + 4) = RatFunction(dv);
    M(j, i + 4) = RatFunction(-dv);
  }

  const alg::RrefResult<RatFunction> rr = alg::rref(M);
  const int rank = static_cast<int>(rr.pivotCols.size());
  if (rank <= 2)
    fail(Errc::LinearCurve, "supports coincide: the image is a line");
  if (rank != 3)
    fail(Errc::Internal, "the supports of G and G' must span 3 dimensions");

  // A kernel vector of [A | A'] whose u-part does not annihilate A yields
  // the solution line F = A u spanning supp(A) meet supp(A').
  std::vector<RatFunction> F(4, RatFunction(0));
  bool found = false;
  for (const Vec<RatFunction>& k : kernelFromRref(rr)) {
    bool nonzero = false;
    for (int i = 0; i < 4; ++i) {
      RatFunction s(0);
      for (int j = 0; j < 4; ++j)
        if (!M(i, j).isZero()) s += M(i, j) * k(j);
      if (!s.isZero()) nonzero = true;
      F[static_cast<std::size_t>(i)] = s;
    }
    if (nonzero) {
      found = true;
      break;
    }
  }
  if (!found) fail(Errc::Internal, "no transverse kernel vector exists");

  UniPoly lcm(FieldElem(1));
  for (const auto& x : F)
    if (!x.isZero()) lcm = lcmPoly(lcm, x.den());
  std::vector<UniPoly> coords(4);
  for (int i = 0; i < 4; ++i) {
    const auto& x = F[static_cast<std::size_t>(i)];
    coords[static_cast<std::size_t>(i)] =
        x.isZero() ? UniPoly() : x.num() * divideExact(lcm, x.den());
  }
  ProjectiveCurve f(std::move(coords));

  if (!f.isNondegenerate())
    fail(Errc::IdentityViolated, "the recovered curve must be nondegenerate");
  if (!(f.associatedCurve(2) == ProjectiveCurve(V)))
    fail(Errc::IdentityViolated,
         "the second associated curve must reproduce the input");
  const contact::BetaRecovery br = contact::analyzeContact(f);
  if (br.kernelDim != 1 || !contact::isContact(f, *br.beta))
    fail(Errc::IdentityViolated, "the recovered curve must be contact");
  return f;
}

NullCurve completeNull(const std::array<RatFunction, 3>& gamma) {
  std::array<RatFunction, 3> d;
  bool constant = true;
  for (int i = 0; i < 3; ++i) {
    d[static_cast<std::size_t>(i)] = gamma[static_cast<std::size_t>(i)].derivative();
    if (!d[static_cast<std::size_t>(i)].isZero()) constant = false;
  }
  if (constant) fail(Errc::ConstantInput, "gamma must be nonconstant");
  RatFunction s(0);
  for (const auto& x : d) s += x * x;
  if (!s.isZero())
    fail(Errc::NotNull, "the sum of squared derivatives must vanish");

  UniPoly b(FieldElem(1));
  for (const auto& x : gamma)
    if (!x.isZero()) b = lcmPoly(b, x.den());
  std::vector<UniPoly> a(3);
  for (int i = 0; i < 3; ++i) {
    const auto& x = gamma[static_cast<std::size_t>(i)];
    a[static_cast<std::size_t>(i)] =
        x.isZero() ? UniPoly() : x.num() * divideExact(b, x.den());
  }
  UniPoly sq;
  for (const auto& ai : a) sq = sq + ai * ai;
  std::vector<UniPoly> coords{b * b, a[0] * b, a[1] * b, a[2] * b, sq};
  ProjectiveCurve g(std::move(coords));
  if (!isNullCurve(g, standardGram()))
    fail(Errc::IdentityViolated, "completion must satisfy the null identities");
  return NullCurve(std::move(g), StandardModel{});
}

NullCurve modelChange(const NullCurve& g) {
  if (g.isWModel()) {
    const WModel& w = std::get<WModel>(g.model());
    // A Darboux change S^T B S = B_std lets Lambda^2(S^-1) carry W(beta) onto
    // W(beta_std); the transported pairing agrees on the nose because
    // pf(S^T B S) = det(S) pf(B).  After that a fixed linear map takes the
    // standard-form W-model to the quadric model.
    const MatF s = darboux(w.beta.matrix());
    const MatF l2inv = lambda2(inverseMat(s));
    const std::vector<UniPoly>& x = g.curve().coords();
    std::vector<UniPoly> V(6);
    for (int r = 0; r < 6; ++r) {
      UniPoly acc;
      for (int m = 0; m < 5; ++m)
        if (!w.basis(r, m).isZero())
          acc = acc + x[static_cast<std::size_t>(m)] * w.basis(r, m);
      V[static_cast<std::size_t>(r)] = acc;
    }
    const std::vector<UniPoly> vy = applyLinear(l2inv, V);
    const WModel wstd = buildWModel(standardContactForm());
    std::vector<UniPoly> xs(5);
    for (int m = 0; m < 5; ++m) {
      const int fr = wstd.freeRows[static_cast<std::size_t>(m)];
      xs[static_cast<std::size_t>(m)] =
          vy[static_cast<std::size_t>(fr)] * wstd.basis(fr, m).inverse();
    }
    for (int r = 0; r < 6; ++r) {
      UniPoly acc;
      for (int m = 0; m < 5; ++m)
        if (!wstd.basis(r, m).isZero())
          acc = acc + xs[static_cast<std::size_t>(m)] * wstd.basis(r, m);
      if (!(acc == vy[static_cast<std::size_t>(r)]))
        fail(Errc::Internal, "transported bivector curve escaped W");
    }
    return NullCurve(ProjectiveCurve(applyLinear(modelMapT(), xs)),
                     StandardModel{});
  }
  return NullCurve(
      ProjectiveCurve(applyLinear(modelMapTInv(), g.curve().coords())),
      buildWModel(standardContactForm()));
}

}  // namespace plucker::klein
