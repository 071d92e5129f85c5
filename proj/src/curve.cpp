#include "plucker/curve.hpp"

#include <algorithm>
#include <sstream>

#include "plucker/linalg.hpp"
#include "plucker/wronskian.hpp"

namespace plucker::curves {

using alg::subsetsLex;
using alg::UniPoly;

long VanishingSequence::ramification(int i) const {
  if (i < 1 || i >= static_cast<int>(a.size()))
    fail(Errc::IndexOutOfRange, "ramification index out of range");
  return a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i - 1)] - 1;
}

const Divisor& RamificationProfile::R(int i) const {
  if (i < 1 || i > static_cast<int>(divisors.size()))
    fail(Errc::IndexOutOfRange, "ramification divisor index out of range");
  return divisors[static_cast<std::size_t>(i - 1)];
}

long RamificationProfile::r(int i) const {
  if (i < 1 || i > static_cast<int>(totals.size()))
    fail(Errc::IndexOutOfRange, "ramification total index out of range");
  return totals[static_cast<std::size_t>(i - 1)];
}

ProjectiveCurve::ProjectiveCurve(std::vector<UniPoly> coords)
    : coords_(std::move(coords)) {
  bool allZero = true;
  for (const auto& c : coords_)
    if (!c.isZero()) allZero = false;
  if (allZero || coords_.empty())
    fail(Errc::AllZero, "curve needs a nonzero coordinate");

  UniPoly g;
  for (const auto& c : coords_)
    if (!c.isZero()) g = g.isZero() ? c : gcd(g, c);
  if (!g.isConstant()) {
    for (auto& c : coords_)
      if (!c.isZero()) c = divideExact(c, g);
  }
  for (const auto& c : coords_) {
    if (c.isZero()) continue;
    FieldElem s = c.leading().inverse();
    for (auto& d : coords_) d = d * s;
    break;
  }
}

long ProjectiveCurve::degree() const {
  long d = 0;
  for (const auto& c : coords_)
    if (!c.isZero()) d = std::max(d, static_cast<long>(c.degreeOrThrow()));
  return d;
}

MatF ProjectiveCurve::coefficientMatrix() const {
  const auto rows = static_cast<Eigen::Index>(degree() + 1);
  const auto cols = static_cast<Eigen::Index>(coords_.size());
  MatF m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i)
      m(i, j) = coords_[static_cast<std::size_t>(j)].coeff(static_cast<int>(i));
  return m;
}

bool ProjectiveCurve::isNondegenerate() const {
  return alg::rankExact(coefficientMatrix()) ==
         static_cast<Eigen::Index>(coords_.size());
}

ProjectiveCurve ProjectiveCurve::reversed() const {
  const int d = static_cast<int>(degree());
  std::vector<UniPoly> rev;
  rev.reserve(coords_.size());
  for (const auto& c : coords_) rev.push_back(c.reversed(d));
  return ProjectiveCurve(std::move(rev));
}

const std::vector<UniPoly>& ProjectiveCurve::subsetWronskians(int k) const {
  if (k < 1 || k > static_cast<int>(coords_.size()))
    fail(Errc::IndexOutOfRange, "subset Wronskian size out of range");
  auto it = wronskiansCache_.find(k);
  if (it != wronskiansCache_.end()) return it->second;

  // Laplace expansion along the top-derivative row shares every lower minor
  // across the level:  W_{k,S} = sum_c (-1)^{k-1+c} h_{S_c}^{(k-1)} W_{k-1,S\c}.
  // That turns each level into k polynomial products per subset instead of an
  // independent determinant per subset.
  const int n1 = static_cast<int>(coords_.size());
  if (wronskiansCache_.find(1) == wronskiansCache_.end())
    wronskiansCache_.emplace(1, coords_);
  std::vector<UniPoly> derivs = coords_;
  for (int level = 2; level <= k; ++level) {
    for (auto& h : derivs) h = h.derivative();  // h^{(level-1)}
    if (wronskiansCache_.find(level) != wronskiansCache_.end()) continue;
    const std::vector<UniPoly>& prev = wronskiansCache_.at(level - 1);
    std::map<std::vector<int>, std::size_t> prevIndex;
    {
      std::size_t i = 0;
      for (const auto& s : subsetsLex(n1, level - 1)) prevIndex[s] = i++;
    }
    std::vector<UniPoly> out;
    for (const std::vector<int>& s : subsetsLex(n1, level)) {
      UniPoly w;
      for (int c = 0; c < level; ++c) {
        const UniPoly& df = derivs[static_cast<std::size_t>(s[static_cast<std::size_t>(c)])];
        std::vector<int> rest = s;
        rest.erase(rest.begin() + c);
        const UniPoly& minor = prev[prevIndex.at(rest)];
        if (df.isZero() || minor.isZero()) continue;
        const UniPoly term = df * minor;
        w = ((level - 1 + c) % 2 != 0) ? w - term : w + term;
      }
      out.push_back(std::move(w));
    }
    wronskiansCache_.emplace(level, std::move(out));
  }
  return wronskiansCache_.at(k);
}

void ProjectiveCurve::requireNondegenerate(const char* who) const {
  if (!isNondegenerate())
    fail(Errc::DegenerateCurve,
         std::string(who) + " needs a curve spanning the ambient space");
}

// a_0..a_n at a finite place or a locus with uniform valuations, via the
// subset-Wronskian minima s_k = min_S v_p(W_S):  a_{k-1} = s_k - s_{k-1} + (k-1).
// s_1 = 0 because the coordinates are coprime.
std::vector<long> ProjectiveCurve::vanishingAt(const Place& p) const {
  const int n1 = static_cast<int>(coords_.size());
  std::vector<long> a{0};
  long sPrev = 0;
  for (int k = 2; k <= n1; ++k) {
    bool seen = false;
    long sk = 0;
    for (const auto& w : subsetWronskians(k)) {
      if (w.isZero()) continue;
      long v = alg::valuation(w, p);
      if (!seen || v < sk) sk = v, seen = true;
    }
    if (!seen) fail(Errc::Internal, "all subset Wronskians vanished");
    a.push_back(sk - sPrev + (k - 1));
    sPrev = sk;
  }
  return a;
}

VanishingSequence ProjectiveCurve::vanishingSequence(const Place& p) const {
  requireNondegenerate("vanishingSequence");
  if (p.isInfinity()) {
    VanishingSequence v = reversed().vanishingSequence(Place::finite(FieldElem(0)));
    return v;
  }
  return VanishingSequence{vanishingAt(p)};
}

RamificationProfile ProjectiveCurve::ramificationProfile() const {
  requireNondegenerate("ramificationProfile");
  const int n = ambientDim();
  const long d = degree();

  // At a finite place the minimum subset-Wronskian valuation per level equals
  // the valuation of the level gcd G_k = gcd_S(W_{k,S}), so the whole finite
  // part of the profile lives in the n polynomials G_2..G_{n+1} -- which stay
  // small even when the individual Wronskians do not.  At infinity, reversing
  // the coordinates reverses each W_{k,S} to the bound k(d-k+1) (chain rule
  // for z -> 1/z with the weight-k(k-1)/2 factor), so
  //   s_k(inf) = k(d-k+1) - max_S deg W_{k,S}.
  std::vector<UniPoly> levelGcd;
  std::vector<long> sInf;
  for (int k = 2; k <= n + 1; ++k) {
    UniPoly g;
    long maxDeg = -1;
    for (const auto& w : subsetWronskians(k)) {
      if (w.isZero()) continue;
      maxDeg = std::max(maxDeg, static_cast<long>(w.degreeOrThrow()));
      if (g.isZero())
        g = w;
      else if (!g.isConstant())
        g = gcd(g, w);
    }
    if (maxDeg < 0) fail(Errc::Internal, "all subset Wronskians vanished");
    levelGcd.push_back(g.isConstant() ? UniPoly(FieldElem(1)) : g.monic());
    const long sk = k * (d - k + 1) - maxDeg;
    if (sk < 0) fail(Errc::Internal, "subset Wronskian exceeds its degree bound");
    sInf.push_back(sk);
  }

  RamificationProfile out;
  out.divisors.assign(static_cast<std::size_t>(n), Divisor{});

  const auto addFromVanishing = [&](const std::vector<long>& a, const Place& p) {
    for (int i = 1; i <= n; ++i) {
      long ri = a[static_cast<std::size_t>(i)] -
                a[static_cast<std::size_t>(i - 1)] - 1;
      if (ri != 0) out.divisors[static_cast<std::size_t>(i - 1)].add(p, ri);
    }
  };

  std::vector<UniPoly> nonconstant;
  for (const auto& g : levelGcd)
    if (!g.isConstant()) nonconstant.push_back(g);
  if (!nonconstant.empty()) {
    for (const Place& p : alg::placesOf(alg::uniformBasisFor(nonconstant))) {
      std::vector<long> a{0};
      long sPrev = 0;
      for (int k = 2; k <= n + 1; ++k) {
        const long sk = alg::valuation(levelGcd[static_cast<std::size_t>(k - 2)], p);
        a.push_back(sk - sPrev + (k - 1));
        sPrev = sk;
      }
      addFromVanishing(a, p);
    }
  }
  {
    std::vector<long> a{0};
    long sPrev = 0;
    for (int k = 2; k <= n + 1; ++k) {
      const long sk = sInf[static_cast<std::size_t>(k - 2)];
      a.push_back(sk - sPrev + (k - 1));
      sPrev = sk;
    }
    addFromVanishing(a, Place::infinity());
  }
  for (const auto& dv : out.divisors) out.totals.push_back(dv.degree());
  return out;
}

Divisor ProjectiveCurve::ramificationDivisor(int i) const {
  if (i < 1 || i > ambientDim())
    fail(Errc::IndexOutOfRange, "ramification divisor index out of range");
  return ramificationProfile().R(i);
}

ProjectiveCurve ProjectiveCurve::associatedCurve(int k) const {
  if (k < 1 || k > ambientDim())
    fail(Errc::IndexOutOfRange, "associated curve index out of range");
  requireNondegenerate("associatedCurve");
  return ProjectiveCurve(subsetWronskians(k));
}

ProjectiveCurve ProjectiveCurve::dualCurve() const {
  requireNondegenerate("dualCurve");
  const int n = ambientDim();
  const std::vector<UniPoly>& w = subsetWronskians(n);  // lex n-subsets
  std::vector<UniPoly> dual(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) {
    // The lex n-subset missing index j sits at position n - j.
    UniPoly c = w[static_cast<std::size_t>(n - j)];
    if ((n - j) % 2 != 0) c = -c;
    dual[static_cast<std::size_t>(j)] = c;
  }
  return ProjectiveCurve(std::move(dual));
}

std::string ProjectiveCurve::toString() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << coords_[i].toString();
  }
  os << "]";
  return os.str();
}

Divisor branchDivisor(const ProjectiveCurve& f) {
  // The branching multiplicity at a finite place is the minimum valuation of
  // the pair Wronskians, i.e. the valuation of their gcd; at infinity it is
  // the reversal bound 2(d-1) minus the largest pair-Wronskian degree.
  UniPoly g;
  long maxDeg = -1;
  for (const auto& w : f.subsetWronskians(2)) {
    if (w.isZero()) continue;
    maxDeg = std::max(maxDeg, static_cast<long>(w.degreeOrThrow()));
    if (g.isZero())
      g = w;
    else if (!g.isConstant())
      g = gcd(g, w);
  }
  if (maxDeg < 0)
    fail(Errc::DegenerateCurve, "branchDivisor needs a nonconstant map");

  Divisor out;
  if (!g.isConstant()) out = alg::divisorOfZeros(g.monic());
  const long s2inf = 2 * (f.degree() - 1) - maxDeg;
  if (s2inf < 0) fail(Errc::Internal, "pair Wronskian exceeds its degree bound");
  if (s2inf != 0) out.add(Place::infinity(), s2inf);
  return out;
}

IdentityCheck checkEqual(std::string label, long expected, long actual) {
  IdentityCheck c;
  c.label = std::move(label);
  c.expected = std::to_string(expected);
  c.actual = std::to_string(actual);
  c.ok = expected == actual;
  return c;
}

IdentityCheck checkEqual(std::string label, const Divisor& expected,
                         const Divisor& actual) {
  IdentityCheck c;
  c.label = std::move(label);
  c.expected = expected.toString();
  c.actual = actual.toString();
  c.ok = expected == actual;
  return c;
}

IdentityCheck checkEqual(std::string label, std::string expected,
                         std::string actual, bool ok) {
  IdentityCheck c;
  c.label = std::move(label);
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  c.ok = ok;
  return c;
}

PluckerReport pluckerReport(const ProjectiveCurve& f) {
  const int n = f.ambientDim();
  PluckerReport rep;
  rep.degF = f.degree();
  rep.profile = f.ramificationProfile();

  // Degree balance: (n+1) deg f - n(n+1) = sum (n+1-i) r_i.
  long rhs = 0;
  for (int i = 1; i <= n; ++i)
    rhs += static_cast<long>(n + 1 - i) * rep.profile.r(i);
  rep.checks.push_back(checkEqual("degree balance (n+1)degf - n(n+1)",
                                (n + 1) * rep.degF - n * (n + 1), rhs));

  // Associated-curve degrees against the osculating recursion
  //   deg D_j = deg f - 2(j-1) - sum_{m<j} r_m,   deg f_i = sum_{j<=i} deg D_j.
  std::vector<ProjectiveCurve> assoc;
  assoc.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) assoc.push_back(f.associatedCurve(i));
  long expectDeg = 0, rSum = 0;
  for (int i = 1; i <= n; ++i) {
    expectDeg += rep.degF - 2 * (i - 1) - rSum;
    long actual = assoc[static_cast<std::size_t>(i - 1)].degree();
    rep.associatedDegrees.push_back(actual);
    rep.checks.push_back(
        checkEqual("deg of associated curve " + std::to_string(i), expectDeg,
                 actual));
    rSum += rep.profile.r(i);
  }

  // Branch divisors of the associated curves reproduce the profile.
  for (int i = 1; i <= n; ++i)
    rep.checks.push_back(
        checkEqual("branch divisor of associated curve " + std::to_string(i),
                 rep.profile.R(i),
                 branchDivisor(assoc[static_cast<std::size_t>(i - 1)])));

  // Dual pairing R_i(dual) = R_{n+1-i}(f).
  rep.dualProfile = f.dualCurve().ramificationProfile();
  for (int i = 1; i <= n; ++i)
    rep.checks.push_back(checkEqual(
        "dual ramification divisor " + std::to_string(i), rep.profile.R(n + 1 - i),
        rep.dualProfile.R(i)));

  rep.passed = true;
  for (const auto& c : rep.checks)
    if (!c.ok) rep.passed = false;
  return rep;
}

}  // namespace plucker::curves
