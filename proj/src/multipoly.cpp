#include "plucker/multipoly.hpp"

#include <algorithm>

namespace plucker::alg {

int MultiPoly::totalDegree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool MultiPoly::GrlexLess::operator()(const Monomial& x,
                                      const Monomial& y) const {
  int dx = totalDegree(x), dy = totalDegree(y);
  if (dx != dy) return dx < dy;
  return x < y;  // lex tie-break on the exponent tuples
}

int MultiPoly::varIndex(char name) {
  for (int i = 0; i < kNumVars; ++i)
    if (kVars[i] == name) return i;
  fail(Errc::BadParameters, std::string("unknown parameter '") + name + "'");
}

MultiPoly MultiPoly::var(char name, int power) {
  if (power < 0) fail(Errc::BadParameters, "negative power");
  MultiPoly p;
  Monomial m{};
  m[varIndex(name)] = power;
  p.terms_[m] = 1;
  return p;
}

Rational MultiPoly::constantValue() const {
  if (isZero()) return 0;
  if (!isConstant()) fail(Errc::Internal, "constantValue of " + toString());
  return terms_.begin()->second;
}

void MultiPoly::insertTerm(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly r(x);
  for (const auto& [m, c] : y.terms_) r.insertTerm(m, c);
  return r;
}

MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly r(x);
  for (const auto& [m, c] : y.terms_) r.insertTerm(m, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly r;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      MultiPoly::Monomial m;
      for (int i = 0; i < MultiPoly::kNumVars; ++i) m[i] = mx[i] + my[i];
      r.insertTerm(m, cx * cy);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(1), base(*this);
  for (; e; e >>= 1) {
    if (e & 1) r *= base;
    if (e > 1) base *= base;
  }
  return r;
}

int MultiPoly::degreeIn(char name) const {
  int idx = varIndex(name), d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[idx]);
  return d;
}

MultiPoly MultiPoly::coeffOfPower(char name, int k) const {
  int idx = varIndex(name);
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m[idx] != k) continue;
    Monomial rest = m;
    rest[idx] = 0;
    r.insertTerm(rest, c);
  }
  return r;
}

Rational MultiPoly::content() const {
  mpz_class num = 0, den = 1;
  for (const auto& [m, c] : terms_) {
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  if (num == 0) return 0;
  Rational r(abs(num), den);
  r.canonicalize();
  return r;
}

MultiPoly MultiPoly::dividedExactBy(const MultiPoly& d) const {
  if (d.isZero()) fail(Errc::ZeroInput, "exact division by zero");
  MultiPoly r(*this), q;
  const auto& [dm, dc] = *d.terms_.rbegin();  // graded-lex leading term
  while (!r.isZero()) {
    const auto& [rm, rc] = *r.terms_.rbegin();
    Monomial qm;
    for (int i = 0; i < kNumVars; ++i) {
      qm[i] = rm[i] - dm[i];
      if (qm[i] < 0)
        fail(Errc::Internal, "inexact multivariate division");
    }
    MultiPoly t;
    t.terms_[qm] = rc / dc;
    q += t;
    r -= t * d;
  }
  return q;
}

MultiPoly MultiPoly::substitutedCleared(char name, const MultiPoly& num,
                                        const MultiPoly& den) const {
  int deg = degreeIn(name);
  MultiPoly out;
  for (int k = 0; k <= deg; ++k)
    out += coeffOfPower(name, k) * num.pow(k) * den.pow(deg - k);
  return out;
}

MultiPoly MultiPoly::evaluated(const std::map<char, Rational>& values) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest = m;
    for (const auto& [name, value] : values) {
      int idx = varIndex(name);
      for (int e = 0; e < m[idx]; ++e) coeff *= value;
      rest[idx] = 0;
    }
    r.insertTerm(rest, coeff);
  }
  return r;
}

Poly<FieldElem> MultiPoly::toUniPoly(char name) const {
  int idx = varIndex(name);
  std::vector<FieldElem> coeffs(degreeIn(name) + 1, FieldElem());
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < kNumVars; ++i)
      if (i != idx && m[i] != 0)
        fail(Errc::Internal, "toUniPoly: extra variable in " + toString());
    coeffs[m[idx]] = FieldElem(c);
  }
  return Poly<FieldElem>(std::move(coeffs));
}

std::string MultiPoly::toString() const {
  if (isZero()) return "0";
  std::string out;
  // Highest graded-lex terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVars[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string cs = rationalToString(abs(c));
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else
      term = cs + "*" + mono;
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace plucker::alg
