#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "plucker/errors.hpp"
#include "plucker/field_elem.hpp"

namespace plucker::alg {

// Customization point for exact division in a coefficient ring.  Fields
// implement it as plain division; rings (MultiPoly) supply their own overload
// found by ADL.  Bareiss elimination and polynomial exact division route all
// coefficient divisions through here.
inline FieldElem exactDiv(const FieldElem& a, const FieldElem& b) {
  return a / b;
}

template <class K>
concept FieldScalar = requires(K a, K b) { a / b; };

// Dense univariate polynomial over K in the variable z, coefficients stored
// ascending.  Canonical form never keeps trailing zeros; the zero polynomial
// has an empty coefficient vector and degree() == nullopt (a real sentinel,
// not -1, so degree arithmetic cannot silently use it).
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(long n) : Poly(K(n)) {}  // NOLINT: implicit by design
  Poly(const K& c) {            // NOLINT: implicit by design
    if (!(c == K())) c_.push_back(c);
  }
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { prune(); }

  static Poly monomial(int k, const K& coeff = K(1)) {
    if (coeff == K() || k < 0) return Poly();
    std::vector<K> c(static_cast<std::size_t>(k) + 1, K());
    c.back() = coeff;
    return Poly(std::move(c));
  }
  static Poly z() { return monomial(1); }

  bool isZero() const { return c_.empty(); }
  bool isConstant() const { return c_.size() <= 1; }

  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  // Degree of a polynomial known to be nonzero; loud failure otherwise.
  int degreeOrThrow() const {
    if (c_.empty()) fail(Errc::ZeroInput, "degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
  }

  K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K(); }
  const K& leading() const {
    if (c_.empty()) fail(Errc::ZeroInput, "leading coefficient of zero");
    return c_.back();
  }
  const std::vector<K>& coeffs() const { return c_; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r(*this);
    for (K& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return Poly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const K& s, const Poly& p) { return Poly(s) * p; }
  friend Poly operator*(const Poly& p, const K& s) { return Poly(s) * p; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly r(K(1)), base(*this);
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  K eval(const K& x) const {  // Horner
    K acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      c[i - 1] = c_[i] * K(static_cast<long>(i));
    return Poly(std::move(c));
  }

  // z^d * p(1/z): the coordinate form of the chart change z -> 1/z used for
  // everything at infinity.  Requires d >= deg p.
  Poly reversed(int d) const {
    if (isZero()) return Poly();
    if (d < degreeOrThrow())
      fail(Errc::IndexOutOfRange, "reversal bound below degree");
    std::vector<K> c(static_cast<std::size_t>(d) + 1, K());
    for (std::size_t i = 0; i < c_.size(); ++i) c[d - i] = c_[i];
    return Poly(std::move(c));
  }

  // Exact division in K[z] over any coefficient ring: valid whenever b | a,
  // loud Internal failure otherwise (callers only divide when theory says the
  // division is exact).
  friend Poly divideExact(const Poly& a, const Poly& b) {
    if (b.isZero()) fail(Errc::ZeroInput, "exact division by zero polynomial");
    if (a.isZero()) return Poly();
    if (a.c_.size() < b.c_.size())
      fail(Errc::Internal, "inexact polynomial division (degree)");
    std::vector<K> q(a.c_.size() - b.c_.size() + 1, K());
    Poly r = a;
    while (!r.isZero() && r.c_.size() >= b.c_.size()) {
      std::size_t shift = r.c_.size() - b.c_.size();
      K t = exactDiv(r.c_.back(), b.c_.back());
      q[shift] = t;
      r -= monomial(static_cast<int>(shift), t) * b;
      if (!r.isZero() && r.c_.size() > shift + b.c_.size() - 1)
        fail(Errc::Internal, "inexact polynomial division (no progress)");
    }
    if (!r.isZero()) fail(Errc::Internal, "inexact polynomial division");
    return Poly(std::move(q));
  }

  // --- Field-coefficient operations -------------------------------------

  Poly monic() const
    requires FieldScalar<K>
  {
    if (isZero()) return Poly();
    Poly r(*this);
    K inv = K(1) / c_.back();
    for (K& c : r.c_) c = c * inv;
    return r;
  }

  // Divided by the rational content of the coefficients, making every real
  // and imaginary part integral with overall numerator gcd 1.  Gcd chains
  // normalize each remainder this way: a plain fraction-field remainder
  // sequence compounds coefficient sizes exponentially, a normalized one
  // keeps them near the size of the inputs.
  Poly primitivePart() const
    requires std::is_same_v<K, FieldElem>
  {
    if (isZero()) return *this;
    mpz_class num(0), den(1);
    for (const K& x : c_) {
      for (const Rational* q : {&x.re(), &x.im()}) {
        if (*q != 0) {
          num = ::gcd(num, q->get_num());
          den = ::lcm(den, q->get_den());
        }
      }
    }
    Rational scale(den, num);
    scale.canonicalize();
    Poly r(*this);
    const K s{scale};
    for (K& c : r.c_) c = c * s;
    return r;
  }

  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
    requires FieldScalar<K>
  {
    if (b.isZero()) fail(Errc::ZeroInput, "polynomial division by zero");
    Poly q, r = a;
    while (!r.isZero() && r.c_.size() >= b.c_.size()) {
      std::size_t shift = r.c_.size() - b.c_.size();
      K t = r.c_.back() / b.c_.back();
      Poly term = monomial(static_cast<int>(shift), t);
      q += term;
      r -= term * b;
    }
    return {q, r};
  }

  // Monic greatest common divisor; gcd(0,0) = 0.
  friend Poly gcd(Poly a, Poly b)
    requires FieldScalar<K>
  {
    constexpr bool normalize = std::is_same_v<K, FieldElem>;
    if constexpr (normalize) {
      a = a.primitivePart();
      b = b.primitivePart();
    }
    while (!b.isZero()) {
      Poly r = divmod(a, b).second;
      if constexpr (normalize) r = r.primitivePart();
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  Poly squarefreePart() const
    requires FieldScalar<K>
  {
    if (isZero()) fail(Errc::ZeroInput, "squarefree part of zero");
    if (isConstant()) return Poly(K(1));
    return divideExact(monic(), gcd(*this, derivative()));
  }

  // Yun squarefree decomposition (characteristic 0): returns monic pairwise
  // coprime squarefree u_m with p ~ prod u_m^m; layers with u_m == 1 are
  // omitted from the result, which carries (factor, multiplicity) pairs.
  std::vector<std::pair<Poly, int>> squarefreeDecomposition() const
    requires FieldScalar<K>
  {
    if (isZero()) fail(Errc::ZeroInput, "squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    Poly f = monic();
    if (f.isConstant()) return out;
    Poly d = f.derivative();
    Poly u = gcd(f, d);
    Poly v = divideExact(f, u);
    Poly w = divideExact(d, u) - v.derivative();
    int m = 1;
    while (!v.isConstant()) {
      Poly g = gcd(v, w);
      if (!g.isConstant()) out.emplace_back(g, m);
      v = divideExact(v, g);
      w = divideExact(w, g) - v.derivative();
      ++m;
    }
    return out;
  }

  std::string toString(const std::string& var = "z") const;

 private:
  void prune() {
    while (!c_.empty() && c_.back() == K()) c_.pop_back();
  }

  std::vector<K> c_;
};

using UniPoly = Poly<FieldElem>;

template <class K>
Poly<K> exactDiv(const Poly<K>& a, const Poly<K>& b) {
  return divideExact(a, b);
}

template <class K>
std::string Poly<K>::toString(const std::string& var) const {
  if (isZero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == K()) continue;
    std::string term;
    bool isOne = c_[i] == K(1);
    bool isMinusOne = c_[i] == K(-1);
    std::string cs;
    if constexpr (requires(const K& k) { k.toString(); })
      cs = c_[i].toString();
    else
      cs = c_[i].toString();
    bool needsParens = cs.find('+') != std::string::npos ||
                       (cs.rfind('-') != std::string::npos && cs.rfind('-') > 0);
    if (i == 0) {
      term = needsParens ? "(" + cs + ")" : cs;
    } else {
      std::string zpow = (i == 1) ? var : var + "^" + std::to_string(i);
      if (isOne)
        term = zpow;
      else if (isMinusOne)
        term = "-" + zpow;
      else if (needsParens)
        term = "(" + cs + ")*" + zpow;
      else
        term = cs + "*" + zpow;
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace plucker::alg
