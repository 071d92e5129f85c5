#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "plucker/errors.hpp"
#include "plucker/field_elem.hpp"
#include "plucker/poly.hpp"

namespace plucker::alg {

// Sparse multivariate polynomial over Q in the named parameters a, b, c, p, q
// (the full set the parametric normal forms need).  Canonical form: no zero
// coefficients stored.  Monomials are exponent tuples ordered graded-lex,
// which fixes leading terms for exact division and a deterministic toString.
class MultiPoly {
 public:
  static constexpr int kNumVars = 5;
  static constexpr std::array<char, kNumVars> kVars = {'a', 'b', 'c', 'p', 'q'};
  using Monomial = std::array<int, kNumVars>;

  MultiPoly() = default;
  MultiPoly(long n) : MultiPoly(Rational(n)) {}  // NOLINT: implicit by design
  MultiPoly(const Rational& r) {                 // NOLINT: implicit by design
    if (r != 0) terms_[Monomial{}] = r;
  }

  static MultiPoly var(char name, int power = 1);
  static int varIndex(char name);

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }
  // The constant value of a constant polynomial; loud failure otherwise.
  Rational constantValue() const;

  friend bool operator==(const MultiPoly& x, const MultiPoly& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const MultiPoly& x, const MultiPoly& y) {
    return !(x == y);
  }

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator-(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned e) const;

  int degreeIn(char name) const;

  // Coefficient of name^k, a polynomial in the remaining variables.
  MultiPoly coeffOfPower(char name, int k) const;

  // Content: gcd of the |coefficients| as a positive rational (gcd of
  // numerators over lcm of denominators); 0 for the zero polynomial.
  Rational content() const;

  // Exact division: valid when d | *this; loud Internal failure otherwise.
  // Leading-term reduction in graded-lex order, which terminates precisely
  // because the division is exact.
  MultiPoly dividedExactBy(const MultiPoly& d) const;

  // P with name := num/den, then cleared: den^degreeIn(name) * P(num/den).
  MultiPoly substitutedCleared(char name, const MultiPoly& num,
                               const MultiPoly& den) const;

  // Partial evaluation at rational parameter values.
  MultiPoly evaluated(const std::map<char, Rational>& values) const;

  // View as univariate in `name`; fails loudly if other variables occur.
  Poly<FieldElem> toUniPoly(char name) const;

  std::string toString() const;

 private:
  static int totalDegree(const Monomial& m);
  struct GrlexLess {
    bool operator()(const Monomial& x, const Monomial& y) const;
  };
  void insertTerm(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational, GrlexLess> terms_;
};

inline MultiPoly exactDiv(const MultiPoly& a, const MultiPoly& b) {
  return a.dividedExactBy(b);
}

}  // namespace plucker::alg
