#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "plucker/poly.hpp"
#include "plucker/ratfunc.hpp"

namespace plucker::alg {

// A place of P^1 over Q(i): the point at infinity, a finite point, or an
// algebraic locus — the joint zero set of a monic squarefree polynomial of
// degree >= 2, kept unfactored.  Loci never split further than gcds force
// (factorization is out of scope); degree-1 loci canonicalize to FinitePoint.
class Place {
 public:
  struct Infinity {};
  struct FinitePoint {
    FieldElem value;
  };
  struct AlgebraicLocus {
    UniPoly poly;  // monic, squarefree, degree >= 2
  };

  static Place infinity() { return Place(Infinity{}); }
  static Place finite(FieldElem value) { return Place(FinitePoint{std::move(value)}); }
  // Accepts any nonconstant squarefree polynomial; makes it monic and
  // collapses degree 1 to a finite point.
  static Place locus(const UniPoly& p);

  bool isInfinity() const { return std::holds_alternative<Infinity>(v_); }
  bool isFinite() const { return std::holds_alternative<FinitePoint>(v_); }
  bool isLocus() const { return std::holds_alternative<AlgebraicLocus>(v_); }

  const FieldElem& finiteValue() const { return std::get<FinitePoint>(v_).value; }
  const UniPoly& locusPoly() const { return std::get<AlgebraicLocus>(v_).poly; }

  // Degree of the place as a closed point: 1, 1, or deg(locus).  Weights
  // every divisor-degree computation.
  int degree() const;

  // Deterministic total order: finite points (numeric, (re,im)-lex), then
  // loci (degree, then coefficient-lex), infinity last.  This is both the
  // map order of Divisor and the serialization order.
  static int compare(const Place& x, const Place& y);
  friend bool operator==(const Place& x, const Place& y) {
    return compare(x, y) == 0;
  }
  friend bool operator!=(const Place& x, const Place& y) { return !(x == y); }
  friend bool operator<(const Place& x, const Place& y) {
    return compare(x, y) < 0;
  }

  std::string toString() const;

 private:
  using Repr = std::variant<FinitePoint, AlgebraicLocus, Infinity>;
  explicit Place(Repr v) : v_(std::move(v)) {}
  Repr v_;
};

// Formal Z-linear combination of places with finite support; zero
// multiplicities are never stored.
class Divisor {
 public:
  Divisor() = default;
  static Divisor single(const Place& p, long mult = 1);

  bool isZero() const { return m_.empty(); }
  long multiplicity(const Place& p) const;
  // Total degree: sum of mult * placeDegree.
  long degree() const;

  void add(const Place& p, long mult);
  friend Divisor operator+(const Divisor& x, const Divisor& y);
  friend Divisor operator-(const Divisor& x, const Divisor& y);
  Divisor operator*(long k) const;

  const std::map<Place, long>& terms() const { return m_; }

  // Semantic equality: both sides re-expressed over a common coprime basis
  // first, so divisors built by different pipelines (whose loci may group the
  // same closed points differently) compare correctly.
  friend bool operator==(const Divisor& x, const Divisor& y);
  friend bool operator!=(const Divisor& x, const Divisor& y) { return !(x == y); }

  std::string toString() const;

 private:
  std::map<Place, long> m_;
};

// Order of vanishing of h at the place:
//   finite point c:  multiplicity of (z - c) in h
//   locus q:         q-adic valuation, which must be uniform across the roots
//                    of q — NonUniformLocus otherwise (detected by checking
//                    gcd(h / q^m, q) after stripping)
//   infinity:        -deg h  (a polynomial has a pole of order deg at inf)
// ZeroInput on the zero polynomial.
long valuation(const UniPoly& h, const Place& p);

// nu(num) - nu(den); at infinity this is deg den - deg num.
long valuation(const RatFunction& f, const Place& p);

// Pairwise-coprime monic squarefree basis generating the squarefree parts of
// the inputs: every input's squarefree part is a product of basis elements.
// Pure gcd refinement — no irreducible factorization anywhere.
std::vector<UniPoly> coprimeSquarefreeBasis(const std::vector<UniPoly>& polys);

// Basis refined from the Yun squarefree-decomposition layers of every input —
// the refinement that guarantees uniform valuations of each input at each
// basis element (squarefree parts alone are not enough: multiplicity layers
// must be separated too).
std::vector<UniPoly> uniformBasisFor(const std::vector<UniPoly>& polys);

// The divisor of zeros of h (finite part; infinity never appears).  Built
// from the Yun layers, so degree(divisorOfZeros(h)) = deg h exactly.
Divisor divisorOfZeros(const UniPoly& h);

// Places of the basis elements produced by the refinement helpers.
std::vector<Place> placesOf(const std::vector<UniPoly>& basis);

}  // namespace plucker::alg
