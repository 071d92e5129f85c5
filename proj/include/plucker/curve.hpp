#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plucker/eigen_support.hpp"
#include "plucker/places.hpp"
#include "plucker/poly.hpp"

namespace plucker::curves {

using alg::Divisor;
using alg::FieldElem;
using alg::MatF;
using alg::Place;
using alg::UniPoly;

// Vanishing sequence a_0 < a_1 < ... < a_n of a curve at a place, i.e. the
// orders of vanishing realised by hyperplane sections through the point.
// r(i) = a_i - a_{i-1} - 1 is the i-th ramification index there.
struct VanishingSequence {
  std::vector<long> a;
  long ramification(int i) const;  // i in 1..n
};

// Ramification divisors R_1..R_n of a curve in P^n together with their
// degrees r_i = deg R_i.
struct RamificationProfile {
  std::vector<Divisor> divisors;  // divisors[i-1] = R_i
  std::vector<long> totals;       // totals[i-1]   = r_i
  const Divisor& R(int i) const;
  long r(int i) const;
};

// A rational curve f : P^1 -> P^n given by n+1 coprime polynomial
// coordinates, first nonzero coordinate monic (the canonical representative
// of its projective equivalence class under reparametrisation-free scaling).
class ProjectiveCurve {
 public:
  // Canonicalises: divides out the common polynomial factor, scales so the
  // first nonzero coordinate is monic.  Throws AllZero if every entry is 0.
  explicit ProjectiveCurve(std::vector<UniPoly> coords);

  int ambientDim() const { return static_cast<int>(coords_.size()) - 1; }
  const std::vector<UniPoly>& coords() const { return coords_; }
  long degree() const;  // max coordinate degree (= deg of the divisor f*H)

  // Rows z^0..z^deg, columns the coordinates.
  MatF coefficientMatrix() const;
  // True iff the image spans P^n (coefficient matrix has full column rank).
  bool isNondegenerate() const;

  // The curve in the chart at infinity: coordinates z^d h_i(1/z).
  ProjectiveCurve reversed() const;

  // Wronskians of all k-subsets of the coordinates, lex subset order.
  // Cached; k in 1..n+1.
  const std::vector<UniPoly>& subsetWronskians(int k) const;

  // Vanishing sequence at a place.  Requires nondegeneracy (else the
  // sequence is not defined; throws DegenerateCurve).  At an algebraic
  // locus the valuations must be uniform across its roots, otherwise
  // NonUniformLocus propagates; refine through uniformBasisFor first.
  VanishingSequence vanishingSequence(const Place& p) const;

  // R_i as a divisor (i in 1..n), and the full profile R_1..R_n.
  Divisor ramificationDivisor(int i) const;
  RamificationProfile ramificationProfile() const;

  // k-th associated curve (k in 1..n): the Wronskian curve of k-subsets in
  // the Grassmannian's Pluecker embedding, canonicalised.  k = 1 returns
  // the curve itself.
  ProjectiveCurve associatedCurve(int k) const;

  // Dual curve in the dual P^n: hyperplane coordinates of the osculating
  // (n-1)-planes, via signed complementary Wronskians.
  ProjectiveCurve dualCurve() const;

  bool operator==(const ProjectiveCurve& o) const {
    return coords_ == o.coords_;
  }
  std::string toString() const;

 private:
  std::vector<UniPoly> coords_;
  mutable std::map<int, std::vector<UniPoly>> wronskiansCache_;

  void requireNondegenerate(const char* who) const;
  // a_0..a_n at a finite place / locus with uniform valuations.
  std::vector<long> vanishingAt(const Place& p) const;
};

// First ramification divisor of the map (its branch divisor).  Unlike
// ramificationProfile this only needs the map to be nonconstant, so it
// applies to associated curves whose image spans a proper subspace.
Divisor branchDivisor(const ProjectiveCurve& f);

// One line of the identity audit on a curve: every equation the geometry
// forces between degrees and ramification totals, checked exactly.
struct IdentityCheck {
  std::string label;
  std::string expected;
  std::string actual;
  bool ok = false;
};

IdentityCheck checkEqual(std::string label, long expected, long actual);
IdentityCheck checkEqual(std::string label, const Divisor& expected,
                         const Divisor& actual);
IdentityCheck checkEqual(std::string label, std::string expected,
                         std::string actual, bool ok);

struct PluckerReport {
  long degF = 0;
  std::vector<long> associatedDegrees;  // deg f_1 .. deg f_n
  RamificationProfile profile;          // of f
  RamificationProfile dualProfile;      // of the dual curve
  std::vector<IdentityCheck> checks;
  bool passed = false;
};

// Computes the profile, associated curves and dual of a nondegenerate curve
// and verifies: the degree/ramification balance
//   (n+1) deg f - n(n+1) = sum_i (n+1-i) r_i        (genus-0 curves),
// the associated-degree recursion, R_1(f_i) = R_i(f), and the dual pairing
// R_i(f*) = R_{n+1-i}(f).
PluckerReport pluckerReport(const ProjectiveCurve& f);

}  // namespace plucker::curves
