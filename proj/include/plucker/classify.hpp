#pragma once

#include <string>
#include <vector>

#include "plucker/curve.hpp"

namespace plucker::classify {

// One solution (r1, r2) of deg g = 4 + r1 + r2 with r2 even, annotated with
// the degree deg f = 3 + r1 + r2/2 of the corresponding contact curve.
struct ProfileSolution {
  long r1 = 0;
  long r2 = 0;
  long degF = 0;

  friend bool operator==(const ProfileSolution&,
                         const ProfileSolution&) = default;
};

struct ProfileConstraint {
  long degG = 0;
  std::vector<ProfileSolution> solutions;  // ordered by increasing r1
};

// All nonnegative ramification profiles a null image of the given degree can
// have.  Requires degG >= 2 (BadParameters below); degrees below 4 simply
// admit no solutions.
ProfileConstraint enumerateProfiles(long degG);

// A named certificate run.  Every item is an exact symbolic comparison; the
// verifiers return only passing reports and raise VerificationFailed, with
// the offending items in the message, whenever any comparison deviates.
struct VerificationReport {
  std::string name;
  std::vector<curves::IdentityCheck> items;
  bool passed = true;
};

// Degree-4 null curves: the span obstructions in both ramification branches
// and the unique contact representative [1, z, z^3, z^4] with its form and
// ramification divisors.
VerificationReport verifyDeg4Uniqueness();

// Degree-5 null curves do not exist: the profile enumeration forces
// (r1, r2) = (1, 0), but the unique degree-4 contact curve has (0, 2).
VerificationReport verifyDeg5Nonexistence();

// Degree-6 null curves: exactly two up to equivalence.  Parametric minors
// and a constant-pivot elimination close the (2, 0) branch down to
// [1, z^2, z^3, z^5]; the (0, 2) branch reuses the degree-4 classification.
VerificationReport verifyDeg6Classification();

// No unbranched degree-7 null curve: parameter-independent minor
// certificates for R1 = 3p and R1 = 2p + q, and for R1 = p + q + s the full
// symbolic matrix computation with its closed-form determinants, the
// substitution locus, and the final vanishing contradiction.
VerificationReport verifyDeg7UnbranchedNonexistence();

// The branched degree-7 example [1-5z^2, z-3z^2, z^4-3z^3, z^5-5z^3]:
// recovered form, ramification divisors, image degree and branch divisor,
// and the forced profile (1, 2).
VerificationReport verifyDeg7BranchedExample();

// All five verifiers in degree order.
std::vector<VerificationReport> verifyAll();

}  // namespace plucker::classify
