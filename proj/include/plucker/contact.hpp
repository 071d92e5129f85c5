#pragma once

#include <array>
#include <optional>
#include <string>

#include "plucker/curve.hpp"
#include "plucker/eigen_support.hpp"

namespace plucker::contact {

using alg::FieldElem;
using alg::MatF;
using alg::UniPoly;
using curves::ProjectiveCurve;

// A nondegenerate 2-form beta on the 4-space underlying P^3, stored as the
// antisymmetric matrix of coefficients of xi_i ^ xi_j.  Upper-triangular
// entries are kept in lex pair order (01, 02, 03, 12, 13, 23); the pairing
// with bivectors is <v_i^v_j, xi_k^xi_l> = delta_ik delta_jl - delta_il
// delta_jk, so beta applied to v_i^v_j just reads off entry (i, j).
class SymplecticForm {
 public:
  // Validates: not all zero (ZeroInput) and nonzero Pfaffian (DegenerateForm).
  static SymplecticForm fromUpper(const std::array<FieldElem, 6>& c);

  const MatF& matrix() const { return b_; }
  FieldElem entry(int i, int j) const;
  std::array<FieldElem, 6> upper() const;
  // b01 b23 - b02 b13 + b03 b12; nonzero by construction.
  FieldElem pfaffian() const;
  // Scaled so the first nonzero upper entry in lex order is 1.
  SymplecticForm canonicalized() const;
  bool proportionalTo(const SymplecticForm& o) const;
  bool operator==(const SymplecticForm& o) const;
  std::string toString() const;

 private:
  explicit SymplecticForm(MatF b) : b_(std::move(b)) {}
  MatF b_;  // 4x4 antisymmetric
};

FieldElem pfaffianOfUpper(const std::array<FieldElem, 6>& c);

// beta(F, F') as a polynomial: sum over pairs of b_ij W(h_i, h_j).
UniPoly contactPairing(const ProjectiveCurve& f, const SymplecticForm& beta);

// True iff beta(F, F') vanishes identically.  f must be nondegenerate in P^3.
bool isContact(const ProjectiveCurve& f, const SymplecticForm& beta);

struct BetaRecovery {
  int kernelDim = 0;                  // of the pair-Wronskian relation space
  std::optional<SymplecticForm> beta;  // present iff kernelDim == 1
};

// Kernel analysis of the six pair-Wronskians in the monomial basis.  Throws
// DegenerateFormBug if a one-dimensional kernel has zero Pfaffian (impossible
// for nondegenerate input unless something is inconsistent internally).
BetaRecovery analyzeContact(const ProjectiveCurve& f);

// The unique symplectic form making f contact, canonically scaled.
// NotContact if the pair-Wronskians are linearly independent; DegenerateInput
// if the relation space has dimension >= 2.
SymplecticForm recoverBeta(const ProjectiveCurve& f);

struct ContactFamilyMember {
  ProjectiveCurve curve;
  SymplecticForm beta;
  alg::Divisor expectedR1;  // (p-1) ((0) + (inf))
  alg::Divisor expectedR2;  // (q-p-1) ((0) + (inf))
  long p = 0, q = 0;
};

// The contact curve [1, z^p, z^q, z^{p+q}] with beta = (p-q) xi0^xi3
// + (p+q) xi1^xi2, for coprime 0 < p < q (else BadParameters).
ContactFamilyMember contactFamily(long p, long q);

// Everything the ramification transfer law forces between a contact curve f
// and its null image g: the duality R_1(f) = R_3(f), evenness of r_2, the
// transfer R_1(g) = R_4(g) = R_2(f) and R_2(g) = R_3(g) = R_1(f), and the
// two contact Pluecker identities 4 deg f - 12 = 4 r_1 + 2 r_2 and
// 5 deg g - 20 = 5 r_1 + 5 r_2.
struct ContactReport {
  long degF = 0;
  long degG = 0;
  std::optional<SymplecticForm> beta;
  curves::RamificationProfile fProfile;  // R_1..R_3 of f
  curves::RamificationProfile gProfile;  // R_1..R_4 of g
  std::vector<curves::IdentityCheck> checks;
  bool passed = false;
};

ContactReport contactRamificationReport(const ProjectiveCurve& f);

}  // namespace plucker::contact
