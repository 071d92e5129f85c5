#include "plucker/contact.hpp"

#include <numeric>
#include <sstream>

#include "plucker/klein.hpp"
#include "plucker/linalg.hpp"

namespace plucker::contact {

using alg::Divisor;
using alg::Place;

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

}  // namespace

SymplecticForm SymplecticForm::fromUpper(const std::array<FieldElem, 6>& c) {
  bool allZero = true;
  for (const auto& x : c)
    if (!x.isZero()) allZero = false;
  if (allZero) fail(Errc::ZeroInput, "symplectic form needs a nonzero entry");
  if (pfaffianOfUpper(c).isZero())
    fail(Errc::DegenerateForm, "symplectic form must have nonzero Pfaffian");
  MatF b(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b(i, j) = FieldElem(0);
  for (int m = 0; m < 6; ++m) {
    b(kPairs[m][0], kPairs[m][1]) = c[static_cast<std::size_t>(m)];
    b(kPairs[m][1], kPairs[m][0]) = -c[static_cast<std::size_t>(m)];
  }
  return SymplecticForm(std::move(b));
}

FieldElem SymplecticForm::entry(int i, int j) const {
  if (i < 0 || i > 3 || j < 0 || j > 3)
    fail(Errc::IndexOutOfRange, "symplectic form index out of range");
  return b_(i, j);
}

std::array<FieldElem, 6> SymplecticForm::upper() const {
  std::array<FieldElem, 6> c;
  for (int m = 0; m < 6; ++m)
    c[static_cast<std::size_t>(m)] = b_(kPairs[m][0], kPairs[m][1]);
  return c;
}

FieldElem pfaffianOfUpper(const std::array<FieldElem, 6>& c) {
  return c[0] * c[5] - c[1] * c[4] + c[2] * c[3];
}

FieldElem SymplecticForm::pfaffian() const { return pfaffianOfUpper(upper()); }

SymplecticForm SymplecticForm::canonicalized() const {
  const std::array<FieldElem, 6> c = upper();
  for (const auto& x : c) {
    if (x.isZero()) continue;
    std::array<FieldElem, 6> s;
    const FieldElem inv = x.inverse();
    for (int m = 0; m < 6; ++m)
      s[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(m)] * inv;
    return fromUpper(s);
  }
  fail(Errc::Internal, "zero form slipped through validation");
}

bool SymplecticForm::operator==(const SymplecticForm& o) const {
  return alg::matEq(b_, o.b_);
}

bool SymplecticForm::proportionalTo(const SymplecticForm& o) const {
  return canonicalized() == o.canonicalized();
}

std::string SymplecticForm::toString() const {
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m < 6; ++m) {
    FieldElem c = b_(kPairs[m][0], kPairs[m][1]);
    if (c.isZero()) continue;
    std::string term = "x" + std::to_string(kPairs[m][0]) + "^x" +
                       std::to_string(kPairs[m][1]);
    std::string coeff = c.toString();
    if (!first) {
      if (coeff.size() && coeff[0] == '-' &&
          coeff.find('+', 1) == std::string::npos &&
          coeff.find('-', 1) == std::string::npos) {
        os << " - ";
        coeff = coeff.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (coeff == "1")
      os << term;
    else if (coeff == "-1")
      os << "-" << term;
    else if (coeff.find('+', 1) != std::string::npos ||
             coeff.find('-', 1) != std::string::npos)
      os << "(" << coeff << ")*" << term;
    else
      os << coeff << "*" << term;
  }
  if (first) os << "0";
  return os.str();
}

UniPoly contactPairing(const ProjectiveCurve& f, const SymplecticForm& beta) {
  if (f.ambientDim() != 3)
    fail(Errc::BadParameters, "contact geometry needs a curve in P^3");
  const std::vector<UniPoly>& w = f.subsetWronskians(2);
  UniPoly sum;
  for (int m = 0; m < 6; ++m)
    sum = sum + w[static_cast<std::size_t>(m)] *
                    beta.entry(kPairs[m][0], kPairs[m][1]);
  return sum;
}

bool isContact(const ProjectiveCurve& f, const SymplecticForm& beta) {
  if (f.ambientDim() != 3)
    fail(Errc::BadParameters, "contact geometry needs a curve in P^3");
  if (!f.isNondegenerate())
    fail(Errc::DegenerateCurve, "isContact needs a nondegenerate curve");
  return contactPairing(f, beta).isZero();
}

BetaRecovery analyzeContact(const ProjectiveCurve& f) {
  if (f.ambientDim() != 3)
    fail(Errc::BadParameters, "contact geometry needs a curve in P^3");
  if (!f.isNondegenerate())
    fail(Errc::DegenerateCurve, "recoverBeta needs a nondegenerate curve");
  const std::vector<UniPoly>& w = f.subsetWronskians(2);
  int maxDeg = 0;
  for (const auto& p : w)
    if (!p.isZero()) maxDeg = std::max(maxDeg, p.degreeOrThrow());
  MatF m(maxDeg + 1, 6);
  for (Eigen::Index j = 0; j < 6; ++j)
    for (Eigen::Index i = 0; i <= maxDeg; ++i)
      m(i, j) = w[static_cast<std::size_t>(j)].coeff(static_cast<int>(i));

  const std::vector<alg::VecF> kernel = alg::kernelBasis(m);
  BetaRecovery out;
  out.kernelDim = static_cast<int>(kernel.size());
  if (out.kernelDim != 1) return out;

  std::array<FieldElem, 6> c;
  for (int i = 0; i < 6; ++i) c[static_cast<std::size_t>(i)] = kernel[0](i);
  if (pfaffianOfUpper(c).isZero())
    fail(Errc::DegenerateFormBug,
         "one-dimensional relation space carries a degenerate form");
  out.beta = SymplecticForm::fromUpper(c).canonicalized();
  return out;
}

SymplecticForm recoverBeta(const ProjectiveCurve& f) {
  BetaRecovery r = analyzeContact(f);
  if (r.kernelDim == 0)
    fail(Errc::NotContact, "pair-Wronskians are linearly independent");
  if (r.kernelDim >= 2)
    fail(Errc::DegenerateInput,
         "relation space of dimension " + std::to_string(r.kernelDim));
  return *r.beta;
}

ContactFamilyMember contactFamily(long p, long q) {
  if (!(0 < p && p < q) || std::gcd(p, q) != 1)
    fail(Errc::BadParameters,
         "contact family needs coprime integers 0 < p < q");
  const UniPoly z = UniPoly::z();
  std::vector<UniPoly> coords{UniPoly(FieldElem(1)),
                              z.pow(static_cast<unsigned>(p)),
                              z.pow(static_cast<unsigned>(q)),
                              z.pow(static_cast<unsigned>(p + q))};
  std::array<FieldElem, 6> upper{FieldElem(0), FieldElem(0), FieldElem(p - q),
                                 FieldElem(p + q), FieldElem(0), FieldElem(0)};
  Divisor r1, r2;
  if (p - 1 != 0) {
    r1.add(Place::finite(FieldElem(0)), p - 1);
    r1.add(Place::infinity(), p - 1);
  }
  if (q - p - 1 != 0) {
    r2.add(Place::finite(FieldElem(0)), q - p - 1);
    r2.add(Place::infinity(), q - p - 1);
  }
  return ContactFamilyMember{ProjectiveCurve(std::move(coords)),
                             SymplecticForm::fromUpper(upper), std::move(r1),
                             std::move(r2), p, q};
}

ContactReport contactRamificationReport(const ProjectiveCurve& f) {
  ContactReport rep;
  rep.beta = recoverBeta(f);
  rep.degF = f.degree();
  rep.fProfile = f.ramificationProfile();

  const klein::NullCurve g = klein::kleinForward(f, *rep.beta);
  rep.degG = g.curve().degree();
  rep.gProfile = g.curve().ramificationProfile();

  const long r1 = rep.fProfile.r(1), r2 = rep.fProfile.r(2);
  auto& c = rep.checks;
  c.push_back(curves::checkEqual("R1(f) = R3(f)", rep.fProfile.R(1),
                                 rep.fProfile.R(3)));
  c.push_back(curves::checkEqual("r2(f) even", 0, r2 % 2));
  c.push_back(curves::checkEqual("R1(g) = R2(f)", rep.fProfile.R(2),
                                 rep.gProfile.R(1)));
  c.push_back(curves::checkEqual("R4(g) = R2(f)", rep.fProfile.R(2),
                                 rep.gProfile.R(4)));
  c.push_back(curves::checkEqual("R2(g) = R1(f)", rep.fProfile.R(1),
                                 rep.gProfile.R(2)));
  c.push_back(curves::checkEqual("R3(g) = R1(f)", rep.fProfile.R(1),
                                 rep.gProfile.R(3)));
  c.push_back(curves::checkEqual("4 deg f - 12", 4 * rep.degF - 12,
                                 4 * r1 + 2 * r2));
  c.push_back(curves::checkEqual("5 deg g - 20", 5 * rep.degG - 20,
                                 5 * r1 + 5 * r2));
  c.push_back(curves::checkEqual("deg g = 4 + r1 + r2", rep.degG,
                                 4 + r1 + r2));
  rep.passed = true;
  for (const auto& ch : c)
    if (!ch.ok) rep.passed = false;
  return rep;
}

}  // namespace plucker::contact
