#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "plucker/classify.hpp"
#include "plucker/contact.hpp"
#include "plucker/curve.hpp"
#include "plucker/ratfunc.hpp"

namespace plucker::io {

// Insertion-ordered JSON keeps the emitted schema stable field-for-field.
using Json = nlohmann::ordered_json;

// A curve as it travels through files and pipes: exact coefficient strings,
// ascending powers of z, plus the optional contact form and model tag that
// make Klein images self-describing.
struct CurveDocument {
  int ambientDim = 0;
  std::vector<std::vector<alg::FieldElem>> coords;
  std::optional<std::array<alg::FieldElem, 6>> beta;
  std::optional<std::string> model;  // "W" | "standardQuadric"
};

// Parses a JSON curve document.  Every rejection is a ParseError whose
// message pins down the offending field ("coords[2][1]: ...") or, for
// malformed JSON, the line and column.
CurveDocument parseCurveDocument(const std::string& text);

// The three components of an affine curve gamma : S -> C^3 from a JSON
// document {"gamma": [{"num": [...], "den": [...]}, x3]} (den optional,
// default 1).  Same error contract as parseCurveDocument.
std::array<alg::RatFunction, 3> parseGammaDocument(const std::string& text);

// Document -> curve (the document's drawn coordinates, canonicalized).
// ParseError if the coordinate count contradicts ambientDim; AllZero
// propagates for the zero document.
curves::ProjectiveCurve toCurve(const CurveDocument& doc);

// Curve -> document with the curve's canonical coordinates.
CurveDocument documentFor(const curves::ProjectiveCurve& f);

Json toJson(const CurveDocument& doc);

// Report fragments.  All numbers are exact strings; places serialize as
// "inf", a field-element string, or {"locus": [coefficients]}.
Json polyJson(const alg::UniPoly& p);
Json placeJson(const alg::Place& p);
Json divisorJson(const alg::Divisor& d);
Json betaJson(const contact::SymplecticForm& b);
Json checkJson(const curves::IdentityCheck& c);
Json checksJson(const std::vector<curves::IdentityCheck>& cs);
Json profileJson(const curves::RamificationProfile& p);
Json vanishingJson(const alg::Place& p, const curves::VanishingSequence& v);
Json pluckerReportJson(const curves::PluckerReport& r);
Json contactReportJson(const contact::ContactReport& r);
Json verificationReportJson(const classify::VerificationReport& r);
Json profileConstraintJson(const classify::ProfileConstraint& pc);

}  // namespace plucker::io
