#include "plucker/serialize.hpp"

#include <utility>

namespace plucker::io {

using alg::Divisor;
using alg::FieldElem;
using alg::Place;
using alg::RatFunction;
using alg::UniPoly;
using curves::ProjectiveCurve;

namespace {

Json parseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::ParseError, e.what());
  }
}

[[noreturn]] void rejectField(const std::string& path, const std::string& why) {
  fail(Errc::ParseError, path + ": " + why);
}

const Json& member(const Json& obj, const std::string& key,
                   const std::string& path) {
  if (!obj.is_object()) rejectField(path, "must be an object");
  const auto it = obj.find(key);
  if (it == obj.end()) rejectField(path, "missing field '" + key + "'");
  return *it;
}

FieldElem parseElem(const Json& e, const std::string& path) {
  if (!e.is_string()) rejectField(path, "must be a coefficient string");
  try {
    return FieldElem::parse(e.get<std::string>());
  } catch (const Error& err) {
    std::string msg = err.what();
    const std::string prefix = std::string(errcName(err.code())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    rejectField(path, msg);
  }
}

std::vector<FieldElem> parseElems(const Json& arr, const std::string& path) {
  if (!arr.is_array()) rejectField(path, "must be an array");
  std::vector<FieldElem> out;
  out.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k)
    out.push_back(parseElem(arr[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

Json elemsJson(const std::vector<FieldElem>& v) {
  Json arr = Json::array();
  for (const FieldElem& x : v) arr.push_back(x.toString());
  return arr;
}

}  // namespace

CurveDocument parseCurveDocument(const std::string& text) {
  const Json j = parseJsonText(text);
  CurveDocument doc;

  const Json& dim = member(j, "ambientDim", "document");
  if (!dim.is_number_integer()) rejectField("ambientDim", "must be an integer");
  doc.ambientDim = dim.get<int>();
  if (doc.ambientDim < 1) rejectField("ambientDim", "must be at least 1");

  const Json& coords = member(j, "coords", "document");
  if (!coords.is_array()) rejectField("coords", "must be an array");
  for (std::size_t i = 0; i < coords.size(); ++i)
    doc.coords.push_back(
        parseElems(coords[i], "coords[" + std::to_string(i) + "]"));

  if (j.contains("beta") && !j["beta"].is_null()) {
    const std::vector<FieldElem> b = parseElems(j["beta"], "beta");
    if (b.size() != 6)
      rejectField("beta", "must have exactly 6 upper-triangular entries");
    std::array<FieldElem, 6> up;
    std::copy(b.begin(), b.end(), up.begin());
    doc.beta = up;
  }

  if (j.contains("model") && !j["model"].is_null()) {
    const Json& m = j["model"];
    if (!m.is_string()) rejectField("model", "must be a string");
    const std::string s = m.get<std::string>();
    if (s != "W" && s != "standardQuadric")
      rejectField("model", "must be \"W\" or \"standardQuadric\", got '" + s +
                               "'");
    doc.model = s;
  }
  return doc;
}

std::array<RatFunction, 3> parseGammaDocument(const std::string& text) {
  const Json j = parseJsonText(text);
  const Json& g = member(j, "gamma", "document");
  if (!g.is_array() || g.size() != 3)
    rejectField("gamma", "must be an array of 3 components");
  std::array<RatFunction, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string path = "gamma[" + std::to_string(k) + "]";
    const Json& comp = g[k];
    const UniPoly num(parseElems(member(comp, "num", path), path + ".num"));
    UniPoly den(FieldElem(1));
    if (comp.contains("den") && !comp["den"].is_null())
      den = UniPoly(parseElems(comp["den"], path + ".den"));
    if (den.isZero()) rejectField(path + ".den", "must be nonzero");
    out[k] = RatFunction(num, den);
  }
  return out;
}

ProjectiveCurve toCurve(const CurveDocument& doc) {
  if (static_cast<int>(doc.coords.size()) != doc.ambientDim + 1)
    rejectField("coords",
                "expected " + std::to_string(doc.ambientDim + 1) +
                    " coordinates for ambientDim " +
                    std::to_string(doc.ambientDim) + ", got " +
                    std::to_string(doc.coords.size()));
  std::vector<UniPoly> cs;
  cs.reserve(doc.coords.size());
  for (const std::vector<FieldElem>& c : doc.coords) cs.push_back(UniPoly(c));
  return ProjectiveCurve(std::move(cs));
}

CurveDocument documentFor(const ProjectiveCurve& f) {
  CurveDocument doc;
  doc.ambientDim = f.ambientDim();
  for (const UniPoly& c : f.coords()) doc.coords.push_back(c.coeffs());
  return doc;
}

Json toJson(const CurveDocument& doc) {
  Json j;
  j["ambientDim"] = doc.ambientDim;
  Json coords = Json::array();
  for (const std::vector<FieldElem>& c : doc.coords)
    coords.push_back(elemsJson(c));
  j["coords"] = std::move(coords);
  if (doc.beta) {
    Json b = Json::array();
    for (const FieldElem& x : *doc.beta) b.push_back(x.toString());
    j["beta"] = std::move(b);
  }
  if (doc.model) j["model"] = *doc.model;
  return j;
}

Json polyJson(const UniPoly& p) { return elemsJson(p.coeffs()); }

Json placeJson(const Place& p) {
  if (p.isInfinity()) return "inf";
  if (p.isFinite()) return p.finiteValue().toString();
  Json j;
  j["locus"] = polyJson(p.locusPoly());
  return j;
}

Json divisorJson(const Divisor& d) {
  Json arr = Json::array();
  for (const auto& [place, mult] : d.terms()) {
    Json t;
    t["place"] = placeJson(place);
    t["multiplicity"] = mult;
    arr.push_back(std::move(t));
  }
  return arr;
}

Json betaJson(const contact::SymplecticForm& b) {
  Json j;
  Json up = Json::array();
  for (const FieldElem& x : b.upper()) up.push_back(x.toString());
  j["upper"] = std::move(up);
  j["display"] = b.toString();
  return j;
}

Json checkJson(const curves::IdentityCheck& c) {
  Json j;
  j["label"] = c.label;
  j["expected"] = c.expected;
  j["actual"] = c.actual;
  j["ok"] = c.ok;
  return j;
}

Json checksJson(const std::vector<curves::IdentityCheck>& cs) {
  Json arr = Json::array();
  for (const curves::IdentityCheck& c : cs) arr.push_back(checkJson(c));
  return arr;
}

Json profileJson(const curves::RamificationProfile& p) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < p.divisors.size(); ++i) {
    Json j;
    j["index"] = i + 1;
    j["divisor"] = divisorJson(p.divisors[i]);
    j["degree"] = p.totals[i];
    arr.push_back(std::move(j));
  }
  return arr;
}

Json vanishingJson(const Place& p, const curves::VanishingSequence& v) {
  Json j;
  j["place"] = placeJson(p);
  j["vanishingSequence"] = v.a;
  Json ram = Json::array();
  for (std::size_t i = 1; i < v.a.size(); ++i)
    ram.push_back(v.ramification(static_cast<int>(i)));
  j["ramification"] = std::move(ram);
  return j;
}

Json pluckerReportJson(const curves::PluckerReport& r) {
  Json j;
  j["degree"] = r.degF;
  j["associatedDegrees"] = r.associatedDegrees;
  j["profile"] = profileJson(r.profile);
  j["dualProfile"] = profileJson(r.dualProfile);
  j["checks"] = checksJson(r.checks);
  j["passed"] = r.passed;
  return j;
}

Json contactReportJson(const contact::ContactReport& r) {
  Json j;
  j["degF"] = r.degF;
  j["degG"] = r.degG;
  j["beta"] = r.beta ? betaJson(*r.beta) : Json(nullptr);
  j["curveProfile"] = profileJson(r.fProfile);
  j["imageProfile"] = profileJson(r.gProfile);
  j["checks"] = checksJson(r.checks);
  j["passed"] = r.passed;
  return j;
}

Json verificationReportJson(const classify::VerificationReport& r) {
  Json j;
  j["name"] = r.name;
  j["items"] = checksJson(r.items);
  j["passed"] = r.passed;
  return j;
}

Json profileConstraintJson(const classify::ProfileConstraint& pc) {
  Json j;
  j["imageDegree"] = pc.degG;
  Json sols = Json::array();
  for (const classify::ProfileSolution& s : pc.solutions) {
    Json e;
    e["r1"] = s.r1;
    e["r2"] = s.r2;
    e["degF"] = s.degF;
    sols.push_back(std::move(e));
  }
  j["solutions"] = std::move(sols);
  return j;
}

}  // namespace plucker::io
