// Command-line surface: curve ingestion, invariant reports, Klein
// transforms, classification verification, machine-readable output.
//
// Exit codes: 0 = success (including negative query answers such as
// "not contact"), 1 = a mathematical verification failed, 2 = input error.

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plucker/classify.hpp"
#include "plucker/contact.hpp"
#include "plucker/klein.hpp"
#include "plucker/serialize.hpp"

namespace {

using plucker::Errc;
using plucker::Error;
using plucker::fail;
using plucker::alg::FieldElem;
using plucker::alg::Place;
using plucker::alg::UniPoly;
using plucker::curves::IdentityCheck;
using plucker::curves::ProjectiveCurve;
using plucker::io::CurveDocument;
using plucker::io::Json;

int exitCodeFor(Errc c) {
  switch (c) {
    case Errc::VerificationFailed:
    case Errc::IdentityViolated:
    case Errc::DegenerateFormBug:
    case Errc::Internal:
      return 1;
    default:
      return 2;
  }
}

std::string readDocument(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProjectiveCurve curveFromFile(const std::string& path) {
  return plucker::io::toCurve(plucker::io::parseCurveDocument(readDocument(path)));
}

// "inf", a field-element string, or "[c0,c1,...]" for an algebraic locus.
Place parsePlaceSpec(const std::string& s) {
  if (s == "inf") return Place::infinity();
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']')
      fail(Errc::ParseError, "unterminated locus spec '" + s + "'");
    std::vector<FieldElem> cs;
    std::string inner = s.substr(1, s.size() - 2);
    std::istringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) cs.push_back(FieldElem::parse(tok));
    return Place::locus(UniPoly(std::move(cs)));
  }
  return Place::finite(FieldElem::parse(s));
}

plucker::contact::SymplecticForm formFromEntries(
    const std::vector<std::string>& entries) {
  if (entries.size() != 6)
    fail(Errc::ParseError, "--beta needs exactly 6 entries, got " +
                               std::to_string(entries.size()));
  std::array<FieldElem, 6> up;
  for (std::size_t k = 0; k < 6; ++k) up[k] = FieldElem::parse(entries[k]);
  return plucker::contact::SymplecticForm::fromUpper(up);
}

void printChecks(std::ostream& os, const std::vector<IdentityCheck>& cs) {
  for (const IdentityCheck& c : cs) {
    if (c.ok)
      os << "  [ok]   " << c.label << " = " << c.actual << "\n";
    else
      os << "  [FAIL] " << c.label << ": expected " << c.expected << ", got "
         << c.actual << "\n";
  }
}

void printProfile(std::ostream& os, const std::string& who,
                  const plucker::curves::RamificationProfile& p) {
  for (std::size_t i = 0; i < p.divisors.size(); ++i)
    os << "  R_" << (i + 1) << (who.empty() ? "" : "(" + who + ")") << " = "
       << p.divisors[i].toString() << "   (degree " << p.totals[i] << ")\n";
}

std::string analyzeOne(const std::string& path,
                       const std::vector<std::string>& placeSpecs,
                       bool json) {
  const ProjectiveCurve f = curveFromFile(path);
  const plucker::curves::PluckerReport rep = plucker::curves::pluckerReport(f);
  std::vector<std::pair<Place, plucker::curves::VanishingSequence>> vans;
  for (const std::string& spec : placeSpecs) {
    const Place p = parsePlaceSpec(spec);
    vans.emplace_back(p, f.vanishingSequence(p));
  }
  std::ostringstream os;
  if (json) {
    Json j;
    j["curve"] = plucker::io::toJson(plucker::io::documentFor(f));
    j["report"] = plucker::io::pluckerReportJson(rep);
    Json places = Json::array();
    for (const auto& [p, v] : vans)
      places.push_back(plucker::io::vanishingJson(p, v));
    j["places"] = std::move(places);
    os << j.dump(2) << "\n";
  } else {
    os << "curve: " << f.toString() << "\n";
    os << "degree: " << rep.degF << "\n";
    os << "associated degrees:";
    for (std::size_t k = 0; k < rep.associatedDegrees.size(); ++k)
      os << " deg f_" << (k + 1) << " = " << rep.associatedDegrees[k];
    os << "\n";
    printProfile(os, "", rep.profile);
    printProfile(os, "dual", rep.dualProfile);
    for (const auto& [p, v] : vans) {
      os << "  at " << p.toString() << ": vanishing sequence";
      for (long a : v.a) os << " " << a;
      os << "\n";
    }
    printChecks(os, rep.checks);
    os << (rep.passed ? "all identities hold\n" : "IDENTITY FAILURE\n");
  }
  return os.str();
}

int runAnalyze(const std::vector<std::string>& files,
               const std::vector<std::string>& placeSpecs, bool json) {
  // Independent documents analyze concurrently; output keeps input order.
  std::vector<std::future<std::string>> futures;
  futures.reserve(files.size());
  for (const std::string& path : files)
    futures.push_back(std::async(std::launch::async, analyzeOne, path,
                                 placeSpecs, json));
  for (auto& fut : futures) std::cout << fut.get();
  return 0;
}

int runContact(const std::string& file,
               const std::vector<std::string>& betaEntries, bool json) {
  const ProjectiveCurve f = curveFromFile(file);

  if (!betaEntries.empty()) {
    const plucker::contact::SymplecticForm beta = formFromEntries(betaEntries);
    const bool yes = plucker::contact::isContact(f, beta);
    if (json) {
      Json j;
      j["isContact"] = yes;
      j["beta"] = plucker::io::betaJson(beta);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "contact for " << beta.toString() << ": "
                << (yes ? "yes" : "no") << "\n";
    }
    return 0;
  }

  const plucker::contact::BetaRecovery rec =
      plucker::contact::analyzeContact(f);
  if (rec.kernelDim != 1) {
    if (json) {
      Json j;
      j["isContact"] = false;
      j["annihilatorDimension"] = rec.kernelDim;
      std::cout << j.dump(2) << "\n";
    } else if (rec.kernelDim == 0) {
      std::cout << "contact: no (no symplectic form annihilates the curve)\n";
    } else {
      std::cout << "contact: no (degenerate: " << rec.kernelDim
                << "-dimensional space of annihilating forms)\n";
    }
    return 0;
  }

  const plucker::contact::ContactReport rep =
      plucker::contact::contactRamificationReport(f);
  if (json) {
    Json j;
    j["isContact"] = true;
    j["annihilatorDimension"] = 1;
    j["report"] = plucker::io::contactReportJson(rep);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "contact: yes\n";
    std::cout << "beta = " << rep.beta->toString() << "\n";
    std::cout << "deg f = " << rep.degF << ", deg image = " << rep.degG
              << "\n";
    printProfile(std::cout, "f", rep.fProfile);
    printProfile(std::cout, "g", rep.gProfile);
    printChecks(std::cout, rep.checks);
    std::cout << (rep.passed ? "all identities hold\n" : "IDENTITY FAILURE\n");
  }
  return 0;
}

int runKlein(const std::string& file,
             const std::vector<std::string>& betaEntries, bool json) {
  const ProjectiveCurve f = curveFromFile(file);
  const plucker::klein::NullCurve g =
      betaEntries.empty()
          ? plucker::klein::kleinForward(f)
          : plucker::klein::kleinForward(f, formFromEntries(betaEntries));
  const auto& model = std::get<plucker::klein::WModel>(g.model());
  CurveDocument doc = plucker::io::documentFor(g.curve());
  doc.beta = model.beta.upper();
  doc.model = "W";
  if (json) {
    std::cout << plucker::io::toJson(doc).dump(2) << "\n";
  } else {
    std::cout << "image: " << g.curve().toString() << "\n";
    std::cout << "model: W with beta = " << model.beta.toString() << "\n";
    std::cout << "degree: " << g.curve().degree() << "\n";
    std::cout << "null identities: "
              << (plucker::klein::isNullCurve(g.curve(), g.gram()) ? "hold"
                                                                   : "FAIL")
              << "\n";
  }
  return 0;
}

plucker::klein::NullCurve nullCurveFromDocument(const CurveDocument& doc) {
  const ProjectiveCurve curve = plucker::io::toCurve(doc);
  if (!doc.model)
    fail(Errc::ParseError,
         "model: required here (\"W\" or \"standardQuadric\")");
  if (*doc.model == "standardQuadric")
    return plucker::klein::NullCurve(curve, plucker::klein::StandardModel{});
  if (!doc.beta)
    fail(Errc::ParseError, "beta: required for the \"W\" model");
  return plucker::klein::NullCurve(
      curve, plucker::klein::buildWModel(
                 plucker::contact::SymplecticForm::fromUpper(*doc.beta)));
}

int runKleinInv(const std::string& file, bool json) {
  const CurveDocument doc =
      plucker::io::parseCurveDocument(readDocument(file));
  const plucker::klein::NullCurve g = nullCurveFromDocument(doc);
  const ProjectiveCurve f = plucker::klein::kleinInverse(g);
  CurveDocument out = plucker::io::documentFor(f);
  out.beta = plucker::contact::recoverBeta(f).upper();
  if (json) {
    std::cout << plucker::io::toJson(out).dump(2) << "\n";
  } else {
    std::cout << "contact curve: " << f.toString() << "\n";
    std::cout << "degree: " << f.degree() << "\n";
    std::cout << "beta = "
              << plucker::contact::SymplecticForm::fromUpper(*out.beta)
                     .toString()
              << "\n";
  }
  return 0;
}

int runNullComplete(const std::string& file, bool json) {
  const auto gamma = plucker::io::parseGammaDocument(readDocument(file));
  const plucker::klein::NullCurve g = plucker::klein::completeNull(gamma);
  CurveDocument doc = plucker::io::documentFor(g.curve());
  doc.model = "standardQuadric";
  if (json) {
    std::cout << plucker::io::toJson(doc).dump(2) << "\n";
  } else {
    std::cout << "completed curve: " << g.curve().toString() << "\n";
    std::cout << "model: standardQuadric\n";
    std::cout << "degree: " << g.curve().degree() << "\n";
  }
  return 0;
}

int runVerify(const std::string& name, bool json) {
  std::vector<plucker::classify::VerificationReport> reports;
  if (name == "all") {
    reports = plucker::classify::verifyAll();
  } else if (name == "deg4") {
    reports.push_back(plucker::classify::verifyDeg4Uniqueness());
  } else if (name == "deg5") {
    reports.push_back(plucker::classify::verifyDeg5Nonexistence());
  } else if (name == "deg6") {
    reports.push_back(plucker::classify::verifyDeg6Classification());
  } else if (name == "deg7-unbranched") {
    reports.push_back(plucker::classify::verifyDeg7UnbranchedNonexistence());
  } else if (name == "deg7-branched") {
    reports.push_back(plucker::classify::verifyDeg7BranchedExample());
  } else {
    fail(Errc::ParseError,
         "unknown verifier '" + name +
             "' (expected deg4, deg5, deg6, deg7-unbranched, deg7-branched "
             "or all)");
  }
  if (json) {
    Json arr = Json::array();
    for (const auto& r : reports)
      arr.push_back(plucker::io::verificationReportJson(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " ("
                << r.items.size() << " checks)\n";
      printChecks(std::cout, r.items);
    }
  }
  return 0;
}

int runProfiles(long degG, bool json) {
  const plucker::classify::ProfileConstraint pc =
      plucker::classify::enumerateProfiles(degG);
  if (json) {
    std::cout << plucker::io::profileConstraintJson(pc).dump(2) << "\n";
  } else {
    std::cout << "image degree " << pc.degG << ":";
    if (pc.solutions.empty()) std::cout << " no admissible profiles";
    for (const auto& s : pc.solutions)
      std::cout << " (r1 = " << s.r1 << ", r2 = " << s.r2
                << ", deg f = " << s.degF << ")";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact projective invariants of rational curves: ramification, "
      "contact structures, the Klein correspondence, and the classification "
      "of low-degree rational null curves."};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::vector<std::string> placeSpecs;
  std::vector<std::string> betaEntries;
  std::string file;
  std::string verifier;
  long degG = 0;
  bool json = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Invariants and the full identity audit of a curve");
  analyze->add_option("files", files, "curve document files ('-' = stdin)")
      ->required();
  analyze->add_option("--place", placeSpecs,
                      "vanishing sequence here: 'inf', a field element, or "
                      "'[c0,c1,...]' for a locus");
  analyze->add_flag("--json", json, "machine-readable output");

  CLI::App* contactCmd = app.add_subcommand(
      "contact", "Detect the contact structure / recover its form");
  contactCmd->add_option("file", file, "curve document file ('-' = stdin)")
      ->required();
  contactCmd
      ->add_option("--beta", betaEntries,
                   "six upper-triangular entries: test this form instead of "
                   "recovering one")
      ->delimiter(',');
  contactCmd->add_flag("--json", json, "machine-readable output");

  CLI::App* klein = app.add_subcommand(
      "klein", "Forward Klein transform of a contact curve");
  klein->add_option("file", file, "curve document file ('-' = stdin)")
      ->required();
  klein
      ->add_option("--beta", betaEntries,
                   "six upper-triangular entries of the contact form "
                   "(recovered when omitted)")
      ->delimiter(',');
  klein->add_flag("--json", json,
                  "emit the image as a feedable curve document");

  CLI::App* kleinInv = app.add_subcommand(
      "klein-inv", "Inverse Klein transform of a null curve document");
  kleinInv->add_option("file", file, "curve document file ('-' = stdin)")
      ->required();
  kleinInv->add_flag("--json", json,
                     "emit the contact curve as a feedable curve document");

  CLI::App* nullComplete = app.add_subcommand(
      "null-complete", "Complete an affine null curve into the quadric");
  nullComplete->add_option("file", file, "gamma document file ('-' = stdin)")
      ->required();
  nullComplete->add_flag("--json", json, "machine-readable output");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run a named classification verifier");
  verify
      ->add_option("name", verifier,
                   "deg4 | deg5 | deg6 | deg7-unbranched | deg7-branched | "
                   "all")
      ->required();
  verify->add_flag("--json", json, "machine-readable output");

  CLI::App* profiles = app.add_subcommand(
      "profiles", "Admissible ramification profiles for a null image degree");
  profiles->add_option("degree", degG, "degree of the null image")->required();
  profiles->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return runAnalyze(files, placeSpecs, json);
    if (*contactCmd) return runContact(file, betaEntries, json);
    if (*klein) return runKlein(file, betaEntries, json);
    if (*kleinInv) return runKleinInv(file, json);
    if (*nullComplete) return runNullComplete(file, json);
    if (*verify) return runVerify(verifier, json);
    if (*profiles) return runProfiles(degG, json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
