#include "plucker/field_elem.hpp"

#include <cctype>
#include <ostream>

namespace plucker {

const char* errcName(Errc c) {
  switch (c) {
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NonUniformLocus: return "NonUniformLocus";
    case Errc::AllZero: return "AllZero";
    case Errc::DegenerateCurve: return "DegenerateCurve";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotContact: return "NotContact";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::DegenerateFormBug: return "DegenerateFormBug";
    case Errc::DegenerateForm: return "DegenerateForm";
    case Errc::LinearCurve: return "LinearCurve";
    case Errc::NotNull: return "NotNull";
    case Errc::NotDecomposable: return "NotDecomposable";
    case Errc::ConstantInput: return "ConstantInput";
    case Errc::BadParameters: return "BadParameters";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::IdentityViolated: return "IdentityViolated";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace plucker

namespace plucker::alg {

namespace {

bool validRationalToken(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  bool sawSlash = false, digitsBefore = false, digitsAfter = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (sawSlash) return false;
      sawSlash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (sawSlash ? digitsAfter : digitsBefore) = true;
    } else {
      return false;
    }
  }
  return digitsBefore && (!sawSlash || digitsAfter);
}

std::string stripSpaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Rational parseRational(const std::string& raw) {
  std::string s = stripSpaces(raw);
  if (!validRationalToken(s))
    fail(Errc::ParseError, "bad rational '" + raw + "'");
  if (s.front() == '+') s.erase(0, 1);  // mpq_set_str takes no leading '+'
  Rational q(s);
  if (q.get_den() == 0)
    fail(Errc::ParseError, "zero denominator in '" + raw + "'");
  q.canonicalize();
  return q;
}

std::string rationalToString(const Rational& q) { return q.get_str(); }

int FieldElem::compareLex(const FieldElem& a, const FieldElem& b) {
  int c = cmp(a.re_, b.re_);
  if (c != 0) return c;
  return cmp(a.im_, b.im_);
}

std::string FieldElem::toString() const {
  if (im_ == 0) return rationalToString(re_);
  std::string imPart = rationalToString(abs(im_)) + "*i";
  if (re_ == 0) return (im_ < 0 ? "-" : "") + imPart;
  return rationalToString(re_) + (im_ < 0 ? "-" : "+") + imPart;
}

FieldElem FieldElem::parse(const std::string& raw) {
  std::string s = stripSpaces(raw);
  if (s.empty()) fail(Errc::ParseError, "empty field element");

  // Pure real: no trailing 'i'.
  if (s.back() != 'i') return FieldElem(parseRational(s));

  // Split off the imaginary term: everything after the last sign that is not
  // the leading sign.  "1/2-3/4*i" -> "1/2" and "-3/4*i"; "-i" has no split.
  std::string realTok, imagTok;
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    imagTok = s;
  } else {
    realTok = s.substr(0, split);
    imagTok = s.substr(split);
  }

  // imagTok ends in 'i'; strip it and an optional '*'.
  imagTok.pop_back();
  if (!imagTok.empty() && imagTok.back() == '*') imagTok.pop_back();
  Rational im;
  if (imagTok.empty() || imagTok == "+")
    im = 1;
  else if (imagTok == "-")
    im = -1;
  else
    im = parseRational(imagTok);

  Rational re = realTok.empty() ? Rational(0) : parseRational(realTok);
  return FieldElem(re, im);
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
  return os << x.toString();
}

}  // namespace plucker::alg
