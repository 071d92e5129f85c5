#pragma once

#include <stdexcept>
#include <string>

namespace plucker {

// Every exceptional condition the library promises to detect carries one of
// these codes.  Callers that care about the *kind* of failure (the CLI, the
// verification drivers) switch on code(); the message is for humans.
enum class Errc {
  ZeroInput,          // valuation/wronskian of the zero polynomial
  NonUniformLocus,    // valuation differs across the roots of an algebraic locus
  AllZero,            // curve normalization given identically-zero coordinates
  DegenerateCurve,    // operation requires a nondegenerate curve
  IndexOutOfRange,    // associated-curve / ramification index outside 1..n
  NotContact,         // no symplectic form annihilates the curve
  DegenerateInput,    // >= 2-dimensional space of annihilating forms
  DegenerateFormBug,  // recovered form has zero Pfaffian (internal bug by theory)
  DegenerateForm,     // caller-supplied form is degenerate
  LinearCurve,        // Klein inversion of a curve lying in a line
  NotNull,            // curve/derivative fails the null conditions
  NotDecomposable,    // bivector curve leaves the Plücker quadric
  ConstantInput,      // null completion of a constant map
  BadParameters,      // contact family / profile parameters out of range
  VerificationFailed, // a classification verifier found a mismatch
  IdentityViolated,   // an internal mathematical identity failed to hold
  ParseError,         // malformed document / number / place string
  Internal,           // broken invariant that theory says cannot happen
};

const char* errcName(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errcName(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace plucker
