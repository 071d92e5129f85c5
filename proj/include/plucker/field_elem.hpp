#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "plucker/errors.hpp"

namespace plucker::alg {

using Rational = mpq_class;

// An element of Q(i), the universal coefficient field of the library.
// re/im are exact arbitrary-precision rationals; im == 0 embeds Q.
// Q(i) rather than Q because the sum-of-squares null form on C^3 is
// anisotropic over Q: null directions such as (1, i, 0) need i.
class FieldElem {
 public:
  FieldElem() : re_(0), im_(0) {}
  FieldElem(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
  FieldElem(const Rational& re) : re_(re), im_(0) {}
  FieldElem(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static FieldElem i() { return FieldElem(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool isZero() const { return re_ == 0 && im_ == 0; }
  bool isOne() const { return re_ == 1 && im_ == 0; }
  bool isReal() const { return im_ == 0; }

  FieldElem conj() const { return FieldElem(re_, -im_); }

  // |x|^2 = x * conj(x), a nonnegative rational; zero iff x is zero.
  Rational normSq() const { return re_ * re_ + im_ * im_; }

  FieldElem operator-() const { return FieldElem(-re_, -im_); }

  FieldElem& operator+=(const FieldElem& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  FieldElem& operator-=(const FieldElem& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  FieldElem& operator*=(const FieldElem& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  FieldElem& operator/=(const FieldElem& o) {
    if (o.isZero()) fail(Errc::ZeroInput, "division by zero in Q(i)");
    Rational n = o.normSq();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) {
    return !(a == b);
  }

  FieldElem inverse() const { return FieldElem(1) / *this; }

  // Q(i) carries no field order; this is the deterministic (re, im)
  // lexicographic order used for sorting places and serialized output.
  static int compareLex(const FieldElem& a, const FieldElem& b);

  // Serialized form: "a/b", "a/b+c/d*i", "c/d*i" (reduced, denominator 1
  // omitted).  parse accepts those plus "i"/"-i" shorthands.
  std::string toString() const;
  static FieldElem parse(const std::string& s);

 private:
  Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

Rational parseRational(const std::string& s);
std::string rationalToString(const Rational& q);

}  // namespace plucker::alg
