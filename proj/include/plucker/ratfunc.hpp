#pragma once

#include <string>
#include <utility>

#include "plucker/poly.hpp"

namespace plucker::alg {

// Element of the rational function field Q(i)(z), always kept reduced:
// gcd(num, den) = 1 and den monic.  Zero is 0/1.
class RatFunction {
 public:
  RatFunction() : num_(), den_(FieldElem(1)) {}
  RatFunction(long n) : num_(n), den_(FieldElem(1)) {}  // NOLINT
  RatFunction(UniPoly num) : num_(std::move(num)), den_(FieldElem(1)) {}  // NOLINT
  RatFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) fail(Errc::ZeroInput, "rational function with zero denominator");
    reduce();
  }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isPolynomial() const { return den_ == UniPoly(FieldElem(1)); }

  friend bool operator==(const RatFunction& x, const RatFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const RatFunction& x, const RatFunction& y) {
    return !(x == y);
  }

  RatFunction operator-() const {
    RatFunction r(*this);
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunction operator+(const RatFunction& x, const RatFunction& y) {
    return RatFunction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend RatFunction operator-(const RatFunction& x, const RatFunction& y) {
    return x + (-y);
  }
  friend RatFunction operator*(const RatFunction& x, const RatFunction& y) {
    return RatFunction(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend RatFunction operator/(const RatFunction& x, const RatFunction& y) {
    if (y.isZero()) fail(Errc::ZeroInput, "division by the zero function");
    return RatFunction(x.num_ * y.den_, x.den_ * y.num_);
  }
  RatFunction& operator+=(const RatFunction& o) { return *this = *this + o; }
  RatFunction& operator-=(const RatFunction& o) { return *this = *this - o; }
  RatFunction& operator*=(const RatFunction& o) { return *this = *this * o; }
  RatFunction& operator/=(const RatFunction& o) { return *this = *this / o; }

  RatFunction derivative() const {
    return RatFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                       den_ * den_);
  }

  std::string toString() const {
    if (isPolynomial()) return num_.toString();
    return "(" + num_.toString() + ")/(" + den_.toString() + ")";
  }

 private:
  void reduce() {
    if (num_.isZero()) {
      den_ = UniPoly(FieldElem(1));
      return;
    }
    UniPoly g = gcd(num_, den_);
    if (!g.isConstant()) {
      num_ = divideExact(num_, g);
      den_ = divideExact(den_, g);
    }
    FieldElem lead = den_.leading();
    if (!lead.isOne()) {
      FieldElem inv = lead.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  UniPoly num_, den_;
};

}  // namespace plucker::alg
