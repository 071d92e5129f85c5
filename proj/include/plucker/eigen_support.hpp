#pragma once

#include <Eigen/Core>

#include "plucker/field_elem.hpp"
#include "plucker/multipoly.hpp"
#include "plucker/poly.hpp"
#include "plucker/ratfunc.hpp"

// NumTraits shims so Eigen dense containers can carry the exact scalars.
// Only storage, block operations and products are used on these matrices;
// decompositions stay in plucker's own fraction-free routines, so the numeric
// fields (epsilon &c) are inert zeros.  IsComplex stays 0 even for Q(i):
// flagging it would drag in conjugation machinery nothing here wants.
namespace Eigen {

namespace plucker_detail {
template <class S>
struct ExactTraits {
  using Real = S;
  using NonInteger = S;
  using Literal = S;
  using Nested = S;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline S epsilon() { return S(0); }
  static inline S dummy_precision() { return S(0); }
  static inline int digits10() { return 0; }
};
}  // namespace plucker_detail

template <>
struct NumTraits<plucker::alg::FieldElem>
    : plucker_detail::ExactTraits<plucker::alg::FieldElem> {};
template <>
struct NumTraits<plucker::alg::MultiPoly>
    : plucker_detail::ExactTraits<plucker::alg::MultiPoly> {};
template <>
struct NumTraits<plucker::alg::RatFunction>
    : plucker_detail::ExactTraits<plucker::alg::RatFunction> {};
template <class K>
struct NumTraits<plucker::alg::Poly<K>>
    : plucker_detail::ExactTraits<plucker::alg::Poly<K>> {};

}  // namespace Eigen

namespace plucker::alg {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatF = Mat<FieldElem>;
using VecF = Vec<FieldElem>;

// Exact elementwise equality (Eigen's own comparisons are approximate-minded).
template <class S>
bool matEq(const Mat<S>& x, const Mat<S>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      if (!(x(i, j) == y(i, j))) return false;
  return true;
}

template <class S>
bool vecEq(const Vec<S>& x, const Vec<S>& y) {
  if (x.size() != y.size()) return false;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!(x(i) == y(i))) return false;
  return true;
}

template <class S>
bool isZeroVec(const Vec<S>& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!x(i).isZero()) return false;
  return true;
}

}  // namespace plucker::alg
