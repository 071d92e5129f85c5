#pragma once

#include <utility>
#include <vector>

#include "plucker/eigen_support.hpp"
#include "plucker/linalg.hpp"
#include "plucker/poly.hpp"

namespace plucker::alg {

// All k-element subsets of {0..n-1} in lexicographic order — the fixed
// coordinate order of associated curves and bivector components.
std::vector<std::vector<int>> subsetsLex(int n, int k);

// Wronskian determinant W(h_1..h_k) = det(d^i h_j / dz^i) together with its
// differential weight k(k-1)/2 (the amount by which valuations sum against
// it).  Zero iff the h_i are linearly dependent.  Works over any coefficient
// ring with exact division (the parametric verifiers use K = MultiPoly).
template <class K>
std::pair<Poly<K>, long> wronskian(const std::vector<Poly<K>>& h) {
  if (h.empty()) fail(Errc::ZeroInput, "wronskian of an empty tuple");
  const auto k = static_cast<Eigen::Index>(h.size());
  Mat<Poly<K>> m(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    Poly<K> d = h[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 0; i < k; ++i) {
      m(i, j) = d;
      d = d.derivative();
    }
  }
  return {bareissDet(std::move(m)), static_cast<long>(k) * (k - 1) / 2};
}

// Wronskians of all k-subsets of the given coordinates, lex order.
template <class K>
std::vector<Poly<K>> subsetWronskians(const std::vector<Poly<K>>& h, int k) {
  std::vector<Poly<K>> out;
  for (const std::vector<int>& s :
       subsetsLex(static_cast<int>(h.size()), k)) {
    std::vector<Poly<K>> sub;
    sub.reserve(s.size());
    for (int i : s) sub.push_back(h[static_cast<std::size_t>(i)]);
    out.push_back(wronskian(sub).first);
  }
  return out;
}

}  // namespace plucker::alg
