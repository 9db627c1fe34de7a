#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gwc {

/// Integer power by repeated squaring; negative k inverts.
template <typename T>
T ipow(T base, int k) {
  if (k < 0) return T(1) / ipow(base, -k);
  T r(1);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

/// Pairwise (cascade) summation.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  if (v.empty()) return T(0);
  if (v.size() <= 8) {
    T s(0);
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v));
}

}  // namespace gwc
