#pragma once

#include <utility>
#include <vector>

#include "sympbf/multilinear.hpp"

namespace sympbf {

/// Brute-force reference implementations. These read only the raw term map
/// and evaluate each monomial as a literal product of bits, sharing no code
/// with the optimized evaluation paths they are used to check.

/// Value table over all 2^n inputs, indexed by the input bitmask
/// (variable i = bit i-1).
inline std::vector<Rational> brute_values(const MultilinearPBF& f, int limit = kDefaultEnumerationLimit) {
  if (f.n() > limit)
    throw EnumerationLimitError("brute_values: n = " + std::to_string(f.n()) + " exceeds limit " +
                                std::to_string(limit));
  const std::uint64_t size = std::uint64_t{1} << f.n();
  std::vector<Rational> values(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    Rational v = 0;
    for (const auto& [mask, coeff] : f.terms()) {
      int monomial = 1;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        monomial *= static_cast<int>((x >> std::countr_zero(rest)) & 1u);
        if (monomial == 0) break;
      }
      if (monomial != 0) v += coeff;
    }
    values[x] = v;
  }
  return values;
}

/// Number of exact zeros of f over the Boolean cube.
inline std::uint64_t brute_kernel_size(const MultilinearPBF& f, int limit = kDefaultEnumerationLimit) {
  std::uint64_t count = 0;
  for (const Rational& v : brute_values(f, limit))
    if (v == 0) ++count;
  return count;
}

/// Exact (min, max) over the Boolean cube.
inline std::pair<Rational, Rational> brute_extrema(const MultilinearPBF& f,
                                                   int limit = kDefaultEnumerationLimit) {
  const auto values = brute_values(f, limit);
  Rational lo = values.front(), hi = values.front();
  for (const Rational& v : values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return {lo, hi};
}

/// Semantic symmetry check: the value table must be constant on every
/// Hamming-weight class. Independent of the coefficient criterion.
inline bool brute_symmetric_check(const MultilinearPBF& f, int limit = 10) {
  if (f.n() > limit)
    throw EnumerationLimitError("brute_symmetric_check: n = " + std::to_string(f.n()) + " exceeds limit " +
                                std::to_string(limit));
  const auto values = brute_values(f, limit);
  std::vector<std::pair<bool, Rational>> by_weight(static_cast<std::size_t>(f.n()) + 1, {false, 0});
  for (std::uint64_t x = 0; x < values.size(); ++x) {
    auto& [seen, value] = by_weight[static_cast<std::size_t>(std::popcount(x))];
    if (!seen) {
      seen = true;
      value = values[x];
    } else if (value != values[x]) {
      return false;
    }
  }
  return true;
}

}  // namespace sympbf
