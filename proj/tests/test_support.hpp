#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "sympbf/multilinear.hpp"

namespace sympbf::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline Rational random_rational(std::mt19937_64& rng, int num_bound = 20, int den_bound = 6) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int num_bound = 20, int den_bound = 6) {
  Rational r = 0;
  while (r == 0) r = random_rational(rng, num_bound, den_bound);
  return r;
}

inline MultilinearPBF random_pbf(std::mt19937_64& rng, int n, int max_terms = 12) {
  MultilinearPBF f(n);
  std::uniform_int_distribution<std::uint64_t> mask(0, n == 0 ? 0 : (~0ull >> (64 - n)));
  std::uniform_int_distribution<int> count(0, max_terms);
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i) f.add_term(mask(rng), random_rational(rng));
  return f;
}

inline SymmetricCoeffs random_symmetric_coeffs(std::mt19937_64& rng, int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  for (auto& v : a) v = random_rational(rng);
  return SymmetricCoeffs(n, std::move(a));
}

inline SeriesCoeffs random_series_coeffs(std::mt19937_64& rng, int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (auto& v : c) v = random_rational(rng);
  return SeriesCoeffs(n, std::move(c));
}

/// Counts partitions of a j-set into exactly i nonempty blocks by walking
/// every restricted-growth string. Independent of the Stirling recurrence.
inline std::uint64_t count_set_partitions(int j, int i) {
  std::function<std::uint64_t(int, int)> walk = [&](int element, int blocks) -> std::uint64_t {
    if (element == j) return blocks == i ? 1 : 0;
    std::uint64_t total = 0;
    for (int b = 0; b < blocks; ++b) total += walk(element + 1, blocks);
    total += walk(element + 1, blocks + 1);
    return total;
  };
  if (j == 0) return i == 0 ? 1 : 0;
  return walk(0, 0);
}

/// Sum of multinomial coefficients j!/(k_1!...k_i!) over all compositions
/// of j into i positive parts; enumerated directly.
inline Integer multinomial_composition_sum(int j, int i) {
  Integer total = 0;
  std::vector<int> parts(static_cast<std::size_t>(i), 0);
  std::function<void(int, int)> walk = [&](int position, int remaining) {
    if (position == i) {
      if (remaining != 0) return;
      Integer term = factorial(static_cast<unsigned>(j));
      for (int p : parts) term /= factorial(static_cast<unsigned>(p));
      total += term;
      return;
    }
    const int slots_left = i - position - 1;
    for (int k = 1; k + slots_left <= remaining; ++k) {
      parts[static_cast<std::size_t>(position)] = k;
      walk(position + 1, remaining - k);
    }
  };
  if (i == 0) return j == 0 ? 1 : 0;
  walk(0, j);
  return total;
}

/// Applies a permutation of variable positions to an input point:
/// output bit perm[i] copies input bit i.
inline BooleanPoint permute_point(const BooleanPoint& x, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (int i = 0; i < x.n; ++i)
    if (x.bits & (1ull << i)) out |= 1ull << perm[static_cast<std::size_t>(i)];
  return BooleanPoint(x.n, out);
}

}  // namespace sympbf::testing
