#pragma once

#include <optional>
#include <vector>

#include "sympbf/multilinear.hpp"
#include "sympbf/transform.hpp"

namespace sympbf {

/// Symmetric Ising energy: (J/2) * sum_{l != m} x_l x_m + h * sum_l x_l,
/// read as J/2 per unordered pair so that the factored identity
/// (J/4)(sum x + 4h/J - 1) sum x holds exactly.
struct IsingParams {
  int n = 0;
  Rational coupling;  ///< J, must be nonzero
  Rational bias;      ///< h

  IsingParams(int vars, Rational j, Rational h) : n(vars), coupling(std::move(j)), bias(std::move(h)) {
    if (n < 1) throw std::invalid_argument("IsingParams: need at least one variable");
    if (coupling == 0) throw std::invalid_argument("IsingParams: coupling J must be nonzero");
  }
};

/// Lift of a pseudo-Boolean function onto the diagonal of a 2^n x 2^n
/// matrix, stored as the flat diagonal. Index order is declared once:
/// x_1 is the most significant of the n index bits.
struct DiagonalEmbedding {
  int n = 0;
  std::vector<Rational> diag;

  DiagonalEmbedding(int vars, std::vector<Rational> values) : n(vars), diag(std::move(values)) {
    detail::check_variable_count(n);
    if (diag.size() != (std::size_t{1} << n))
      throw std::invalid_argument("DiagonalEmbedding: need exactly 2^n diagonal entries");
  }

  friend bool operator==(const DiagonalEmbedding&, const DiagonalEmbedding&) = default;
};

namespace detail {

/// Reverses the low n bits: converts between the internal mask order
/// (x_1 = least significant) and the embedding order (x_1 = most
/// significant).
inline std::uint64_t reverse_bits(std::uint64_t v, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i)
    if (v & (1ull << i)) out |= 1ull << (n - 1 - i);
  return out;
}

}  // namespace detail

/// Kronecker delta on k binary variables: 1 on the all-zeros and all-ones
/// inputs, 0 elsewhere. Built from its Hamming profile (1, 0, ..., 0, 1).
inline MultilinearPBF make_delta(int k, int limit = kDefaultEnumerationLimit) {
  if (k < 2) throw std::invalid_argument("make_delta: need k >= 2 variables");
  std::vector<Rational> values(static_cast<std::size_t>(k) + 1, 0);
  values.front() = 1;
  values.back() = 1;
  return from_symmetric(symmetric_from_profile(HammingProfile(k, std::move(values))), limit);
}

/// Parity of n bits: f(x) = weight(x) mod 2. The elementary-symmetric
/// coefficients come out as a_r = (-2)^(r-1) for r >= 1.
inline MultilinearPBF make_xor(int n, int limit = kDefaultEnumerationLimit) {
  if (n < 1) throw std::invalid_argument("make_xor: need n >= 1 variables");
  std::vector<Rational> values(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) values[static_cast<std::size_t>(w)] = w % 2;
  return from_symmetric(symmetric_from_profile(HammingProfile(n, std::move(values))), limit);
}

/// Symmetric coefficients are (0, h, J/2, 0, ..., 0): bias on each
/// variable, J/2 on each unordered pair.
inline SymmetricCoeffs ising_symmetric_coeffs(const IsingParams& p) {
  std::vector<Rational> a(static_cast<std::size_t>(p.n) + 1, 0);
  a[1] = p.bias;
  if (p.n >= 2) a[2] = p.coupling / 2;
  return SymmetricCoeffs(p.n, std::move(a));
}

inline MultilinearPBF make_ising(const IsingParams& p) {
  // Expansion is n + C(n,2) terms, never near the enumeration limit.
  return from_symmetric(ising_symmetric_coeffs(p), kMaxVariables);
}

/// Kernel analysis of the Ising energy from its closed factorization
/// (J/4)(sum x + 4h/J - 1) sum x: weight 0 always vanishes, and the second
/// root 1 - 4h/J adds a hyperplane exactly when it is an integer in
/// [0, n], i.e. when h/J = k/4 for an integer k in [1-n, 1].
struct IsingKernelCondition {
  Rational second_root;                  ///< 1 - 4h/J, exact
  std::vector<long long> feasible_k;     ///< empty, or the single integer k = 4h/J
};

inline IsingKernelCondition ising_kernel_condition(const IsingParams& p) {
  IsingKernelCondition cond;
  const Rational four_ratio = 4 * p.bias / p.coupling;
  cond.second_root = 1 - four_ratio;
  if (is_integer(four_ratio)) {
    const long long k = numerator(four_ratio).convert_to<long long>();
    if (k >= 1 - static_cast<long long>(p.n) && k <= 1) cond.feasible_k.push_back(k);
  }
  return cond;
}

/// diag[I] = f at the input whose bits spell I in the declared order.
inline DiagonalEmbedding embed_diagonal(const MultilinearPBF& f, int limit = kDefaultEnumerationLimit) {
  if (f.n() > limit)
    throw EnumerationLimitError("embed_diagonal: n = " + std::to_string(f.n()) + " exceeds limit " +
                                std::to_string(limit));
  const std::uint64_t size = 1ull << f.n();
  std::vector<Rational> diag(size);
  for (std::uint64_t index = 0; index < size; ++index)
    diag[index] = eval_boolean(f, BooleanPoint(f.n(), detail::reverse_bits(index, f.n())));
  return DiagonalEmbedding(f.n(), std::move(diag));
}

/// Recovers the unique multilinear polynomial matching the diagonal on all
/// Boolean inputs, via Moebius inversion over the subset lattice:
/// c(I) = sum_{J subset I} (-1)^(|I|-|J|) diag[J].
inline MultilinearPBF flatten(const DiagonalEmbedding& d) {
  const std::uint64_t size = std::uint64_t{1} << d.n;
  std::vector<Rational> table(size);
  for (std::uint64_t index = 0; index < size; ++index)
    table[detail::reverse_bits(index, d.n)] = d.diag[index];
  for (int bit = 0; bit < d.n; ++bit)
    for (std::uint64_t mask = 0; mask < size; ++mask)
      if (mask & (1ull << bit)) table[mask] -= table[mask ^ (1ull << bit)];
  MultilinearPBF f(d.n);
  for (std::uint64_t mask = 0; mask < size; ++mask)
    if (table[mask] != 0) f.add_term(mask, table[mask]);
  return f;
}

}  // namespace sympbf
