#pragma once

#include <stdexcept>

#include "sympbf/coefficients.hpp"
#include "sympbf/stirling.hpp"

namespace sympbf {

/// a = B c on the degree-1..n block, a_0 = c_0. Exact.
inline SymmetricCoeffs symmetric_from_series(const SeriesCoeffs& series) {
  const int n = series.n;
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  a[0] = series.c[0];
  if (n >= 1) {
    const StirlingMatrix b = StirlingMatrix::build(n);
    for (int i = 1; i <= n; ++i) {
      Rational v = 0;
      for (int j = i; j <= n; ++j) v += Rational(b.at(i, j)) * series.c[static_cast<std::size_t>(j)];
      a[static_cast<std::size_t>(i)] = v;
    }
  }
  return SymmetricCoeffs(n, std::move(a));
}

/// Solves B c = a by back-substitution from c_n down to c_1; the diagonal
/// entries are i!, never zero, so the solution exists and is unique.
inline SeriesCoeffs series_from_symmetric(const SymmetricCoeffs& sym) {
  const int n = sym.n;
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[0] = sym.a[0];
  if (n >= 1) {
    const StirlingMatrix b = StirlingMatrix::build(n);
    for (int i = n; i >= 1; --i) {
      Rational rhs = sym.a[static_cast<std::size_t>(i)];
      for (int j = i + 1; j <= n; ++j) rhs -= Rational(b.at(i, j)) * c[static_cast<std::size_t>(j)];
      c[static_cast<std::size_t>(i)] = rhs / Rational(b.at(i, i));
    }
  }
  return SeriesCoeffs(n, std::move(c));
}

/// Exact value of sum_l c_l * weight^l (0^0 = 1).
inline Rational eval_series(const SeriesCoeffs& series, int weight) {
  if (weight < 0 || weight > series.n)
    throw std::out_of_range("eval_series: weight " + std::to_string(weight) + " outside [0, " +
                            std::to_string(series.n) + "]");
  Rational v = 0;
  for (int l = series.n; l >= 0; --l) v = v * weight + series.c[static_cast<std::size_t>(l)];
  return v;
}

}  // namespace sympbf
