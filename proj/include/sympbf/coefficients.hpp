#pragma once

#include <stdexcept>
#include <vector>

#include "sympbf/rational.hpp"

namespace sympbf {

/// Coefficients (a_0 .. a_n) of a symmetric function in the
/// elementary-symmetric basis: a_s multiplies the sum of all
/// degree-s monomials.
struct SymmetricCoeffs {
  int n = 0;
  std::vector<Rational> a;

  SymmetricCoeffs() : a(1) {}
  SymmetricCoeffs(int vars, std::vector<Rational> coeffs) : n(vars), a(std::move(coeffs)) {
    if (n < 0 || a.size() != static_cast<std::size_t>(n) + 1)
      throw std::invalid_argument("SymmetricCoeffs: need exactly n+1 coefficients");
  }

  friend bool operator==(const SymmetricCoeffs&, const SymmetricCoeffs&) = default;
};

/// Coefficients (c_0 .. c_n) of the same function written in powers of
/// the variable sum: f(x) = sum_l c_l (x_1 + ... + x_n)^l.
struct SeriesCoeffs {
  int n = 0;
  std::vector<Rational> c;

  SeriesCoeffs() : c(1) {}
  SeriesCoeffs(int vars, std::vector<Rational> coeffs) : n(vars), c(std::move(coeffs)) {
    if (n < 0 || c.size() != static_cast<std::size_t>(n) + 1)
      throw std::invalid_argument("SeriesCoeffs: need exactly n+1 coefficients");
  }

  friend bool operator==(const SeriesCoeffs&, const SeriesCoeffs&) = default;
};

/// Value table of a symmetric function by Hamming weight:
/// values[w] is the function value on any input with w ones.
struct HammingProfile {
  int n = 0;
  std::vector<Rational> values;

  HammingProfile() : values(1) {}
  HammingProfile(int vars, std::vector<Rational> vals) : n(vars), values(std::move(vals)) {
    if (n < 0 || values.size() != static_cast<std::size_t>(n) + 1)
      throw std::invalid_argument("HammingProfile: need exactly n+1 values");
  }

  friend bool operator==(const HammingProfile&, const HammingProfile&) = default;
};

/// values[w] = sum_{s<=w} a_s * C(w,s): a weight-w input turns on C(w,s)
/// of the degree-s monomials.
inline HammingProfile hamming_profile(const SymmetricCoeffs& sym) {
  std::vector<Rational> values(static_cast<std::size_t>(sym.n) + 1);
  for (int w = 0; w <= sym.n; ++w) {
    Rational v = 0;
    for (int s = 0; s <= w; ++s)
      v += sym.a[static_cast<std::size_t>(s)] * Rational(binomial(static_cast<unsigned>(w), static_cast<unsigned>(s)));
    values[static_cast<std::size_t>(w)] = v;
  }
  return HammingProfile(sym.n, std::move(values));
}

/// Inverse of hamming_profile by binomial inversion:
/// a_s = sum_{w<=s} (-1)^(s-w) * C(s,w) * values[w].
inline SymmetricCoeffs symmetric_from_profile(const HammingProfile& profile) {
  std::vector<Rational> a(static_cast<std::size_t>(profile.n) + 1);
  for (int s = 0; s <= profile.n; ++s) {
    Rational v = 0;
    for (int w = 0; w <= s; ++w) {
      Rational term = profile.values[static_cast<std::size_t>(w)] *
                      Rational(binomial(static_cast<unsigned>(s), static_cast<unsigned>(w)));
      if ((s - w) % 2 == 0)
        v += term;
      else
        v -= term;
    }
    a[static_cast<std::size_t>(s)] = v;
  }
  return SymmetricCoeffs(profile.n, std::move(a));
}

}  // namespace sympbf
