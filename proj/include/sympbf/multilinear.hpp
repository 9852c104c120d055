#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sympbf/coefficients.hpp"
#include "sympbf/errors.hpp"
#include "sympbf/rational.hpp"

namespace sympbf {

/// Shared default cap on any 2^n enumeration. Individual calls can override.
inline constexpr int kDefaultEnumerationLimit = 24;

/// Hard representation cap: variable subsets are 64-bit masks.
inline constexpr int kMaxVariables = 63;

namespace detail {

inline void check_variable_count(int n) {
  if (n < 0 || n > kMaxVariables)
    throw std::invalid_argument("variable count must be in [0, 63], got " + std::to_string(n));
}

inline std::uint64_t full_mask(int n) {
  return n == 0 ? 0ull : (~0ull >> (64 - n));
}

/// Next mask with the same popcount (Gosper); returns 0 when exhausted
/// within n bits. Call with the smallest mask of the size first.
inline std::uint64_t next_same_weight(std::uint64_t v, int n) {
  if (v == 0) return 0;
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  std::uint64_t next = (((r ^ v) >> 2) / c) | r;
  if (next > full_mask(n)) return 0;
  return next;
}

inline std::string subset_to_string(std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if (mask & (1ull << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace detail

/// One point of the Boolean cube. Variable i (1-based) is bit i-1 of `bits`.
struct BooleanPoint {
  int n = 0;
  std::uint64_t bits = 0;

  BooleanPoint() = default;
  BooleanPoint(int vars, std::uint64_t b) : n(vars), bits(b) {
    detail::check_variable_count(n);
    if (bits > detail::full_mask(n))
      throw std::invalid_argument("BooleanPoint: bits do not fit in " + std::to_string(n) + " variables");
  }

  friend bool operator==(const BooleanPoint&, const BooleanPoint&) = default;
};

inline int weight(const BooleanPoint& x) { return std::popcount(x.bits); }

/// A pseudo-Boolean function in multilinear canonical form: a sparse map
/// from variable subsets (bitmasks) to exact rational coefficients.
/// Zero coefficients are never stored, so structural equality coincides
/// with functional equality.
class MultilinearPBF {
 public:
  using TermMap = std::map<std::uint64_t, Rational>;

  MultilinearPBF() = default;
  explicit MultilinearPBF(int vars) : n_(vars) { detail::check_variable_count(vars); }

  static MultilinearPBF from_terms(int vars, std::initializer_list<std::pair<std::uint64_t, Rational>> terms) {
    MultilinearPBF f(vars);
    for (const auto& [mask, coeff] : terms) f.add_term(mask, coeff);
    return f;
  }

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds `coeff` to the coefficient of `mask`, keeping the map normalized.
  void add_term(std::uint64_t mask, const Rational& coeff) {
    if (mask > detail::full_mask(n_))
      throw std::invalid_argument("term subset " + detail::subset_to_string(mask) +
                                  " does not fit in " + std::to_string(n_) + " variables");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(mask, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Coefficient of a subset; zero when absent.
  const Rational& coeff(std::uint64_t mask) const {
    static const Rational zero = 0;
    auto it = terms_.find(mask);
    return it == terms_.end() ? zero : it->second;
  }

  bool is_zero() const { return terms_.empty(); }

  /// Degree of the multilinear form (0 for constants and the zero function).
  int degree() const {
    int d = 0;
    for (const auto& [mask, coeff] : terms_) d = std::max(d, std::popcount(mask));
    return d;
  }

  friend bool operator==(const MultilinearPBF&, const MultilinearPBF&) = default;

 private:
  int n_ = 0;
  TermMap terms_;
};

/// Exact evaluation on a Boolean input: sums c(I) over all stored subsets
/// I contained in the support of x.
inline Rational eval_boolean(const MultilinearPBF& f, const BooleanPoint& x) {
  if (x.n != f.n())
    throw DimensionError("eval_boolean: point has " + std::to_string(x.n) + " variables, function has " +
                         std::to_string(f.n()));
  Rational v = 0;
  for (const auto& [mask, coeff] : f.terms())
    if ((mask & x.bits) == mask) v += coeff;
  return v;
}

/// Exact evaluation of the multilinear extension at a rational point.
inline Rational eval_real(const MultilinearPBF& f, std::span<const Rational> point) {
  if (point.size() != static_cast<std::size_t>(f.n()))
    throw DimensionError("eval_real: point has " + std::to_string(point.size()) +
                         " coordinates, function has " + std::to_string(f.n()));
  Rational v = 0;
  for (const auto& [mask, coeff] : f.terms()) {
    Rational prod = coeff;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      prod *= point[static_cast<std::size_t>(i)];
      if (prod == 0) break;
    }
    v += prod;
  }
  return v;
}

/// Double inputs are lifted exactly (every finite double is rational), so
/// this agrees exactly with eval_boolean on 0/1 inputs.
inline Rational eval_real(const MultilinearPBF& f, std::span<const double> point) {
  std::vector<Rational> lifted;
  lifted.reserve(point.size());
  for (double x : point) lifted.push_back(rational_from_double(x));
  return eval_real(f, std::span<const Rational>(lifted));
}

namespace detail {

struct SymmetryCheck {
  bool symmetric = true;
  std::uint64_t subset_a = 0;  // witnesses when not symmetric
  std::uint64_t subset_b = 0;
};

/// Coefficient criterion: f is symmetric iff within every subset size all
/// coefficients agree, counting absent subsets as zero. Equivalent to the
/// permutation definition by uniqueness of the multilinear form.
inline SymmetryCheck check_symmetry(const MultilinearPBF& f) {
  std::map<int, std::pair<std::uint64_t, Rational>> first_by_size;
  std::map<int, std::uint64_t> count_by_size;
  for (const auto& [mask, coeff] : f.terms()) {
    const int s = std::popcount(mask);
    auto [it, inserted] = first_by_size.emplace(s, std::make_pair(mask, coeff));
    if (!inserted && it->second.second != coeff)
      return {false, it->second.first, mask};
    ++count_by_size[s];
  }
  // A size with some subsets stored and others missing mixes a nonzero
  // coefficient with zero.
  for (const auto& [s, count] : count_by_size) {
    const Integer total = binomial(static_cast<unsigned>(f.n()), static_cast<unsigned>(s));
    if (Integer(count) == total) continue;
    std::uint64_t probe = s == 0 ? 0ull : full_mask(s);  // smallest mask of size s
    while (probe != 0 || s == 0) {
      if (f.terms().find(probe) == f.terms().end())
        return {false, first_by_size[s].first, probe};
      probe = next_same_weight(probe, f.n());
      if (s == 0) break;
    }
    return {false, first_by_size[s].first, first_by_size[s].first};  // unreachable
  }
  return {};
}

}  // namespace detail

inline bool is_symmetric(const MultilinearPBF& f) { return detail::check_symmetry(f).symmetric; }

/// Extracts (a_0 .. a_n), the shared coefficient per subset size. Throws
/// NotSymmetricError naming two equal-size subsets with unequal
/// coefficients when the input is not symmetric.
inline SymmetricCoeffs to_symmetric(const MultilinearPBF& f) {
  const auto check = detail::check_symmetry(f);
  if (!check.symmetric) {
    const Rational& ca = f.coeff(check.subset_a);
    const Rational& cb = f.coeff(check.subset_b);
    throw NotSymmetricError("not symmetric: subsets " + detail::subset_to_string(check.subset_a) +
                                " and " + detail::subset_to_string(check.subset_b) +
                                " have coefficients " + to_string(ca) + " and " + to_string(cb),
                            check.subset_a, check.subset_b);
  }
  std::vector<Rational> a(static_cast<std::size_t>(f.n()) + 1);
  for (const auto& [mask, coeff] : f.terms()) a[static_cast<std::size_t>(std::popcount(mask))] = coeff;
  return SymmetricCoeffs(f.n(), std::move(a));
}

/// Expands a_s over all C(n,s) degree-s subsets. The expansion size is
/// checked against the enumeration limit since dense coefficient vectors
/// produce 2^n terms.
inline MultilinearPBF from_symmetric(const SymmetricCoeffs& sym, int limit = kDefaultEnumerationLimit) {
  Integer total = 0;
  for (int s = 0; s <= sym.n; ++s)
    if (sym.a[static_cast<std::size_t>(s)] != 0)
      total += binomial(static_cast<unsigned>(sym.n), static_cast<unsigned>(s));
  if (total > (Integer(1) << limit))
    throw EnumerationLimitError("from_symmetric: expansion needs " + total.str() +
                                " terms, limit is 2^" + std::to_string(limit));
  MultilinearPBF f(sym.n);
  for (int s = 0; s <= sym.n; ++s) {
    const Rational& coeff = sym.a[static_cast<std::size_t>(s)];
    if (coeff == 0) continue;
    if (s == 0) {
      f.add_term(0, coeff);
      continue;
    }
    for (std::uint64_t mask = detail::full_mask(s); mask != 0; mask = detail::next_same_weight(mask, sym.n))
      f.add_term(mask, coeff);
  }
  return f;
}

/// Keeps the constant and degree-1 terms only.
inline MultilinearPBF affine_part(const MultilinearPBF& f) {
  MultilinearPBF g(f.n());
  for (const auto& [mask, coeff] : f.terms())
    if (std::popcount(mask) <= 1) g.add_term(mask, coeff);
  return g;
}

/// True when every coefficient outside the affine part is non-negative.
inline bool is_almost_positive(const MultilinearPBF& f) {
  for (const auto& [mask, coeff] : f.terms())
    if (std::popcount(mask) >= 2 && coeff < 0) return false;
  return true;
}

/// Brute-forces all 2^n inputs; refuses n above the enumeration limit.
inline bool is_nonnegative(const MultilinearPBF& f, int limit = kDefaultEnumerationLimit) {
  if (f.n() > limit)
    throw EnumerationLimitError("is_nonnegative: n = " + std::to_string(f.n()) + " exceeds limit " +
                                std::to_string(limit));
  const std::uint64_t size = 1ull << f.n();
  for (std::uint64_t bits = 0; bits < size; ++bits)
    if (eval_boolean(f, BooleanPoint(f.n(), bits)) < 0) return false;
  return true;
}

}  // namespace sympbf
