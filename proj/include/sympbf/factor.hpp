#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympbf/coefficients.hpp"
#include "sympbf/errors.hpp"
#include "sympbf/rational.hpp"
#include "sympbf/transform.hpp"

namespace sympbf {

/// Univariate polynomial with exact rational coefficients, index = power.
/// Trailing zeros are trimmed; the zero polynomial has an empty vector.
struct UnivariatePoly {
  std::vector<Rational> coeffs;

  static UnivariatePoly from_coeffs(std::vector<Rational> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return UnivariatePoly{std::move(c)};
  }

  bool is_zero() const { return coeffs.empty(); }

  /// Degree of a nonzero polynomial; -1 flags the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  Rational operator()(const Rational& x) const {
    Rational v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
  }

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;
};

/// Substitutes the Hamming sum by a free variable X; the series
/// coefficients become the polynomial coefficients directly.
inline UnivariatePoly to_univariate(const SeriesCoeffs& series) {
  return UnivariatePoly::from_coeffs(series.c);
}

struct RootFindingOptions {
  double step_tol = 1e-13;      ///< simultaneous-iteration stopping threshold
  int max_iterations = 500;
  double residual_tol = 1e-9;   ///< |Q(root)| <= residual_tol * max(1, max|coeff|)
  double cluster_tol = 1e-6;    ///< numeric roots closer than this merge as one
};

/// One root of the factored form, with its exact rational value when the
/// exact extraction path produced it.
struct RootEntry {
  std::complex<double> value;
  std::optional<Rational> exact_value;
  int multiplicity = 1;
};

/// f = constant * prod (root - X)^multiplicity. Since the coefficients are
/// rational the constant is rational: constant = leading * (-1)^degree.
struct FactoredForm {
  int degree = 0;
  Rational leading;
  Rational constant;
  std::vector<RootEntry> roots;
  std::vector<double> residuals;  ///< |Q(root)| per entry, exact entries are 0
  bool all_exact = false;

  std::complex<double> constant_as_complex() const { return {to_double(constant), 0.0}; }
};

/// Classification of roots against the Boolean weight range [0, n].
struct KernelReport {
  int n = 0;
  std::vector<std::pair<int, int>> boolean_roots;  ///< (integer level, multiplicity)
  std::vector<RootEntry> fractional_roots;
  Integer kernel_size = 0;
  std::vector<std::string> hyperplanes;
  bool zero_function = false;
};

struct FactorisationCheck {
  double max_abs_deviation = 0.0;
  std::vector<double> per_weight;
  bool exact = false;
};

namespace detail {

/// Exact evaluation of q at a complex point with rational parts.
inline std::pair<Rational, Rational> eval_complex_exact(const UnivariatePoly& q, const Rational& re,
                                                        const Rational& im) {
  Rational hr = 0, hi = 0;
  for (auto it = q.coeffs.rbegin(); it != q.coeffs.rend(); ++it) {
    const Rational new_hr = hr * re - hi * im + *it;
    hi = hr * im + hi * re;
    hr = new_hr;
  }
  return {hr, hi};
}

inline double exact_abs_residual(const UnivariatePoly& q, std::complex<double> z) {
  const auto [re, im] = eval_complex_exact(q, rational_from_double(z.real()), rational_from_double(z.imag()));
  return std::sqrt(to_double(re * re + im * im));
}

/// Synthetic division by (X - root); the caller guarantees q(root) == 0.
inline UnivariatePoly deflate_exact(const UnivariatePoly& q, const Rational& root) {
  const int d = q.degree();
  std::vector<Rational> out(static_cast<std::size_t>(d));
  Rational carry = 0;
  for (int i = d; i >= 1; --i) {
    carry = carry * root + q.coeffs[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i - 1)] = carry;
  }
  return UnivariatePoly{std::move(out)};
}

/// Divisors of |v| by trial division; empty when v does not factor cheaply
/// or the divisor list explodes, in which case that candidate family is
/// skipped and the numeric path covers the rest. Only 64-bit values are
/// attempted.
inline std::vector<Integer> small_divisors(Integer v, std::size_t max_count = 512) {
  if (v < 0) v = -v;
  if (v == 0 || v > std::numeric_limits<std::uint64_t>::max()) return {};
  std::uint64_t rest = v.convert_to<std::uint64_t>();
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  for (std::uint64_t p = 2; p * p <= rest && p <= 100000; ++p) {
    if (rest % p == 0) {
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
  }
  if (rest > 1) {
    if (rest > std::uint64_t{100000} * 100000) return {};  // unfactored large cofactor
    factors.emplace_back(rest, 1);
  }
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    if (base * (e + 1) > max_count) return {};
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Rational-root-theorem candidates of q after clearing denominators.
inline std::vector<Rational> rational_root_candidates(const UnivariatePoly& q) {
  Integer lcm = 1;
  for (const Rational& c : q.coeffs) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<Integer> ic;
  ic.reserve(q.coeffs.size());
  for (const Rational& c : q.coeffs) {
    const Rational scaled = c * Rational(lcm);
    ic.push_back(numerator(scaled));
  }
  const auto ps = small_divisors(ic.front());
  const auto qs = small_divisors(ic.back());
  if (ps.empty() || qs.empty()) return {};
  std::vector<Rational> out;
  if (ps.size() * qs.size() > 4096) return {};
  for (const Integer& p : ps)
    for (const Integer& den : qs) {
      out.emplace_back(p, den);
      out.emplace_back(-p, den);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct DurandKernerResult {
  std::vector<std::complex<double>> roots;
  bool converged = false;
  int iterations = 0;
};

/// Simultaneous (Weierstrass) iteration on the monic version of the given
/// coefficients. Guesses start on a scaled circle rotated off the real
/// axis so real roots cannot trap symmetric iterates. A root counts as
/// converged once its update drops below the step threshold or its value
/// |p(z)| reaches the Horner evaluation-noise floor, past which double
/// arithmetic cannot improve the iterate.
inline DurandKernerResult durand_kerner(const std::vector<double>& monic_low_coeffs,
                                        const RootFindingOptions& opts) {
  const int d = static_cast<int>(monic_low_coeffs.size());
  // Returns p(z) and the magnitude sum that bounds the evaluation error.
  const auto eval_monic = [&](std::complex<double> z) {
    std::complex<double> v = 1.0;
    double magnitude_sum = 1.0;
    const double az = std::abs(z);
    for (int i = d - 1; i >= 0; --i) {
      v = v * z + monic_low_coeffs[static_cast<std::size_t>(i)];
      magnitude_sum = magnitude_sum * az + std::abs(monic_low_coeffs[static_cast<std::size_t>(i)]);
    }
    return std::make_pair(v, magnitude_sum);
  };
  const double noise_factor = 4.0 * d * std::numeric_limits<double>::epsilon();

  double radius = 0.0;
  for (int i = 0; i < d; ++i) {
    const double a = std::abs(monic_low_coeffs[static_cast<std::size_t>(i)]);
    if (a > 0) radius = std::max(radius, std::pow(a, 1.0 / (d - i)));
  }
  radius = std::max(0.5, 1.2 * radius);

  DurandKernerResult res;
  res.roots.resize(static_cast<std::size_t>(d));
  constexpr double kPhase = 0.79;  // non-real offset angle
  for (int j = 0; j < d; ++j) {
    const double angle = 2.0 * M_PI * j / d + kPhase;
    res.roots[static_cast<std::size_t>(j)] = std::polar(radius, angle);
  }

  constexpr double kUlpFactor = 8.0 * std::numeric_limits<double>::epsilon();
  std::vector<bool> settled(static_cast<std::size_t>(d), false);
  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    for (int j = 0; j < d; ++j) {
      std::complex<double>& zj = res.roots[static_cast<std::size_t>(j)];
      std::complex<double> denom = 1.0;
      for (int k = 0; k < d; ++k)
        if (k != j) denom *= (zj - res.roots[static_cast<std::size_t>(k)]);
      if (std::abs(denom) == 0.0) {
        zj += std::complex<double>(1e-8, 1e-8);  // split coincident iterates
        settled[static_cast<std::size_t>(j)] = false;
        continue;
      }
      const auto [value, magnitude_sum] = eval_monic(zj);
      if (std::abs(value) <= noise_factor * magnitude_sum) {
        settled[static_cast<std::size_t>(j)] = true;  // at the noise floor
        continue;
      }
      const std::complex<double> delta = value / denom;
      zj -= delta;
      settled[static_cast<std::size_t>(j)] =
          std::abs(delta) < std::max(opts.step_tol, kUlpFactor * std::abs(zj));
    }
    res.iterations = iter;
    if (std::all_of(settled.begin(), settled.end(), [](bool s) { return s; })) {
      res.converged = true;
      break;
    }
  }
  return res;
}

/// One Newton step per root against the full original polynomial, which
/// removes the drift deflation introduces. Steps that do not look like a
/// small correction are discarded.
inline std::complex<double> newton_polish(const std::vector<double>& coeffs, std::complex<double> z) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  std::complex<double> p = coeffs[static_cast<std::size_t>(d)];
  std::complex<double> dp = 0.0;
  for (int i = d - 1; i >= 0; --i) {
    dp = dp * z + p;
    p = p * z + coeffs[static_cast<std::size_t>(i)];
  }
  if (std::abs(dp) == 0.0) return z;
  const std::complex<double> step = p / dp;
  if (std::abs(step) > 1e-3 * (1.0 + std::abs(z))) return z;
  return z - step;
}

/// Single-link clustering of numeric roots within the merge tolerance.
inline std::vector<RootEntry> merge_clusters(const std::vector<std::complex<double>>& roots, double tol) {
  const std::size_t m = roots.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (std::abs(roots[i] - roots[j]) < tol) parent[find(i)] = find(j);
  std::vector<RootEntry> out;
  std::vector<bool> seen(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t rep = find(i);
    if (seen[rep]) continue;
    seen[rep] = true;
    std::complex<double> sum = 0.0;
    int count = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (find(j) == rep) {
        sum += roots[j];
        ++count;
      }
    out.push_back(RootEntry{sum / static_cast<double>(count), std::nullopt, count});
  }
  return out;
}

inline bool is_perfect_square(const Integer& v, Integer& root_out) {
  if (v < 0) return false;
  root_out = boost::multiprecision::sqrt(v);
  return root_out * root_out == v;
}

/// Exact square root of a non-negative rational if one exists.
inline std::optional<Rational> exact_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  Integer rn, rd;
  if (!is_perfect_square(numerator(v), rn)) return std::nullopt;
  if (!is_perfect_square(denominator(v), rd)) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace detail

/// Finds all complex roots of q with multiplicity. Exact rational roots are
/// extracted and deflated first (integer levels 0..integer_candidate_hi,
/// rational-root-theorem candidates, and closed forms for what remains at
/// degree 1 or 2); a Durand-Kerner pass with one Newton polish per root
/// covers the remainder. Residuals are evaluated in exact arithmetic
/// against the original polynomial and checked against the residual
/// contract.
inline FactoredForm find_roots(const UnivariatePoly& q, const RootFindingOptions& opts = {},
                               int integer_candidate_hi = -1) {
  if (q.is_zero()) throw std::invalid_argument("find_roots: zero polynomial has no factored form");
  const int degree = q.degree();
  if (degree < 1) throw std::invalid_argument("find_roots: constant polynomial has no roots");

  std::vector<std::pair<Rational, int>> exact;  // (root, multiplicity)
  UnivariatePoly work = q;

  const auto take_root = [&](const Rational& r) {
    int mult = 0;
    while (work.degree() >= 1 && work(r) == 0) {
      work = detail::deflate_exact(work, r);
      ++mult;
    }
    if (mult > 0) exact.emplace_back(r, mult);
    return mult > 0;
  };

  // Roots at zero show up as missing low-order coefficients.
  take_root(Rational(0));

  const int hi = std::max(degree, integer_candidate_hi);
  for (int t = 1; t <= hi && work.degree() >= 1; ++t) take_root(Rational(t));

  if (work.degree() >= 1) {
    for (const Rational& cand : detail::rational_root_candidates(work)) {
      if (work.degree() < 1) break;
      if (work(cand) == 0) take_root(cand);
    }
  }

  std::vector<RootEntry> numeric;

  if (work.degree() == 1) {
    take_root(-work.coeffs[0] / work.coeffs[1]);
  } else if (work.degree() == 2) {
    const Rational &a = work.coeffs[2], &b = work.coeffs[1], &c = work.coeffs[0];
    const Rational disc = b * b - 4 * a * c;
    if (const auto s = detail::exact_sqrt(disc)) {
      take_root((-b + *s) / (2 * a));
      take_root((-b - *s) / (2 * a));
    } else {
      const double ad = to_double(a), bd = to_double(b), dd = to_double(disc);
      if (dd >= 0) {
        // b and sqrt(disc) never cancel in q1; the other root comes from
        // the product c/a = r1*r2.
        const double s = std::sqrt(dd);
        const double q1 = -(bd + std::copysign(s, bd)) / 2.0;
        numeric.push_back(RootEntry{{q1 / ad, 0.0}, std::nullopt, 1});
        numeric.push_back(RootEntry{{to_double(c) / q1, 0.0}, std::nullopt, 1});
      } else {
        const double re = -bd / (2.0 * ad), im = std::sqrt(-dd) / (2.0 * std::abs(ad));
        numeric.push_back(RootEntry{{re, im}, std::nullopt, 1});
        numeric.push_back(RootEntry{{re, -im}, std::nullopt, 1});
      }
    }
  } else if (work.degree() >= 3) {
    const int d = work.degree();
    std::vector<double> monic_low(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
      monic_low[static_cast<std::size_t>(i)] =
          to_double(work.coeffs[static_cast<std::size_t>(i)] / work.coeffs[static_cast<std::size_t>(d)]);
    const auto dk = detail::durand_kerner(monic_low, opts);

    std::vector<double> full(q.coeffs.size());
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) full[i] = to_double(q.coeffs[i]);
    std::vector<std::complex<double>> polished = dk.roots;
    for (auto& z : polished) z = detail::newton_polish(full, z);

    if (!dk.converged) {
      std::vector<double> residuals;
      residuals.reserve(polished.size());
      for (const auto& z : polished) residuals.push_back(detail::exact_abs_residual(q, z));
      throw RootFindingError("find_roots: simultaneous iteration did not converge within " +
                                 std::to_string(opts.max_iterations) + " iterations",
                             polished, residuals);
    }
    numeric = detail::merge_clusters(polished, opts.cluster_tol);
  }

  FactoredForm form;
  form.degree = degree;
  form.leading = q.coeffs.back();
  form.constant = (degree % 2 == 0) ? form.leading : -form.leading;
  form.all_exact = numeric.empty();

  for (const auto& [root, mult] : exact)
    form.roots.push_back(RootEntry{{to_double(root), 0.0}, root, mult});
  form.roots.insert(form.roots.end(), numeric.begin(), numeric.end());
  std::sort(form.roots.begin(), form.roots.end(), [](const RootEntry& lhs, const RootEntry& rhs) {
    if (lhs.value.real() != rhs.value.real()) return lhs.value.real() < rhs.value.real();
    return lhs.value.imag() < rhs.value.imag();
  });

  int total = 0;
  for (const auto& entry : form.roots) total += entry.multiplicity;
  if (total != degree)
    throw RootFindingError("find_roots: multiplicities sum to " + std::to_string(total) +
                               ", expected " + std::to_string(degree),
                           {}, {});

  // Residual budget per root: the coefficient scale, widened to
  // sum |c_i| |root|^i for roots outside the unit disk. A residual within
  // residual_tol of that sum certifies the root as exact for coefficients
  // perturbed by at most residual_tol relative, which is the best double
  // arithmetic can promise once |root| grows.
  double coeff_scale = 1.0;
  for (const Rational& c : q.coeffs) coeff_scale = std::max(coeff_scale, std::abs(to_double(c)));
  form.residuals.reserve(form.roots.size());
  bool contract_ok = true;
  for (const auto& entry : form.roots) {
    const double r = entry.exact_value ? 0.0 : detail::exact_abs_residual(q, entry.value);
    form.residuals.push_back(r);
    double root_scale = 0.0;
    const double az = std::abs(entry.value);
    for (auto it = q.coeffs.rbegin(); it != q.coeffs.rend(); ++it)
      root_scale = root_scale * az + std::abs(to_double(*it));
    if (r > opts.residual_tol * std::max(coeff_scale, root_scale)) contract_ok = false;
  }
  if (!contract_ok) {
    std::vector<std::complex<double>> iterates;
    for (const auto& entry : form.roots) iterates.push_back(entry.value);
    throw RootFindingError("find_roots: residual contract violated (tolerance " +
                               std::to_string(opts.residual_tol) + " at coefficient scale " +
                               std::to_string(coeff_scale) + ")",
                           iterates, form.residuals);
  }
  return form;
}

/// Splits roots into Boolean-feasible integer levels in [0, n] and
/// fractional/complex leftovers. Exact roots are tested exactly; numeric
/// roots within `int_tol` of an integer level count as that level. The
/// kernel size counts each distinct level's hyperplane once.
inline KernelReport classify_kernel(const FactoredForm& fact, int n, double int_tol = 1e-6) {
  KernelReport report;
  report.n = n;
  std::map<int, int> levels;
  for (const auto& entry : fact.roots) {
    std::optional<int> level;
    if (entry.exact_value) {
      const Rational& v = *entry.exact_value;
      if (is_integer(v) && v >= 0 && v <= n) level = static_cast<int>(numerator(v).convert_to<long long>());
    } else {
      const double re = entry.value.real();
      const double rounded = std::nearbyint(re);
      if (std::abs(entry.value.imag()) <= int_tol && std::abs(re - rounded) <= int_tol && rounded >= 0 &&
          rounded <= n)
        level = static_cast<int>(rounded);
    }
    if (level)
      levels[*level] += entry.multiplicity;
    else
      report.fractional_roots.push_back(entry);
  }
  for (const auto& [level, mult] : levels) {
    report.boolean_roots.emplace_back(level, mult);
    report.kernel_size += binomial(static_cast<unsigned>(n), static_cast<unsigned>(level));
    report.hyperplanes.push_back("sum x = " + std::to_string(level));
  }
  return report;
}

/// Kernel of the identically-zero function: every input. Kept apart from
/// factorization since the zero polynomial has none.
inline KernelReport kernel_of_zero_function(int n) {
  KernelReport report;
  report.n = n;
  report.zero_function = true;
  report.kernel_size = Integer(1) << n;
  report.hyperplanes.push_back("all inputs");
  return report;
}

/// Compares constant * prod (root - w) against the exact series value at
/// every weight w in [0, n]. All-exact factorizations are compared in
/// rational arithmetic and deviate by exactly zero or a reportable exact
/// difference.
inline FactorisationCheck verify_factorization(const FactoredForm& fact, const SeriesCoeffs& series) {
  FactorisationCheck check;
  check.exact = fact.all_exact;
  check.per_weight.reserve(static_cast<std::size_t>(series.n) + 1);
  for (int w = 0; w <= series.n; ++w) {
    const Rational expected = eval_series(series, w);
    double deviation;
    if (fact.all_exact) {
      Rational prod = fact.constant;
      for (const auto& entry : fact.roots)
        prod *= pow_rational(*entry.exact_value - w, static_cast<unsigned>(entry.multiplicity));
      deviation = std::abs(to_double(prod - expected));
    } else {
      std::complex<double> prod = fact.constant_as_complex();
      for (const auto& entry : fact.roots) {
        const std::complex<double> base = entry.value - std::complex<double>(w, 0.0);
        for (int m = 0; m < entry.multiplicity; ++m) prod *= base;
      }
      deviation = std::abs(prod - std::complex<double>(to_double(expected), 0.0));
    }
    check.per_weight.push_back(deviation);
    check.max_abs_deviation = std::max(check.max_abs_deviation, deviation);
  }
  return check;
}

}  // namespace sympbf
