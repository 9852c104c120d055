#pragma once

#include <optional>
#include <string>

#include "sympbf/factor.hpp"
#include "sympbf/io.hpp"
#include "sympbf/oracle.hpp"

namespace sympbf {

struct AnalysisOptions {
  double tol_residual = 1e-9;
  double tol_int = 1e-6;
  int max_n = kDefaultEnumerationLimit;
  bool verify = false;

  RootFindingOptions root_options() const {
    RootFindingOptions opts;
    opts.residual_tol = tol_residual;
    return opts;
  }
};

struct CommandResult {
  JsonValue report;
  int exit_code = 0;
};

namespace detail {

inline JsonValue complex_to_json(std::complex<double> z) {
  JsonValue pair = JsonValue::array();
  pair.push(z.real());
  pair.push(z.imag());
  return pair;
}

inline JsonValue rational_vector_json(const std::vector<Rational>& values) {
  JsonValue out = JsonValue::array();
  for (const Rational& v : values) out.push(rational_string_json(v));
  return out;
}

/// Factorization block: roots repeat per multiplicity so that the list
/// length equals the degree; exact_roots is the parallel list of rational
/// strings with null where a root was found numerically.
inline JsonValue factorization_json(const FactoredForm& fact) {
  JsonValue out = JsonValue::object();
  out.add("degree", fact.degree);
  out.add("K", complex_to_json(fact.constant_as_complex()));
  out.add("K_exact", rational_string_json(fact.constant));
  JsonValue roots = JsonValue::array();
  JsonValue exact = JsonValue::array();
  for (const auto& entry : fact.roots)
    for (int m = 0; m < entry.multiplicity; ++m) {
      roots.push(complex_to_json(entry.value));
      exact.push(entry.exact_value ? rational_string_json(*entry.exact_value) : JsonValue(nullptr));
    }
  out.add("roots", std::move(roots));
  out.add("exact_roots", std::move(exact));
  JsonValue residuals = JsonValue::array();
  for (double r : fact.residuals) residuals.push(r);
  out.add("residuals", std::move(residuals));
  return out;
}

inline JsonValue kernel_json(const KernelReport& report) {
  JsonValue out = JsonValue::object();
  if (report.zero_function) out.add("zero_function", true);
  JsonValue levels = JsonValue::array();
  JsonValue mults = JsonValue::array();
  for (const auto& [level, mult] : report.boolean_roots) {
    levels.push(level);
    mults.push(mult);
  }
  out.add("boolean_roots", std::move(levels));
  out.add("boolean_root_multiplicities", std::move(mults));
  JsonValue fractional = JsonValue::array();
  for (const auto& entry : report.fractional_roots)
    for (int m = 0; m < entry.multiplicity; ++m) fractional.push(complex_to_json(entry.value));
  out.add("fractional_roots", std::move(fractional));
  out.add("kernel_size", JsonValue(report.kernel_size));
  JsonValue planes = JsonValue::array();
  for (const std::string& h : report.hyperplanes) planes.push(h);
  out.add("hyperplanes", std::move(planes));
  return out;
}

struct VerificationOutcome {
  JsonValue block;
  bool ok = true;
};

/// Oracle cross-checks shared by `verify` and the --verify flag. Every
/// check compares an optimized path against the deliberately-simple
/// brute-force one.
inline VerificationOutcome run_checks(const MultilinearPBF& f, const AnalysisOptions& opts) {
  VerificationOutcome outcome;
  JsonValue checks = JsonValue::array();
  const auto add_check = [&](const std::string& name, bool pass, const std::string& detail) {
    JsonValue c = JsonValue::object();
    c.add("name", name);
    c.add("pass", pass);
    c.add("detail", detail);
    checks.push(std::move(c));
    outcome.ok = outcome.ok && pass;
  };

  const auto values = brute_values(f, opts.max_n);
  bool values_ok = true;
  for (std::uint64_t x = 0; x < values.size() && values_ok; ++x)
    values_ok = values[x] == eval_boolean(f, BooleanPoint(f.n(), x));
  add_check("values_oracle_agreement", values_ok,
            values_ok ? "eval_boolean matches brute-force values on all inputs"
                      : "eval_boolean disagrees with brute-force values");

  const bool coeff_symmetric = is_symmetric(f);
  if (f.n() <= 10) {
    const bool brute_symmetric = brute_symmetric_check(f, 10);
    add_check("symmetry_consistency", coeff_symmetric == brute_symmetric,
              "coefficient criterion: " + std::string(coeff_symmetric ? "true" : "false") +
                  ", weight-class check: " + std::string(brute_symmetric ? "true" : "false"));
  }

  if (coeff_symmetric) {
    const SymmetricCoeffs sym = to_symmetric(f);
    const SeriesCoeffs series = series_from_symmetric(sym);
    const HammingProfile profile = hamming_profile(sym);

    bool series_ok = true;
    for (int w = 0; w <= f.n() && series_ok; ++w) {
      const std::uint64_t representative = w == 0 ? 0ull : ((1ull << w) - 1);
      series_ok = eval_series(series, w) == profile.values[static_cast<std::size_t>(w)] &&
                  eval_series(series, w) == values[representative];
    }
    add_check("series_profile_agreement", series_ok,
              series_ok ? "series values match the Hamming profile and brute-force values"
                        : "series evaluation disagrees with brute-force values");

    const UnivariatePoly poly = to_univariate(series);
    if (poly.degree() >= 1) {
      const FactoredForm fact = find_roots(poly, opts.root_options(), f.n());

      double scale = 1.0;
      for (const Rational& v : profile.values) scale = std::max(scale, std::abs(to_double(v)));
      const auto residual = verify_factorization(fact, series);
      const bool residual_ok = residual.max_abs_deviation <= opts.tol_residual * scale;
      add_check("factorization_residual", residual_ok,
                "max deviation " + format_double(residual.max_abs_deviation) + " at scale " +
                    format_double(scale));

      const KernelReport kernel = classify_kernel(fact, f.n(), opts.tol_int);
      const std::uint64_t brute_zeros = brute_kernel_size(f, opts.max_n);
      const bool kernel_ok = kernel.kernel_size == Integer(brute_zeros);
      add_check("kernel_size_agreement", kernel_ok,
                "classified " + kernel.kernel_size.str() + ", brute-force counted " +
                    std::to_string(brute_zeros));
    } else {
      const bool zero = f.is_zero();
      const std::uint64_t brute_zeros = brute_kernel_size(f, opts.max_n);
      const std::uint64_t expected = zero ? values.size() : 0;
      add_check("kernel_size_agreement", brute_zeros == expected,
                "constant function: counted " + std::to_string(brute_zeros) + " zeros, expected " +
                    std::to_string(expected));
    }
  }

  outcome.block = JsonValue::object();
  outcome.block.add("checks", std::move(checks));
  outcome.block.add("pass", outcome.ok);
  return outcome;
}

}  // namespace detail

/// `convert`: both coefficient bases plus the Hamming profile.
inline CommandResult run_convert(const nlohmann::json& input, const AnalysisOptions& opts) {
  const FunctionSpec spec = parse_function_spec(input);
  const SymmetricCoeffs sym = spec.symmetric_coeffs();
  const SeriesCoeffs series = series_from_symmetric(sym);
  const HammingProfile profile = hamming_profile(sym);

  CommandResult result;
  result.report = JsonValue::object();
  result.report.add("input", spec.echo());
  result.report.add("n", sym.n);
  result.report.add("symmetric", true);
  result.report.add("a", detail::rational_vector_json(sym.a));
  result.report.add("c", detail::rational_vector_json(series.c));
  result.report.add("hamming_profile", detail::rational_vector_json(profile.values));
  if (opts.verify) {
    const auto outcome = detail::run_checks(spec.to_pbf(opts.max_n), opts);
    result.report.add("verification", outcome.block);
    if (!outcome.ok) result.exit_code = 5;
  }
  return result;
}

/// `factor`: factored form plus kernel classification.
inline CommandResult run_factor(const nlohmann::json& input, const AnalysisOptions& opts) {
  const FunctionSpec spec = parse_function_spec(input);
  const SymmetricCoeffs sym = spec.symmetric_coeffs();
  const SeriesCoeffs series = series_from_symmetric(sym);
  const UnivariatePoly poly = to_univariate(series);

  CommandResult result;
  result.report = JsonValue::object();
  result.report.add("input", spec.echo());
  result.report.add("n", sym.n);
  result.report.add("symmetric", true);
  result.report.add("a", detail::rational_vector_json(sym.a));
  result.report.add("c", detail::rational_vector_json(series.c));

  std::optional<FactoredForm> fact;
  if (poly.is_zero()) {
    result.report.add("factorization", nullptr);
    result.report.add("kernel", detail::kernel_json(kernel_of_zero_function(sym.n)));
  } else if (poly.degree() == 0) {
    JsonValue block = JsonValue::object();
    block.add("degree", 0);
    block.add("K", detail::complex_to_json({to_double(poly.coeffs[0]), 0.0}));
    block.add("K_exact", rational_string_json(poly.coeffs[0]));
    block.add("roots", JsonValue::array());
    block.add("exact_roots", JsonValue::array());
    block.add("note", "constant function: no roots, empty kernel");
    result.report.add("factorization", std::move(block));
    KernelReport empty;
    empty.n = sym.n;
    result.report.add("kernel", detail::kernel_json(empty));
  } else {
    fact = find_roots(poly, opts.root_options(), sym.n);
    result.report.add("factorization", detail::factorization_json(*fact));
    result.report.add("kernel", detail::kernel_json(classify_kernel(*fact, sym.n, opts.tol_int)));
  }

  if (opts.verify) {
    const auto outcome = detail::run_checks(spec.to_pbf(opts.max_n), opts);
    result.report.add("verification", outcome.block);
    if (!outcome.ok) result.exit_code = 5;
  }
  return result;
}

/// `eval`: exact value on a Boolean input, or the multilinear extension at
/// a real point. The two differ off the cube, so the report labels which
/// one was computed.
inline CommandResult run_eval(const nlohmann::json& input, const AnalysisOptions& opts) {
  const FunctionSpec spec = parse_function_spec(input);
  if (!input.contains("at") || !input["at"].is_object())
    throw SpecParseError("eval needs an \"at\" object with \"bits\" or \"point\"");
  const auto& at = input["at"];
  const MultilinearPBF f = spec.to_pbf(opts.max_n);

  CommandResult result;
  result.report = JsonValue::object();
  result.report.add("input", spec.echo());

  if (at.contains("bits")) {
    const std::string bits = at["bits"].get<std::string>();
    if (bits.size() != static_cast<std::size_t>(f.n()))
      throw DimensionError("eval: \"bits\" has length " + std::to_string(bits.size()) + ", function has " +
                           std::to_string(f.n()) + " variables");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1') throw SpecParseError("eval: \"bits\" must contain only 0 and 1");
      if (bits[i] == '1') mask |= 1ull << i;  // leftmost character is x_1
    }
    const Rational value = eval_boolean(f, BooleanPoint(f.n(), mask));
    JsonValue echo_at = JsonValue::object();
    echo_at.add("bits", bits);
    result.report.add("at", std::move(echo_at));
    result.report.add("kind", "boolean");
    result.report.add("value", rational_string_json(value));
    result.report.add("value_float", to_double(value));
  } else if (at.contains("point")) {
    const auto& arr = at["point"];
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(f.n()))
      throw DimensionError("eval: \"point\" must hold exactly " + std::to_string(f.n()) + " coordinates");
    std::vector<Rational> point;
    point.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& v = arr[i];
      if (v.is_number_float())
        point.push_back(rational_from_double(v.get<double>()));  // exact dyadic lift
      else
        point.push_back(rational_from_json(v, "point[" + std::to_string(i) + "]"));
    }
    const Rational value = eval_real(f, std::span<const Rational>(point));
    JsonValue echo_at = JsonValue::object();
    JsonValue coords = JsonValue::array();
    for (const Rational& v : point) coords.push(rational_string_json(v));
    echo_at.add("point", std::move(coords));
    result.report.add("at", std::move(echo_at));
    result.report.add("kind", "multilinear_extension");
    result.report.add("value", rational_string_json(value));
    result.report.add("value_float", to_double(value));
  } else {
    throw SpecParseError("eval: \"at\" needs either \"bits\" or \"point\"");
  }
  return result;
}

/// `embed`: write the 2^n diagonal; with flatten_mode the input is a
/// diagonal document and the multilinear form comes back out.
inline CommandResult run_embed(const nlohmann::json& input, const AnalysisOptions& opts, bool flatten_mode) {
  CommandResult result;
  if (flatten_mode) {
    const DiagonalEmbedding d = diagonal_from_json(input);
    const MultilinearPBF f = flatten(d);
    result.report = JsonValue::object();
    result.report.add("n", f.n());
    JsonValue terms = JsonValue::array();
    std::vector<std::pair<std::uint64_t, Rational>> sorted(f.terms().begin(), f.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& lhs, const auto& rhs) {
      const int pl = std::popcount(lhs.first), pr = std::popcount(rhs.first);
      if (pl != pr) return pl < pr;
      return lhs.first < rhs.first;
    });
    for (const auto& [mask, coeff] : sorted) {
      JsonValue term = JsonValue::object();
      JsonValue vars = JsonValue::array();
      for (int i = 0; i < f.n(); ++i)
        if (mask & (1ull << i)) vars.push(i + 1);
      term.add("vars", std::move(vars));
      term.add("coeff", rational_string_json(coeff));
      terms.push(std::move(term));
    }
    result.report.add("terms", std::move(terms));
    return result;
  }
  const FunctionSpec spec = parse_function_spec(input);
  const MultilinearPBF f = spec.to_pbf(opts.max_n);
  result.report = diagonal_to_json(embed_diagonal(f, opts.max_n));
  return result;
}

/// `verify`: oracle cross-checks with one pass/fail entry each.
inline CommandResult run_verify(const nlohmann::json& input, const AnalysisOptions& opts) {
  const FunctionSpec spec = parse_function_spec(input);
  const MultilinearPBF f = spec.to_pbf(opts.max_n);
  const auto outcome = detail::run_checks(f, opts);

  CommandResult result;
  result.report = JsonValue::object();
  result.report.add("input", spec.echo());
  result.report.add("n", f.n());
  result.report.add("verification", outcome.block);
  result.exit_code = outcome.ok ? 0 : 5;
  return result;
}

}  // namespace sympbf
