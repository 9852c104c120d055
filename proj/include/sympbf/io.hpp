#pragma once

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sympbf/models.hpp"
#include "sympbf/multilinear.hpp"
#include "sympbf/transform.hpp"

namespace sympbf {

/// %.17g: up to 17 significant digits, enough to round-trip any double.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Minimal deterministic JSON document: object keys keep insertion order,
/// floats print with 17 significant digits, big integers print in full.
/// Reports must serialize byte-identically for identical inputs, which
/// rules out handing doubles to a shortest-representation dumper.
class JsonValue {
 public:
  using Array = std::vector<JsonValue>;
  using Object = std::vector<std::pair<std::string, JsonValue>>;

  JsonValue() : value_(nullptr) {}
  JsonValue(std::nullptr_t) : value_(nullptr) {}
  JsonValue(bool b) : value_(b) {}
  JsonValue(int v) : value_(static_cast<std::int64_t>(v)) {}
  JsonValue(std::int64_t v) : value_(v) {}
  JsonValue(std::uint64_t v) : value_(Integer(v)) {}
  JsonValue(const Integer& v) : value_(v) {}
  JsonValue(double v) : value_(v) {}
  JsonValue(const char* s) : value_(std::string(s)) {}
  JsonValue(std::string s) : value_(std::move(s)) {}

  static JsonValue object() {
    JsonValue v;
    v.value_ = Object{};
    return v;
  }
  static JsonValue array() {
    JsonValue v;
    v.value_ = Array{};
    return v;
  }

  JsonValue& add(std::string key, JsonValue child) {
    std::get<Object>(value_).emplace_back(std::move(key), std::move(child));
    return *this;
  }
  JsonValue& push(JsonValue child) {
    std::get<Array>(value_).push_back(std::move(child));
    return *this;
  }

  std::string dump() const {
    std::string out;
    write(out, 0);
    out += "\n";
    return out;
  }

 private:
  static void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    out += '"';
  }

  void write(std::string& out, int depth) const {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
    if (std::holds_alternative<std::nullptr_t>(value_)) {
      out += "null";
    } else if (const auto* b = std::get_if<bool>(&value_)) {
      out += *b ? "true" : "false";
    } else if (const auto* i = std::get_if<std::int64_t>(&value_)) {
      out += std::to_string(*i);
    } else if (const auto* big = std::get_if<Integer>(&value_)) {
      out += big->str();
    } else if (const auto* d = std::get_if<double>(&value_)) {
      out += format_double(*d);
    } else if (const auto* s = std::get_if<std::string>(&value_)) {
      write_escaped(out, *s);
    } else if (const auto* arr = std::get_if<Array>(&value_)) {
      if (arr->empty()) {
        out += "[]";
        return;
      }
      bool scalars_only = true;
      for (const auto& child : *arr)
        if (std::holds_alternative<Array>(child.value_) || std::holds_alternative<Object>(child.value_))
          scalars_only = false;
      out += "[";
      for (std::size_t i = 0; i < arr->size(); ++i) {
        if (!scalars_only) {
          out += "\n";
          out += pad_in;
        }
        (*arr)[i].write(out, depth + 1);
        if (i + 1 < arr->size()) out += scalars_only ? ", " : ",";
      }
      if (!scalars_only) {
        out += "\n";
        out += pad;
      }
      out += "]";
    } else if (const auto* obj = std::get_if<Object>(&value_)) {
      if (obj->empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      for (std::size_t i = 0; i < obj->size(); ++i) {
        out += pad_in;
        write_escaped(out, (*obj)[i].first);
        out += ": ";
        (*obj)[i].second.write(out, depth + 1);
        if (i + 1 < obj->size()) out += ",";
        out += "\n";
      }
      out += pad;
      out += "}";
    }
  }

  std::variant<std::nullptr_t, bool, std::int64_t, Integer, double, std::string, Array, Object> value_;
};

/// Lossless rational serialization: plain JSON integer when it fits one,
/// "p/q" string otherwise. Values beyond int64 go to strings since common
/// parsers read larger JSON integers as floats.
inline JsonValue rational_to_json(const Rational& r) {
  if (is_integer(r)) {
    const Integer& num = numerator(r);
    if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max())
      return JsonValue(num.convert_to<std::int64_t>());
  }
  return JsonValue(to_string(r));
}

inline JsonValue rational_string_json(const Rational& r) { return JsonValue(to_string(r)); }

/// Strict rational reader for spec fields: accepts JSON integers and
/// "p/q" strings; rejects floats so no value silently passes through a
/// lossy double.
inline Rational rational_from_json(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(Integer(v.get<std::int64_t>()));
  if (v.is_number_unsigned()) return Rational(Integer(v.get<std::uint64_t>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float())
    throw SpecParseError(where + ": floats are not accepted here; use a rational string like \"1/2\"");
  throw SpecParseError(where + ": expected an integer or a rational string");
}

// ---------------------------------------------------------------------------
// Function specification (wire format)

struct TermsSpec {
  int n = 0;
  std::vector<std::pair<std::vector<int>, Rational>> terms;  // (sorted 1-based vars, coefficient)
};

struct ModelSpec {
  enum class Kind { kDelta, kXor, kIsing };
  Kind kind = Kind::kDelta;
  int size = 0;       // delta: k, xor/ising: n
  Rational coupling;  // ising J
  Rational bias;      // ising h
};

/// Exactly one of the four variants describes the function.
class FunctionSpec {
 public:
  using Variant = std::variant<TermsSpec, SymmetricCoeffs, SeriesCoeffs, ModelSpec>;

  explicit FunctionSpec(Variant content) : content_(std::move(content)) {}

  const Variant& content() const { return content_; }

  int n() const {
    if (const auto* t = std::get_if<TermsSpec>(&content_)) return t->n;
    if (const auto* a = std::get_if<SymmetricCoeffs>(&content_)) return a->n;
    if (const auto* c = std::get_if<SeriesCoeffs>(&content_)) return c->n;
    return std::get<ModelSpec>(content_).size;
  }

  /// Multilinear form; may enumerate up to 2^n terms for the symmetric
  /// variants, so the limit applies.
  MultilinearPBF to_pbf(int limit = kDefaultEnumerationLimit) const {
    if (const auto* t = std::get_if<TermsSpec>(&content_)) {
      MultilinearPBF f(t->n);
      for (const auto& [vars, coeff] : t->terms) {
        std::uint64_t mask = 0;
        for (int v : vars) mask |= 1ull << (v - 1);
        f.add_term(mask, coeff);
      }
      return f;
    }
    return from_symmetric(symmetric_coeffs(), limit);
  }

  /// Elementary-symmetric coefficients. Throws NotSymmetricError when the
  /// terms variant holds a non-symmetric function.
  SymmetricCoeffs symmetric_coeffs() const {
    if (std::holds_alternative<TermsSpec>(content_)) return to_symmetric(to_pbf());
    if (const auto* a = std::get_if<SymmetricCoeffs>(&content_)) return *a;
    if (const auto* c = std::get_if<SeriesCoeffs>(&content_)) return symmetric_from_series(*c);
    const auto& m = std::get<ModelSpec>(content_);
    switch (m.kind) {
      case ModelSpec::Kind::kDelta: {
        if (m.size < 2) throw SpecParseError("delta model: k must be >= 2");
        std::vector<Rational> values(static_cast<std::size_t>(m.size) + 1, 0);
        values.front() = 1;
        values.back() = 1;
        return symmetric_from_profile(HammingProfile(m.size, std::move(values)));
      }
      case ModelSpec::Kind::kXor: {
        if (m.size < 1) throw SpecParseError("xor model: n must be >= 1");
        std::vector<Rational> values(static_cast<std::size_t>(m.size) + 1);
        for (int w = 0; w <= m.size; ++w) values[static_cast<std::size_t>(w)] = w % 2;
        return symmetric_from_profile(HammingProfile(m.size, std::move(values)));
      }
      case ModelSpec::Kind::kIsing:
        return ising_symmetric_coeffs(IsingParams(m.size, m.coupling, m.bias));
    }
    throw SpecParseError("unknown model kind");
  }

  /// Canonical echo of the parsed document.
  JsonValue echo() const {
    JsonValue out = JsonValue::object();
    if (const auto* t = std::get_if<TermsSpec>(&content_)) {
      out.add("n", t->n);
      JsonValue terms = JsonValue::array();
      auto sorted = t->terms;
      std::sort(sorted.begin(), sorted.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.first.size() != rhs.first.size()) return lhs.first.size() < rhs.first.size();
        return lhs.first < rhs.first;
      });
      for (const auto& [vars, coeff] : sorted) {
        JsonValue term = JsonValue::object();
        JsonValue vlist = JsonValue::array();
        for (int v : vars) vlist.push(v);
        term.add("vars", std::move(vlist));
        term.add("coeff", rational_string_json(coeff));
        terms.push(std::move(term));
      }
      out.add("terms", std::move(terms));
    } else if (const auto* a = std::get_if<SymmetricCoeffs>(&content_)) {
      out.add("n", a->n);
      JsonValue list = JsonValue::array();
      for (const Rational& v : a->a) list.push(rational_string_json(v));
      out.add("symmetric_a", std::move(list));
    } else if (const auto* c = std::get_if<SeriesCoeffs>(&content_)) {
      out.add("n", c->n);
      JsonValue list = JsonValue::array();
      for (const Rational& v : c->c) list.push(rational_string_json(v));
      out.add("series_c", std::move(list));
    } else {
      const auto& m = std::get<ModelSpec>(content_);
      JsonValue model = JsonValue::object();
      JsonValue params = JsonValue::object();
      switch (m.kind) {
        case ModelSpec::Kind::kDelta:
          model.add("name", "delta");
          params.add("k", m.size);
          break;
        case ModelSpec::Kind::kXor:
          model.add("name", "xor");
          params.add("n", m.size);
          break;
        case ModelSpec::Kind::kIsing:
          model.add("name", "ising");
          params.add("n", m.size);
          params.add("J", rational_string_json(m.coupling));
          params.add("h", rational_string_json(m.bias));
          break;
      }
      model.add("params", std::move(params));
      out.add("model", std::move(model));
    }
    return out;
  }

 private:
  Variant content_;
};

namespace detail {

inline std::vector<Rational> rational_list(const nlohmann::json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty())
    throw SpecParseError(where + ": expected a non-empty array of rationals");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(rational_from_json(arr[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

inline FunctionSpec parse_function_spec(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SpecParseError("function spec must be a JSON object");
  const int variants = doc.contains("terms") + doc.contains("symmetric_a") + doc.contains("series_c") +
                       doc.contains("model");
  if (variants != 1)
    throw SpecParseError("function spec needs exactly one of: terms, symmetric_a, series_c, model");

  if (doc.contains("terms")) {
    if (!doc.contains("n") || !doc["n"].is_number_integer())
      throw SpecParseError("terms spec: explicit integer \"n\" is required");
    TermsSpec spec;
    spec.n = doc["n"].get<int>();
    if (spec.n < 0 || spec.n > kMaxVariables) throw SpecParseError("terms spec: n must be in [0, 63]");
    if (!doc["terms"].is_array()) throw SpecParseError("terms spec: \"terms\" must be an array");
    for (const auto& item : doc["terms"]) {
      if (!item.is_object() || !item.contains("vars") || !item.contains("coeff"))
        throw SpecParseError("each term needs \"vars\" and \"coeff\"");
      std::vector<int> vars;
      for (const auto& v : item["vars"]) {
        if (!v.is_number_integer()) throw SpecParseError("term vars must be integers");
        vars.push_back(v.get<int>());
      }
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] < 1 || vars[i] > spec.n)
          throw SpecParseError("term variable " + std::to_string(vars[i]) + " outside [1, " +
                               std::to_string(spec.n) + "]");
        if (i > 0 && vars[i] <= vars[i - 1])
          throw SpecParseError("term vars must be strictly increasing");
      }
      spec.terms.emplace_back(std::move(vars), rational_from_json(item["coeff"], "coeff"));
    }
    return FunctionSpec(std::move(spec));
  }

  if (doc.contains("symmetric_a")) {
    auto a = detail::rational_list(doc["symmetric_a"], "symmetric_a");
    const int n = static_cast<int>(a.size()) - 1;
    if (n > kMaxVariables) throw SpecParseError("symmetric_a: too many coefficients");
    return FunctionSpec(SymmetricCoeffs(n, std::move(a)));
  }

  if (doc.contains("series_c")) {
    auto c = detail::rational_list(doc["series_c"], "series_c");
    const int n = static_cast<int>(c.size()) - 1;
    if (n > kMaxVariables) throw SpecParseError("series_c: too many coefficients");
    return FunctionSpec(SeriesCoeffs(n, std::move(c)));
  }

  const auto& model = doc["model"];
  if (!model.is_object() || !model.contains("name") || !model.contains("params"))
    throw SpecParseError("model spec needs \"name\" and \"params\"");
  const std::string name = model["name"].get<std::string>();
  const auto& params = model["params"];
  ModelSpec spec;
  if (name == "delta") {
    spec.kind = ModelSpec::Kind::kDelta;
    if (!params.contains("k")) throw SpecParseError("delta model: params.k required");
    spec.size = params["k"].get<int>();
  } else if (name == "xor") {
    spec.kind = ModelSpec::Kind::kXor;
    if (!params.contains("n")) throw SpecParseError("xor model: params.n required");
    spec.size = params["n"].get<int>();
  } else if (name == "ising") {
    spec.kind = ModelSpec::Kind::kIsing;
    if (!params.contains("n") || !params.contains("J") || !params.contains("h"))
      throw SpecParseError("ising model: params.n, params.J, params.h required");
    spec.size = params["n"].get<int>();
    spec.coupling = rational_from_json(params["J"], "params.J");
    spec.bias = rational_from_json(params["h"], "params.h");
    if (spec.coupling == 0) throw SpecParseError("ising model: J must be nonzero");
  } else {
    throw SpecParseError("unknown model \"" + name + "\" (expected delta, xor, or ising)");
  }
  if (spec.size < 0 || spec.size > kMaxVariables)
    throw SpecParseError("model size outside [0, 63]");
  return FunctionSpec(std::move(spec));
}

// ---------------------------------------------------------------------------
// Diagonal embedding (wire format)

inline JsonValue diagonal_to_json(const DiagonalEmbedding& d) {
  JsonValue out = JsonValue::object();
  out.add("order", "x1-msb");
  out.add("n", d.n);
  JsonValue diag = JsonValue::array();
  for (const Rational& v : d.diag) diag.push(rational_to_json(v));
  out.add("diag", std::move(diag));
  return out;
}

inline DiagonalEmbedding diagonal_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("diag"))
    throw SpecParseError("diagonal document needs \"n\" and \"diag\"");
  if (doc.contains("order") && doc["order"].get<std::string>() != "x1-msb")
    throw SpecParseError("diagonal document: unsupported bit order (only \"x1-msb\")");
  const int n = doc["n"].get<int>();
  if (n < 0 || n > kMaxVariables) throw SpecParseError("diagonal document: n outside [0, 63]");
  const auto& arr = doc["diag"];
  if (!arr.is_array() || arr.size() != (std::size_t{1} << n))
    throw SpecParseError("diagonal document: diag must hold exactly 2^n entries");
  std::vector<Rational> diag;
  diag.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    diag.push_back(rational_from_json(arr[i], "diag[" + std::to_string(i) + "]"));
  return DiagonalEmbedding(n, std::move(diag));
}

}  // namespace sympbf
