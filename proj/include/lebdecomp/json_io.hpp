#ifndef LEBDECOMP_JSON_IO_HPP
#define LEBDECOMP_JSON_IO_HPP

// JSON formats for matrices, measures, forms, and functionals, plus a
// deterministic serializer: fixed field order, floating-point numbers at 17
// significant digits, no locale dependence. Identical values serialize to
// identical bytes.

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lebdecomp/error.hpp"
#include "lebdecomp/forms.hpp"
#include "lebdecomp/functionals.hpp"
#include "lebdecomp/matrix.hpp"
#include "lebdecomp/measures.hpp"
#include "lebdecomp/psd.hpp"

namespace lebdecomp {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

namespace jsondetail {

inline std::string format_double(double x) {
  if (x == 0.0) return "0";  // canonicalize the sign of zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline void escape_string(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
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

inline void write_value(const OrderedJson& v, std::string& out) {
  switch (v.type()) {
    case nlohmann::detail::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        escape_string(it.key(), out);
        out += ':';
        write_value(it.value(), out);
      }
      out += '}';
      break;
    }
    case nlohmann::detail::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ',';
        first = false;
        write_value(e, out);
      }
      out += ']';
      break;
    }
    case nlohmann::detail::value_t::string:
      escape_string(v.get_ref<const std::string&>(), out);
      break;
    case nlohmann::detail::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      break;
    case nlohmann::detail::value_t::number_integer:
      out += std::to_string(v.get<std::int64_t>());
      break;
    case nlohmann::detail::value_t::number_unsigned:
      out += std::to_string(v.get<std::uint64_t>());
      break;
    case nlohmann::detail::value_t::number_float:
      out += format_double(v.get<double>());
      break;
    default:
      out += "null";
  }
}

}  // namespace jsondetail

inline std::string write_json(const OrderedJson& v) {
  std::string out;
  jsondetail::write_value(v, out);
  out += '\n';
  return out;
}

inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// --- parsing -------------------------------------------------------------

namespace jsondetail {

inline Complex parse_entry(const Json& e) {
  if (e.is_number()) return Complex(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return Complex(e[0].get<double>(), e[1].get<double>());
  throw Error(Errc::parse_error, "matrix entry must be a number or an [re, im] pair");
}

}  // namespace jsondetail

// {"n": rows, "entries": [[entry, ...], ...]} with entry either a real number
// or an [re, im] pair; optional "m" fixes the column count (rectangular
// matrices), otherwise it is inferred from the rows.
inline Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw Error(Errc::parse_error, "matrix document needs \"n\" and \"entries\"");
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1)
    throw Error(Errc::parse_error, "\"n\" must be a positive integer");
  const std::size_t rows = j["n"].get<std::size_t>();
  const Json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows)
    throw Error(Errc::parse_error, "\"entries\" must hold exactly n rows");
  std::size_t cols;
  if (j.contains("m")) {
    if (!j["m"].is_number_integer() || j["m"].get<std::int64_t>() < 0)
      throw Error(Errc::parse_error, "\"m\" must be a nonnegative integer");
    cols = j["m"].get<std::size_t>();
  } else {
    if (!entries[0].is_array() || entries[0].empty())
      throw Error(Errc::parse_error, "matrix rows must be nonempty arrays");
    cols = entries[0].size();
  }
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != cols)
      throw Error(Errc::parse_error, "matrix rows must all have the same length");
    for (std::size_t k = 0; k < cols; ++k) out(i, k) = jsondetail::parse_entry(row[k]);
  }
  return out;
}

inline OrderedJson complex_to_json(const Complex& c) {
  return OrderedJson::array({c.real(), c.imag()});
}

inline OrderedJson matrix_to_json(const Matrix& m) {
  OrderedJson out;
  out["n"] = m.rows();
  out["m"] = m.cols();
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  return out;
}

// A vector is a bare array of entries or {"entries": [...]}.
inline Vector vector_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("entries"))
      throw Error(Errc::parse_error, "vector document needs \"entries\"");
    arr = &j["entries"];
  }
  if (!arr->is_array() || arr->empty())
    throw Error(Errc::parse_error, "vector must be a nonempty array");
  Vector out;
  for (const Json& e : *arr) out.push_back(jsondetail::parse_entry(e));
  return out;
}

inline OrderedJson vector_to_json(const Vector& v) {
  OrderedJson out = OrderedJson::array();
  for (const Complex& c : v) out.push_back(complex_to_json(c));
  return out;
}

// {"atoms": ["a", ...], "values": [x, ...]}
inline MeasureTable measure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j.contains("values"))
    throw Error(Errc::parse_error, "measure document needs \"atoms\" and \"values\"");
  if (!j["atoms"].is_array() || !j["values"].is_array())
    throw Error(Errc::parse_error, "\"atoms\" and \"values\" must be arrays");
  std::vector<std::string> atoms;
  for (const Json& a : j["atoms"]) {
    if (!a.is_string()) throw Error(Errc::parse_error, "atom labels must be strings");
    atoms.push_back(a.get<std::string>());
  }
  std::vector<double> values;
  for (const Json& v : j["values"]) {
    if (!v.is_number()) throw Error(Errc::parse_error, "measure values must be numbers");
    values.push_back(v.get<double>());
  }
  return make_measure(std::move(atoms), std::move(values));
}

inline OrderedJson measure_to_json(const MeasureTable& m) {
  OrderedJson out;
  out["atoms"] = m.atoms;
  OrderedJson values = OrderedJson::array();
  for (double v : m.values) values.push_back(v);
  out["values"] = std::move(values);
  return out;
}

// {"gram": matrix}
inline FormSpec form_from_json(const Json& j, const Tolerance& tol = {}) {
  if (!j.is_object() || !j.contains("gram"))
    throw Error(Errc::parse_error, "form document needs \"gram\"");
  return make_form(matrix_from_json(j["gram"]), tol);
}

inline OrderedJson form_to_json(const FormSpec& f) {
  OrderedJson out;
  out["gram"] = matrix_to_json(f.gram.entries());
  return out;
}

// {"algebra": {"kind": "commutative", "n": 3}, "weights": [...]}
// {"algebra": {"kind": "full_matrix", "k": 2}, "density": matrix}
inline AlgebraDescriptor algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw Error(Errc::parse_error, "algebra descriptor needs \"kind\"");
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  AlgebraDescriptor alg;
  const char* size_key = nullptr;
  if (kind == "commutative") {
    alg.kind = AlgebraKind::commutative;
    size_key = "n";
  } else if (kind == "full_matrix") {
    alg.kind = AlgebraKind::full_matrix;
    size_key = "k";
  } else {
    throw Error(Errc::parse_error, "algebra kind must be commutative or full_matrix");
  }
  if (!j.contains(size_key) || !j[size_key].is_number_integer() ||
      j[size_key].get<std::int64_t>() < 1)
    throw Error(Errc::parse_error, "algebra descriptor needs a positive size");
  alg.param = j[size_key].get<std::size_t>();
  return alg;
}

inline OrderedJson algebra_to_json(const AlgebraDescriptor& alg) {
  OrderedJson out;
  if (alg.kind == AlgebraKind::commutative) {
    out["kind"] = "commutative";
    out["n"] = alg.param;
  } else {
    out["kind"] = "full_matrix";
    out["k"] = alg.param;
  }
  return out;
}

inline FunctionalSpec functional_from_json(const Json& j, const Tolerance& tol = {}) {
  if (!j.is_object() || !j.contains("algebra"))
    throw Error(Errc::parse_error, "functional document needs \"algebra\"");
  const AlgebraDescriptor alg = algebra_from_json(j["algebra"]);
  if (alg.kind == AlgebraKind::commutative) {
    if (!j.contains("weights") || !j["weights"].is_array())
      throw Error(Errc::parse_error, "commutative functional needs \"weights\"");
    std::vector<double> w;
    for (const Json& x : j["weights"]) {
      if (!x.is_number()) throw Error(Errc::parse_error, "weights must be numbers");
      w.push_back(x.get<double>());
    }
    return functional_from_data(alg, w, tol);
  }
  if (!j.contains("density"))
    throw Error(Errc::parse_error, "full-matrix functional needs \"density\"");
  return functional_from_data(alg, matrix_from_json(j["density"]), tol);
}

inline OrderedJson functional_to_json(const FunctionalSpec& f) {
  OrderedJson out;
  out["algebra"] = algebra_to_json(f.algebra);
  if (f.algebra.kind == AlgebraKind::commutative) {
    OrderedJson w = OrderedJson::array();
    for (double x : f.weights) w.push_back(x);
    out["weights"] = std::move(w);
  } else {
    out["density"] = matrix_to_json(f.density);
  }
  out["cyclic_norm"] = f.cyclic_norm;
  out["gram"] = matrix_to_json(f.gram.entries());
  return out;
}

}  // namespace lebdecomp

#endif  // LEBDECOMP_JSON_IO_HPP
