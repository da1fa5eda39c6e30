#pragma once

// Text formats for representations and vectors.
//
// Representation descriptors:
//   trivial
//   regular:P            P a rational >= 1, or "inf"
//   matrix:FILE          JSON {"a": M, "b": M}, M rows of [re, im] pairs
//   matrix:u2:SEED       seeded generic pair in U(2)
//   rotation:SEED[:GAP]  seeded plane rotations, gap of ab >= GAP (default 0.1)
//
// Vector literals:
//   trivial  "3/2"
//   regular  "1:1;ab:-1/2"   word:coefficient pairs, "1" is the identity
//   matrix   "1;0,1"         re[,im] per coordinate

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qclab/error.hpp"
#include "qclab/matrix_tools.hpp"
#include "qclab/rational.hpp"
#include "qclab/representation.hpp"
#include "qclab/word.hpp"

namespace qclab {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used == text.size() && !text.empty() && text[0] != '-') return v;
  } catch (const std::exception&) {
  }
  throw ParseError("invalid seed '" + text + "'");
}

inline double parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("invalid number '" + text + "'");
}

inline CMatrix matrix_from_json(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix '" + name + "' must be a nonempty array of rows");
  const auto d = static_cast<Eigen::Index>(j.size());
  CMatrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d)
      throw ParseError("matrix '" + name + "' must be square");
    for (Eigen::Index c = 0; c < d; ++c) {
      const Json& z = row[static_cast<std::size_t>(c)];
      if (z.is_number()) {
        m(r, c) = Complex(z.get<double>(), 0.0);
      } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
        m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
      } else {
        throw ParseError("matrix '" + name + "' entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

}  // namespace detail

inline Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline MatrixRep matrix_rep_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw ParseError("matrix representation JSON needs keys \"a\" and \"b\"");
  return MatrixRep(detail::matrix_from_json(j["a"], "a"), detail::matrix_from_json(j["b"], "b"));
}

inline Representation parse_representation(std::string_view text) {
  const std::string s = detail::trim(text);
  if (s == "trivial") return TrivialRep{};
  if (s.rfind("regular:", 0) == 0) {
    const std::string p = s.substr(8);
    if (p == "inf") return RegularRep{NormSpec::linf()};
    return RegularRep{NormSpec::lp(parse_rational(p))};
  }
  if (s.rfind("matrix:u2:", 0) == 0) return random_generic_u2(detail::parse_seed(s.substr(10)));
  if (s.rfind("matrix:", 0) == 0) {
    const std::string path = s.substr(7);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& ex) {
      throw ParseError("matrix file '" + path + "': " + ex.what());
    }
    return matrix_rep_from_json(j);
  }
  if (s.rfind("rotation:", 0) == 0) {
    const auto parts = detail::split(std::string_view(s).substr(9), ':');
    if (parts.size() > 2) throw ParseError("rotation descriptor is rotation:SEED[:GAP]");
    const double gap = parts.size() == 2 ? detail::parse_double(parts[1]) : 0.1;
    return random_rotation_rep(detail::parse_seed(parts[0]), gap);
  }
  throw ParseError("unknown representation '" + s +
                   "' (expected trivial, regular:P, matrix:FILE, matrix:u2:SEED, rotation:SEED)");
}

inline Vector parse_vector(const Representation& rep, std::string_view text) {
  const std::string s = detail::trim(text);
  if (std::holds_alternative<TrivialRep>(rep)) return parse_rational(s);
  if (std::holds_alternative<RegularRep>(rep)) {
    RegularVector v;
    if (s.empty()) return v;
    for (const std::string& item : detail::split(s, ';')) {
      const auto colon = item.rfind(':');
      if (colon == std::string::npos)
        throw ParseError("regular vector entries are word:coefficient, got '" + item + "'");
      v.add(parse_word(item.substr(0, colon)), parse_rational(item.substr(colon + 1)));
    }
    return v;
  }
  const auto& m = std::get<MatrixRep>(rep);
  const auto items = detail::split(s, ';');
  if (static_cast<Eigen::Index>(items.size()) != m.dim())
    throw ParseError("matrix vector needs " + std::to_string(m.dim()) + " coordinates, got " +
                     std::to_string(items.size()));
  CVector v(m.dim());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto parts = detail::split(items[i], ',');
    if (parts.size() > 2) throw ParseError("matrix coordinates are re[,im], got '" + items[i] + "'");
    const double re = detail::parse_double(parts[0]);
    const double im = parts.size() == 2 ? detail::parse_double(parts[1]) : 0.0;
    v(static_cast<Eigen::Index>(i)) = Complex(re, im);
  }
  return v;
}

/// Comma-separated words, e.g. "a^2,b".
inline std::vector<Word> parse_word_list(std::string_view text) {
  std::vector<Word> out;
  for (const std::string& item : detail::split(text, ',')) out.push_back(parse_word(item));
  return out;
}

/// Exact rationals become "p/q" strings; matrix vectors become [re, im] pairs.
inline Json vector_to_json(const Vector& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  if (const auto* g = std::get_if<RegularVector>(&v)) {
    Json out = Json::object();
    for (const auto& [h, c] : *g) out[to_string(h)] = to_string(c);
    return out;
  }
  Json out = Json::array();
  const auto& c = std::get<CVector>(v);
  for (Eigen::Index i = 0; i < c.size(); ++i) out.push_back({c(i).real(), c(i).imag()});
  return out;
}

/// Exact norms render as "p/q" (root 1) or "p/q^(1/k)"; others as numbers.
inline Json norm_to_json(const NormValue& n) {
  if (!n.is_exact()) return n.value();
  return n.exact_string();
}

inline Json rep_to_json(const Representation& rep) {
  Json j;
  j["name"] = rep_name(rep);
  if (const auto* m = std::get_if<MatrixRep>(&rep)) {
    j["a"] = matrix_to_json(m->ua());
    j["b"] = matrix_to_json(m->ub());
    if (m->angles) {
      j["angles"] = {{"a", {m->angles->first.first, m->angles->first.second}},
                     {"b", {m->angles->second.first, m->angles->second.second}}};
    }
  }
  return j;
}

}  // namespace qclab
