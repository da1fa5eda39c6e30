#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "qclab/error.hpp"

namespace qclab {

/// Exact rational, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rational_pow(const Rational& x, unsigned exponent) {
  Rational result = 1, base = x;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// floor(n^(1/k)) for n >= 0, by bisection.
inline Integer integer_root_floor(const Integer& n, unsigned k) {
  Integer lo = 0, hi = 1;
  while (boost::multiprecision::pow(hi, k) <= n) hi *= 2;
  while (hi - lo > 1) {
    const Integer mid = (lo + hi) / 2;
    (boost::multiprecision::pow(mid, k) <= n ? lo : hi) = mid;
  }
  return lo;
}

/// x^(1/k) when it is rational, for x >= 0 and k >= 1.
inline std::optional<Rational> exact_root(const Rational& x, unsigned k) {
  if (x < 0 || k == 0) return std::nullopt;
  if (k == 1) return x;
  const Integer num = boost::multiprecision::numerator(x), den = boost::multiprecision::denominator(x);
  const Integer rn = integer_root_floor(num, k), rd = integer_root_floor(den, k);
  if (boost::multiprecision::pow(rn, k) != num || boost::multiprecision::pow(rd, k) != den)
    return std::nullopt;
  return Rational(rn, rd);
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Accepts integers, "p/q" and finite decimals such as "-0.25".
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return ParseError("invalid rational \"" + std::string(text) + "\"");
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw bad();
  auto parse_int = [&](const std::string& t) -> Integer {
    std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) throw bad();
    for (std::size_t j = i; j < t.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(t[j]))) throw bad();
    Integer v(t.substr(i));
    return t[0] == '-' ? Integer(-v) : v;
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_int(s.substr(0, slash));
    Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string frac = s.substr(dot + 1);
    std::string whole = s.substr(0, dot);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (frac.empty()) throw bad();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer w = parse_int(whole);
    Integer f(frac);
    Integer magnitude = (w < 0 ? Integer(-w) : w) * scale + f;
    return Rational(negative ? Integer(-magnitude) : magnitude, scale);
  }
  return Rational(parse_int(s));
}

}  // namespace qclab
