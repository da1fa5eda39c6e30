#pragma once

// Experiment configuration with a canonical JSON form. Words are stored in
// canonical text syntax, so config -> JSON -> config is the identity.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qclab/error.hpp"
#include "qclab/io.hpp"
#include "qclab/word.hpp"

namespace qclab {

struct ExperimentConfig {
  std::string subcommand;
  std::optional<std::string> w;
  std::optional<std::string> rep;
  std::optional<std::string> e;
  std::optional<std::string> g;
  std::optional<std::string> family;
  std::optional<std::string> subgroup;
  std::optional<std::string> w_prime;
  std::optional<std::string> modulus;
  std::optional<std::uint64_t> radius;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> count;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> maxlen;
  std::optional<std::uint64_t> steps;
  std::optional<std::uint64_t> y_radius;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> dim;
  std::optional<std::uint64_t> max_denominator;
  std::optional<std::vector<long long>> m_list;
  std::optional<double> r_bound;
  std::optional<double> p;
  std::optional<double> mu_factor;
  std::optional<std::uint64_t> seed;
  bool allow_large = false;
  bool orbit_sums = false;
  std::string format = "json";

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Canonical word text, e.g. "a^5b^5" for "aaaaa bbbbb".
inline std::string canonical_word(std::string_view text) { return to_string(parse_word(text)); }

inline std::string canonical_word_list(std::string_view text) {
  std::string out;
  for (const Word& w : parse_word_list(text)) out += (out.empty() ? "" : ",") + to_string(w);
  return out;
}

inline Json to_json(const ExperimentConfig& c) {
  Json j;
  j["subcommand"] = c.subcommand;
  auto put = [&](const char* key, const auto& field) {
    if (field) j[key] = *field;
  };
  put("w", c.w);
  put("rep", c.rep);
  put("e", c.e);
  put("g", c.g);
  put("family", c.family);
  put("subgroup", c.subgroup);
  put("w_prime", c.w_prime);
  put("modulus", c.modulus);
  put("radius", c.radius);
  put("n", c.n);
  put("count", c.count);
  put("samples", c.samples);
  put("maxlen", c.maxlen);
  put("steps", c.steps);
  put("y_radius", c.y_radius);
  put("trials", c.trials);
  put("dim", c.dim);
  put("max_denominator", c.max_denominator);
  put("m_list", c.m_list);
  put("R", c.r_bound);
  put("p", c.p);
  put("mu_factor", c.mu_factor);
  put("seed", c.seed);
  if (c.allow_large) j["allow_large"] = true;
  if (c.orbit_sums) j["orbit_sums"] = true;
  j["format"] = c.format;
  return j;
}

inline ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("subcommand") || !j["subcommand"].is_string())
    throw ParseError("config JSON needs a string \"subcommand\"");
  ExperimentConfig c;
  try {
    c.subcommand = j["subcommand"].get<std::string>();
    auto get = [&](const char* key, auto& field) {
      if (j.contains(key)) field = j[key].get<typename std::decay_t<decltype(field)>::value_type>();
    };
    get("w", c.w);
    get("rep", c.rep);
    get("e", c.e);
    get("g", c.g);
    get("family", c.family);
    get("subgroup", c.subgroup);
    get("w_prime", c.w_prime);
    get("modulus", c.modulus);
    get("radius", c.radius);
    get("n", c.n);
    get("count", c.count);
    get("samples", c.samples);
    get("maxlen", c.maxlen);
    get("steps", c.steps);
    get("y_radius", c.y_radius);
    get("trials", c.trials);
    get("dim", c.dim);
    get("max_denominator", c.max_denominator);
    get("m_list", c.m_list);
    get("R", c.r_bound);
    get("p", c.p);
    get("mu_factor", c.mu_factor);
    get("seed", c.seed);
    if (j.contains("allow_large")) c.allow_large = j["allow_large"].get<bool>();
    if (j.contains("orbit_sums")) c.orbit_sums = j["orbit_sums"].get<bool>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("config JSON: ") + ex.what());
  }
  return c;
}

}  // namespace qclab
