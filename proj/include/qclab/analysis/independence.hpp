#pragma once

// Evidence that the classes of H_{w_m} for different m are independent: on
// family words built from the largest pattern, the smaller patterns never
// occur (H vanishes exactly) while the largest one grows.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qclab/brooks.hpp"
#include "qclab/error.hpp"
#include "qclab/families.hpp"

namespace qclab {

struct IndependenceReport {
  std::vector<long long> m_list;
  std::vector<Word> patterns;             // w_{m_i}
  std::vector<Word> witnesses;            // x_1, ..., x_N for the largest m
  std::vector<std::vector<NormValue>> norms;  // [pattern][witness]
  std::vector<bool> zero_on_witnesses;    // per pattern, exact; true for the last means no growth
  bool zero_pattern_exact = false;        // every smaller pattern vanishes on every witness
  double slope = 0;                       // least-squares slope of ||H_max(x_n)|| against n
  std::vector<Rational> exact_steps;      // exact backends: ||H(x_n)||^p - ||H(x_{n-1})||^p
  bool growth_positive = false;
  std::vector<std::string> log;           // buffer construction retries

  bool independence_evidence() const { return zero_pattern_exact && growth_positive; }
};

struct WitnessPolicy {
  std::size_t count = 8;  // n = 1..count
};

namespace detail {

inline double least_squares_slope(const std::vector<double>& ys) {
  const double n = static_cast<double>(ys.size());
  if (ys.size() < 2) return 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double x = static_cast<double>(i + 1);
    sx += x;
    sy += ys[i];
    sxx += x * x;
    sxy += x * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace detail

inline IndependenceReport independence_matrix(const std::vector<long long>& m_list,
                                              const Word& w_prime, const Vector& e,
                                              const Representation& rep,
                                              WitnessPolicy policy, std::uint64_t seed) {
  require(!m_list.empty(), "m list must be nonempty");
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    require(m_list[i] >= 1 && std::gcd(m_list[i], 6LL) == 1,
            "every m must satisfy gcd(m, 6) = 1, got " + std::to_string(m_list[i]));
    require(i == 0 || m_list[i] > m_list[i - 1], "m list must be strictly increasing");
  }
  require(policy.count >= 1, "witness count must be >= 1");

  IndependenceReport report;
  report.m_list = m_list;
  std::vector<QuasiCocycleSpec> specs;
  for (long long m : m_list) {
    report.patterns.push_back(make_wm(w_prime, m));
    specs.emplace_back(report.patterns.back(), e, rep);
  }

  const BufferedWord bw = make_buffered(report.patterns.back());
  report.log = bw.log;
  const auto gens = bw.subgroup_generators();
  const std::vector<Word> choices{gens[0], invert(gens[0]), gens[1], invert(gens[1])};
  Rng rng = make_rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  std::vector<Word> ys;
  for (std::size_t n = 1; n <= policy.count; ++n) {
    ys.push_back(choices[pick(rng)]);
    report.witnesses.push_back(make_family(bw, ys));
  }

  const std::size_t k = specs.size();
  report.norms.assign(k, {});
  report.zero_on_witnesses.assign(k, true);
  for (std::size_t i = 0; i < k; ++i)
    for (const Word& x : report.witnesses) {
      const Vector v = evaluate(specs[i], x);
      if (!qclab::is_zero(v)) report.zero_on_witnesses[i] = false;
      report.norms[i].push_back(norm(rep, v));
    }
  report.zero_pattern_exact = true;
  for (std::size_t i = 0; i + 1 < k; ++i)
    report.zero_pattern_exact = report.zero_pattern_exact && report.zero_on_witnesses[i];

  const auto& top = report.norms.back();
  std::vector<double> values;
  for (const NormValue& n : top) values.push_back(n.value());
  report.slope = detail::least_squares_slope(values);
  if (is_exact(rep) && top.front().is_exact()) {
    bool positive = top.front().power() > 0;
    Rational previous = 0;
    for (const NormValue& n : top) {
      report.exact_steps.push_back(n.power() - previous);
      positive = positive && n.power() > previous;
      previous = n.power();
    }
    report.growth_positive = positive;
  } else {
    report.growth_positive = report.slope >= 0.5 * norm(rep, e).value();
  }
  return report;
}

}  // namespace qclab
