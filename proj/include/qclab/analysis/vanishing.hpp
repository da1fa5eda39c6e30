#pragma once

// Checks that H vanishes on a subgroup: evaluates H on seeded random
// subgroup elements and on every subgroup element of length <= 12.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "qclab/brooks.hpp"
#include "qclab/enumerate.hpp"
#include "qclab/error.hpp"
#include "qclab/parallel.hpp"

namespace qclab {

struct VanishingReport {
  NormValue max_norm;
  std::optional<Word> witness;  // a shortlex-least element attaining max_norm, if nonzero
  std::size_t sampled = 0;
  std::size_t enumerated = 0;
  bool exact = true;

  bool vanishes() const { return !witness.has_value(); }
};

inline constexpr std::size_t kVanishingBallLength = 12;

/// Random elements use words of U[0, maxlen / max|gen|] generators, so their
/// F2-length never exceeds maxlen; element i uses substream (seed, i).
inline VanishingReport vanishing_check(const QuasiCocycleSpec& spec, const std::vector<Word>& gens,
                                       std::size_t samples, std::size_t maxlen,
                                       std::uint64_t seed, unsigned threads = 1) {
  require_generators(gens);
  std::size_t longest = 0;
  for (const Word& g : gens) longest = std::max(longest, g.size());
  const std::size_t max_symbols = maxlen / longest;

  std::vector<Word> words = subgroup_ball(gens, kVanishingBallLength);
  VanishingReport report;
  report.enumerated = words.size();
  report.sampled = samples;
  report.exact = is_exact(spec.rep);
  words.reserve(words.size() + samples);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = make_rng(seed, i);
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_symbols)(rng);
    words.push_back(random_subgroup_element(rng, gens, len));
  }

  threads = std::max(1U, threads);
  std::vector<NormValue> best(threads);
  std::vector<std::optional<Word>> witness(threads);
  parallel_blocks(words.size(), threads, [&](unsigned t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Vector v = evaluate(spec, words[i]);
      if (qclab::is_zero(v)) continue;
      const NormValue n = norm(spec.rep, v);
      if (!witness[t] || n > best[t] || (n == best[t] && words[i] < *witness[t])) {
        best[t] = n;
        witness[t] = words[i];
      }
    }
  });
  report.max_norm = norm(spec.rep, zero_vector(spec.rep));
  for (unsigned t = 0; t < threads; ++t) {
    if (!witness[t]) continue;
    if (!report.witness || best[t] > report.max_norm ||
        (best[t] == report.max_norm && *witness[t] < *report.witness)) {
      report.max_norm = best[t];
      report.witness = witness[t];
    }
  }
  return report;
}

}  // namespace qclab
