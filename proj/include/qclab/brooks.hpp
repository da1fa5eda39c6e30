#pragma once

// The Brooks quasi-cocycle
//
//   H(g) = sum_{h in w+(g)} h.e  -  sum_{h in w-(g)} h.e
//
// over oriented occurrences h.w of a cyclically reduced pattern w along
// the geodesic [1, g], and its defect
//
//   Delta(H) = sup_{g, g'} || H(gg') - H(g) - g.H(g') ||  <=  6 |w| ||e||.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qclab/enumerate.hpp"
#include "qclab/error.hpp"
#include "qclab/occurrences.hpp"
#include "qclab/parallel.hpp"
#include "qclab/representation.hpp"
#include "qclab/word.hpp"

namespace qclab {

/// The triple (w, e, rho) defining H = H_{w,e}.
struct QuasiCocycleSpec {
  Word w;
  Vector e;
  Representation rep;

  QuasiCocycleSpec(Word pattern, Vector vec, Representation representation)
      : w(std::move(pattern)), e(std::move(vec)), rep(std::move(representation)) {
    require_pattern(w);
    check_vector(rep, e);
    require(!qclab::is_zero(e), "the vector e must be nonzero");
  }
};

/// H(g) as a formal chain: +1 [h] for h in w+(g), -1 [h] for h in w-(g).
inline Chain formal_evaluate(const Word& w, const Word& g) {
  Chain out;
  for_each_occurrence(w, g, [&](Sign s, std::size_t start) {
    out.add(g.prefix(start), static_cast<std::int64_t>(s));
  });
  return out;
}

namespace detail {

/// Pairwise (tree) summation in the given order.
inline CVector pairwise_sum(std::vector<CVector> terms, Eigen::Index dim) {
  if (terms.empty()) return CVector::Zero(dim);
  while (terms.size() > 1) {
    std::vector<CVector> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2 == 1) next.push_back(terms.back());
    terms = std::move(next);
  }
  return terms.front();
}

}  // namespace detail

/// sum_h c_h rho(h) e.
inline Vector apply_chain(const Representation& rep, const Chain& chain, const Vector& e) {
  check_vector(rep, e);
  if (std::holds_alternative<TrivialRep>(rep)) {
    std::int64_t total = 0;
    for (const auto& [h, c] : chain) total += c;
    return Rational(std::get<Rational>(e) * total);
  }
  if (std::holds_alternative<RegularRep>(rep)) {
    const auto& ev = std::get<RegularVector>(e);
    RegularVector out;
    for (const auto& [h, c] : chain)
      for (const auto& [x, s] : ev) out.add(multiply(h, x), s * c);
    return out;
  }
  const auto& m = std::get<MatrixRep>(rep);
  const auto& ev = std::get<CVector>(e);
  std::vector<CVector> terms;
  for (const auto& [h, c] : chain) terms.push_back(static_cast<double>(c) * m.apply(h, ev));
  return detail::pairwise_sum(std::move(terms), m.dim());
}

/// H(g).
inline Vector evaluate(const QuasiCocycleSpec& spec, const Word& g) {
  if (std::holds_alternative<TrivialRep>(spec.rep)) {
    std::int64_t total = 0;
    for_each_occurrence(spec.w, g,
                        [&](Sign s, std::size_t) { total += static_cast<std::int64_t>(s); });
    return Rational(std::get<Rational>(spec.e) * total);
  }
  if (std::holds_alternative<RegularRep>(spec.rep)) {
    const auto& ev = std::get<RegularVector>(spec.e);
    RegularVector out;
    for_each_occurrence(spec.w, g, [&](Sign s, std::size_t start) {
      const Word h = g.prefix(start);
      for (const auto& [x, c] : ev)
        out.add(multiply(h, x), s == Sign::positive ? c : Rational(-c));
    });
    return out;
  }
  // Matrix: one left-to-right pass maintaining rho(prefix).
  const auto& m = std::get<MatrixRep>(spec.rep);
  const auto& ev = std::get<CVector>(spec.e);
  std::vector<std::pair<Sign, std::size_t>> occ;
  for_each_occurrence(spec.w, g, [&](Sign s, std::size_t start) { occ.emplace_back(s, start); });
  std::vector<CVector> terms;
  terms.reserve(occ.size());
  CMatrix prefix = CMatrix::Identity(m.dim(), m.dim());
  std::size_t done = 0;
  for (const auto& [s, start] : occ) {
    while (done < start) prefix = prefix * m.generator(g[done++]);
    CVector t = prefix * ev;
    terms.push_back(s == Sign::positive ? t : CVector(-t));
  }
  return detail::pairwise_sum(std::move(terms), m.dim());
}

/// The coordinate H(g)(f) for the regular representation, computed from
/// (h.e)(f) = e(h^-1 f) without materializing H(g).
inline Rational evaluate_coordinate(const QuasiCocycleSpec& spec, const Word& g, const Word& f) {
  require(std::holds_alternative<RegularRep>(spec.rep),
          "coordinates are defined for the regular representation");
  const auto& ev = std::get<RegularVector>(spec.e);
  Rational total = 0;
  for_each_occurrence(spec.w, g, [&](Sign s, std::size_t start) {
    Rational c = ev[multiply(invert(g.prefix(start)), f)];
    if (c != 0) total += (s == Sign::positive ? c : Rational(-c));
  });
  return total;
}

/// H(gg') - H(g) - g.H(g') as a formal chain.
inline Chain defect_chain(const Word& w, const Word& g, const Word& g2) {
  Chain out = formal_evaluate(w, multiply(g, g2));
  out -= formal_evaluate(w, g);
  out -= formal_evaluate(w, g2).translated(g);
  return out;
}

inline Vector defect_vector(const QuasiCocycleSpec& spec, const Word& g, const Word& g2) {
  return apply_chain(spec.rep, defect_chain(spec.w, g, g2), spec.e);
}

struct DefectMode {
  enum class Kind { exact, sampled } kind = Kind::exact;
  std::size_t radius = 3;
  std::size_t max_length = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  bool allow_large = false;  // lifts the radius <= 6 guard
  unsigned threads = 1;

  static DefectMode exact(std::size_t radius) {
    DefectMode m;
    m.radius = radius;
    return m;
  }
  static DefectMode sampled(std::size_t max_length, std::size_t count, std::uint64_t seed) {
    DefectMode m;
    m.kind = Kind::sampled;
    m.max_length = max_length;
    m.count = count;
    m.seed = seed;
    return m;
  }
  std::string describe() const {
    return kind == Kind::exact ? "exact(radius=" + std::to_string(radius) + ")"
                               : "sampled(maxlen=" + std::to_string(max_length) +
                                     ", count=" + std::to_string(count) +
                                     ", seed=" + std::to_string(seed) + ")";
  }
};

struct DefectReport {
  DefectMode mode;
  NormValue observed_sup;
  std::pair<Word, Word> witness;
  NormValue theoretical_bound;  // 6 |w| ||e||
  std::size_t pairs_checked = 0;

  bool within_bound() const { return observed_sup <= theoretical_bound; }
};

inline NormValue brooks_bound(const QuasiCocycleSpec& spec) {
  return norm(spec.rep, spec.e).scaled(Rational(6 * static_cast<long long>(spec.w.size())));
}

namespace detail {

struct DefectCandidate {
  NormValue value;
  std::pair<Word, Word> witness;
  bool set = false;

  void offer(const NormValue& v, const Word& g, const Word& g2) {
    const std::pair<Word, Word> cand{g, g2};
    if (!set || v > value || (v == value && cand < witness)) {
      value = v;
      witness = cand;
      set = true;
    }
  }
  void merge(const DefectCandidate& other) {
    if (other.set) offer(other.value, other.witness.first, other.witness.second);
  }
};

}  // namespace detail

/// Sup of the defect norm over ball(radius)^2 (exact mode) or over `count`
/// seeded random pairs of length <= max_length (sampled mode). The witness
/// is the lexicographically smallest pair attaining the maximum.
inline DefectReport defect(const QuasiCocycleSpec& spec, const DefectMode& mode) {
  DefectReport report;
  report.mode = mode;
  report.theoretical_bound = brooks_bound(spec);
  const unsigned threads = std::max(1U, mode.threads);
  std::vector<detail::DefectCandidate> best(threads);
  auto score = [&](const Word& g, const Word& g2) { return norm(spec.rep, defect_vector(spec, g, g2)); };

  if (mode.kind == DefectMode::Kind::exact) {
    require(mode.radius <= 6 || mode.allow_large,
            "exact defect radius > 6 requires an explicit override");
    const std::vector<Word> words = ball(mode.radius);
    parallel_blocks(words.size(), threads, [&](unsigned t, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i)
        for (const Word& g2 : words) best[t].offer(score(words[i], g2), words[i], g2);
    });
    report.pairs_checked = words.size() * words.size();
  } else {
    parallel_blocks(mode.count, threads, [&](unsigned t, std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        Rng rng = make_rng(mode.seed, k);
        std::uniform_int_distribution<std::size_t> len(0, mode.max_length);
        Word g = random_word(rng, len(rng));
        Word g2 = random_word(rng, len(rng));
        best[t].offer(score(g, g2), g, g2);
      }
    });
    report.pairs_checked = mode.count;
  }
  detail::DefectCandidate total;
  for (const auto& b : best) total.merge(b);
  if (total.set) {
    report.observed_sup = total.value;
    report.witness = total.witness;
  } else {
    report.observed_sup = norm(spec.rep, zero_vector(spec.rep));
  }
  return report;
}

}  // namespace qclab
