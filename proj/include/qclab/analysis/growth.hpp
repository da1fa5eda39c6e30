#pragma once

// Growth of ||H(x_n)|| along word families: powers g^n, buffered family
// words y_1 w' ... y_n w', and the harmonic vector f(w^-n) = 1/n, whose
// coordinate H(w^{n+1})(1) is the harmonic number 1 + 1/2 + ... + 1/n.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qclab/brooks.hpp"
#include "qclab/error.hpp"
#include "qclab/families.hpp"
#include "qclab/matrix_tools.hpp"
#include "qclab/occurrences.hpp"
#include "qclab/representation.hpp"

namespace qclab {

struct GrowthPoint {
  std::size_t n = 0;
  NormValue norm;
  std::optional<Rational> coordinate;  // H(x_n)(1), harmonic family only
};

/// Cyclic certificate for powers of a cyclically reduced g under a unitary
/// representation: ||H(g^n)|| <= 2 ||e|| * classes / gap for every n.
struct CyclicBound {
  double gap = 0;
  std::size_t classes = 0;
  std::optional<double> bound;  // empty when gap <= kMinGap
  std::string note;
  std::vector<std::size_t> exceeded_at;  // n with norm > bound + tolerance

  static constexpr double kMinGap = 1e-6;
  static constexpr double kTolerance = 1e-6;
};

struct GrowthSeries {
  std::string family;
  std::vector<GrowthPoint> points;
  std::vector<double> orbit_sums;  // ||U_n||, U_n = e + g e + ... + g^{n-1} e
  std::optional<CyclicBound> cyclic;
  std::vector<Word> words;         // x_n for family words
};

/// x_n = g^n; orbit sums are recorded when requested.
struct PowersFamily {
  Word g;
  bool orbit_sums = false;
};

/// x_n = y_1 w' ... y_n w' with y_i uniform over {a^±m, b^±m}.
struct FamilyWords {
  BufferedWord buffered;
  std::uint64_t seed = 0;
};

/// spec.e is the harmonic vector for spec.w; point n is H(w^{n+1}).
struct HarmonicFamily {};

using GrowthFamily = std::variant<PowersFamily, FamilyWords, HarmonicFamily>;

/// f with f(w^-n) = 1/n for 1 <= n <= count.
inline RegularVector harmonic_vector(const Word& w, std::size_t count) {
  require_pattern(w);
  RegularVector f;
  const Word w_inv = invert(w);
  Word x;
  for (std::size_t n = 1; n <= count; ++n) {
    x = multiply(x, w_inv);
    f.add(x, Rational(1, static_cast<long long>(n)));
  }
  return f;
}

/// 1 + 1/2 + ... + 1/n.
inline Rational harmonic_number(std::size_t n) {
  Rational h = 0;
  for (std::size_t i = 1; i <= n; ++i) h += Rational(1, static_cast<long long>(i));
  return h;
}

namespace detail {

/// Running sum of signed translates of e, with the norm kept up to date
/// incrementally for exact backends.
class GrowthAccumulator {
 public:
  GrowthAccumulator(const Representation& rep, const Vector& e) : rep_(rep), e_(e) {
    if (const auto* r = std::get_if<RegularRep>(&rep)) integer_p_ = r->norm.integer_p();
    if (const auto* m = std::get_if<MatrixRep>(&rep)) {
      matrix_sum_ = CVector::Zero(m->dim());
      matrix_e_ = std::get<CVector>(e);
    }
  }

  /// Adds s * h.e; for the matrix backend `prefix` is rho(h).
  void add(Sign s, const Word& h, const CMatrix* prefix) {
    const bool positive = s == Sign::positive;
    if (std::holds_alternative<TrivialRep>(rep_)) {
      trivial_ += positive ? std::get<Rational>(e_) : Rational(-std::get<Rational>(e_));
    } else if (std::holds_alternative<RegularRep>(rep_)) {
      for (const auto& [x, c] : std::get<RegularVector>(e_)) {
        const Word y = multiply(h, x);
        const Rational delta = positive ? c : Rational(-c);
        if (integer_p_) {
          const Rational old = regular_[y];
          const Rational updated = old + delta;
          power_sum_ += rational_pow(rational_abs(updated), *integer_p_) -
                        rational_pow(rational_abs(old), *integer_p_);
        }
        regular_.add(y, delta);
      }
    } else {
      const CVector t = *prefix * matrix_e_;
      if (positive) matrix_sum_ += t;
      else matrix_sum_ -= t;
    }
  }

  NormValue norm() const {
    if (std::holds_alternative<TrivialRep>(rep_)) return NormValue::exact(rational_abs(trivial_), 1);
    if (std::holds_alternative<RegularRep>(rep_)) {
      if (integer_p_) return NormValue::exact(power_sum_, *integer_p_);
      return qclab::norm(rep_, regular_);
    }
    return NormValue::approx(matrix_sum_.norm());
  }

  Rational coordinate(const Word& f) const { return regular_[f]; }

 private:
  Representation rep_;
  Vector e_;
  std::optional<unsigned> integer_p_;
  Rational trivial_ = 0;
  RegularVector regular_;
  Rational power_sum_ = 0;
  CVector matrix_sum_, matrix_e_;
};

/// Occurrences of w in g^count (g cyclically reduced), each tagged with the
/// position where it ends; g^n contains exactly those ending at <= n|g|.
struct PowerOccurrence {
  std::size_t end;
  Sign sign;
  std::size_t start;
};

inline std::vector<PowerOccurrence> power_occurrences(const Word& w, const Word& g,
                                                      std::size_t count) {
  std::vector<PowerOccurrence> out;
  const Word big = power(g, count);
  for_each_occurrence(w, big, [&](Sign s, std::size_t start) {
    out.push_back({s == Sign::positive ? start + w.size() : start, s, start});
  });
  std::stable_sort(out.begin(), out.end(),
                   [](const PowerOccurrence& x, const PowerOccurrence& y) { return x.end < y.end; });
  return out;
}

/// Number of (sign, start mod |g|) classes among occurrences of w in powers
/// of g, read off g^k once the count stops changing.
inline std::size_t occurrence_classes(const Word& w, const Word& g) {
  const std::size_t period = g.size();
  const std::size_t min_k = (w.size() + period - 1) / period + 2;
  std::size_t previous = 0;
  for (std::size_t k = 2;; ++k) {
    std::vector<std::pair<int, std::size_t>> classes;
    for_each_occurrence(w, power(g, k), [&](Sign s, std::size_t start) {
      classes.emplace_back(static_cast<int>(s), start % period);
    });
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    if (k >= min_k && classes.size() == previous) return classes.size();
    previous = classes.size();
  }
}

inline CyclicBound cyclic_bound(const QuasiCocycleSpec& spec, const MatrixRep& rep, const Word& g) {
  CyclicBound c;
  c.gap = spectral_gap(rep, g);
  c.classes = occurrence_classes(spec.w, g);
  if (c.gap <= CyclicBound::kMinGap) {
    c.note = "certified bound unavailable: spectral gap <= 1e-6";
    return c;
  }
  c.bound = 2.0 * std::get<CVector>(spec.e).norm() * static_cast<double>(c.classes) / c.gap;
  return c;
}

inline GrowthSeries powers_series(const QuasiCocycleSpec& spec, const PowersFamily& fam,
                                  std::size_t count, bool harmonic) {
  require(!fam.g.empty(), "powers family needs g != 1");
  GrowthSeries series;
  series.family = (harmonic ? "harmonic(" : "powers(") + to_string(fam.g) + ")";
  const auto* mrep = std::get_if<MatrixRep>(&spec.rep);
  const std::size_t offset = harmonic ? 1 : 0;
  const std::size_t total = count + offset;

  if (!is_cyclically_reduced(fam.g)) {
    // no periodic structure to exploit: evaluate each power directly
    for (std::size_t n = 1; n <= count; ++n) {
      const Word x = power(fam.g, n + offset);
      const Vector v = evaluate(spec, x);
      GrowthPoint pt{n, norm(spec.rep, v), std::nullopt};
      if (harmonic) pt.coordinate = std::get<RegularVector>(v)[Word{}];
      series.points.push_back(std::move(pt));
    }
  } else {
    const auto occ = power_occurrences(spec.w, fam.g, total);
    GrowthAccumulator acc(spec.rep, spec.e);
    const std::size_t period = fam.g.size();
    // rho(prefix) for each occurrence, from one pass in start order
    std::vector<CMatrix> prefixes;
    Word big;
    if (mrep) {
      std::vector<std::size_t> order(occ.size());
      for (std::size_t i = 0; i < occ.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](std::size_t x, std::size_t y) { return occ[x].start < occ[y].start; });
      prefixes.resize(occ.size());
      CMatrix prefix = CMatrix::Identity(mrep->dim(), mrep->dim());
      std::size_t len = 0;
      for (std::size_t i : order) {
        for (; len < occ[i].start; ++len) prefix = prefix * mrep->generator(fam.g[len % period]);
        prefixes[i] = prefix;
      }
    } else {
      big = power(fam.g, total);
    }
    std::size_t next = 0;
    for (std::size_t n = 1; n <= total; ++n) {
      for (; next < occ.size() && occ[next].end <= n * period; ++next) {
        if (mrep) acc.add(occ[next].sign, Word{}, &prefixes[next]);
        else acc.add(occ[next].sign, big.prefix(occ[next].start), nullptr);
      }
      if (n <= offset) continue;
      GrowthPoint pt{n - offset, acc.norm(), std::nullopt};
      if (harmonic) pt.coordinate = acc.coordinate(Word{});
      series.points.push_back(std::move(pt));
    }
  }

  if (mrep && !harmonic) {
    if (fam.orbit_sums) {
      const CMatrix rg = mrep->matrix(fam.g);
      CVector u = std::get<CVector>(spec.e), sum = CVector::Zero(mrep->dim());
      for (std::size_t n = 1; n <= count; ++n) {
        sum += u;
        u = rg * u;
        series.orbit_sums.push_back(sum.norm());
      }
    }
    if (is_cyclically_reduced(fam.g)) {
      CyclicBound c = cyclic_bound(spec, *mrep, fam.g);
      if (c.bound)
        for (const auto& pt : series.points)
          if (pt.norm.value() > *c.bound + CyclicBound::kTolerance) c.exceeded_at.push_back(pt.n);
      series.cyclic = std::move(c);
    } else {
      CyclicBound c;
      c.note = "certified bound requires a cyclically reduced g";
      series.cyclic = std::move(c);
    }
  }
  return series;
}

}  // namespace detail

/// ||H(x_n)|| for n = 1..count along the family.
inline GrowthSeries growth_probe(const QuasiCocycleSpec& spec, const GrowthFamily& family,
                                 std::size_t count) {
  require(count >= 1, "growth probe needs N >= 1");
  if (const auto* p = std::get_if<PowersFamily>(&family))
    return detail::powers_series(spec, *p, count, false);
  if (std::holds_alternative<HarmonicFamily>(family)) {
    require(std::holds_alternative<RegularRep>(spec.rep),
            "harmonic family needs the regular representation");
    return detail::powers_series(spec, PowersFamily{spec.w, false}, count, true);
  }
  const auto& fw = std::get<FamilyWords>(family);
  require(fw.buffered.w == spec.w, "family words must be built from the pattern w");
  GrowthSeries series;
  series.family = "family(" + to_string(fw.buffered.w_prime) + ", seed=" +
                  std::to_string(fw.seed) + ")";
  const auto gens = fw.buffered.subgroup_generators();
  const std::vector<Word> choices{gens[0], invert(gens[0]), gens[1], invert(gens[1])};
  Rng rng = make_rng(fw.seed);
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  std::vector<Word> ys;
  for (std::size_t n = 1; n <= count; ++n) {
    ys.push_back(choices[pick(rng)]);
    Word x = make_family(fw.buffered, ys);
    series.points.push_back({n, norm(spec.rep, evaluate(spec, x)), std::nullopt});
    series.words.push_back(std::move(x));
  }
  return series;
}

}  // namespace qclab
