#pragma once

// Greedy growth along buffered family words: from x, pick y in a ball of
// <a^m, b^m> so that psi(y.H(w')) is as large as possible, where
// psi = f o rho(x) and f norms H(x), then move to x y w'. Since
//
//   H(x y w') = H(x) + xy.H(w'),
//
// uniform convexity gives ||H(x y w')|| >= ||H(x)|| + epsilon whenever
// psi(y.H(w')) >= -mu, with (epsilon, mu) taken at R = ||H(x)||.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "qclab/analysis/growth.hpp"
#include "qclab/brooks.hpp"
#include "qclab/convexity.hpp"
#include "qclab/error.hpp"
#include "qclab/families.hpp"
#include "qclab/norming.hpp"

namespace qclab {

struct GreedyStep {
  std::size_t step = 0;
  Word y;
  NormValue pre;
  NormValue post;
  double epsilon = 0;
  double mu = 0;
  double psi = 0;                  // psi(y.H(w')) in floating point
  bool admissible = false;         // psi(y.H(w')) >= -mu
  bool certificate_holds = false;  // post >= pre + epsilon
  bool exact = false;              // both checks decided in exact arithmetic
};

struct GreedyReport {
  GrowthSeries series;
  std::vector<GreedyStep> steps;
  NormValue initial;
  NormValue final_norm;
  double initial_epsilon = 0;
  std::size_t admissible_steps = 0;
  std::size_t certificate_failures = 0;  // admissible steps with post < pre + epsilon

  bool gained_ten_epsilon() const {
    return final_norm.value() >= initial.value() + 10 * initial_epsilon;
  }
};

struct GreedyOptions {
  std::size_t y_ball_radius = 2;  // in the generators a^m, b^m
  ModulusMode modulus = ModulusMode::analytic();
};

namespace detail {

/// The exact dyadic rational equal to a double.
inline Rational exact_rational(double x) {
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational r(scaled);
  if (exponent - 53 >= 0) r *= rational_pow(Rational(2), static_cast<unsigned>(exponent - 53));
  else r /= rational_pow(Rational(2), static_cast<unsigned>(53 - exponent));
  return r;
}

/// Smallest-ish rational r with r >= x^(1/p), for x >= 0.
inline Rational root_upper_bound(const Rational& x, unsigned p) {
  Rational r = exact_rational(std::pow(to_double(x), 1.0 / p));
  const Rational step = exact_rational(std::max(1e-15, std::abs(to_double(r)) * 1e-14));
  while (rational_pow(r, p) < x) r += step;
  return r;
}

/// Decides ||post|| >= ||pre|| + eps for exact norm values of equal root.
inline bool exact_gain(const NormValue& pre, const NormValue& post, const Rational& eps) {
  const unsigned p = pre.root();
  if (p == 1) return post.power() >= pre.power() + eps;
  if (p == 2) {
    // sqrt(S2) >= sqrt(S1) + eps  iff  L = S2 - S1 - eps^2 >= 0 and L^2 >= 4 eps^2 S1
    const Rational l = post.power() - pre.power() - eps * eps;
    return l >= 0 && l * l >= 4 * eps * eps * pre.power();
  }
  // sound one-sided test through a rational upper bound for ||pre||
  return post.power() >= rational_pow(root_upper_bound(pre.power(), p) + eps, p);
}

}  // namespace detail

inline GreedyReport greedy_search(const BufferedWord& bw, const Vector& e,
                                  const Representation& rep, std::size_t steps,
                                  GreedyOptions options = {}) {
  const QuasiCocycleSpec spec(bw.w, e, rep);
  if (const auto* r = std::get_if<RegularRep>(&rep))
    require(r->norm.uniformly_convex(), "greedy search needs l^p with 1 < p < inf");
  const NormValue e_norm = norm(rep, e);
  require(e_norm.is_exact() ? e_norm.power() == 1 : std::abs(e_norm.value() - 1) <= 1e-12,
          "greedy search needs a unit vector e");

  const Vector h_wp = evaluate(spec, bw.w_prime);
  const std::vector<Word> ys =
      subgroup_ball(bw.subgroup_generators(),
                    options.y_ball_radius * static_cast<std::size_t>(bw.subgroup_exp));

  GreedyReport report;
  report.series.family = "greedy(" + to_string(bw.w_prime) + ")";
  Word x = bw.w_prime;
  Vector hx = h_wp;
  report.initial = norm(rep, hx);
  report.initial_epsilon = uc_constants(rep, report.initial.value(), options.modulus).epsilon;
  report.series.points.push_back({0, report.initial, std::nullopt});
  report.series.words.push_back(x);

  for (std::size_t step = 1; step <= steps; ++step) {
    GreedyStep s;
    s.step = step;
    s.pre = norm(rep, hx);
    const UCConstants c = uc_constants(rep, s.pre.value(), options.modulus);
    s.epsilon = c.epsilon;
    s.mu = c.mu;
    const NormingFunctional f(rep, hx);

    // argmax of psi(y.H(w')) = f(xy.H(w')); exact ties keep the first y
    std::optional<Rational> best_exact;
    double best = -std::numeric_limits<double>::infinity();
    Vector best_term;
    for (const Word& y : ys) {
      const Word xy = multiply(x, y);
      Vector term = act(rep, xy, h_wp);
      bool better;
      if (f.is_exact()) {
        const Rational num = f.numerator(term);
        better = !best_exact || num > *best_exact;
        if (better) best_exact = num;
      } else {
        better = f(term) > best;
      }
      if (better) {
        best = f(term);
        s.y = y;
        best_term = std::move(term);
      }
    }
    s.psi = best;

    const Word next = multiply({x, s.y, bw.w_prime});
    const Vector h_next = evaluate(spec, next);
    const Vector predicted = add(hx, best_term);
    ensure(vectors_equal(h_next, predicted, is_exact(rep) ? 0.0 : 1e-9),
           "H(x y w') != H(x) + xy.H(w') at step " + std::to_string(step) + " (y = " +
               to_string(s.y) + ")");
    s.post = norm(rep, h_next);

    s.exact = f.is_exact() && s.pre.is_exact() && s.post.is_exact() &&
              s.pre.root() == s.post.root();
    if (s.exact) {
      s.admissible = f.at_least(best_term, -detail::exact_rational(c.mu));
      s.certificate_holds = detail::exact_gain(s.pre, s.post, detail::exact_rational(c.epsilon));
    } else {
      s.admissible = s.psi >= -c.mu;
      s.certificate_holds = s.post.value() >= s.pre.value() + c.epsilon - 1e-12;
    }
    if (s.admissible) {
      ++report.admissible_steps;
      if (!s.certificate_holds) ++report.certificate_failures;
    }

    x = next;
    hx = h_next;
    report.series.points.push_back({step, s.post, std::nullopt});
    report.series.words.push_back(x);
    report.steps.push_back(std::move(s));
  }
  report.final_norm = norm(rep, hx);
  return report;
}

}  // namespace qclab
