#include <gtest/gtest.h>

#include "qclab/analysis/greedy.hpp"
#include "qclab/analysis/growth.hpp"
#include "qclab/analysis/independence.hpp"
#include "qclab/analysis/uc_test.hpp"
#include "qclab/analysis/vanishing.hpp"
#include "qclab/matrix_tools.hpp"

using namespace qclab;
using namespace qclab::literals;

namespace {

RegularVector delta(const Word& h, Rational c = 1) { return RegularVector::delta(h, c); }

CVector vec2(Complex x, Complex y) {
  CVector v(2);
  v << x, y;
  return v;
}

}  // namespace

TEST(Growth, AbPowersLpLaw) {
  for (unsigned p : {1U, 2U, 3U}) {
    const QuasiCocycleSpec spec("ab"_w, delta(Word{}), RegularRep{NormSpec::lp(p)});
    const GrowthSeries s = growth_probe(spec, PowersFamily{"ab"_w}, 64);
    ASSERT_EQ(s.points.size(), 64U);
    for (const auto& pt : s.points) {
      ASSERT_TRUE(pt.norm.is_exact());
      EXPECT_EQ(pt.norm.power(), Rational(static_cast<long long>(pt.n)));
      EXPECT_EQ(pt.norm.root(), p);
    }
  }
}

TEST(Growth, FastPathMatchesDirectEvaluation) {
  const std::vector<QuasiCocycleSpec> specs{
      {"ab"_w, delta(Word{}) + delta("a"_w, -2), RegularRep{NormSpec::lp(2)}},
      {"aba"_w, Rational(1), TrivialRep{}},
      {"bab"_w, vec2(1, Complex(0, 1)), random_generic_u2(4)},
  };
  for (const auto& spec : specs)
    for (const Word& g : {"ab"_w, "abab"_w, "aab"_w, "abAB"_w, "baba"_w, "abA"_w, "aba"_w}) {
      const GrowthSeries s = growth_probe(spec, PowersFamily{g}, 25);
      for (const auto& pt : s.points) {
        const NormValue direct = norm(spec.rep, evaluate(spec, power(g, pt.n)));
        if (direct.is_exact()) {
          ASSERT_EQ(pt.norm, direct) << to_string(g) << " n=" << pt.n;
        } else {
          ASSERT_NEAR(pt.norm.value(), direct.value(), 1e-9) << to_string(g) << " n=" << pt.n;
        }
      }
    }
}

TEST(Growth, HarmonicCoordinate) {
  const Word w = "ab"_w;
  // direct: H(w^n)(1) = H_{n-1}
  const QuasiCocycleSpec direct(w, harmonic_vector(w, 12), RegularRep{NormSpec::linf()});
  for (std::size_t n = 1; n <= 10; ++n)
    EXPECT_EQ(evaluate_coordinate(direct, power(w, n), Word{}), harmonic_number(n - 1));

  const QuasiCocycleSpec spec(w, harmonic_vector(w, 5), RegularRep{NormSpec::linf()});
  const GrowthSeries s = growth_probe(spec, HarmonicFamily{}, 4);
  ASSERT_EQ(s.points.size(), 4U);
  EXPECT_EQ(*s.points[3].coordinate, Rational(25, 12));
  EXPECT_EQ(*s.points[0].coordinate, Rational(1));
  EXPECT_EQ(harmonic_number(4), Rational(25, 12));
}

TEST(Growth, HarmonicVectorEntries) {
  const RegularVector f = harmonic_vector("ab"_w, 3);
  EXPECT_EQ(f.support_size(), 3U);
  EXPECT_EQ(f["BA"_w], Rational(1));
  EXPECT_EQ(f["BABA"_w], Rational(1, 2));
  EXPECT_EQ(f["BABABA"_w], Rational(1, 3));
}

TEST(Growth, RotationStaysBelowCertifiedBound) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const MatrixRep rep = random_rotation_rep(seed, 0.1);
    const double gap = spectral_gap(rep, "ab"_w);
    ASSERT_GE(gap, 0.1);
    const QuasiCocycleSpec spec("ab"_w, vec2(1, 0), rep);
    const GrowthSeries s = growth_probe(spec, PowersFamily{"ab"_w, true}, 2000);
    ASSERT_TRUE(s.cyclic.has_value());
    ASSERT_TRUE(s.cyclic->bound.has_value());
    EXPECT_EQ(s.cyclic->classes, 1U);
    EXPECT_NEAR(*s.cyclic->bound, 2.0 / gap, 1e-12);
    EXPECT_TRUE(s.cyclic->exceeded_at.empty());
    for (const auto& pt : s.points) EXPECT_LE(pt.norm.value(), 2.0 / gap + 1e-6);
    ASSERT_EQ(s.orbit_sums.size(), 2000U);
  }
}

TEST(Growth, CyclicBoundNeedsGap) {
  const QuasiCocycleSpec spec("ab"_w, vec2(1, 0), rotation_rep(0, 0));
  const GrowthSeries s = growth_probe(spec, PowersFamily{"ab"_w}, 10);
  ASSERT_TRUE(s.cyclic.has_value());
  EXPECT_FALSE(s.cyclic->bound.has_value());
  EXPECT_NEAR(s.points.back().norm.value(), 10.0, 1e-9);
}

TEST(Growth, FamilyWordsGrowInTrivialRep) {
  const BufferedWord bw = make_buffered("aba"_w);
  const QuasiCocycleSpec spec(bw.w, Rational(1), TrivialRep{});
  const GrowthSeries s = growth_probe(spec, FamilyWords{bw, 5}, 6);
  for (const auto& pt : s.points) EXPECT_EQ(pt.norm.power(), Rational(static_cast<long long>(pt.n)));
  const GrowthSeries again = growth_probe(spec, FamilyWords{bw, 5}, 6);
  EXPECT_EQ(s.words, again.words);
  EXPECT_THROW(growth_probe(spec, FamilyWords{bw, 5}, 0), PreconditionError);
}

TEST(Greedy, TrivialGainsOnePerStep) {
  const BufferedWord bw = make_buffered("aba"_w, 4, 5);
  const GreedyReport r = greedy_search(bw, Rational(1), TrivialRep{}, 6);
  ASSERT_EQ(r.steps.size(), 6U);
  for (const auto& s : r.steps) EXPECT_EQ(s.post.power(), s.pre.power() + 1);
  EXPECT_EQ(r.final_norm.power(), Rational(7));
  EXPECT_EQ(r.certificate_failures, 0U);
}

TEST(Greedy, L2StrictlyIncreasingAndCertified) {
  const BufferedWord bw = make_buffered("aba"_w, 4, 5);
  GreedyOptions opt;
  opt.y_ball_radius = 1;
  const GreedyReport r = greedy_search(bw, delta(Word{}), RegularRep{NormSpec::lp(2)}, 12, opt);
  ASSERT_EQ(r.steps.size(), 12U);
  for (const auto& s : r.steps) {
    EXPECT_TRUE(s.exact);
    EXPECT_TRUE(s.admissible);
    EXPECT_TRUE(s.certificate_holds);
    EXPECT_GT(s.post, s.pre);
  }
  EXPECT_EQ(r.certificate_failures, 0U);
  EXPECT_TRUE(r.gained_ten_epsilon());
}

TEST(Greedy, RejectsNonUnitOrNonConvex) {
  const BufferedWord bw = make_buffered("aba"_w, 4, 5);
  EXPECT_THROW(greedy_search(bw, delta(Word{}, 2), RegularRep{NormSpec::lp(2)}, 1), PreconditionError);
  EXPECT_THROW(greedy_search(bw, delta(Word{}), RegularRep{NormSpec::lp(1)}, 1), PreconditionError);
  EXPECT_THROW(greedy_search(bw, delta(Word{}), RegularRep{NormSpec::linf()}, 1), PreconditionError);
}

TEST(Greedy, ExactGainHelper) {
  // sqrt(5) >= sqrt(4) + 0.2 since 2.2^2 = 4.84 <= 5; fails for 0.3 (5.29)
  const NormValue pre = NormValue::exact(4, 2), post = NormValue::exact(5, 2);
  EXPECT_TRUE(detail::exact_gain(pre, post, Rational(1, 5)));
  EXPECT_FALSE(detail::exact_gain(pre, post, Rational(3, 10)));
  EXPECT_TRUE(detail::exact_gain(NormValue::exact(2, 1), NormValue::exact(3, 1), Rational(1)));
  EXPECT_FALSE(detail::exact_gain(NormValue::exact(2, 1), NormValue::exact(3, 1), Rational(11, 10)));
  EXPECT_EQ(detail::exact_rational(0.375), Rational(3, 8));
}

TEST(Vanishing, W1OnPowerSubgroups) {
  const QuasiCocycleSpec spec("a^5b^5a^7b^7"_w, delta(Word{}), RegularRep{NormSpec::lp(2)});
  for (const auto& gens : {std::vector<Word>{"a^2"_w, "b"_w}, std::vector<Word>{"a^3"_w, "b"_w}}) {
    const VanishingReport r = vanishing_check(spec, gens, 1000, 200, 9);
    EXPECT_TRUE(r.vanishes());
    EXPECT_EQ(r.max_norm.power(), Rational(0));
    EXPECT_EQ(r.sampled, 1000U);
    EXPECT_GT(r.enumerated, 0U);
  }
}

TEST(Vanishing, AbOnCyclicSubgroup) {
  const QuasiCocycleSpec spec("ab"_w, Rational(1), TrivialRep{});
  EXPECT_TRUE(vanishing_check(spec, {"a"_w}, 200, 50, 1).vanishes());
  // ball only: (ab)^6 and (BA)^6 both reach 6; shortlex picks (ab)^6
  const VanishingReport r = vanishing_check(spec, {"ab"_w}, 0, 40, 1);
  ASSERT_FALSE(r.vanishes());
  EXPECT_EQ(*r.witness, power("ab"_w, 6));
  EXPECT_EQ(r.max_norm.power(), Rational(6));
}

TEST(Vanishing, DeterministicAcrossThreads) {
  const QuasiCocycleSpec spec("aba"_w, Rational(1), TrivialRep{});
  const auto x = vanishing_check(spec, {"a^2"_w, "b"_w}, 300, 30, 4, 1);
  const auto y = vanishing_check(spec, {"a^2"_w, "b"_w}, 300, 30, 4, 3);
  EXPECT_EQ(x.max_norm, y.max_norm);
  EXPECT_EQ(x.witness, y.witness);
}

TEST(Independence, OneAndFiveTrivial) {
  const IndependenceReport r = independence_matrix({1, 5}, Word{}, Rational(1), TrivialRep{}, {6}, 3);
  ASSERT_EQ(r.patterns.size(), 2U);
  EXPECT_EQ(r.patterns[0], "a^5b^5a^7b^7"_w);
  EXPECT_EQ(r.patterns[1], "a^25b^25a^35b^35"_w);
  EXPECT_TRUE(r.zero_on_witnesses[0]);
  EXPECT_FALSE(r.zero_on_witnesses[1]);
  EXPECT_TRUE(r.zero_pattern_exact);
  ASSERT_EQ(r.exact_steps.size(), 6U);
  for (const Rational& step : r.exact_steps) EXPECT_EQ(step, Rational(1));
  EXPECT_NEAR(r.slope, 1.0, 1e-12);
  EXPECT_TRUE(r.independence_evidence());
}

TEST(Independence, SinglePatternIsGrowthProbe) {
  const IndependenceReport r = independence_matrix({1}, Word{}, Rational(1), TrivialRep{}, {4}, 3);
  EXPECT_TRUE(r.zero_pattern_exact);
  EXPECT_TRUE(r.growth_positive);
  EXPECT_EQ(r.norms.size(), 1U);
  EXPECT_EQ(r.norms[0].size(), 4U);
}

TEST(Independence, Preconditions) {
  EXPECT_THROW(independence_matrix({2}, Word{}, Rational(1), TrivialRep{}, {}, 1), PreconditionError);
  EXPECT_THROW(independence_matrix({3}, Word{}, Rational(1), TrivialRep{}, {}, 1), PreconditionError);
  EXPECT_THROW(independence_matrix({5, 1}, Word{}, Rational(1), TrivialRep{}, {}, 1), PreconditionError);
  EXPECT_THROW(independence_matrix({}, Word{}, Rational(1), TrivialRep{}, {}, 1), PreconditionError);
}

TEST(UCTest, HilbertNoViolations) {
  const LpSpace l2{2.0, 8};
  const UCConstants c = uc_constants(l2, 1.0);
  const UCTestReport r = uc_inequality_test(l2, 1.0, c, 20000, 17);
  EXPECT_EQ(r.trials, 20000U);
  EXPECT_EQ(r.kept + r.filtered_small_e + r.filtered_mu, r.trials);
  EXPECT_GT(r.filtered_small_e, 0U);
  EXPECT_GT(r.kept, 10000U);
  EXPECT_EQ(r.violations, 0U);
  EXPECT_GE(r.worst_margin, 0.0);
}

TEST(UCTest, HilbertOracleInequality) {
  // ||v+e||^2 >= ||v||^2 - 2||v|| mu + 1/4 for kept pairs; check the derived
  // constants make the right side exceed (||v|| + eps)^2 on [0, R]
  for (double R : {0.5, 1.0, 3.0}) {
    const UCConstants c = uc_constants(LpSpace{2.0, 8}, R);
    for (double v = 0; v <= R; v += R / 100)
      EXPECT_GE(v * v - 2 * v * c.mu + 0.25, (v + c.epsilon) * (v + c.epsilon)) << R << " " << v;
  }
}

TEST(UCTest, InflatedMuFindsViolationsWhenFeasible) {
  const LpSpace l2{2.0, 8};
  const UCConstants c = uc_constants(l2, 1.0);
  const UCTestReport r = uc_inequality_test(l2, 1.0, inflate_mu(c, 1000), 4000, 17);
  EXPECT_GT(r.violations, 0U);
  EXPECT_LT(r.worst_margin, 0.0);
}

TEST(UCTest, ThreadsDeterministic) {
  const LpSpace l3{3.0, 6};
  const UCConstants c = uc_constants(l3, 2.0);
  const auto x = uc_inequality_test(l3, 2.0, c, 3000, 5, 1);
  const auto y = uc_inequality_test(l3, 2.0, c, 3000, 5, 4);
  EXPECT_EQ(x.kept, y.kept);
  EXPECT_EQ(x.violations, y.violations);
  EXPECT_EQ(x.worst_margin, y.worst_margin);
  EXPECT_EQ(x.violations, 0U);
}
