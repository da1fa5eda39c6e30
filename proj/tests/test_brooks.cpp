#include <gtest/gtest.h>

#include "qclab/brooks.hpp"
#include "qclab/coboundary_fit.hpp"
#include "qclab/cocycle.hpp"
#include "qclab/diagonal.hpp"
#include "qclab/enumerate.hpp"
#include "qclab/matrix_tools.hpp"
#include "oracles.hpp"

using namespace qclab;
using namespace qclab::literals;

namespace {

RegularVector delta(const Word& h, Rational c = 1) { return RegularVector::delta(h, c); }

const Representation kL2 = RegularRep{NormSpec::lp(2)};
const Representation kLinf = RegularRep{NormSpec::linf()};

CVector vec2(Complex x, Complex y) {
  CVector v(2);
  v << x, y;
  return v;
}

}  // namespace

TEST(Evaluate, AbPowersRegular) {
  const QuasiCocycleSpec spec("ab"_w, delta(Word{}), kL2);
  const Vector expected = delta(Word{}) + delta("ab"_w) + delta("abab"_w);
  EXPECT_TRUE(vectors_equal(evaluate(spec, "ababab"_w), expected));
  EXPECT_TRUE(is_zero(evaluate(spec, "a^9"_w)));
  EXPECT_TRUE(is_zero(evaluate(spec, "b^9"_w)));
  EXPECT_TRUE(is_zero(evaluate(spec, Word{})));
}

TEST(Evaluate, AbaTrivial) {
  const QuasiCocycleSpec spec("aba"_w, Rational(1), TrivialRep{});
  EXPECT_EQ(std::get<Rational>(evaluate(spec, "ababa"_w)), Rational(2));
}

TEST(Evaluate, TrivialMatchesNaiveCounting) {
  for (const Word& w : {"ab"_w, "aba"_w, "abAB"_w, "a"_w, "aab"_w}) {
    const QuasiCocycleSpec spec(w, Rational(1), TrivialRep{});
    for (const Word& g : ball(6))
      ASSERT_EQ(std::get<Rational>(evaluate(spec, g)), Rational(test::naive_counting(w, g)))
          << to_string(w) << " " << to_string(g);
  }
}

TEST(Evaluate, CoordinateMatchesFullVector) {
  const QuasiCocycleSpec spec("aba"_w, delta(Word{}, 2) + delta("b"_w, -1), kL2);
  for (const Word& g : ball(5)) {
    const RegularVector v = std::get<RegularVector>(evaluate(spec, g));
    for (const Word& f : ball(3)) ASSERT_EQ(evaluate_coordinate(spec, g, f), v[f]);
  }
}

TEST(Evaluate, SpecRejectsBadInput) {
  EXPECT_THROW(QuasiCocycleSpec("abA"_w, Rational(1), TrivialRep{}), PreconditionError);
  EXPECT_THROW(QuasiCocycleSpec(Word{}, Rational(1), TrivialRep{}), PreconditionError);
  EXPECT_THROW(QuasiCocycleSpec("ab"_w, Rational(0), TrivialRep{}), PreconditionError);
  EXPECT_THROW(QuasiCocycleSpec("ab"_w, Rational(1), kL2), PreconditionError);
}

TEST(Evaluate, AntisymmetryExactBall6) {
  const QuasiCocycleSpec spec("aab"_w, delta(Word{}) + delta("a"_w, 2), kL2);
  for (const Word& g : ball(6)) {
    const Word gi = invert(g);
    ASSERT_TRUE(vectors_equal(evaluate(spec, gi), negate(act(spec.rep, gi, evaluate(spec, g)))))
        << to_string(g);
  }
}

TEST(Evaluate, AntisymmetryRandomLong) {
  const QuasiCocycleSpec spec("ab"_w, delta(Word{}), kL2);
  Rng rng = make_rng(77);
  std::uniform_int_distribution<std::size_t> len(0, 60);
  for (int i = 0; i < 10000; ++i) {
    const Word g = random_word(rng, len(rng));
    const Word gi = invert(g);
    ASSERT_TRUE(vectors_equal(evaluate(spec, gi), negate(act(spec.rep, gi, evaluate(spec, g)))));
  }
}

TEST(Evaluate, AntisymmetryMatrix) {
  const QuasiCocycleSpec spec("abAB"_w, vec2(1, Complex(0, 1)), random_generic_u2(5));
  for (const Word& g : ball(5)) {
    const Word gi = invert(g);
    EXPECT_TRUE(vectors_equal(evaluate(spec, gi), negate(act(spec.rep, gi, evaluate(spec, g))), 1e-10));
  }
}

TEST(Defect, AbTrivialRadius4) {
  // exhaustive pair enumeration oracle: sup 1, first attained at (a, b)
  const QuasiCocycleSpec spec("ab"_w, Rational(1), TrivialRep{});
  const DefectReport r = defect(spec, DefectMode::exact(4));
  EXPECT_EQ(r.observed_sup.power(), Rational(1));
  EXPECT_EQ(r.theoretical_bound.power(), Rational(12));
  EXPECT_TRUE(r.within_bound());
  EXPECT_EQ(r.witness, std::make_pair("a"_w, "b"_w));
  EXPECT_EQ(r.pairs_checked, ball_size(4) * ball_size(4));
}

TEST(Defect, AbaTrivialRadius4) {
  const QuasiCocycleSpec spec("aba"_w, Rational(1), TrivialRep{});
  const DefectReport r = defect(spec, DefectMode::exact(4));
  EXPECT_EQ(r.observed_sup.power(), Rational(1));
  EXPECT_EQ(r.witness, std::make_pair("a"_w, "ba"_w));
}

TEST(Defect, IdentityPartnerContributesZero) {
  const QuasiCocycleSpec spec("abAB"_w, delta(Word{}) + delta("b"_w), kL2);
  for (const Word& g : ball(5)) {
    EXPECT_TRUE(is_zero(defect_vector(spec, g, Word{})));
    EXPECT_TRUE(is_zero(defect_vector(spec, Word{}, g)));
  }
}

TEST(Defect, WithinBoundAcrossBackends) {
  const std::vector<QuasiCocycleSpec> specs{
      {"ab"_w, delta(Word{}), kL2},
      {"aba"_w, delta(Word{}) + delta("a"_w, -3), RegularRep{NormSpec::lp(3)}},
      {"abAB"_w, delta(Word{}), kLinf},
      {"aab"_w, vec2(1, 0), random_generic_u2(9)},
  };
  for (const auto& spec : specs) {
    const DefectReport r = defect(spec, DefectMode::exact(4));
    EXPECT_TRUE(r.within_bound()) << to_string(spec.w);
    EXPECT_GT(r.observed_sup.value(), 0.0);
  }
}

TEST(Defect, SampledDeterministic) {
  const QuasiCocycleSpec spec("aba"_w, delta(Word{}), kL2);
  DefectMode m = DefectMode::sampled(16, 3000, 123);
  const DefectReport x = defect(spec, m);
  m.threads = 3;
  const DefectReport y = defect(spec, m);
  EXPECT_EQ(x.observed_sup, y.observed_sup);
  EXPECT_EQ(x.witness, y.witness);
  EXPECT_TRUE(x.within_bound());
}

TEST(Defect, ThreadsDoNotChangeExactResult) {
  const QuasiCocycleSpec spec("ab"_w, Rational(1), TrivialRep{});
  DefectMode m = DefectMode::exact(4);
  m.threads = 4;
  const DefectReport r = defect(spec, m);
  EXPECT_EQ(r.witness, std::make_pair("a"_w, "b"_w));
}

TEST(Defect, RadiusGuard) {
  const QuasiCocycleSpec spec("ab"_w, Rational(1), TrivialRep{});
  EXPECT_THROW(defect(spec, DefectMode::exact(7)), PreconditionError);
}

TEST(Defect, TripodLocality) {
  // every prefix carrying a nonzero defect coefficient lies within |w| of the
  // tripod center common_prefix(g, gg')
  for (const Word& w : {"ab"_w, "aba"_w, "abAB"_w, "aab"_w}) {
    const auto b = ball(5);
    for (std::size_t i = 0; i < b.size(); i += 3)
      for (std::size_t j = 0; j < b.size(); j += 2) {
        const Word& g = b[i];
        const Word& g2 = b[j];
        const Word center = common_prefix(g, multiply(g, g2));
        for (const auto& [h, c] : defect_chain(w, g, g2))
          ASSERT_LE(multiply(invert(center), h).size(), w.size())
              << to_string(w) << " " << to_string(g) << " " << to_string(g2);
      }
  }
}

TEST(Cocycle, CoboundaryTelescopes) {
  const MatrixRep m = random_generic_u2(2);
  const Representation rep = m;
  const CVector v = vec2(Complex(1, 2), Complex(-0.5, 0.25));
  const CocycleSpec c = CocycleSpec::coboundary(rep, v);
  for (const Word& g : ball(5))
    EXPECT_TRUE(vectors_equal(cocycle_extend(c, g), subtract(v, act(rep, g, v)), 1e-10));

  const RegularVector rv = delta(Word{}) + delta("ab"_w, 3);
  const CocycleSpec cr = CocycleSpec::coboundary(kL2, rv);
  for (const Word& g : ball(5))
    EXPECT_TRUE(vectors_equal(cocycle_extend(cr, g), subtract(rv, act(kL2, g, rv))));
}

TEST(Cocycle, TrivialAbelianization) {
  const CocycleSpec c(Rational(3), Rational(0), TrivialRep{});
  for (const Word& g : ball(5)) {
    long long exp = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      exp += g[i] == Letter::a ? 1 : g[i] == Letter::a_inv ? -1 : 0;
    EXPECT_EQ(std::get<Rational>(cocycle_extend(c, g)), Rational(3 * exp));
  }
  EXPECT_EQ(std::get<Rational>(cocycle_extend(c, Word{})), Rational(0));
}

TEST(Cocycle, IdentityExactOnBall4) {
  const CocycleSpec c(delta("a"_w, 2) + delta(Word{}), delta("B"_w, -1), kL2);
  const auto b = ball(4);
  for (const Word& g : b)
    for (const Word& g2 : b)
      ASSERT_TRUE(vectors_equal(cocycle_extend(c, multiply(g, g2)),
                                add(cocycle_extend(c, g), act(kL2, g, cocycle_extend(c, g2)))));
}

TEST(Antisymmetrize, BrooksIsFixedPoint) {
  const QuasiCocycleSpec spec("aba"_w, delta(Word{}) + delta("b"_w), kL2);
  const CochainFn h = as_function(spec);
  const CochainFn h2 = antisymmetrize(h, spec.rep);
  for (const Word& g : ball(6)) ASSERT_TRUE(vectors_equal(h(g), h2(g)));
}

TEST(Antisymmetrize, CocycleUnchanged) {
  const CocycleSpec c(delta("a"_w), delta(Word{}, -2), kL2);
  const CochainFn f = as_function(c);
  const CochainFn f2 = antisymmetrize(f, c.rep);
  for (const Word& g : ball(5)) ASSERT_TRUE(vectors_equal(f(g), f2(g)));
}

TEST(Antisymmetrize, RestoresAntisymmetryAfterPerturbation) {
  const QuasiCocycleSpec spec("ab"_w, delta(Word{}), kL2);
  const CochainFn h = as_function(spec);
  const CochainFn perturbed = [&](const Word& g) {
    return add(h(g), Vector(delta(g.prefix(g.size() / 2), Rational(static_cast<long long>(g.size() % 3), 2))));
  };
  const CochainFn fixed = antisymmetrize(perturbed, spec.rep);
  Rng rng = make_rng(31);
  for (int i = 0; i < 300; ++i) {
    const Word g = random_word(rng, 1 + i % 20);
    const Word gi = invert(g);
    ASSERT_TRUE(vectors_equal(fixed(gi), negate(act(spec.rep, gi, fixed(g)))));
  }
}

TEST(KAverage, Examples) {
  const CVector v = vec2(Complex(1, 2), Complex(3, -1));
  const CMatrix id = CMatrix::Identity(2, 2);
  EXPECT_TRUE(k_average({id}, v).isApprox(v));
  EXPECT_LE(k_average({id, CMatrix(-id)}, v).norm(), 1e-15);
  CMatrix swap = CMatrix::Zero(2, 2);
  swap(0, 1) = swap(1, 0) = 1;
  const CVector avg = k_average({id, swap}, v);
  EXPECT_LE((avg - vec2(Complex(2, 0.5), Complex(2, 0.5))).norm(), 1e-15);
  // idempotent and K-invariant
  EXPECT_LE((k_average({id, swap}, avg) - avg).norm(), 1e-12);
  EXPECT_LE((swap * avg - avg).norm(), 1e-12);
  EXPECT_NEAR(k_orbit_diameter({id, swap}, v), (v - swap * v).norm(), 1e-15);
  EXPECT_THROW(k_average({id, CMatrix(2 * id)}, v), PreconditionError);
  EXPECT_THROW(k_average({}, v), PreconditionError);
}

TEST(Diagonal, IdentityGivesZero) {
  const DiagonalCoboundary h0(QuasiCocycleSpec("ab"_w, delta(Word{}), kLinf));
  EXPECT_TRUE(h0.restricted(Word{}, 6).is_zero());
  EXPECT_THROW(h0.restricted("a"_w, 11), PreconditionError);
  EXPECT_THROW(DiagonalCoboundary(QuasiCocycleSpec("ab"_w, delta(Word{}), kL2)), PreconditionError);
}

TEST(Diagonal, CocycleIdentitySampled) {
  const DiagonalCoboundary h0(QuasiCocycleSpec("ab"_w, delta(Word{}), kLinf));
  Rng rng = make_rng(8);
  for (int i = 0; i < 100; ++i) {
    const Word g = random_word(rng, 1 + i % 9), g2 = random_word(rng, 1 + i % 7),
               f = random_word(rng, i % 11);
    // (g.H0(g'))(f) = H0(g')(g^-1 f)
    ASSERT_EQ(h0.coordinate(multiply(g, g2), f),
              h0.coordinate(g, f) + h0.coordinate(g2, multiply(invert(g), f)));
  }
}

TEST(Diagonal, CloseToH) {
  const QuasiCocycleSpec spec("ab"_w, delta(Word{}), kLinf);
  const DiagonalCoboundary h0(spec);
  Rational worst = 0;
  for (const Word& g : ball(4))
    for (const Word& f : ball(5))
      worst = std::max(worst, rational_abs(evaluate_coordinate(spec, g, f) - h0.coordinate(g, f)));
  const DefectReport d = defect(spec, DefectMode::exact(4));
  EXPECT_LE(worst, d.observed_sup.power());
  EXPECT_GT(worst, Rational(0));
}

TEST(CoboundaryFit, RecoversCoboundary) {
  const MatrixRep m = random_generic_u2(6);
  const CVector v0 = vec2(Complex(0.5, -1), Complex(2, 0.3));
  const CocycleSpec c = CocycleSpec::coboundary(m, v0);
  const CoboundaryFit fit = distance_to_coboundary_fit(m, as_function(c), 3);
  EXPECT_LE(fit.residual, 1e-8);
  // a generic pair has no invariant vectors, so v* = v0
  EXPECT_LE((fit.v - v0).norm(), 1e-6);
}

TEST(CoboundaryFit, RotationAbBounded) {
  const MatrixRep rot = rotation_rep(1.1, 0.7);
  const QuasiCocycleSpec spec("ab"_w, vec2(1, 0), rot);
  const double r3 = distance_to_coboundary_fit(spec, 3).residual;
  const double r5 = distance_to_coboundary_fit(spec, 5).residual;
  EXPECT_LT(r5, 2 * 6 * 2.0);  // stays at the defect scale
  EXPECT_GE(r5 + 1e-9, r3);
}

TEST(CoboundaryFit, CountingGrows) {
  const MatrixRep one(CMatrix::Identity(1, 1), CMatrix::Identity(1, 1));
  CVector e(1);
  e << 1;
  const QuasiCocycleSpec spec("a"_w, e, one);
  const double r2 = distance_to_coboundary_fit(spec, 2).residual;
  const double r5 = distance_to_coboundary_fit(spec, 5).residual;
  EXPECT_NEAR(r2, 2.0, 1e-6);
  EXPECT_NEAR(r5, 5.0, 1e-6);
  EXPECT_THROW(distance_to_coboundary_fit(spec, 7), PreconditionError);
  EXPECT_THROW(distance_to_coboundary_fit(QuasiCocycleSpec("a"_w, Rational(1), TrivialRep{}), 2),
               PreconditionError);
}
