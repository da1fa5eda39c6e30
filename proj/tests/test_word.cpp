#include <gtest/gtest.h>

#include <map>
#include <random>

#include "qclab/enumerate.hpp"
#include "qclab/families.hpp"
#include "qclab/occurrences.hpp"
#include "qclab/word.hpp"
#include "oracles.hpp"

using namespace qclab;
using namespace qclab::literals;

TEST(Word, ParseSpelledPatterns) {
  EXPECT_EQ(parse_word("a^5b^5a^7b^7").size(), 24U);
  EXPECT_TRUE(parse_word("aA").empty());
  EXPECT_EQ(parse_word("abBa"), parse_word("a^2"));
  EXPECT_EQ(parse_word(" a ^ -2 b "), parse_word("AAb"));
  EXPECT_EQ(parse_word("1"), Word{});
  EXPECT_EQ(parse_word(""), Word{});
}

TEST(Word, ParseErrors) {
  EXPECT_THROW(parse_word("abc"), ParseError);
  EXPECT_THROW(parse_word("a^"), ParseError);
  EXPECT_THROW(parse_word("a^0"), ParseError);
  EXPECT_THROW(parse_word("a^99999999999999999999"), ParseError);
  EXPECT_THROW(parse_word("1a"), ParseError);
}

TEST(Word, MultiplyExamples) {
  EXPECT_TRUE(multiply("ab"_w, "BA"_w).empty());
  EXPECT_EQ(multiply("ab"_w, "ab"_w), "abab"_w);
  EXPECT_EQ(multiply("ab"_w, "BAb"_w), "b"_w);
}

TEST(Word, InvertExamples) {
  EXPECT_EQ(invert("ab"_w), "BA"_w);
  EXPECT_EQ(invert(Word{}), Word{});
  EXPECT_EQ(invert("a^2b"_w), "BA^2"_w);
}

TEST(Word, CyclicReduceExamples) {
  auto r = cyclic_reduce("abA"_w);
  EXPECT_EQ(r.core, "b"_w);
  EXPECT_EQ(r.conjugator, "a"_w);
  r = cyclic_reduce("abab"_w);
  EXPECT_EQ(r.core, "abab"_w);
  EXPECT_TRUE(r.conjugator.empty());
  r = cyclic_reduce("Aba"_w);
  EXPECT_EQ(r.core, "b"_w);
  EXPECT_EQ(r.conjugator, "A"_w);
}

TEST(Word, CyclicReduceRandom) {
  Rng rng = make_rng(11);
  for (int i = 0; i < 500; ++i) {
    const Word u = random_word(rng, 1 + i % 12);
    const auto r = cyclic_reduce(u);
    EXPECT_TRUE(is_cyclically_reduced(r.core));
    EXPECT_EQ(multiply({r.conjugator, r.core, invert(r.conjugator)}), u);
  }
}

TEST(Word, CommonPrefixExamples) {
  EXPECT_EQ(common_prefix("abab"_w, "abA"_w), "ab"_w);
  EXPECT_EQ(common_prefix("abab"_w, "abab"_w), "abab"_w);
  EXPECT_TRUE(common_prefix("ab"_w, "ba"_w).empty());
}

TEST(Word, RenderRoundTrip) {
  for (const Word& w : ball(5)) EXPECT_EQ(parse_word(to_string(w)), w);
  EXPECT_EQ(to_string(Word{}), "1");
  EXPECT_EQ(to_string("a^5b^5a^7b^7"_w), "a^5b^5a^7b^7");
  EXPECT_EQ(to_string("AAb"_w), "A^2b");
}

TEST(Word, ReduceIdempotent) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int t = 0; t < 500; ++t) {
    std::vector<Letter> s(static_cast<std::size_t>(t % 20));
    for (Letter& l : s) l = kLetters[letter(rng)];
    const Word once = Word::reduce(s);
    const auto letters = once.letters();
    EXPECT_EQ(Word::reduce(letters), once);
    EXPECT_EQ(once, test::naive_reduce(s));
  }
}

TEST(Word, GroupLawsOnBall4) {
  const auto b = ball(4);
  for (const Word& u : b) {
    EXPECT_TRUE(multiply(u, invert(u)).empty());
    EXPECT_TRUE(multiply(invert(u), u).empty());
  }
  // associativity on a thinned ball(4)^3 plus all pairs for the length law
  for (std::size_t i = 0; i < b.size(); i += 7)
    for (std::size_t j = 0; j < b.size(); j += 5)
      for (std::size_t k = 0; k < b.size(); k += 11)
        EXPECT_EQ(multiply(multiply(b[i], b[j]), b[k]), multiply(b[i], multiply(b[j], b[k])));
  for (const Word& u : b)
    for (const Word& v : b) EXPECT_LE(multiply(u, v).size(), u.size() + v.size());
}

TEST(Word, GromovProductOnBall5) {
  const auto b = ball(5);
  for (std::size_t i = 0; i < b.size(); i += 3)
    for (const Word& v : b) {
      const Word& u = b[i];
      EXPECT_EQ(multiply(invert(u), v).size(), u.size() + v.size() - 2 * common_prefix(u, v).size());
    }
}

TEST(Enumerate, SphereAndBallSizes) {
  EXPECT_EQ(sphere(1).size(), 4U);
  EXPECT_EQ(sphere(2).size(), 12U);
  EXPECT_EQ(ball(2).size(), 17U);
  for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(sphere(n).size(), sphere_size(n));
  const auto s = sphere(3);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(std::set<Word>(s.begin(), s.end()).size(), s.size());
}

TEST(Enumerate, RandomWordsReproducible) {
  const auto x = random_words(20, 50, 9), y = random_words(20, 50, 9);
  EXPECT_EQ(x, y);
  for (const Word& w : x) EXPECT_EQ(w.size(), 20U);
  EXPECT_NE(random_words(20, 50, 10), x);
}

TEST(Enumerate, SubgroupRandomEvenABlocks) {
  const std::vector<Word> gens{"a^2"_w, "b"_w};
  for (const Word& w : subgroup_random(gens, 40, 300, 5)) {
    EXPECT_TRUE(test::in_subgroup_a_k_b(w, 2)) << to_string(w);
  }
  EXPECT_THROW(subgroup_random({Word{}}, 3, 3, 1), PreconditionError);
}

TEST(Enumerate, SubgroupBallComplete) {
  // every element of <a^2, b> in ball(6), found by filtering the full ball
  const auto got = subgroup_ball({"a^2"_w, "b"_w}, 6);
  std::vector<Word> expected;
  for (const Word& w : ball(6))
    if (test::in_subgroup_a_k_b(w, 2)) expected.push_back(w);
  EXPECT_EQ(got, expected);
}

TEST(Occurrences, AbPowers) {
  const auto occ = occurrences("ab"_w, "ababab"_w);
  ASSERT_EQ(occ.size(), 3U);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(occ[i].sign, Sign::positive);
    EXPECT_EQ(occ[i].start, 2 * i);
    EXPECT_EQ(occ[i].prefix, power("ab"_w, i));
  }
  EXPECT_TRUE(occurrences("ab"_w, "a^5"_w).empty());
}

TEST(Occurrences, NegativeExample) {
  const auto occ = occurrences("ab"_w, "BA"_w);
  ASSERT_EQ(occ.size(), 1U);
  EXPECT_EQ(occ[0].sign, Sign::negative);
  EXPECT_EQ(occ[0].prefix, "BA"_w);
  EXPECT_EQ(multiply(occ[0].prefix, "ab"_w), Word{});
}

TEST(Occurrences, OverlappingExample) {
  const auto occ = occurrences("aba"_w, "ababa"_w);
  ASSERT_EQ(occ.size(), 2U);
  EXPECT_EQ(occ[0].start, 0U);
  EXPECT_EQ(occ[1].start, 2U);
  EXPECT_EQ(occ[0].sign, Sign::positive);
  EXPECT_EQ(occ[1].sign, Sign::positive);
}

TEST(Occurrences, RejectsBadPatterns) {
  EXPECT_THROW(occurrences(Word{}, "ab"_w), PreconditionError);
  EXPECT_THROW(occurrences("abA"_w, "ab"_w), PreconditionError);
}

TEST(Occurrences, InvariantsAgainstOracleBall3x6) {
  std::vector<Word> patterns;
  for (const Word& w : ball(3))
    if (!w.empty() && is_cyclically_reduced(w)) patterns.push_back(w);
  for (const Word& w : patterns)
    for (const Word& g : ball(6)) {
      const auto got = occurrences(w, g);
      ASSERT_EQ(got, test::oracle_occurrences(w, g)) << to_string(w) << " in " << to_string(g);
      for (const auto& o : got) {
        const Word hw = multiply(o.prefix, w);
        if (o.sign == Sign::positive) EXPECT_TRUE(g.starts_with(hw));
        else EXPECT_EQ(hw, g.prefix(o.start - w.size()));
      }
    }
}

TEST(Families, WmAndWk) {
  EXPECT_EQ(make_wm(Word{}, 1), "a^5b^5a^7b^7"_w);
  EXPECT_EQ(make_wm(Word{}, 5), "a^25b^25a^35b^35"_w);
  EXPECT_THROW(make_wm(Word{}, 2), PreconditionError);
  EXPECT_THROW(make_wm(Word{}, 3), PreconditionError);
  EXPECT_THROW(make_wm("Ba"_w, 1), PreconditionError);
  EXPECT_THROW(make_wm("bA"_w, 1), PreconditionError);
  EXPECT_EQ(make_wk(Word{}, "a"_w, "b"_w, 2), "a^2b^2a^2b^2"_w);
  EXPECT_THROW(make_wk(Word{}, "a"_w, "A"_w, 1), PreconditionError);
}

TEST(Families, BufferedAba) {
  const BufferedWord bw = make_buffered("aba"_w, 4, 42);
  EXPECT_EQ(bw.w_prime, "a^4b^4aba^5b^4"_w);  // a^4b^4 . aba . a^4b^4
  EXPECT_EQ(occurrence_counts(bw.w, bw.w_prime), std::make_pair(std::size_t{1}, std::size_t{0}));
  EXPECT_EQ(bw.f_gens.first, "a^42"_w);
  EXPECT_EQ(bw.f_gens.second, "b^42"_w);
}

TEST(Families, BufferedDefaultsAndRejections) {
  const BufferedWord bw = make_buffered("abAB"_w);
  EXPECT_EQ(bw.buffer_len, 5U);
  EXPECT_EQ(bw.subgroup_exp, 54);
  EXPECT_THROW(make_buffered("a^2b^3"_w), PreconditionError);
  EXPECT_THROW(make_buffered("ba"_w), PreconditionError);
  EXPECT_THROW(make_buffered("abA"_w), PreconditionError);
}

TEST(Families, FamilyWordCounts) {
  const BufferedWord bw = make_buffered("abAB"_w);
  Rng rng = make_rng(4);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Word> ys;
    for (std::size_t i = 0; i < n; ++i) ys.push_back(random_power_subgroup_element(rng, bw, 0, 3));
    const Word x = make_family(bw, ys);
    EXPECT_EQ(occurrence_counts(bw.w, x), std::make_pair(n, std::size_t{0}));
  }
  EXPECT_THROW(make_family(bw, {"a"_w}), PreconditionError);
}

TEST(Families, Syllables) {
  const auto s = syllables("a^3B^2a"_w);
  ASSERT_EQ(s.size(), 3U);
  EXPECT_EQ(s[1].generator, Letter::b);
  EXPECT_EQ(s[1].exponent, -2);
  EXPECT_TRUE(in_power_subgroup("a^6B^3"_w, 3));
  EXPECT_FALSE(in_power_subgroup("a^6B^2"_w, 3));
}
