#pragma once

// Special word families: the patterns w_m and w_k used for independence
// arguments, and buffered patterns w' = B w B' together with the words
// y_1 w' y_2 w' ... y_n w' used to detect unboundedness.

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qclab/enumerate.hpp"
#include "qclab/error.hpp"
#include "qclab/occurrences.hpp"
#include "qclab/word.hpp"

namespace qclab {

struct Syllable {
  Letter generator;  // Letter::a or Letter::b
  long long exponent;
};

/// Maximal runs of a single generator, with signed exponents.
inline std::vector<Syllable> syllables(const Word& w) {
  std::vector<Syllable> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter l = w[i];
    Letter gen = is_a_letter(l) ? Letter::a : Letter::b;
    long long step = (l == gen) ? 1 : -1;
    if (!out.empty() && out.back().generator == gen)
      out.back().exponent += step;
    else
      out.push_back({gen, step});
  }
  return out;
}

/// True for words of the form a^p b^q or b^p a^q (including powers of one
/// generator and the identity).
inline bool is_two_syllable_form(const Word& w) {
  return syllables(w).size() <= 2;
}

/// Membership in <a^m, b^m>: every syllable exponent is divisible by m.
inline bool in_power_subgroup(const Word& w, long long m) {
  for (const Syllable& s : syllables(w))
    if (s.exponent % m != 0) return false;
  return true;
}

/// w_m = w' a^{5m} b^{5m} a^{7m} b^{7m}, requires gcd(m, 6) = 1.
inline Word make_wm(const Word& w_prime, long long m) {
  require(m >= 1, "w_m requires m >= 1");
  require(std::gcd(m, 6LL) == 1, "w_m requires gcd(m, 6) = 1");
  require(w_prime.empty() || w_prime.front() != Letter::b_inv,
          "w' must not start with b^-1");
  require(w_prime.empty() || w_prime.back() != Letter::a_inv,
          "w' must not end with a^-1");
  Word out = multiply({w_prime, Word::power(Letter::a, 5 * m),
                       Word::power(Letter::b, 5 * m),
                       Word::power(Letter::a, 7 * m),
                       Word::power(Letter::b, 7 * m)});
  require(is_cyclically_reduced(out), "w_m is not cyclically reduced");
  return out;
}

/// w_k = w' alpha^k beta^k alpha^k beta^k, required to be a cyclically
/// reduced concatenation (no cancellation anywhere).
inline Word make_wk(const Word& w_prime, const Word& alpha, const Word& beta,
                    std::size_t k) {
  require(k >= 1, "w_k requires k >= 1");
  const Word ak = power(alpha, k), bk = power(beta, k);
  const std::vector<Word> parts{w_prime, ak, bk, ak, bk};
  Word out;
  std::size_t total = 0;
  for (const Word& p : parts) {
    out = multiply(out, p);
    total += p.size();
  }
  require(out.size() == total && ak.size() == k * alpha.size() &&
              bk.size() == k * beta.size(),
          "w_k concatenation is not reduced");
  require(is_cyclically_reduced(out), "w_k is not cyclically reduced");
  return out;
}

/// A pattern w wrapped in buffers, w' = B w B', together with the subgroup
/// F = <a^m, b^m> whose elements may be interleaved with copies of w'.
struct BufferedWord {
  Word w;
  std::size_t buffer_len = 0;   // l
  long long subgroup_exp = 0;   // m
  Word w_prime;
  std::pair<Word, Word> f_gens;
  std::size_t retries = 0;      // doublings of m needed at construction
  std::vector<std::string> log;

  std::vector<Word> subgroup_generators() const {
    return {f_gens.first, f_gens.second};
  }
};

namespace detail {

// B and B' are a^l b^l, switched to b^l a^l only where a^l b^l would cancel
// against w (B before a leading b^-1, B' after a trailing a^-1). Buffer
// exponents are positive, so buffers never cancel against each other.
inline Word left_buffer(const Word& w, std::size_t l) {
  const auto n = static_cast<long long>(l);
  return w.front() == Letter::b_inv
             ? multiply(Word::power(Letter::b, n), Word::power(Letter::a, n))
             : multiply(Word::power(Letter::a, n), Word::power(Letter::b, n));
}

inline Word right_buffer(const Word& w, std::size_t l) {
  const auto n = static_cast<long long>(l);
  return w.back() == Letter::a_inv
             ? multiply(Word::power(Letter::b, n), Word::power(Letter::a, n))
             : multiply(Word::power(Letter::a, n), Word::power(Letter::b, n));
}

inline Word join_family(const Word& w_prime, const std::vector<Word>& ys) {
  Word x;
  for (const Word& y : ys) x = multiply({x, y, w_prime});
  return x;
}

// Every two-block family word y1 w' y2 w' with y1, y2 in the radius-2 ball of
// <a^m, b^m> must contain w exactly twice and w^-1 never.
inline bool family_probe_ok(const BufferedWord& bw) {
  const auto [pos1, neg1] = occurrence_counts(bw.w, bw.w_prime);
  if (pos1 != 1 || neg1 != 0) return false;
  const std::vector<Word> ys = subgroup_ball(bw.subgroup_generators(),
                                             2 * static_cast<std::size_t>(bw.subgroup_exp));
  for (const Word& y1 : ys)
    for (const Word& y2 : ys) {
      const auto [p, n] = occurrence_counts(bw.w, join_family(bw.w_prime, {y1, y2}));
      if (p != 2 || n != 0) return false;
    }
  return true;
}

}  // namespace detail

/// Builds w' = B w B' and F = <a^m, b^m>. Defaults: l = |w| + 1,
/// m = 6(|w| + l). The occurrence invariant is checked by scanning w' and a
/// set of probe family words; on failure m is doubled (at most max_retries
/// times), each retry recorded in the log.
inline BufferedWord make_buffered(const Word& w, std::size_t buffer_len = 0,
                                  long long subgroup_exp = 0,
                                  std::size_t max_retries = 6) {
  require_pattern(w);
  require(!is_two_syllable_form(w),
          "buffered pattern must not be of the form a^p b^q or b^p a^q");
  BufferedWord bw;
  bw.w = w;
  bw.buffer_len = buffer_len == 0 ? w.size() + 1 : buffer_len;
  bw.subgroup_exp = subgroup_exp == 0
                        ? static_cast<long long>(6 * (w.size() + bw.buffer_len))
                        : subgroup_exp;
  require(bw.subgroup_exp > static_cast<long long>(bw.buffer_len) &&
              bw.subgroup_exp > static_cast<long long>(w.size()),
          "buffer subgroup exponent m must exceed l and |w|");
  bw.w_prime = multiply({detail::left_buffer(w, bw.buffer_len), w,
                         detail::right_buffer(w, bw.buffer_len)});
  while (true) {
    bw.f_gens = {Word::power(Letter::a, bw.subgroup_exp),
                 Word::power(Letter::b, bw.subgroup_exp)};
    if (detail::family_probe_ok(bw)) return bw;
    if (bw.retries == max_retries)
      throw PreconditionError(
          "buffered construction failed for w = " + to_string(w) + " with l = " +
          std::to_string(bw.buffer_len) + ", m = " +
          std::to_string(bw.subgroup_exp) + "; increase the margins");
    bw.log.push_back("occurrence invariant failed at m = " +
                     std::to_string(bw.subgroup_exp) + "; doubling m");
    bw.subgroup_exp *= 2;
    ++bw.retries;
  }
}

/// Reduced y_1 w' y_2 w' ... y_n w'. Every y_i must lie in <a^m, b^m>; the
/// result is scanned and must contain exactly n copies of w and none of w^-1.
inline Word make_family(const BufferedWord& bw, const std::vector<Word>& ys) {
  for (const Word& y : ys)
    require(in_power_subgroup(y, bw.subgroup_exp),
            "family element " + to_string(y) + " is not in <a^m, b^m>");
  Word x = detail::join_family(bw.w_prime, ys);
  const auto [p, n] = occurrence_counts(bw.w, x);
  ensure(p == ys.size() && n == 0,
         "family word has " + std::to_string(p) + " copies of w and " +
             std::to_string(n) + " of w^-1, expected " +
             std::to_string(ys.size()) + " and 0");
  return x;
}

/// Random element of <a^m, b^m>: a freely reduced product of between
/// min_len and max_len generators a^{±m}, b^{±m}.
inline Word random_power_subgroup_element(Rng& rng, const BufferedWord& bw,
                                          std::size_t min_len,
                                          std::size_t max_len) {
  std::size_t len =
      std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng);
  return random_subgroup_element(rng, bw.subgroup_generators(), len);
}

}  // namespace qclab
