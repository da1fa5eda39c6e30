#pragma once

// Enumeration and seeded sampling of elements of F2.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "qclab/error.hpp"
#include "qclab/word.hpp"

namespace qclab {

/// Deterministic per-index seed derivation (splitmix64 finalizer), so trials
/// can run in any order or thread and still see the same stream.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t index = 0) {
  return Rng(substream_seed(seed, index));
}

/// |S(n)| = 4 * 3^(n-1) for n >= 1.
inline std::size_t sphere_size(std::size_t n) {
  if (n == 0) return 1;
  std::size_t s = 4;
  for (std::size_t i = 1; i < n; ++i) s *= 3;
  return s;
}

inline std::size_t ball_size(std::size_t r) {
  std::size_t total = 0;
  for (std::size_t n = 0; n <= r; ++n) total += sphere_size(n);
  return total;
}

/// Visits the reduced words of length exactly n in lexicographic order.
template <class Fn>
void for_each_in_sphere(std::size_t n, Fn&& fn) {
  std::vector<Letter> stack;
  stack.reserve(n);
  std::vector<std::uint8_t> choice(n + 1, 0);
  if (n == 0) {
    fn(Word{});
    return;
  }
  std::size_t depth = 0;
  choice[0] = 0;
  while (true) {
    if (choice[depth] == 4) {
      if (depth == 0) return;
      --depth;
      stack.pop_back();
      ++choice[depth];
      continue;
    }
    Letter l = kLetters[choice[depth]];
    if (depth > 0 && stack.back() == inverse(l)) {
      ++choice[depth];
      continue;
    }
    stack.push_back(l);
    if (depth + 1 == n) {
      fn(Word::reduce(stack));
      stack.pop_back();
      ++choice[depth];
    } else {
      ++depth;
      choice[depth] = 0;
    }
  }
}

inline std::vector<Word> sphere(std::size_t n) {
  std::vector<Word> out;
  out.reserve(sphere_size(n));
  for_each_in_sphere(n, [&](const Word& w) { out.push_back(w); });
  return out;
}

/// Spheres 0..r concatenated; the result is sorted in shortlex order.
inline std::vector<Word> ball(std::size_t r) {
  std::vector<Word> out;
  out.reserve(ball_size(r));
  for (std::size_t n = 0; n <= r; ++n)
    for_each_in_sphere(n, [&](const Word& w) { out.push_back(w); });
  return out;
}

/// Uniformly random reduced word of the given length.
inline Word random_word(Rng& rng, std::size_t length) {
  Word w;
  if (length == 0) return w;
  std::uniform_int_distribution<int> first(0, 3), next(0, 2);
  Letter prev = kLetters[first(rng)];
  w.push_back(prev);
  for (std::size_t i = 1; i < length; ++i) {
    // the three letters other than inverse(prev), in fixed order
    int k = next(rng);
    Letter forbidden = inverse(prev);
    int idx = 0;
    for (Letter l : kLetters) {
      if (l == forbidden) continue;
      if (idx++ == k) {
        prev = l;
        break;
      }
    }
    w.push_back(prev);
  }
  return w;
}

/// `count` uniformly random reduced words of length `length`; word i is drawn
/// from substream (seed, i).
inline std::vector<Word> random_words(std::size_t length, std::size_t count,
                                      std::uint64_t seed) {
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = make_rng(seed, i);
    out.push_back(random_word(rng, length));
  }
  return out;
}

inline void require_generators(const std::vector<Word>& gens) {
  require(!gens.empty(), "subgroup generator list must be nonempty");
  for (const Word& g : gens)
    require(!g.empty(), "subgroup generators must not be the identity");
}

/// F2-reduction of a random freely reduced word of `length` symbols over the
/// alphabet gens ∪ gens^-1.
inline Word random_subgroup_element(Rng& rng, const std::vector<Word>& gens,
                                    std::size_t length) {
  require_generators(gens);
  const std::size_t k = gens.size();
  std::vector<Word> symbols;
  symbols.reserve(2 * k);
  for (const Word& g : gens) {
    symbols.push_back(g);
    symbols.push_back(invert(g));
  }
  Word out;
  std::size_t prev = 2 * k;
  for (std::size_t i = 0; i < length; ++i) {
    std::size_t s;
    if (prev == 2 * k) {
      s = std::uniform_int_distribution<std::size_t>(0, 2 * k - 1)(rng);
    } else {
      s = std::uniform_int_distribution<std::size_t>(0, 2 * k - 2)(rng);
      if (s >= (prev ^ 1U)) ++s;
    }
    out = multiply(out, symbols[s]);
    prev = s;
  }
  return out;
}

inline std::vector<Word> subgroup_random(const std::vector<Word>& gens,
                                         std::size_t length, std::size_t count,
                                         std::uint64_t seed) {
  require_generators(gens);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = make_rng(seed, i);
    out.push_back(random_subgroup_element(rng, gens, length));
  }
  return out;
}

/// All elements of <gens> with F2-length <= max_length, sorted shortlex.
///
/// Breadth-first search over generator products, discarding intermediate
/// elements longer than max_length plus twice the longest generator. This
/// is complete when no product of generators collapses by more than that
/// slack, which holds for bases like {a^k, b} and {a^m, b^m}.
inline std::vector<Word> subgroup_ball(const std::vector<Word>& gens,
                                       std::size_t max_length) {
  require_generators(gens);
  std::size_t slack = 0;
  std::vector<Word> symbols;
  for (const Word& g : gens) {
    slack = std::max(slack, 2 * g.size());
    symbols.push_back(g);
    symbols.push_back(invert(g));
  }
  std::set<Word> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& x : frontier) {
      for (const Word& s : symbols) {
        Word y = multiply(x, s);
        if (y.size() > max_length + slack) continue;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out;
  for (const Word& x : seen)
    if (x.size() <= max_length) out.push_back(x);
  return out;
}

}  // namespace qclab
