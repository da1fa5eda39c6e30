#pragma once

// Oriented occurrences of a pattern word along the geodesic [1, g].

#include <cstddef>
#include <string_view>
#include <vector>

#include "qclab/error.hpp"
#include "qclab/word.hpp"

namespace qclab {

enum class Sign : int { negative = -1, positive = 1 };

/// One signed occurrence of w along [1, g].
///
/// Positive: g[start, start+|w|) spells w.  Negative: g[start-|w|, start)
/// spells w^-1.  In both cases `prefix` is the first `start` letters of g,
/// i.e. the vertex h with [h, hw] lying on the geodesic with the given
/// orientation.
struct Occurrence {
  Sign sign;
  std::size_t start;
  Word prefix;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

inline void require_pattern(const Word& w) {
  require(!w.empty(), "pattern word must not be the identity");
  require(is_cyclically_reduced(w), "pattern word must be cyclically reduced");
}

namespace detail {

inline void find_all(std::string_view text, std::string_view pattern,
                     std::vector<std::size_t>& out) {
  if (pattern.empty() || pattern.size() > text.size()) return;
  for (std::size_t pos = text.find(pattern); pos != std::string_view::npos;
       pos = text.find(pattern, pos + 1))
    out.push_back(pos);
}

}  // namespace detail

/// Calls visit(sign, start) for every occurrence, in increasing start order
/// (ties: the negative occurrence ending at `start` comes first).
template <class Visitor>
void for_each_occurrence(const Word& w, const Word& g, Visitor&& visit) {
  require_pattern(w);
  const Word w_inv = invert(w);
  std::vector<std::size_t> pos, neg;
  detail::find_all(g.packed(), w.packed(), pos);
  if (w_inv != w) detail::find_all(g.packed(), w_inv.packed(), neg);
  for (std::size_t& s : neg) s += w.size();
  std::size_t i = 0, j = 0;
  while (i < pos.size() || j < neg.size()) {
    if (j < neg.size() && (i == pos.size() || neg[j] <= pos[i])) {
      visit(Sign::negative, neg[j++]);
    } else {
      visit(Sign::positive, pos[i++]);
    }
  }
}

/// All positive and negative occurrences of w along [1, g], sorted by start.
inline std::vector<Occurrence> occurrences(const Word& w, const Word& g) {
  std::vector<Occurrence> out;
  for_each_occurrence(w, g, [&](Sign s, std::size_t start) {
    out.push_back({s, start, g.prefix(start)});
  });
  return out;
}

/// (#positive, #negative) occurrence counts.
inline std::pair<std::size_t, std::size_t> occurrence_counts(const Word& w,
                                                             const Word& g) {
  std::size_t p = 0, n = 0;
  for_each_occurrence(w, g, [&](Sign s, std::size_t) {
    (s == Sign::positive ? p : n) += 1;
  });
  return {p, n};
}

}  // namespace qclab
