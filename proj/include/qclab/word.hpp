#pragma once

// Reduced words in the free group F2 = <a, b>.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qclab/error.hpp"

namespace qclab {

/// Generators and their inverses. The numeric order a < a^-1 < b < b^-1 is
/// the lexicographic order used for enumeration and tie-breaking.
enum class Letter : std::uint8_t { a = 0, a_inv = 1, b = 2, b_inv = 3 };

inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 20;

constexpr Letter inverse(Letter l) noexcept {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1U);
}

constexpr bool is_a_letter(Letter l) noexcept {
  return l == Letter::a || l == Letter::a_inv;
}

constexpr char letter_char(Letter l) noexcept {
  constexpr char chars[] = {'a', 'A', 'b', 'B'};
  return chars[static_cast<std::uint8_t>(l)];
}

inline constexpr Letter kLetters[] = {Letter::a, Letter::a_inv, Letter::b,
                                      Letter::b_inv};

/// A freely reduced word. The empty word is the identity.
///
/// Letters are packed one per byte into a std::string, so short words stay
/// in the small-string buffer and comparisons are plain memcmp.
class Word {
 public:
  Word() = default;

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> letters) {
    Word w;
    for (Letter l : letters) w.push_back(l);
    return w;
  }

  static Word generator(Letter l) {
    Word w;
    w.letters_.push_back(static_cast<char>(l));
    return w;
  }

  /// a^n or b^n; negative n gives the inverse power.
  static Word power(Letter base, long long n) {
    Letter l = n < 0 ? inverse(base) : base;
    unsigned long long count =
        n < 0 ? 0ULL - static_cast<unsigned long long>(n)
              : static_cast<unsigned long long>(n);
    require(count <= kMaxWordLength, "word length exceeds 2^20 letters");
    Word w;
    w.letters_.assign(static_cast<std::size_t>(count), static_cast<char>(l));
    return w;
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  Letter operator[](std::size_t i) const noexcept {
    return static_cast<Letter>(letters_[i]);
  }
  Letter front() const noexcept { return (*this)[0]; }
  Letter back() const noexcept { return (*this)[size() - 1]; }

  /// Appends one letter, cancelling against the last letter if inverse.
  void push_back(Letter l) {
    if (!letters_.empty() && back() == inverse(l)) {
      letters_.pop_back();
      return;
    }
    require(letters_.size() < kMaxWordLength,
            "word length exceeds 2^20 letters");
    letters_.push_back(static_cast<char>(l));
  }

  /// First n letters (a subword of a reduced word is reduced).
  Word prefix(std::size_t n) const { return Word(letters_.substr(0, n)); }
  Word suffix_from(std::size_t start) const {
    return Word(letters_.substr(start));
  }
  Word subword(std::size_t start, std::size_t length) const {
    return Word(letters_.substr(start, length));
  }

  bool starts_with(const Word& other) const noexcept {
    return other.size() <= size() &&
           letters_.compare(0, other.size(), other.letters_) == 0;
  }

  /// Raw packed letters; used for substring scanning.
  std::string_view packed() const noexcept { return letters_; }

  std::vector<Letter> letters() const {
    std::vector<Letter> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = (*this)[i];
    return out;
  }

  /// Shortlex order: shorter words first, then lexicographic in a<A<b<B.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() <=> y.size();
    int c = x.letters_.compare(y.letters_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }
  friend bool operator==(const Word&, const Word&) = default;

  struct Hash {
    std::size_t operator()(const Word& w) const noexcept {
      return std::hash<std::string>{}(w.letters_);
    }
  };

 private:
  explicit Word(std::string packed) : letters_(std::move(packed)) {}

  friend Word multiply(const Word& u, const Word& v);
  friend Word invert(const Word& u);

  std::string letters_;
};

/// Free reduction of uv.
inline Word multiply(const Word& u, const Word& v) {
  std::size_t cancel = 0;
  const std::size_t limit = std::min(u.size(), v.size());
  while (cancel < limit && u[u.size() - 1 - cancel] == inverse(v[cancel]))
    ++cancel;
  const std::size_t length = u.size() + v.size() - 2 * cancel;
  require(length <= kMaxWordLength, "word length exceeds 2^20 letters");
  std::string out;
  out.reserve(length);
  out.append(u.letters_, 0, u.size() - cancel);
  out.append(v.letters_, cancel, std::string::npos);
  return Word(std::move(out));
}

inline Word multiply(std::initializer_list<Word> factors) {
  Word out;
  for (const Word& f : factors) out = multiply(out, f);
  return out;
}

inline Word invert(const Word& u) {
  std::string out(u.letters_.rbegin(), u.letters_.rend());
  for (char& c : out) c = static_cast<char>(inverse(static_cast<Letter>(c)));
  return Word(std::move(out));
}

/// Non-negative integer power.
inline Word power(const Word& u, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < n; ++i) out = multiply(out, u);
  return out;
}

inline bool is_cyclically_reduced(const Word& u) noexcept {
  return u.size() <= 1 || u.front() != inverse(u.back());
}

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// u = conjugator * core * conjugator^-1 with core cyclically reduced.
inline CyclicReduction cyclic_reduce(const Word& u) {
  std::size_t k = 0;
  while (2 * k + 1 < u.size() && u[k] == inverse(u[u.size() - 1 - k])) ++k;
  return {u.subword(k, u.size() - 2 * k), u.prefix(k)};
}

/// Longest common prefix; the center of the tripod spanned by 1, u, v.
inline Word common_prefix(const Word& u, const Word& v) {
  std::size_t n = 0;
  const std::size_t limit = std::min(u.size(), v.size());
  while (n < limit && u[n] == v[n]) ++n;
  return u.prefix(n);
}

/// Word metric distance d(u, v) = |u^-1 v|.
inline std::size_t distance(const Word& u, const Word& v) {
  return u.size() + v.size() - 2 * common_prefix(u, v).size();
}

/// Canonical text form: runs written as a, a^5, A, A^3; identity is "1".
inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out.push_back(letter_char(w[i]));
    if (j - i > 1) {
      out.push_back('^');
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << to_string(w);
}

/// Parses `a|b|A|B` tokens with optional `^n` exponents (n a nonzero integer,
/// negative inverts). Whitespace is ignored; "1" and "" denote the identity.
inline Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("word syntax error at offset " + std::to_string(i) +
                      " in \"" + std::string(text) + "\": " + what);
  };
  skip_space();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_space();
    if (i != text.size()) throw fail("identity \"1\" must stand alone");
    return {};
  }
  while (true) {
    skip_space();
    if (i == text.size()) break;
    Letter base;
    switch (text[i]) {
      case 'a': base = Letter::a; break;
      case 'A': base = Letter::a_inv; break;
      case 'b': base = Letter::b; break;
      case 'B': base = Letter::b_inv; break;
      default: throw fail(std::string("unexpected character '") + text[i] + "'");
    }
    ++i;
    skip_space();
    long long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_space();
      bool negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw fail("expected integer exponent");
      unsigned long long magnitude = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        magnitude = magnitude * 10 + static_cast<unsigned>(text[i] - '0');
        if (magnitude > kMaxWordLength) throw fail("exponent overflow");
        ++i;
      }
      if (magnitude == 0) throw fail("exponent must be nonzero");
      exponent = negative ? -static_cast<long long>(magnitude)
                          : static_cast<long long>(magnitude);
    }
    Letter l = exponent < 0 ? inverse(base) : base;
    unsigned long long count = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                            : static_cast<unsigned long long>(exponent);
    if (letters.size() + count > 2 * kMaxWordLength) throw fail("word too long");
    letters.insert(letters.end(), static_cast<std::size_t>(count), l);
  }
  return Word::reduce(letters);
}

inline namespace literals {
inline Word operator""_w(const char* text, std::size_t n) {
  return parse_word(std::string_view(text, n));
}
}  // namespace literals

}  // namespace qclab
