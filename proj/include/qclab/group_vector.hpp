#pragma once

// Finitely supported functions F2 -> Scalar, i.e. vectors in l^p(F2) with
// finite support, and formal integer chains sum c_h [h].

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>

#include "qclab/word.hpp"

namespace qclab {

/// Sparse map Word -> Scalar with no stored zeros.
template <class Scalar>
class GroupVector {
 public:
  using Map = std::map<Word, Scalar>;

  GroupVector() = default;
  GroupVector(std::initializer_list<std::pair<const Word, Scalar>> init) {
    for (const auto& [w, s] : init) add(w, s);
  }

  static GroupVector delta(const Word& h, Scalar value = Scalar(1)) {
    GroupVector v;
    v.add(h, std::move(value));
    return v;
  }

  void add(const Word& h, const Scalar& value) {
    if (value == Scalar(0)) return;
    auto [it, inserted] = entries_.try_emplace(h, value);
    if (!inserted) {
      it->second += value;
      if (it->second == Scalar(0)) entries_.erase(it);
    }
  }

  Scalar operator[](const Word& h) const {
    auto it = entries_.find(h);
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  std::size_t support_size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const Map& entries() const noexcept { return entries_; }

  GroupVector& operator+=(const GroupVector& other) {
    for (const auto& [h, s] : other.entries_) add(h, s);
    return *this;
  }
  GroupVector& operator-=(const GroupVector& other) {
    for (const auto& [h, s] : other.entries_) add(h, -s);
    return *this;
  }
  GroupVector& operator*=(const Scalar& c) {
    if (c == Scalar(0)) {
      entries_.clear();
      return *this;
    }
    for (auto& [h, s] : entries_) s *= c;
    return *this;
  }
  friend GroupVector operator+(GroupVector x, const GroupVector& y) { return x += y; }
  friend GroupVector operator-(GroupVector x, const GroupVector& y) { return x -= y; }
  friend GroupVector operator-(GroupVector x) { return x *= Scalar(-1); }
  friend GroupVector operator*(GroupVector x, const Scalar& c) { return x *= c; }

  /// Left regular action: (g.v)(x) = v(g^-1 x), so g.delta_h = delta_{gh}.
  GroupVector translated(const Word& g) const {
    if (g.empty()) return *this;
    GroupVector out;
    for (const auto& [h, s] : entries_) out.add(multiply(g, h), s);
    return out;
  }

  friend bool operator==(const GroupVector&, const GroupVector&) = default;

 private:
  Map entries_;
};

/// Formal integer combination of group elements; H(g) is one of these
/// applied to e.
using Chain = GroupVector<std::int64_t>;

}  // namespace qclab
