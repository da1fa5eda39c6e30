#pragma once

// For the regular representation on l^inf(F2): the cocycle
//
//   H0(g)(f) = H(f)(f) - H(g^-1 f)(g^-1 f),
//
// the coboundary of the 0-cochain f -> H(f)(f), which lies within Delta(H)
// of H in the sup norm.

#include <map>
#include <variant>

#include "qclab/brooks.hpp"
#include "qclab/enumerate.hpp"
#include "qclab/error.hpp"

namespace qclab {

class DiagonalCoboundary {
 public:
  explicit DiagonalCoboundary(QuasiCocycleSpec spec) : spec_(std::move(spec)) {
    const auto* r = std::get_if<RegularRep>(&spec_.rep);
    require(r != nullptr && r->norm.infinite,
            "the diagonal coboundary needs the regular representation on l^inf");
  }

  /// H(f)(f), memoized.
  const Rational& diagonal(const Word& f) const {
    auto it = cache_.find(f);
    if (it == cache_.end()) it = cache_.emplace(f, evaluate_coordinate(spec_, f, f)).first;
    return it->second;
  }

  /// H0(g)(f).
  Rational coordinate(const Word& g, const Word& f) const {
    return diagonal(f) - diagonal(multiply(invert(g), f));
  }

  /// H0(g) restricted to ball(radius).
  RegularVector restricted(const Word& g, std::size_t radius) const {
    require(radius <= 10, "H0 evaluation ball radius must be <= 10");
    RegularVector out;
    for_each_in_sphere_range(radius, [&](const Word& f) { out.add(f, coordinate(g, f)); });
    return out;
  }

  const QuasiCocycleSpec& spec() const noexcept { return spec_; }

 private:
  template <class Fn>
  static void for_each_in_sphere_range(std::size_t radius, Fn&& fn) {
    for (std::size_t n = 0; n <= radius; ++n) for_each_in_sphere(n, fn);
  }

  QuasiCocycleSpec spec_;
  mutable std::map<Word, Rational> cache_;
};

/// H0(g) on ball(radius).
inline RegularVector diagonal_cocycle_h0(const QuasiCocycleSpec& spec, const Word& g,
                                         std::size_t radius) {
  return DiagonalCoboundary(spec).restricted(g, radius);
}

}  // namespace qclab
