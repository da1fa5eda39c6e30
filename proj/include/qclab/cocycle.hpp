#pragma once

// Cocycles F(gg') = F(g) + g.F(g') on F2, coboundaries v - g.v,
// antisymmetrization, averaging over a finite group of operators, and the
// restriction / extension maps for a product with a finite group.

#include <functional>
#include <utility>
#include <vector>

#include "qclab/brooks.hpp"
#include "qclab/error.hpp"
#include "qclab/matrix_tools.hpp"
#include "qclab/representation.hpp"

namespace qclab {

/// Any map F2 -> E, e.g. a quasi-cocycle.
using CochainFn = std::function<Vector(const Word&)>;

/// A cocycle on the free group is determined by its values on a and b.
struct CocycleSpec {
  Vector f_a;
  Vector f_b;
  Representation rep;

  CocycleSpec(Vector a_value, Vector b_value, Representation representation)
      : f_a(std::move(a_value)), f_b(std::move(b_value)), rep(std::move(representation)) {
    check_vector(rep, f_a);
    check_vector(rep, f_b);
  }

  /// The coboundary g -> v - g.v.
  static CocycleSpec coboundary(const Representation& rep, const Vector& v) {
    return CocycleSpec(subtract(v, act(rep, parse_word("a"), v)),
                       subtract(v, act(rep, parse_word("b"), v)), rep);
  }
};

/// F(g) for the unique cocycle with F(a) = f_a, F(b) = f_b, built letter by
/// letter from F(xl) = F(x) + x.F(l) and F(l^-1) = -l^-1.F(l).
inline Vector cocycle_extend(const CocycleSpec& c, const Word& g) {
  auto letter_value = [&](Letter l) -> Vector {
    switch (l) {
      case Letter::a: return c.f_a;
      case Letter::b: return c.f_b;
      case Letter::a_inv: return negate(act(c.rep, Word::generator(l), c.f_a));
      case Letter::b_inv: return negate(act(c.rep, Word::generator(l), c.f_b));
    }
    return c.f_a;
  };
  Vector total = zero_vector(c.rep);
  if (const auto* m = std::get_if<MatrixRep>(&c.rep)) {
    CMatrix prefix = CMatrix::Identity(m->dim(), m->dim());
    CVector acc = CVector::Zero(m->dim());
    for (std::size_t i = 0; i < g.size(); ++i) {
      acc += prefix * std::get<CVector>(letter_value(g[i]));
      prefix = prefix * m->generator(g[i]);
    }
    return acc;
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    total = add(total, act(c.rep, g.prefix(i), letter_value(g[i])));
  return total;
}

inline CochainFn as_function(const QuasiCocycleSpec& spec) {
  return [spec](const Word& g) { return evaluate(spec, g); };
}

inline CochainFn as_function(const CocycleSpec& spec) {
  return [spec](const Word& g) { return cocycle_extend(spec, g); };
}

/// H'(g) = (H(g) - g.H(g^-1)) / 2. Satisfies H'(g^-1) = -g^-1.H'(g); since
/// H(g) + g.H(g^-1) is a defect term up to H(1), H' stays within Delta(H)
/// of H.
inline CochainFn antisymmetrize(CochainFn h, Representation rep) {
  return [h = std::move(h), rep = std::move(rep)](const Word& g) {
    return scale(subtract(h(g), act(rep, g, h(invert(g)))), Rational(1, 2));
  };
}

/// Sup over `words` of ||F(g) - G(g)||.
inline NormValue sup_distance(const Representation& rep, const CochainFn& f, const CochainFn& g,
                              const std::vector<Word>& words) {
  NormValue best = norm(rep, zero_vector(rep));
  for (const Word& x : words) {
    NormValue d = norm(rep, subtract(f(x), g(x)));
    if (d > best) best = d;
  }
  return best;
}

/// pi(v) = (1/|K|) sum_k k v for a finite group K of d x d operators,
/// checked for closure under products.
inline CVector k_average(const std::vector<CMatrix>& group, const CVector& v, double tol = 1e-9) {
  require(!group.empty(), "K must be nonempty");
  for (const CMatrix& k : group)
    require(k.rows() == v.size() && k.cols() == v.size(), "K element has wrong dimension");
  require(is_closed_under_products(group, tol), "K is not closed under the group operation");
  CVector out = CVector::Zero(v.size());
  for (const CMatrix& k : group) out += k * v;
  return out / static_cast<double>(group.size());
}

/// max over k, k' in K of ||k v - k' v||.
inline double k_orbit_diameter(const std::vector<CMatrix>& group, const CVector& v) {
  double d = 0;
  for (const CMatrix& k : group)
    for (const CMatrix& k2 : group) d = std::max(d, (k * v - k2 * v).norm());
  return d;
}

// ---- F2 x K with K finite and acting trivially ----

/// An element (g, k) of F2 x K, with k an index into K.
struct ProductElement {
  Word g;
  std::size_t k = 0;
};

using ProductCochainFn = std::function<Vector(const ProductElement&)>;

/// H~(g) = H(g, id), with id the element at index `identity_index`.
inline CochainFn restrict_to_free_factor(ProductCochainFn h, std::size_t identity_index = 0) {
  return [h = std::move(h), identity_index](const Word& g) { return h({g, identity_index}); };
}

/// Extension constant along the K factor.
inline ProductCochainFn extend_constant(CochainFn h) {
  return [h = std::move(h)](const ProductElement& x) { return h(x.g); };
}

}  // namespace qclab
