#pragma once

// Coefficient backends: the trivial representation on R, the left regular
// representation on l^p(F2) with exact rational entries, and unitary
// matrix representations on C^d.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "qclab/error.hpp"
#include "qclab/group_vector.hpp"
#include "qclab/rational.hpp"
#include "qclab/word.hpp"

namespace qclab {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RegularVector = GroupVector<Rational>;

/// Exponent p in [1, inf].
struct NormSpec {
  bool infinite = false;
  Rational p = 2;

  static NormSpec lp(Rational p) {
    require(p >= 1, "l^p exponent must satisfy p >= 1");
    return {false, std::move(p)};
  }
  static NormSpec linf() { return {true, 1}; }

  /// p as an unsigned integer, if it is one.
  std::optional<unsigned> integer_p() const {
    if (infinite || boost::multiprecision::denominator(p) != 1) return std::nullopt;
    return static_cast<unsigned>(boost::multiprecision::numerator(p));
  }
  double p_double() const {
    return infinite ? std::numeric_limits<double>::infinity() : to_double(p);
  }
  bool uniformly_convex() const { return !infinite && p > 1; }
  std::string describe() const { return infinite ? "inf" : to_string(p); }

  friend bool operator==(const NormSpec&, const NormSpec&) = default;
};

struct TrivialRep {};

struct RegularRep {
  NormSpec norm;
};

/// rho(a) = U_a, rho(b) = U_b, both unitary d x d.
class MatrixRep {
 public:
  static constexpr double kUnitarityTolerance = 1e-10;

  MatrixRep(CMatrix ua, CMatrix ub) : ua_(std::move(ua)), ub_(std::move(ub)) {
    require(ua_.rows() >= 1 && ua_.rows() == ua_.cols() &&
                ub_.rows() == ub_.cols() && ua_.rows() == ub_.rows(),
            "matrix representation needs two square matrices of equal size");
    require(unitarity_residual(ua_) <= kUnitarityTolerance &&
                unitarity_residual(ub_) <= kUnitarityTolerance,
            "generator matrices must be unitary to 1e-10");
    ua_inv_ = ua_.adjoint();
    ub_inv_ = ub_.adjoint();
  }

  static double unitarity_residual(const CMatrix& u) {
    CMatrix r = u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols());
    return r.cwiseAbs().maxCoeff();
  }

  Eigen::Index dim() const noexcept { return ua_.rows(); }

  const CMatrix& generator(Letter l) const noexcept {
    switch (l) {
      case Letter::a: return ua_;
      case Letter::a_inv: return ua_inv_;
      case Letter::b: return ub_;
      case Letter::b_inv: return ub_inv_;
    }
    return ua_;
  }

  /// rho(g) as a matrix.
  CMatrix matrix(const Word& g) const {
    CMatrix m = CMatrix::Identity(dim(), dim());
    for (std::size_t i = 0; i < g.size(); ++i) m = m * generator(g[i]);
    return m;
  }

  /// rho(g) v without forming rho(g).
  CVector apply(const Word& g, CVector v) const {
    for (std::size_t i = g.size(); i-- > 0;) v = generator(g[i]) * v;
    return v;
  }

  const CMatrix& ua() const noexcept { return ua_; }
  const CMatrix& ub() const noexcept { return ub_; }

  /// Eigen-angle metadata (t, s) for generated U(2) samples, per generator.
  std::optional<std::pair<std::pair<double, double>, std::pair<double, double>>>
      angles;

 private:
  CMatrix ua_, ub_, ua_inv_, ub_inv_;
};

using Representation = std::variant<TrivialRep, RegularRep, MatrixRep>;

/// Trivial: a real number; Regular: finitely supported l^p vector;
/// Matrix: a vector in C^d.
using Vector = std::variant<Rational, RegularVector, CVector>;

inline std::string rep_name(const Representation& rep) {
  return std::visit(
      [](const auto& r) -> std::string {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, TrivialRep>) return "trivial";
        else if constexpr (std::is_same_v<R, RegularRep>) return "regular:" + r.norm.describe();
        else return "matrix:" + std::to_string(r.dim());
      },
      rep);
}

inline bool is_exact(const Representation& rep) {
  return !std::holds_alternative<MatrixRep>(rep);
}

inline void check_vector(const Representation& rep, const Vector& v) {
  const bool ok = std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, TrivialRep>) return std::holds_alternative<Rational>(v);
        else if constexpr (std::is_same_v<R, RegularRep>)
          return std::holds_alternative<RegularVector>(v);
        else
          return std::holds_alternative<CVector>(v) && std::get<CVector>(v).size() == r.dim();
      },
      rep);
  require(ok, "vector does not belong to the space of " + rep_name(rep) +
                  " (dimension or type mismatch)");
}

inline Vector zero_vector(const Representation& rep) {
  return std::visit(
      [](const auto& r) -> Vector {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, TrivialRep>) return Rational(0);
        else if constexpr (std::is_same_v<R, RegularRep>) return RegularVector{};
        else return CVector(CVector::Zero(r.dim()));
      },
      rep);
}

/// rho(g) v.
inline Vector act(const Representation& rep, const Word& g, const Vector& v) {
  check_vector(rep, v);
  return std::visit(
      [&](const auto& r) -> Vector {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, TrivialRep>) return v;
        else if constexpr (std::is_same_v<R, RegularRep>)
          return std::get<RegularVector>(v).translated(g);
        else return r.apply(g, std::get<CVector>(v));
      },
      rep);
}

// ---- arithmetic; alternatives never mix ----

namespace detail {
template <class Op>
Vector combine(const Vector& x, const Vector& y, Op op) {
  require(x.index() == y.index(), "cannot combine vectors of different backends");
  return std::visit(
      [&](const auto& xv) -> Vector {
        using V = std::decay_t<decltype(xv)>;
        const V& yv = std::get<V>(y);
        if constexpr (std::is_same_v<V, CVector>) {
          require(xv.size() == yv.size(), "dimension mismatch");
          return CVector(op(xv, yv));
        } else {
          return V(op(xv, yv));
        }
      },
      x);
}
}  // namespace detail

inline Vector add(const Vector& x, const Vector& y) {
  return detail::combine(x, y, [](const auto& a, const auto& b) { return a + b; });
}
inline Vector subtract(const Vector& x, const Vector& y) {
  return detail::combine(x, y, [](const auto& a, const auto& b) { return a - b; });
}
inline Vector scale(const Vector& x, const Rational& c) {
  return std::visit(
      [&](const auto& xv) -> Vector {
        using V = std::decay_t<decltype(xv)>;
        if constexpr (std::is_same_v<V, CVector>) return CVector(xv * to_double(c));
        else if constexpr (std::is_same_v<V, Rational>) return Rational(xv * c);
        else return xv * c;
      },
      x);
}
inline Vector negate(const Vector& x) { return scale(x, Rational(-1)); }

/// Exact equality for exact backends; entrywise to `tol` for matrices.
inline bool vectors_equal(const Vector& x, const Vector& y, double tol = 0.0) {
  if (x.index() != y.index()) return false;
  if (const auto* cx = std::get_if<CVector>(&x)) {
    const auto& cy = std::get<CVector>(y);
    return cx->size() == cy.size() && (cx->size() == 0 || (*cx - cy).cwiseAbs().maxCoeff() <= tol);
  }
  return x == y;
}

inline bool is_zero(const Vector& x) {
  return std::visit(
      [](const auto& xv) {
        using V = std::decay_t<decltype(xv)>;
        if constexpr (std::is_same_v<V, CVector>) return xv.isZero(0.0);
        else if constexpr (std::is_same_v<V, Rational>) return xv == 0;
        else return xv.is_zero();
      },
      x);
}

// ---- norms ----

/// A norm value. Exact values are stored as power^(1/root) with `power`
/// rational, so comparisons between exact values avoid radicals.
class NormValue {
 public:
  NormValue() = default;

  static NormValue exact(Rational power, unsigned root) {
    NormValue n;
    n.exact_ = true;
    n.root_ = root;
    n.power_ = std::move(power);
    n.value_ = root == 1 ? to_double(n.power_)
                         : std::pow(to_double(n.power_), 1.0 / root);
    return n;
  }
  static NormValue approx(double value) {
    NormValue n;
    n.exact_ = false;
    n.value_ = value;
    return n;
  }

  bool is_exact() const noexcept { return exact_; }
  double value() const noexcept { return value_; }
  /// value^root; meaningful only for exact values.
  const Rational& power() const noexcept { return power_; }
  unsigned root() const noexcept { return root_; }

  /// c * this, for c >= 0.
  NormValue scaled(const Rational& c) const {
    require(c >= 0, "norm scale must be nonnegative");
    if (!exact_) return approx(value_ * to_double(c));
    return exact(power_ * rational_pow(c, root_), root_);
  }

  friend std::partial_ordering operator<=>(const NormValue& x, const NormValue& y) {
    if (x.exact_ && y.exact_ && x.root_ == y.root_) {
      if (x.power_ < y.power_) return std::partial_ordering::less;
      if (x.power_ > y.power_) return std::partial_ordering::greater;
      return std::partial_ordering::equivalent;
    }
    return x.value_ <=> y.value_;
  }
  friend bool operator==(const NormValue& x, const NormValue& y) {
    return (x <=> y) == std::partial_ordering::equivalent;
  }

  /// "power^(1/root)" in exact form, e.g. "3^(1/2)"; a plain rational when
  /// the root is rational, e.g. "2" for 4^(1/2).
  std::string exact_string() const {
    if (!exact_) return "";
    if (auto r = exact_root(power_, root_)) return to_string(*r);
    return to_string(power_) + "^(1/" + std::to_string(root_) + ")";
  }

 private:
  bool exact_ = true;
  unsigned root_ = 1;
  Rational power_;
  double value_ = 0.0;
};

/// sum |v(x)|^p, exact, for integer p.
inline Rational lp_power_sum(const RegularVector& v, unsigned p) {
  Rational total = 0;
  for (const auto& [h, s] : v) total += rational_pow(rational_abs(s), p);
  return total;
}

inline Rational max_abs(const RegularVector& v) {
  Rational m = 0;
  for (const auto& [h, s] : v) m = std::max(m, rational_abs(s));
  return m;
}

/// ||v||_p^p exactly (Regular with integer p); |x| for Trivial.
inline Rational norm_pow(const Representation& rep, const Vector& v) {
  check_vector(rep, v);
  if (std::holds_alternative<TrivialRep>(rep)) return rational_abs(std::get<Rational>(v));
  if (const auto* r = std::get_if<RegularRep>(&rep)) {
    auto p = r->norm.integer_p();
    require(p.has_value(), "exact norm power requires an integer exponent p");
    return lp_power_sum(std::get<RegularVector>(v), *p);
  }
  throw PreconditionError("exact norms are unavailable for matrix backends");
}

inline NormValue norm(const Representation& rep, const Vector& v) {
  check_vector(rep, v);
  return std::visit(
      [&](const auto& r) -> NormValue {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, TrivialRep>) {
          return NormValue::exact(rational_abs(std::get<Rational>(v)), 1);
        } else if constexpr (std::is_same_v<R, RegularRep>) {
          const auto& x = std::get<RegularVector>(v);
          if (r.norm.infinite) return NormValue::exact(max_abs(x), 1);
          if (auto p = r.norm.integer_p()) return NormValue::exact(lp_power_sum(x, *p), *p);
          const double p = r.norm.p_double();
          double total = 0;
          for (const auto& [h, s] : x) total += std::pow(std::abs(to_double(s)), p);
          return NormValue::approx(std::pow(total, 1.0 / p));
        } else {
          return NormValue::approx(std::get<CVector>(v).norm());
        }
      },
      rep);
}

}  // namespace qclab
