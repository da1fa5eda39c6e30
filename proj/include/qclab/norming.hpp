#pragma once

// Norming functionals: norm-one linear functionals f with f(v) = ||v||.

#include <cmath>
#include <map>
#include <optional>
#include <variant>

#include "qclab/error.hpp"
#include "qclab/representation.hpp"

namespace qclab {

class NormingFunctional {
 public:
  /// Trivial: sign(v). Regular l^p (1 < p < inf): the Hölder equality case
  /// sign(v(x)) |v(x)|^{p-1} / ||v||^{p-1}. Matrix: Re<v/||v||, .>.
  NormingFunctional(const Representation& rep, const Vector& v) : rep_(rep) {
    check_vector(rep, v);
    require(!is_zero(v), "norming functional of the zero vector is undefined");
    if (std::holds_alternative<TrivialRep>(rep)) {
      sign_ = std::get<Rational>(v) > 0 ? 1 : -1;
      exact_ = true;
    } else if (const auto* r = std::get_if<RegularRep>(&rep)) {
      require(r->norm.uniformly_convex(),
              "norming functional unsupported for l^1 and l^inf (no smooth dual)");
      const auto& x = std::get<RegularVector>(v);
      p_ = r->norm.p_double();
      if (auto ip = r->norm.integer_p()) {
        integer_p_ = *ip;
        exact_ = true;
        for (const auto& [h, s] : x) {
          Rational mag = rational_pow(rational_abs(s), *ip - 1);
          numerator_.add(h, s > 0 ? mag : Rational(-mag));
        }
        scale_power_ = lp_power_sum(x, *ip);
        denominator_ = std::pow(to_double(scale_power_), (p_ - 1) / p_);
      } else {
        double total = 0;
        for (const auto& [h, s] : x) total += std::pow(std::abs(to_double(s)), p_);
        denominator_ = std::pow(total, (p_ - 1) / p_);
      }
      for (const auto& [h, s] : x) {
        double d = to_double(s);
        dual_[h] = (d > 0 ? 1.0 : -1.0) * std::pow(std::abs(d), p_ - 1) / denominator_;
      }
    } else {
      const auto& x = std::get<CVector>(v);
      unit_ = x / x.norm();
    }
  }

  /// f(u) in floating point.
  double operator()(const Vector& u) const {
    check_vector(rep_, u);
    if (std::holds_alternative<TrivialRep>(rep_))
      return to_double(Rational(sign_ * std::get<Rational>(u)));
    if (std::holds_alternative<RegularRep>(rep_)) {
      const auto& x = std::get<RegularVector>(u);
      double total = 0;
      for (const auto& [h, d] : dual_) total += d * to_double(x[h]);
      return total;
    }
    return unit_.dot(std::get<CVector>(u)).real();  // dot conjugates the left side
  }

  /// True when f(u) is computed exactly (Trivial, Regular with integer p).
  bool is_exact() const noexcept { return exact_; }

  /// Regular with integer p: f(u) = numerator(u) / S^{(p-1)/p}, S = ||v||_p^p.
  Rational numerator(const Vector& u) const {
    require(exact_, "exact numerator requires an exact backend");
    if (std::holds_alternative<TrivialRep>(rep_)) return sign_ * std::get<Rational>(u);
    const auto& x = std::get<RegularVector>(u);
    Rational total = 0;
    for (const auto& [h, c] : numerator_) total += c * x[h];
    return total;
  }

  /// Decides f(u) >= t, exactly when is_exact().
  bool at_least(const Vector& u, const Rational& t) const {
    if (!exact_) return (*this)(u) >= to_double(t);
    const Rational n = numerator(u);
    if (std::holds_alternative<TrivialRep>(rep_)) return n >= t;
    // n >= t * S^{(p-1)/p}, compared through p-th powers.
    const unsigned p = integer_p_;
    const Rational rhs = rational_pow(rational_abs(t), p) * rational_pow(scale_power_, p - 1);
    if (t <= 0) return n >= 0 || rational_pow(rational_abs(n), p) <= rhs;
    return n > 0 && rational_pow(n, p) >= rhs;
  }

  /// f(v) = ||v|| holds exactly iff numerator(v) = ||v||_p^p.
  bool norms_exactly(const Vector& v) const {
    if (!exact_) return false;
    if (std::holds_alternative<TrivialRep>(rep_)) return numerator(v) == rational_abs(std::get<Rational>(v));
    return numerator(v) == scale_power_;
  }

 private:
  Representation rep_;
  bool exact_ = false;
  Rational sign_ = 1;
  unsigned integer_p_ = 0;
  double p_ = 2;
  RegularVector numerator_;
  Rational scale_power_ = 0;
  double denominator_ = 1;
  std::map<Word, double> dual_;
  CVector unit_;
};

}  // namespace qclab
