#pragma once

// Uniform convexity: moduli of convexity, and the constants (epsilon, mu)
// for which ||v|| <= R, f norming v, ||e|| >= 1/2, f(e) >= -mu imply
// ||v + e|| >= ||v|| + epsilon.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "qclab/enumerate.hpp"
#include "qclab/error.hpp"
#include "qclab/representation.hpp"

namespace qclab {

/// Real l^p on `dim` coordinates; p may be +inf. Used for sampling and as the
/// space descriptor of a representation.
struct LpSpace {
  double p = 2.0;
  std::size_t dim = 8;

  bool is_hilbert() const noexcept { return p == 2.0; }
  bool is_infinite() const noexcept { return std::isinf(p); }

  double norm(const std::vector<double>& x) const {
    if (is_infinite()) {
      double m = 0;
      for (double v : x) m = std::max(m, std::abs(v));
      return m;
    }
    if (is_hilbert()) {
      double s = 0;
      for (double v : x) s += v * v;
      return std::sqrt(s);
    }
    double s = 0;
    for (double v : x) s += std::pow(std::abs(v), p);
    return std::pow(s, 1.0 / p);
  }

  /// Hölder dual of x: the norm-one functional with f(x) = ||x||.
  std::vector<double> norming(const std::vector<double>& x) const {
    require(p > 1 && !is_infinite(), "norming functional needs 1 < p < inf");
    const double n = norm(x);
    require(n > 0, "norming functional of the zero vector is undefined");
    std::vector<double> f(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      f[i] = (x[i] > 0 ? 1.0 : (x[i] < 0 ? -1.0 : 0.0)) *
             std::pow(std::abs(x[i]) / n, p - 1);
    return f;
  }

  std::vector<double> random_unit(Rng& rng) const {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> x(dim);
    double n = 0;
    while (n == 0) {
      for (double& v : x) v = gauss(rng);
      n = norm(x);
    }
    for (double& v : x) v /= n;
    return x;
  }
};

inline double dot(const std::vector<double>& f, const std::vector<double>& x) {
  double s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * x[i];
  return s;
}

/// The space a representation acts on, as a sampling descriptor. Complex
/// C^d is treated as real Hilbert space of dimension 2d.
inline LpSpace space_of(const Representation& rep, std::size_t regular_dim = 8) {
  if (std::holds_alternative<TrivialRep>(rep)) return {2.0, 1};
  if (const auto* r = std::get_if<RegularRep>(&rep))
    return {r->norm.p_double(), regular_dim};
  return {2.0, static_cast<std::size_t>(2 * std::get<MatrixRep>(rep).dim())};
}

/// Lower bound for the modulus of convexity delta(eps) of l^p. Hilbert space:
/// 1 - sqrt(1 - eps^2/4) (exact). p >= 2: Clarkson's bound
/// 1 - (1 - (eps/2)^p)^{1/p}. 1 < p < 2: (p - 1) eps^2 / 8. Returns 0 for
/// p in {1, inf}.
inline double analytic_modulus(const LpSpace& space, double eps) {
  eps = std::clamp(eps, 0.0, 2.0);
  const double p = space.p;
  if (p <= 1.0 || space.is_infinite()) return 0.0;
  if (space.is_hilbert()) {
    const double q = eps * eps / 4;
    return q / (1 + std::sqrt(1 - q));  // = 1 - sqrt(1 - q) without cancellation
  }
  if (p > 2.0) return 1.0 - std::pow(1.0 - std::pow(eps / 2, p), 1.0 / p);
  return (p - 1) * eps * eps / 8;
}

/// Empirical modulus: minimum of 1 - ||(x+y)/2|| over seeded unit pairs with
/// ||x - y|| >= eps, reduced by a 10% safety margin. Pairs come from three
/// samplers: boundary pairs at distance ~eps along a segment, same-sign
/// pairs (these expose the flat faces of l^1 and l^inf), and free pairs.
inline double sampled_modulus(const LpSpace& space, double eps, std::size_t trials,
                              std::uint64_t seed) {
  require(trials > 0, "sampled modulus needs at least one trial");
  eps = std::clamp(eps, 0.0, 2.0);
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> diff(x.size()), mid(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      diff[i] = x[i] - y[i];
      mid[i] = (x[i] + y[i]) / 2;
    }
    if (space.norm(diff) >= eps) best = std::min(best, 1.0 - space.norm(mid));
  };
  auto normalized = [&](std::vector<double> z) {
    double n = space.norm(z);
    for (double& v : z) v /= n;
    return z;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = make_rng(seed, t);
    std::vector<double> x = space.random_unit(rng);
    switch (t % 3) {
      case 0: {
        std::vector<double> y0 = space.random_unit(rng);
        std::vector<double> d(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y0[i];
        if (space.norm(d) < eps) break;
        auto along = [&](double s) {
          std::vector<double> z(x.size());
          for (std::size_t i = 0; i < x.size(); ++i) z[i] = (1 - s) * x[i] + s * y0[i];
          return z;
        };
        double lo = 0, hi = 1;
        for (int it = 0; it < 60; ++it) {
          double midpoint = (lo + hi) / 2;
          std::vector<double> z = along(midpoint);
          if (space.norm(z) == 0) {
            hi = midpoint;
            continue;
          }
          std::vector<double> y = normalized(z);
          for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
          (space.norm(d) >= eps ? hi : lo) = midpoint;
        }
        std::vector<double> z = along(hi);
        if (space.norm(z) > 0) consider(x, normalized(z));
        break;
      }
      case 1: {
        for (double& v : x) v = std::abs(v);
        std::vector<double> y = space.random_unit(rng);
        for (double& v : y) v = std::abs(v);
        consider(x, y);
        break;
      }
      default:
        consider(x, space.random_unit(rng));
    }
  }
  if (!std::isfinite(best)) return 0.0;
  return std::max(0.0, 0.9 * best);
}

struct ModulusMode {
  enum class Kind { analytic, sampled } kind = Kind::analytic;
  std::size_t trials = 20000;
  std::uint64_t seed = 1;

  static ModulusMode analytic() { return {}; }
  static ModulusMode sampled(std::size_t trials, std::uint64_t seed) {
    return {Kind::sampled, trials, seed};
  }
};

struct UCConstants {
  double R = 0;
  double epsilon = 0;
  double mu = 0;
  double separation = 0;  // 1 / (2(R + 1))
  double delta = 0;       // modulus at `separation`
  std::function<double(double)> modulus;

  /// epsilon < 1/8 and (1/8 - mu/2) / (1/8 + epsilon) > 1 - delta.
  bool satisfies_constraint() const {
    return epsilon > 0 && mu > 0 && epsilon < 0.125 && delta > 0 && delta < 1 &&
           (0.125 - mu / 2) / (0.125 + epsilon) > 1 - delta;
  }
};

/// Below this the modulus is treated as zero: the space is not certified
/// uniformly convex at the requested scale.
inline constexpr double kModulusFloor = 1e-12;

/// delta = modulus(1 / (2(R+1))); epsilon = mu = the largest delta / 2^j,
/// j >= 5, satisfying the constraint.
inline UCConstants uc_constants(const LpSpace& space, double R,
                                ModulusMode mode = ModulusMode::analytic()) {
  require(R >= 0 && std::isfinite(R), "R must be a finite nonnegative number");
  UCConstants c;
  c.R = R;
  if (mode.kind == ModulusMode::Kind::analytic)
    c.modulus = [space](double e) { return analytic_modulus(space, e); };
  else
    c.modulus = [space, mode](double e) {
      return sampled_modulus(space, e, mode.trials, mode.seed);
    };
  c.separation = 1.0 / (2.0 * (R + 1.0));
  c.delta = c.modulus(c.separation);
  require(c.delta > kModulusFloor,
          "modulus of convexity estimate is zero: space not certified uniformly "
          "convex at this scale");
  for (int j = 5; j < 200; ++j) {
    c.epsilon = c.mu = std::ldexp(c.delta, -j);
    if (c.satisfies_constraint()) return c;
  }
  throw PreconditionError("no admissible (epsilon, mu) found");
}

inline UCConstants uc_constants(const Representation& rep, double R,
                                ModulusMode mode = ModulusMode::analytic()) {
  return uc_constants(space_of(rep), R, mode);
}

}  // namespace qclab
