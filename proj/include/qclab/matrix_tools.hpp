#pragma once

// Unitary matrix representations: spectral gaps, planar rotations and
// seeded generic samples in U(2).

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "qclab/enumerate.hpp"
#include "qclab/error.hpp"
#include "qclab/representation.hpp"

namespace qclab {

/// min over unit x of ||rho(g) x - x||, the smallest singular value of
/// rho(g) - I.
inline double spectral_gap(const MatrixRep& rep, const Word& g) {
  CMatrix m = rep.matrix(g) - CMatrix::Identity(rep.dim(), rep.dim());
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().minCoeff();
}

inline CMatrix rotation_matrix(double theta) {
  CMatrix r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

/// a and b act on R^2 (inside C^2) by rotations through theta_a, theta_b.
inline MatrixRep rotation_rep(double theta_a, double theta_b) {
  return MatrixRep(rotation_matrix(theta_a), rotation_matrix(theta_b));
}

/// Seeded rotation pair whose product ab has spectral gap at least min_gap.
inline MatrixRep random_rotation_rep(std::uint64_t seed, double min_gap) {
  require(min_gap < 2.0, "rotation gap cannot exceed 2");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng = make_rng(seed, attempt);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    double ta = angle(rng), tb = angle(rng);
    if (2 * std::abs(std::sin((ta + tb) / 2)) >= min_gap) return rotation_rep(ta, tb);
  }
}

/// Eigen-angles (t, s) in [0, 1) with eigenvalues exp(2 pi i t), exp(2 pi i s),
/// sorted t <= s.
inline std::pair<double, double> eigen_angles(const CMatrix& u) {
  require(u.rows() == 2 && u.cols() == 2, "eigen-angles need a 2x2 matrix");
  Eigen::ComplexEigenSolver<CMatrix> solver(u);
  std::array<double, 2> t{};
  for (int i = 0; i < 2; ++i) {
    double x = std::arg(solver.eigenvalues()[i]) / (2 * std::numbers::pi);
    x -= std::floor(x);
    if (x >= 1.0) x = 0.0;
    t[i] = x;
  }
  if (t[0] > t[1]) std::swap(t[0], t[1]);
  return {t[0], t[1]};
}

/// Finite Diophantine proxy for irrationality: |x - p/q| > 1e-3 / q^2 for
/// every rational p/q with q <= max_denominator.
inline bool badly_approximable(double x, int max_denominator) {
  if (!std::isfinite(x)) return false;
  for (int q = 1; q <= max_denominator; ++q) {
    double qx = x * q;
    if (std::abs(qx - std::round(qx)) <= 1e-3 / q) return false;
  }
  return true;
}

/// exp(iA) for Hermitian A.
inline CMatrix unitary_exponential(const CMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
  const auto& lambda = solver.eigenvalues();
  CVector phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    phases[i] = std::polar(1.0, lambda[i]);
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

inline CMatrix random_hermitian(Rng& rng, Eigen::Index d, double scale) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  return scale * (a + a.adjoint()) / 2.0;
}

/// Seeded pair U_a, U_b in U(2) such that for each of a, b, ab, ab^-1 the
/// eigen-angles t, s and the ratio t/s pass badly_approximable(., D).
/// Deterministic per seed.
inline MatrixRep random_generic_u2(std::uint64_t seed, int max_denominator = 50,
                                   std::size_t max_attempts = 10000) {
  require(max_denominator >= 2, "denominator bound D must be >= 2");
  const std::array<Word, 4> probes{parse_word("a"), parse_word("b"), parse_word("ab"),
                                   parse_word("aB")};
  std::size_t rejected_generic = 0;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Rng rng = make_rng(seed, attempt);
    CMatrix ua = unitary_exponential(random_hermitian(rng, 2, 2.0));
    CMatrix ub = unitary_exponential(random_hermitian(rng, 2, 2.0));
    MatrixRep rep(ua, ub);
    bool generic = true;
    for (const Word& g : probes) {
      auto [t, s] = eigen_angles(rep.matrix(g));
      if (!badly_approximable(t, max_denominator) || !badly_approximable(s, max_denominator) ||
          s == 0.0 || !badly_approximable(t / s, max_denominator)) {
        generic = false;
        break;
      }
    }
    if (!generic) {
      ++rejected_generic;
      continue;
    }
    rep.angles = std::make_pair(eigen_angles(ua), eigen_angles(ub));
    return rep;
  }
  std::ostringstream msg;
  msg << "random_generic_u2: no generic sample within " << max_attempts
      << " attempts (seed " << seed << ", D = " << max_denominator << ", "
      << rejected_generic << " rejected by the Diophantine filter)";
  throw PreconditionError(msg.str());
}

/// True if every pairwise product of `group` lies in `group` (to tol).
inline bool is_closed_under_products(const std::vector<CMatrix>& group, double tol = 1e-9) {
  for (const CMatrix& x : group)
    for (const CMatrix& y : group) {
      CMatrix p = x * y;
      bool found = false;
      for (const CMatrix& z : group)
        if (z.rows() == p.rows() && (z - p).cwiseAbs().maxCoeff() <= tol) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

}  // namespace qclab
