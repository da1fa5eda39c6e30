#pragma once

// Numerical probe: how far is H from a coboundary g -> v - rho(g) v on a
// finite ball? Minimizes max_g ||H(g) - (v - rho(g) v)|| with a
// least-squares start followed by Lawson's reweighting for the minimax fit.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "qclab/brooks.hpp"
#include "qclab/cocycle.hpp"
#include "qclab/enumerate.hpp"
#include "qclab/error.hpp"

namespace qclab {

struct CoboundaryFit {
  CVector v;
  double residual = 0;          // max_g ||H(g) - (v - g v)||
  double least_squares_residual = 0;
  std::size_t iterations = 0;
};

struct FitOptions {
  double tolerance = 1e-8;
  std::size_t max_iterations = 10000;
};

inline CoboundaryFit distance_to_coboundary_fit(const MatrixRep& rep, const CochainFn& h,
                                                std::size_t radius, FitOptions options = {}) {
  require(radius <= 6, "coboundary fit radius must be <= 6");
  const std::vector<Word> words = ball(radius);
  const Eigen::Index d = rep.dim();
  const std::size_t n = words.size();
  std::vector<CMatrix> ops(n);
  std::vector<CVector> targets(n);
  for (std::size_t i = 0; i < n; ++i) {
    ops[i] = CMatrix::Identity(d, d) - rep.matrix(words[i]);
    targets[i] = std::get<CVector>(h(words[i]));
  }
  auto residuals = [&](const CVector& v) {
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = (ops[i] * v - targets[i]).norm();
    return r;
  };
  auto weighted_solve = [&](const std::vector<double>& weight) {
    CMatrix normal = CMatrix::Zero(d, d);
    CVector rhs = CVector::Zero(d);
    for (std::size_t i = 0; i < n; ++i) {
      normal += weight[i] * ops[i].adjoint() * ops[i];
      rhs += weight[i] * ops[i].adjoint() * targets[i];
    }
    // minimum-norm solution; invariant vectors make `normal` singular
    return CVector(normal.completeOrthogonalDecomposition().solve(rhs));
  };

  std::vector<double> weight(n, 1.0 / static_cast<double>(n));
  CoboundaryFit fit;
  fit.v = weighted_solve(weight);
  {
    auto r = residuals(fit.v);
    fit.residual = *std::max_element(r.begin(), r.end());
    fit.least_squares_residual = fit.residual;
  }
  double previous = fit.residual;
  std::size_t stalled = 0;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    auto r = residuals(weighted_solve(weight));
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) total += weight[i] * r[i];
    if (total <= 0) break;
    for (std::size_t i = 0; i < n; ++i) weight[i] *= r[i] / total;
    CVector v = weighted_solve(weight);
    auto rv = residuals(v);
    double current = *std::max_element(rv.begin(), rv.end());
    fit.iterations = it;
    if (current < fit.residual) {
      fit.residual = current;
      fit.v = v;
    }
    stalled = (previous - current < options.tolerance) ? stalled + 1 : 0;
    previous = current;
    if (fit.residual <= options.tolerance || stalled >= 20) break;
  }
  return fit;
}

inline CoboundaryFit distance_to_coboundary_fit(const QuasiCocycleSpec& spec, std::size_t radius,
                                                FitOptions options = {}) {
  const auto* rep = std::get_if<MatrixRep>(&spec.rep);
  require(rep != nullptr, "coboundary fit requires a matrix representation");
  return distance_to_coboundary_fit(*rep, as_function(spec), radius, options);
}

}  // namespace qclab
