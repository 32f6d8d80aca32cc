// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "wehrl/deficit.hpp"

#include <cmath>
#include <numbers>

#include "wehrl/error.hpp"
#include "wehrl/optimize.hpp"

namespace wehrl {

namespace {

constexpr double kEigenFloor = 1e-14;
constexpr double kZeroDistance = 1e-6;
constexpr double kPerturb = 0.05;

}  // namespace

double trace_distance(const CMatrix& rho, const CMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "trace_distance: shapes differ");
  }
  const CMatrix d = rho - sigma;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(d, Eigen::EigenvaluesOnly);
  double total = 0.0;
  for (const double v : es.eigenvalues()) {
    if (std::abs(v) >= kEigenFloor) total += std::abs(v);
  }
  return total;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return trace_distance(rho.matrix(), sigma.matrix());
}

DistanceResult deficit_D(const DensityMatrix& rho) { return deficit_D(rho, husimi_max(rho)); }

DistanceResult deficit_D(const DensityMatrix& rho, const MaxReport& max) {
  const int dim = rho.dim();
  // rho - P_z0 lives on range(rho) + span(phi_z0): compress there, with phi_z0
  // taken in a padded space so its truncation is negligible.
  const SpectralDecomposition sd = spectral_decompose(rho, kEigenFloor);
  const int rank = static_cast<int>(sd.weights.size());
  auto objective = [&](const Point2& p) {
    const PhasePoint z{p[0], p[1]};
    if (std::hypot(z.x - max.zstar.x, z.omega - max.zstar.omega) > 4.0) return 4.0;
    const int big = coherent_dim(z, dim);
    const CVector phi = coherent_fock_vector(z, big).coeffs();
    CMatrix basis = CMatrix::Zero(big, rank + 1);
    for (int k = 0; k < rank; ++k) basis.block(0, k, dim, 1) = sd.states[k].coeffs();
    basis.col(rank) = phi;
    const CMatrix q = Eigen::HouseholderQR<CMatrix>(basis).householderQ() * CMatrix::Identity(big, rank + 1);
    const CMatrix qs = q.topRows(dim);
    CMatrix m = CMatrix::Zero(rank + 1, rank + 1);
    for (int k = 0; k < rank; ++k) {
      const CVector c = qs.adjoint() * sd.states[k].coeffs();
      m += sd.weights[k] * c * c.adjoint();
    }
    const CVector c = q.adjoint() * phi;
    m -= c * c.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    double total = 0.0;
    for (const double v : es.eigenvalues()) {
      if (std::abs(v) >= kEigenFloor) total += std::abs(v);
    }
    return total;
  };
  NelderMeadOptions opts;
  opts.initial_step = 0.02;
  DistanceResult r;
  r.zstar = max.zstar;
  r.T = max.T;
  r.D = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 9; ++k) {
    Point2 start{max.zstar.x, max.zstar.omega};
    if (k > 0) {
      const double th = 2 * std::numbers::pi * (k - 1) / 8;
      start[0] += kPerturb * std::cos(th);
      start[1] += kPerturb * std::sin(th);
    }
    const auto res = nelder_mead_2d(objective, start, opts);
    if (res.value < r.D) {
      r.D = res.value;
      r.z0 = {res.x[0], res.x[1]};
    }
  }
  r.discrepancy = std::hypot(r.z0.x - r.zstar.x, r.z0.omega - r.zstar.omega);
  return r;
}

DfResult deficit_Df(const FockVector& f) { return deficit_Df(f, husimi_max(DensityMatrix::pure(f))); }

DfResult deficit_Df(const FockVector& f, const MaxReport& max) {
  DfResult r;
  r.T = max.T;
  r.zstar = max.zstar;
  r.D_f = std::sqrt(std::max(0.0, 2.0 * (1.0 - std::sqrt(max.T))));
  const CVector phi = coherent_fock_vector(max.zstar, coherent_dim(max.zstar, f.dim())).coeffs();
  const double overlap = std::norm(phi.head(f.dim()).dot(f.coeffs()));
  r.unconstrained = 2.0 * std::sqrt(std::max(0.0, 1.0 - overlap));
  return r;
}

DeficitReport deficit_report(const DensityMatrix& rho, const ConvexSymbol& phi,
                             const std::optional<FockVector>& pure, const QuadratureScheme& scheme) {
  if (pure && pure->dim() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "pure vector dim");
  const MaxReport max = husimi_max(rho);
  const DistanceResult d = deficit_D(rho, max);
  DeficitReport r;
  r.T = max.T;
  r.zstar = max.zstar;
  r.z0 = d.z0;
  r.D_rho = d.D;
  if (pure) r.D_f = deficit_Df(*pure, max).D_f;
  if (phi.kind() == SymbolKind::Wehrl) {
    r.entropy_value = wehrl_entropy(rho, scheme);
    r.reference = 1.0;
    r.deficit = r.entropy_value - r.reference;
  } else {
    r.entropy_value = phi_entropy(rho, phi, scheme);
    r.reference = coherent_reference(phi);
    r.deficit = r.reference - r.entropy_value;
  }
  if (r.D_rho > kZeroDistance) r.ratio = r.deficit / (r.D_rho * r.D_rho);
  return r;
}

}  // namespace wehrl
