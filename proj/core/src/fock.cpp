// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "wehrl/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/special_functions/gamma.hpp>

#include "wehrl/error.hpp"

namespace wehrl {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kPsdTol = 1e-10;

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::TailTooLarge: return "TailTooLarge";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::BoundaryMaximum: return "BoundaryMaximum";
    case ErrorCode::ValueTooSmall: return "ValueTooSmall";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::NoCrossing: return "NoCrossing";
    case ErrorCode::QuadratureDisagreement: return "QuadratureDisagreement";
    case ErrorCode::NonIntegrable: return "NonIntegrable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyLevelSet: return "EmptyLevelSet";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::AssertionFailure: return "AssertionFailure";
  }
  return "Unknown";
}

FockVector FockVector::normalized(CVector coeffs) {
  if (coeffs.size() == 0) throw Error(ErrorCode::InvalidState, "empty coefficient vector");
  const double norm = coeffs.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::InvalidState, "coefficient vector has zero or non-finite norm");
  }
  coeffs /= norm;
  return FockVector(std::move(coeffs));
}

FockVector FockVector::from_unit(CVector coeffs) {
  if (coeffs.size() == 0) throw Error(ErrorCode::InvalidState, "empty coefficient vector");
  if (std::abs(coeffs.norm() - 1.0) > kNormTol) {
    throw Error(ErrorCode::InvalidState, "coefficient vector is not unit norm");
  }
  return FockVector(std::move(coeffs));
}

FockVector FockVector::basis(int n, int dim) {
  if (dim < 1 || n < 0 || n >= dim) {
    throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  }
  CVector c = CVector::Zero(dim);
  c[n] = 1.0;
  return FockVector(std::move(c));
}

cplx FockVector::inner(const FockVector& other) const {
  const int n = std::min(dim(), other.dim());
  return coeffs_.head(n).dot(other.coeffs_.head(n));
}

FockVector FockVector::resized(int new_dim) const {
  if (new_dim < 1) throw Error(ErrorCode::InvalidArgument, "dim must be >= 1");
  CVector c = CVector::Zero(new_dim);
  const int n = std::min(dim(), new_dim);
  c.head(n) = coeffs_.head(n);
  if (new_dim < dim()) return normalized(std::move(c));
  return FockVector(std::move(c));
}

DensityMatrix DensityMatrix::from_matrix(const CMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorCode::InvalidState, "density matrix must be square and non-empty");
  }
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kNormTol) throw Error(ErrorCode::InvalidState, "matrix is not Hermitian");
  CMatrix h = 0.5 * (m + m.adjoint());
  for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) = h(i, i).real();
  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > kNormTol) throw Error(ErrorCode::InvalidState, "trace differs from 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol) {
    throw Error(ErrorCode::NotPSD, "matrix has a negative eigenvalue");
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::pure(const FockVector& f) {
  CMatrix p = f.coeffs() * f.coeffs().adjoint();
  CMatrix h = 0.5 * (p + p.adjoint());
  for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) = h(i, i).real();
  h /= h.trace().real();
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::mixture(const std::vector<double>& weights,
                                     const std::vector<FockVector>& states) {
  if (weights.empty() || weights.size() != states.size()) {
    throw Error(ErrorCode::InvalidArgument, "weights and states must have equal non-zero length");
  }
  int dim = 0;
  for (const auto& s : states) dim = std::max(dim, s.dim());
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw Error(ErrorCode::InvalidArgument, "negative mixture weight");
    total += w;
  }
  if (!(total > 0.0)) throw Error(ErrorCode::InvalidArgument, "mixture weights sum to zero");
  CMatrix acc = CMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < states.size(); ++j) {
    const CVector v = states[j].resized(dim).coeffs();
    acc += (weights[j] / total) * (v * v.adjoint());
  }
  CMatrix h = 0.5 * (acc + acc.adjoint());
  for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) = h(i, i).real();
  h /= h.trace().real();
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::padded(int new_dim) const {
  if (new_dim < dim()) throw Error(ErrorCode::InvalidArgument, "cannot pad to a smaller dim");
  CMatrix p = CMatrix::Zero(new_dim, new_dim);
  p.topLeftCorner(dim(), dim()) = rho_;
  return DensityMatrix(std::move(p));
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

CMatrix SpectralDecomposition::rebuild() const {
  if (states.empty()) return CMatrix();
  const int dim = states.front().dim();
  CMatrix m = CMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < states.size(); ++j) {
    m += weights[j] * (states[j].coeffs() * states[j].coeffs().adjoint());
  }
  return m;
}

double coherent_tail_mass(const PhasePoint& z0, int dim) {
  const double s0 = std::numbers::pi * std::norm(z0.z());
  if (s0 == 0.0) return 0.0;
  // P(Poisson(s0) >= dim) is the regularized lower incomplete gamma P(dim, s0).
  return boost::math::gamma_p(static_cast<double>(dim), s0);
}

int coherent_dim(const PhasePoint& z0, int min_dim, double tail) {
  int dim = std::max(min_dim, 1);
  while (coherent_tail_mass(z0, dim) >= tail) dim += 4;
  return dim;
}

FockVector coherent_fock_vector(const PhasePoint& z0, int dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "dim must be >= 1");
  const double tail = coherent_tail_mass(z0, dim);
  if (tail >= 1e-12) {
    throw Error(ErrorCode::TailTooLarge,
                "truncated coherent-state mass " + std::to_string(tail) + " for dim " +
                    std::to_string(dim));
  }
  const double pi = std::numbers::pi;
  const cplx w(z0.x, z0.omega);
  const double s0 = pi * std::norm(w);
  CVector a(dim);
  a[0] = std::polar(std::exp(-0.5 * s0), pi * z0.x * z0.omega);
  const cplx step = std::sqrt(pi) * w;
  for (int n = 1; n < dim; ++n) a[n] = a[n - 1] * step / std::sqrt(static_cast<double>(n));
  return FockVector::normalized(std::move(a));
}

SpectralDecomposition spectral_decompose(const DensityMatrix& rho, double cutoff) {
  if (cutoff < 0.0) throw Error(ErrorCode::InvalidArgument, "cutoff must be >= 0");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  const auto& vals = es.eigenvalues();
  if (vals.minCoeff() < -kPsdTol) throw Error(ErrorCode::NotPSD, "negative eigenvalue");
  SpectralDecomposition out;
  // Eigen returns ascending eigenvalues.
  for (Eigen::Index k = vals.size() - 1; k >= 0; --k) {
    if (vals[k] <= cutoff || vals[k] <= 0.0) continue;
    out.weights.push_back(vals[k]);
    out.states.push_back(FockVector::normalized(es.eigenvectors().col(k)));
  }
  return out;
}

namespace {

CMatrix gaussian_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(i, j) = cplx(re, im);
    }
  }
  return g;
}

}  // namespace

DensityMatrix random_density_matrix(int dim, int rank, std::uint64_t seed) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw Error(ErrorCode::InvalidArgument, "need 1 <= rank <= dim");
  }
  const CMatrix g = gaussian_matrix(dim, rank, seed);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::from_matrix(rho);
}

FockVector random_pure_state(int dim, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "dim must be >= 1");
  return FockVector::normalized(gaussian_matrix(dim, 1, seed).col(0));
}

PhasePoint husimi_centroid(const DensityMatrix& rho) {
  cplx mean = 0.0;
  for (int m = 0; m + 1 < rho.dim(); ++m) {
    mean += rho(m, m + 1) * std::sqrt((m + 1) / std::numbers::pi);
  }
  return PhasePoint::from_z(mean);
}

}  // namespace wehrl
