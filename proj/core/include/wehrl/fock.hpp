// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief States in a truncated Fock (Hermite) basis.
 *
 * Basis vector e_n corresponds to the n-th Hermite function on the real line
 * and, under the Bargmann correspondence, to the Fock-space monomial
 * pi^{n/2} z^n / sqrt(n!). Phase-space points (x, omega) are identified with
 * the complex number z = x - i omega, which is the argument at which the
 * entire function F is evaluated to obtain |Vf(x, omega)|^2.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace wehrl {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr int kDefaultDim = 64;

/// Point (x, omega) of phase space.
struct PhasePoint {
  double x = 0.0;
  double omega = 0.0;

  /// Complex coordinate z = x - i omega.
  cplx z() const { return {x, -omega}; }
  static PhasePoint from_z(cplx z) { return {z.real(), -z.imag()}; }

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

/// Unit-norm coefficient vector a_0..a_N of a pure state.
class FockVector {
 public:
  /// Normalizes `coeffs`; throws InvalidState on an empty or zero vector.
  static FockVector normalized(CVector coeffs);

  /// Accepts `coeffs` unchanged if its norm is 1 within 1e-12, else throws InvalidState.
  static FockVector from_unit(CVector coeffs);

  /// Basis state e_n in dimension `dim`.
  static FockVector basis(int n, int dim);

  const CVector& coeffs() const { return coeffs_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  cplx operator[](int n) const { return coeffs_[n]; }

  /// <this, other>, antilinear in the first slot. Shorter vector is zero-padded.
  cplx inner(const FockVector& other) const;

  /// Copy truncated or zero-padded to `dim` (renormalized when truncated).
  FockVector resized(int dim) const;

 private:
  explicit FockVector(CVector coeffs) : coeffs_(std::move(coeffs)) {}
  CVector coeffs_;
};

/// Hermitian, positive semidefinite, unit-trace matrix rho_{mn}.
class DensityMatrix {
 public:
  /// Validates hermiticity (1e-12), trace (1e-12) and PSD (-1e-10); the stored
  /// matrix is the exact Hermitian part of the input.
  static DensityMatrix from_matrix(const CMatrix& m);

  /// |f><f|.
  static DensityMatrix pure(const FockVector& f);

  /// Sum_j p_j |f_j><f_j| with weights normalized to unit sum.
  static DensityMatrix mixture(const std::vector<double>& weights,
                               const std::vector<FockVector>& states);

  const CMatrix& matrix() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }
  cplx operator()(int m, int n) const { return rho_(m, n); }

  /// Copy embedded into a larger basis (zero padded).
  DensityMatrix padded(int dim) const;

  /// Purity Tr rho^2.
  double purity() const;

 private:
  explicit DensityMatrix(CMatrix rho) : rho_(std::move(rho)) {}
  CMatrix rho_;
};

/// rho = Sum_j weights[j] |states[j]><states[j]|, weights descending.
struct SpectralDecomposition {
  std::vector<double> weights;
  std::vector<FockVector> states;

  CMatrix rebuild() const;
};

/// Poisson tail e^{-s} Sum_{n >= dim} s^n / n!, s = pi |z|^2.
double coherent_tail_mass(const PhasePoint& z0, int dim);

/// Smallest dimension >= min_dim whose coherent-state tail at z0 is below `tail`.
int coherent_dim(const PhasePoint& z0, int min_dim, double tail = 1e-16);

/// Fock coefficients of the coherent state centred at z0.
/// a_n = e^{i pi x0 w0} e^{-pi|z0|^2/2} pi^{n/2} w^n / sqrt(n!), w = x0 + i w0.
/// Throws TailTooLarge when the discarded mass exceeds 1e-12.
FockVector coherent_fock_vector(const PhasePoint& z0, int dim = kDefaultDim);

/// Eigen-decomposition keeping eigenvalues above `cutoff`.
/// Throws NotPSD when an eigenvalue is below -1e-10.
SpectralDecomposition spectral_decompose(const DensityMatrix& rho, double cutoff = 0.0);

/// G G^* / Tr(G G^*) for a seeded dim x rank complex Gaussian G.
DensityMatrix random_density_matrix(int dim, int rank, std::uint64_t seed);

/// Normalized complex Gaussian vector.
FockVector random_pure_state(int dim, std::uint64_t seed);

/// Mean position of the Husimi density, closed form
/// <z> = Sum_m rho_{m,m+1} sqrt((m+1)/pi), returned as a phase-space point.
PhasePoint husimi_centroid(const DensityMatrix& rho);

}  // namespace wehrl
