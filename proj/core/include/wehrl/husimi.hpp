// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file husimi.hpp
 * @brief Husimi (covariant) symbol of a density matrix.
 *
 * u(z) = e^{-pi|z|^2} Sum_{m,n} rho_{mn} e_m(z) conj(e_n(z)),  e_n(z) = pi^{n/2} z^n / sqrt(n!).
 * For rho = |f><f| this is |Vf(x, omega)|^2 at z = x - i omega.
 */

#pragma once

#include <vector>

#include "wehrl/fock.hpp"

namespace wehrl {

/// Evaluates u at arbitrary points; immutable after construction.
class HusimiEvaluator {
 public:
  explicit HusimiEvaluator(const DensityMatrix& rho);

  double operator()(cplx z) const;
  double operator()(const PhasePoint& p) const { return (*this)(p.z()); }

  const DensityMatrix& rho() const { return rho_; }
  int dim() const { return rho_.dim(); }
  int rank() const { return rank_; }

  /// Husimi centroid (closed form), used to centre polar grids and rays.
  PhasePoint centroid() const { return centroid_; }

  /// Area s = pi R^2 of a disk about the centroid outside which the Husimi
  /// mass is below `tail`.
  double support_s(double tail) const;

  /// Radius about the centroid beyond which u < threshold, from the bound
  /// u(z) <= Sum_{mn} |rho_mn| w_m(s) w_n(s), w_n(s) = s^{n/2} e^{-s/2} / sqrt(n!).
  double envelope_radius(double threshold) const;

 private:
  DensityMatrix rho_;
  int rank_ = 0;
  std::vector<cplx> factor_;  // row-major dim x rank_, rho = factor * factor^*
  PhasePoint centroid_;
  Eigen::VectorXd populations_;
  Eigen::MatrixXd abs_rho_;
};

/// u_rho(z).
double husimi_eval(const DensityMatrix& rho, const PhasePoint& z);

struct MaxReport {
  double T = 0.0;
  PhasePoint zstar;
  int iterations = 0;
};

/// Global maximum of u: polar grid about the centroid, Nelder-Mead from the
/// five best grid points, then a Newton polish on ln u.
/// Throws BoundaryMaximum when the grid maximum sits on the outer ring.
MaxReport husimi_max(const HusimiEvaluator& u, double grid_radius = 4.0, double grid_step = 0.1);
MaxReport husimi_max(const DensityMatrix& rho, double grid_radius = 4.0, double grid_step = 0.1);

/// Closed-form transform Vf(x, w) = e^{-pi|z|^2/2} e^{-i pi x w} F(x - i w).
cplx bargmann_stft(const FockVector& f, const PhasePoint& z);

/// Vf(x0, w0) = Int conj(phi_{(x0,w0)}(x)) f(x) dx by trapezoid quadrature of
/// the Hermite-function synthesis of f. Requires quad_points >= 200, dim <= 32.
cplx stft_quadrature(const FockVector& f, const PhasePoint& z, int quad_points = 400);

/// Hermite functions h_0..h_{count-1} at x, normalized in L^2(R), with
/// h_0(x) = 2^{1/4} e^{-pi x^2}.
std::vector<double> hermite_functions(double x, int count);

/// Five-point Laplacian of ln u at z with Richardson extrapolation over h, h/2.
/// Throws ValueTooSmall when u(z) <= 1e-8.
double log_laplacian_check(const DensityMatrix& rho, const PhasePoint& z, double h = 1e-3);
double log_laplacian_check(const HusimiEvaluator& u, const PhasePoint& z, double h = 1e-3);

struct GridSample {
  double x;
  double omega;
  double u;
};

/// u on the rectangle [-radius, radius]^2 with spacing `step`, row-major in omega.
std::vector<GridSample> husimi_grid(const DensityMatrix& rho, double radius, double step);

}  // namespace wehrl
