// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file logsob.hpp
 * @brief Log-Sobolev functional on the Fock space F^2_h,
 *        d mu_h = h^{-1} e^{-pi|z|^2/h} dA.
 *
 * Coefficients refer to the orthonormal basis (pi/h)^{n/2} z^n / sqrt(n!) of
 * F^2_h, so at h = 1 they coincide with Hermite coefficients of the
 * corresponding f in L^2(R).
 */

#pragma once

#include <cstdint>

#include "wehrl/fock.hpp"
#include "wehrl/quadrature.hpp"

namespace wehrl {

class FockFunction {
 public:
  /// Requires sum |a_n|^2 = 1 within 1e-12 and h > 0.
  FockFunction(CVector coeffs, double h = 1.0);
  static FockFunction normalized(CVector coeffs, double h = 1.0);

  const CVector& coeffs() const { return coeffs_; }
  double h() const { return h_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }

  /// F(z).
  cplx operator()(cplx z) const;

  /// Same coefficients at another h: z -> F(z sqrt(h / h')) up to relabelling.
  FockFunction with_h(double h) const { return FockFunction(coeffs_, h); }

 private:
  CVector coeffs_;
  double h_;
};

/// (h / pi) Int |dF/dz|^2 d mu_h = Sum n |a_n|^2.
double dirichlet_form(const FockFunction& F);

/// (h / pi) Int |dF/dz|^2 d mu_h by polar quadrature.
double dirichlet_form_quadrature(const FockFunction& F, const QuadratureScheme& scheme = {});

/// Int |F|^2 ln |F|^2 d mu_h (0 at zeros of F) by polar quadrature.
double entropy_term(const FockFunction& F, const QuadratureScheme& scheme = {});

/// Unit-norm coefficients of e^{beta z - h |beta|^2 / 2 pi} truncated to dim.
/// Throws TailTooLarge when the truncated mass exceeds 1e-12.
FockFunction optimizer_function(cplx beta, int dim, double h = 1.0);

struct LogSobReport {
  double dirichlet = 0.0;
  double entropy = 0.0;
  double deficit = 0.0;
  double distance2 = 0.0;  // inf over beta, |c| = 1 of ||F - c G_beta||^2
  cplx beta{};
  double ratio = 0.0;      // deficit / distance2 (NaN when distance2 ~ 0)
};

/// Deficit of the log-Sobolev inequality and the distance to its optimizers.
/// Throws AssertionFailure when the deficit is below -1e-8.
LogSobReport logsob_deficit(const FockFunction& F, const QuadratureScheme& scheme = {});

/// F for f in L^2(R): identity on coefficients at h = 1.
FockFunction bargmann_bridge(const FockVector& f);

struct BridgeReport {
  double logsob = 0.0;        // log-Sobolev deficit of F
  double wehrl_minus_1 = 0.0; // Wehrl entropy of |f><f| minus 1
  double difference = 0.0;
};

BridgeReport bridge_check(const FockVector& f, const QuadratureScheme& scheme = {});

/// Random unit-norm polynomial of degree < dim.
FockFunction random_fock_function(int dim, std::uint64_t seed, double h = 1.0);

}  // namespace wehrl
