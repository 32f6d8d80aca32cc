// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file deficit.hpp
 * @brief Trace-norm distance from a state to the coherent projectors, the
 *        pure-state L2 distance, and the entropy deficit relative to them.
 */

#pragma once

#include <limits>
#include <optional>

#include "wehrl/entropy.hpp"
#include "wehrl/fock.hpp"
#include "wehrl/husimi.hpp"

namespace wehrl {

/// ||rho - sigma||_{S1}; eigenvalues below 1e-14 in modulus count as 0.
double trace_distance(const CMatrix& rho, const CMatrix& sigma);
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

struct DistanceResult {
  double D = 0.0;
  PhasePoint z0;           // minimizer
  PhasePoint zstar;        // Husimi maximizer used as seed
  double T = 0.0;
  double discrepancy = 0.0;  // |z0 - zstar|
};

/// inf over z0 of ||rho - |phi_z0><phi_z0| ||_{S1}: Nelder-Mead from the
/// Husimi maximizer and eight perturbations of it.
DistanceResult deficit_D(const DensityMatrix& rho);
DistanceResult deficit_D(const DensityMatrix& rho, const MaxReport& max);

struct DfResult {
  double D_f = 0.0;          // sqrt(2 (1 - sqrt T))
  double T = 0.0;
  PhasePoint zstar;
  double unconstrained = 0.0;  // 2 inf_c ||f - c phi_zstar||
};

/// inf over z0 and |c| = 1 of ||f - c phi_z0||.
DfResult deficit_Df(const FockVector& f);
DfResult deficit_Df(const FockVector& f, const MaxReport& max);

struct DeficitReport {
  double T = 0.0;
  PhasePoint zstar;
  PhasePoint z0;
  double D_rho = 0.0;
  std::optional<double> D_f;
  double entropy_value = 0.0;  // Wehrl entropy, or Int Phi(u) for other symbols
  double reference = 0.0;      // value on coherent states
  double deficit = 0.0;        // distance of entropy_value from reference, >= 0 in theory
  double ratio = std::numeric_limits<double>::quiet_NaN();  // deficit / D_rho^2, NaN if D_rho ~ 0
};

/// Entropy deficit of rho against the coherent value for `phi` (u ln u by
/// default), with D[rho] and, for pure input, D[f].
DeficitReport deficit_report(const DensityMatrix& rho, const ConvexSymbol& phi = ConvexSymbol::wehrl(),
                             const std::optional<FockVector>& pure = std::nullopt,
                             const QuadratureScheme& scheme = {});

}  // namespace wehrl
