// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file entropy.hpp
 * @brief Phi-entropies Int Phi(u_rho) dA for convex Phi on [0, 1] with Phi(0) = 0.
 *
 * Every built-in symbol carries its right derivative and its second-derivative
 * measure (absolutely continuous density plus atoms), which is what the
 * layer-cake and hinge-superposition representations need.
 */

#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wehrl/fock.hpp"
#include "wehrl/levelsets.hpp"
#include "wehrl/quadrature.hpp"

namespace wehrl {

enum class SymbolKind { Power, Wehrl, Hinge, Linear, Custom };

struct MeasureAtom {
  double position;
  double mass;
};

class ConvexSymbol {
 public:
  using Fn = std::function<double(double)>;

  /// u^r, r >= 1.
  static ConvexSymbol power(double r);
  /// u ln u (0 at u = 0).
  static ConvexSymbol wehrl();
  /// (u - tau)_+, 0 < tau < 1.
  static ConvexSymbol hinge(double tau);
  /// slope * u.
  static ConvexSymbol linear(double slope = 1.0);
  /// Caller-supplied symbol. `density` is the absolutely continuous part of
  /// Phi'' on (0, 1); `atoms` its point masses. `integrable` declares that
  /// Phi(t) / t is integrable at 0.
  static ConvexSymbol custom(std::string name, Fn value, Fn right_derivative, Fn density,
                             std::vector<MeasureAtom> atoms = {}, bool integrable = true);
  /// "wehrl", "power:<r>", "hinge:<tau>", "linear[:<slope>]".
  static ConvexSymbol parse(std::string_view spec);

  double value(double u) const { return value_(u); }
  double derivative(double u) const { return derivative_(u); }
  double density(double tau) const { return density_(tau); }
  const std::vector<MeasureAtom>& atoms() const { return atoms_; }

  /// Right derivative at 0; -infinity for u ln u.
  double derivative_at_zero() const { return derivative_(0.0); }

  SymbolKind kind() const { return kind_; }
  double parameter() const { return parameter_; }
  const std::string& name() const { return name_; }
  bool integrable() const { return integrable_; }
  bool is_linear() const;

 private:
  ConvexSymbol() = default;
  SymbolKind kind_ = SymbolKind::Custom;
  double parameter_ = 0.0;
  std::string name_;
  Fn value_, derivative_, density_;
  std::vector<MeasureAtom> atoms_;
  bool integrable_ = true;
};

/// max{Phi(u), -u / eps}: finite right derivative at 0 for Phi'(0) = -infinity.
ConvexSymbol regularized(const ConvexSymbol& phi, double eps);

/// Midpoint convexity and Phi(0) = 0 on an n-point probe of [0, 1].
bool convexity_probe(const ConvexSymbol& phi, int points = 50, double tol = 1e-12);

/// Int_0^1 Phi(rho) d rho / rho, the value attained by coherent states.
/// Throws NonIntegrable for symbols declared non-integrable.
double coherent_reference(const ConvexSymbol& phi);

/// Int (u - tau)_+ dA via super-level segments along rays.
double hinge_functional(const DensityMatrix& rho, double tau, int rays = 256);

/// Direct polar quadrature of Int Phi(u) dA (hinge symbols use the ray route).
double phi_entropy(const DensityMatrix& rho, const ConvexSymbol& phi,
                   const QuadratureScheme& scheme = {});

/// Layer-cake route Int_0^1 Phi'(t) mu(t) dt on a profile grid.
double layer_cake_entropy(const LevelProfile& profile, const ConvexSymbol& phi);

struct PhiEntropyResult {
  double direct = 0.0;
  double layer_cake = 0.0;
  double difference = 0.0;
};

/// Both routes; throws QuadratureDisagreement if they differ by more than 1e-3.
PhiEntropyResult phi_entropy_checked(const DensityMatrix& rho, const ConvexSymbol& phi,
                                     const LevelProfile& profile,
                                     const QuadratureScheme& scheme = {});

/// -Int u ln u dA.
double wehrl_entropy(const DensityMatrix& rho, const QuadratureScheme& scheme = {});

struct SuperpositionReport {
  std::vector<double> samples;
  std::vector<double> reconstructed;
  double max_abs_error = 0.0;
};

/// Rebuilds Phi(u) = Phi'(0) u + Int (u - tau)_+ Phi''(tau) d tau, or the
/// dedicated u ln u identity, at each sample.
SuperpositionReport superposition_check(const ConvexSymbol& phi, std::span<const double> samples);

/// c * Int_0^1 tau (1 - tau - tau ln(1/tau)) Phi''(tau) d tau.
double c_phi_constant(const ConvexSymbol& phi, double c);

/// Closed form Int (|V phi|^2 - tau)_+ = 1 - tau - tau ln(1/tau).
double hinge_reference(double tau);

struct RegularizationPoint {
  double eps;
  double value;   // Int max{Phi(u), -u/eps} dA
  double change;  // |value - previous value|, 0 for the first entry
};

/// Phi-entropy of the eps-regularized symbol for each eps, in the given order.
std::vector<RegularizationPoint> regularization_sweep(const DensityMatrix& rho,
                                                      const ConvexSymbol& phi,
                                                      std::span<const double> eps,
                                                      const QuadratureScheme& scheme = {});

}  // namespace wehrl
