// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file levelsets.hpp
 * @brief Distribution function mu(t) = |{u > t}| and the accumulated
 *        difference H(t) = Int_0^t (mu - mu0), mu0(t) = (-ln t)_+.
 *
 * Super-level sets are measured along rays from the Husimi centroid: each ray
 * is sampled once on a uniform radial grid, sign changes of u - t are refined
 * by bracketing root finding, and the per-ray areas Sum (r_out^2 - r_in^2) / 2
 * are averaged with the trapezoid rule in the angle.
 */

#pragma once

#include <limits>
#include <vector>

#include "wehrl/husimi.hpp"

namespace wehrl {

struct RaySegment {
  double r_in;
  double r_out;
};

/// Cached radial samples of u along equally spaced rays. Immutable; all
/// queries are const and independent.
class LevelSetSampler {
 public:
  /// `t_min` is the smallest level that will be queried; rmax <= 0 picks the
  /// radius automatically so that u < t_min / 10 beyond it.
  LevelSetSampler(HusimiEvaluator u, double t_min, int rays = 256, double rmax = 0.0);

  /// |{u > t}|. Throws RadiusTooSmall if a super-level segment reaches rmax.
  double mu(double t) const;

  /// Int (u - tau)_+ dA, integrating u along each super-level segment.
  double hinge(double tau) const;

  /// Int_{u > t} u dA.
  double mass_above(double t) const { return hinge(t) + t * mu(t); }

  /// Super-level segments of ray k at level t.
  std::vector<RaySegment> segments(int ray, double t) const;

  const HusimiEvaluator& evaluator() const { return u_; }
  PhasePoint center() const { return center_; }
  double rmax() const { return rmax_; }
  int rays() const { return rays_; }

 private:
  double along(int ray, double r) const;
  double refine(int ray, double lo, double hi, double t) const;

  HusimiEvaluator u_;
  PhasePoint center_;
  int rays_;
  double rmax_;
  double dr_;
  std::vector<std::vector<double>> samples_;
  std::vector<cplx> directions_;
};

/// |{u_rho > t}| for 0 < t < 1 with at least 256 rays.
double mu_of_t(const DensityMatrix& rho, double t, int rays = 256, double rmax = 0.0);

struct ProfileOptions {
  int levels = 401;
  int rays = 256;
  double eps_t = 1e-6;
  double rmax = 0.0;
};

struct LevelProfile {
  std::vector<double> levels;  // increasing, levels.front() = eps_t, levels.back() = T
  std::vector<double> mu;
  std::vector<double> mu0;
  std::vector<double> H;       // H at each level
  double T = 0.0;
  PhasePoint zstar;
  bool no_crossing = false;    // coherent input (T = 1 within 1e-10)
  double tstar = std::numeric_limits<double>::quiet_NaN();
  double H_tstar = std::numeric_limits<double>::quiet_NaN();
  double eps_t = 1e-6;
  double mass = 0.0;           // estimate of Int_0^T mu dt (equals 1)
  int sign_changes = 0;        // sign changes of mu - mu0 on the grid

  /// H(t) for t in [0, 1]; on [T, 1] continued by H(T) - Int_T^t mu0.
  double H_at(double t) const;
};

/// Samples mu on a graded logarithmic grid in (eps_t, T], accumulates H and
/// locates t* by bisection on the sign of mu - mu0.
LevelProfile build_profile(const DensityMatrix& rho, const ProfileOptions& opts = {});
LevelProfile build_profile(const DensityMatrix& rho, int levels);
LevelProfile build_profile(const LevelSetSampler& sampler, const MaxReport& max,
                           const ProfileOptions& opts = {});

/// (-ln t)_+.
double mu0(double t);

struct MuDifferentialReport {
  double max_excess = -std::numeric_limits<double>::infinity();  // max of mu'(t) + 1/t
  double at_t = 0.0;
  int points = 0;
  bool passed = false;
};

/// mu'(t) + 1/t by central differences in ln t, over (lo_frac T, hi_frac T).
MuDifferentialReport check_mu_differential(const LevelProfile& profile, double tol,
                                           double lo_frac = 0.05, double hi_frac = 0.95);

struct MuBoundReport {
  double minimal_C0 = 0.0;  // smallest C0 >= 0 valid on the grid in [t0, T]
  bool supplied_ok = false;
  int points = 0;
};

/// mu(t) <= (1 + C0 (1 - T)) ln(T / t) on [t0, T].
MuBoundReport check_improved_mu_bound(const LevelProfile& profile, double t0, double C0);

struct HTReport {
  double ratio = 0.0;       // (1 - T) / H(t*)
  double H_tstar = 0.0;
  double weak_bound = 0.0;  // (1 - T)^2 / 2
  bool weak_ok = false;
};

/// Ratio (1 - T) / H(t*). Throws NoCrossing for coherent input.
HTReport check_HT_bound(const LevelProfile& profile);

}  // namespace wehrl
