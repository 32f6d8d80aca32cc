// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file harness.hpp
 * @brief Test-state families, inequality verification runs and constant sweeps.
 *
 * Runs assert only the non-quantitative inequalities; ratios against D^2 are
 * reported as empirical lower bounds for the stability constants.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wehrl/deficit.hpp"
#include "wehrl/entropy.hpp"
#include "wehrl/fock.hpp"

namespace wehrl {

/// Ensemble description. Names: "coherent", "fock", "perturbed", "ginibre", "pure".
struct FamilySpec {
  std::string name;
  int dim = 0;       // 0 picks the family default
  int rank = 1;      // ginibre only
  std::vector<std::uint64_t> seeds;  // coherent, ginibre, pure: one state per seed

  std::string label() const;
};

struct TestState {
  std::string family;
  std::string label;
  std::uint64_t seed = 0;
  DensityMatrix rho;
  std::optional<FockVector> pure;
  bool coherent = false;
};

/// Perturbation sizes of the "perturbed" family: normalize(phi_0 + eps e_2).
inline constexpr double kPerturbations[] = {0.3, 0.1, 0.03, 0.01};

std::vector<TestState> make_family(const FamilySpec& spec);

/// coherent, Fock e_0..e_4, eps-perturbed coherent, Ginibre rank 1, 2, 4 with
/// ten seeds starting at `seed`. dim > 0 overrides every family dimension.
std::vector<FamilySpec> default_families(std::uint64_t seed = 1, int dim = 0);

/// Parses "coherent", "fock", "perturbed", "pure", "ginibre:<rank>".
FamilySpec parse_family(std::string_view name, std::vector<std::uint64_t> seeds, int dim = 0);

struct StateResult {
  std::string family;
  std::string label;
  std::uint64_t seed = 0;
  int dim = 0;
  std::string quantity;
  double value = 0.0;      // functional evaluated at the state
  double reference = 0.0;  // coherent-state value
  double deficit = 0.0;    // signed gap; negative means violation
  double D = 0.0;          // D[rho] or D[f]
  double T = 0.0;
  double ratio = std::numeric_limits<double>::quiet_NaN();  // deficit / D^2 (scaled per theorem)
  bool ok = true;
};

struct RunSummary {
  int states = 0;
  int violations = 0;
  double min_deficit = std::numeric_limits<double>::infinity();
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = -std::numeric_limits<double>::infinity();
  double max_violation = 0.0;
};

struct VerificationRun {
  std::string theorem;
  double tol = 1e-6;
  std::vector<FamilySpec> families;
  std::vector<StateResult> results;
  RunSummary summary;

  bool ok() const { return summary.violations == 0; }
  /// Throws AssertionFailure naming every offending state and seed.
  void assert_ok() const;
  std::string to_json() const;
  std::string to_csv() const;
};

/// Wehrl entropy >= 1 - tol; ratio = (S - 1) / D[rho]^2.
VerificationRun verify_wehrl(const std::vector<FamilySpec>& families, double tol = 1e-6);

/// Int Phi(u) <= reference + tol; ratio = (reference - value) / D[rho]^2.
/// Throws ConfigError for linear Phi.
VerificationRun verify_generalized(const std::vector<FamilySpec>& families, const ConvexSymbol& phi,
                                   double tol = 1e-6);

/// Log-Sobolev deficit >= -tol on the pure states; ratio = deficit / distance^2.
VerificationRun verify_logsob(const std::vector<FamilySpec>& families, double tol = 1e-6);

struct StabTauReport {
  double tau = 0.0;
  double lhs = 0.0;         // Int (u - tau)_+
  double reference = 0.0;  // 1 - tau - tau ln(1/tau)
  double D_f = 0.0;
  double rhs_factor = 1.0;  // 1 - c tau D_f^2 for the candidate c
  double empirical_c = std::numeric_limits<double>::quiet_NaN();  // largest passing c
  bool ok = true;           // lhs <= reference + 1e-8
  bool candidate_ok = true;
};

StabTauReport verify_stabtau(const FockVector& f, double tau, double c_candidate = 0.0);

struct FaberKrahnReport {
  double tau = 0.0;
  double area = 0.0;  // |{u > tau}|
  double lhs = 0.0;   // Husimi mass of the super-level set
  double base = 0.0;  // 1 - e^{-area}, mass of the coherent state on the centred disk
  double D_f = 0.0;
  double empirical_c0 = std::numeric_limits<double>::quiet_NaN();
  bool ok = true;     // lhs <= base + 1e-8
  bool candidate_ok = true;
};

/// Throws EmptyLevelSet when tau >= T.
FaberKrahnReport verify_faber_krahn(const FockVector& f, double tau, double c0_candidate = 0.0);

/// Runs over the pure states of the families and every tau.
VerificationRun verify_stabtau_run(const std::vector<FamilySpec>& families, const std::vector<double>& taus,
                                   double c_candidate = 0.0, double tol = 1e-6);
VerificationRun verify_faber_krahn_run(const std::vector<FamilySpec>& families,
                                       const std::vector<double>& taus, double c0_candidate = 0.0,
                                       double tol = 1e-6);

struct SweepConfig {
  std::vector<FamilySpec> families;
  std::vector<std::string> phis;
  std::vector<double> taus;
  std::vector<std::uint64_t> seeds;
  double tol = 1e-6;
};

/// JSON with keys families[], phis[], taus[], seeds[] (optional dim, tol).
/// Family entries are names or objects {"name", "rank", "dim"}.
SweepConfig parse_config(std::string_view json_text, int dim_override = 0);
SweepConfig load_config(const std::filesystem::path& path, int dim_override = 0);

struct SweepRow {
  std::string family;
  std::string quantity;
  int states = 0;
  double min_ratio = std::numeric_limits<double>::quiet_NaN();
  double max_ratio = std::numeric_limits<double>::quiet_NaN();
  int violations = 0;
};

/// One row per (family, phi) and per (family, stabtau tau).
std::vector<SweepRow> sweep_constants(const SweepConfig& config);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);

}  // namespace wehrl
