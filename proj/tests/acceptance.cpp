// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/lambert_w.hpp>

#include "wehrl/deficit.hpp"
#include "wehrl/entropy.hpp"
#include "wehrl/error.hpp"
#include "wehrl/harness.hpp"
#include "wehrl/husimi.hpp"
#include "wehrl/levelsets.hpp"
#include "wehrl/logsob.hpp"

using namespace wehrl;

namespace {

constexpr double kGamma = std::numbers::egamma;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void run(int id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

DensityMatrix fock(int n) { return DensityMatrix::pure(FockVector::basis(n, n + 4)); }

std::vector<TestState> default_states() {
  std::vector<TestState> out;
  for (const auto& spec : default_families())
    for (auto& s : make_family(spec)) out.push_back(std::move(s));
  return out;
}

void criterion1() {
  const auto t0 = Clock::now();
  const auto rho = DensityMatrix::pure(coherent_fock_vector({0.3, 0.8}, 48));
  const double s = wehrl_entropy(rho);
  const double dt = seconds_since(t0);
  const double err = std::abs(s - 1.0);
  report(1, err <= 1e-8 && dt < 1.0, fmt("|S - 1| = %.2e, runtime %.3f s", err, dt));
}

void criterion2() {
  double worst = 0.0;
  for (double r : {1.0, 2.0, 3.0})
    worst = std::max(worst, std::abs(coherent_reference(ConvexSymbol::power(r)) - 1.0 / r));
  report(2, worst <= 1e-8, fmt("max |ref - 1/r| = %.2e", worst));
}

void criterion3() {
  double worst = 0.0, worst_state = 0.0;
  const auto rho = DensityMatrix::pure(coherent_fock_vector({-0.2, 0.5}, 48));
  for (double t : {0.1, std::exp(-1.0), 0.5}) {
    const double closed = 1 - t - t * std::log(1 / t);
    worst = std::max(worst, std::abs(coherent_reference(ConvexSymbol::hinge(t)) - closed));
    worst = std::max(worst, std::abs(hinge_reference(t) - closed));
    worst_state = std::max(worst_state, std::abs(hinge_functional(rho, t) - closed));
  }
  report(3, worst <= 1e-8, fmt("max |ref - closed form| = %.2e (coherent state hinge %.2e)", worst, worst_state));
}

void criterion4() {
  boost::math::quadrature::tanh_sinh<double> ts;
  auto g = [](double s) {
    const double u = s * std::exp(-s);
    return u > 0 ? -u * std::log(u) : 0.0;
  };
  const double oracle = ts.integrate(g, 0.0, 4.0) + ts.integrate(g, 4.0, 80.0);
  const double s1 = wehrl_entropy(fock(1));
  const double e_wehrl = std::max(std::abs(s1 - oracle), std::abs(s1 - (1 + kGamma)));

  CVector a = CVector::Zero(3);
  a(1) = 1.0;
  const double e_logsob = std::abs(logsob_deficit(FockFunction(a)).deficit - kGamma);

  double e_bridge = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    e_bridge = std::max(e_bridge, std::abs(bridge_check(random_pure_state(8, seed)).difference));

  report(4, e_wehrl <= 1e-6 && e_logsob <= 1e-6 && e_bridge <= 1e-6,
         fmt("Wehrl(e1) err %.2e, logsob err %.2e, bridge max %.2e", e_wehrl, e_logsob, e_bridge));
}

void criterion5() {
  const auto coh = DensityMatrix::pure(coherent_fock_vector({0.4, -0.1}, 48));
  const LevelSetSampler sc(HusimiEvaluator(coh), 1e-4);
  double e_coh = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double t = std::pow(10.0, -4.0 + 4.0 * k / 50.0);
    e_coh = std::max(e_coh, std::abs(sc.mu(t) - mu0(t)));
  }
  const LevelSetSampler s1(HusimiEvaluator(fock(1)), 1e-4);
  const double T = std::exp(-1.0);
  double e_fock = 0.0;
  for (int k = 1; k <= 20; ++k) {
    const double t = T * k / 21.0;
    const double oracle = -boost::math::lambert_wm1(-t) + boost::math::lambert_w0(-t);
    e_fock = std::max(e_fock, std::abs(s1.mu(t) - oracle));
  }
  report(5, e_coh <= 1e-6 && e_fock <= 1e-6, fmt("coherent max err %.2e, e1 max err %.2e", e_coh, e_fock));
}

void criterion6() {
  std::vector<DensityMatrix> states{DensityMatrix::pure(coherent_fock_vector({0.2, 0.3}, 48)), fock(1),
                                    fock(2), fock(3)};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) states.push_back(random_density_matrix(6, 2, seed));
  double worst = -INFINITY;
  bool ok = true;
  for (const auto& rho : states) {
    const auto r = check_mu_differential(build_profile(rho), 5e-3);
    worst = std::max(worst, r.max_excess);
    ok = ok && r.passed;
  }
  report(6, ok && worst <= 5e-3, fmt("max mu'(t) + 1/t = %.2e over %zu states", worst, states.size()));
}

void criterion7() {
  const auto states = default_states();
  std::mt19937_64 rng(2026);
  double worst = INFINITY;
  long points = 0;
  for (const auto& st : states) {
    const HusimiEvaluator u(st.rho);
    const PhasePoint c = u.centroid();
    const double R = std::sqrt(u.support_s(1e-6) / std::numbers::pi);
    std::uniform_real_distribution<double> d(-R, R);
    int got = 0;
    for (int tries = 0; got < 100 && tries < 100000; ++tries) {
      const PhasePoint z{c.x + d(rng), c.omega + d(rng)};
      if (u(z) <= 1e-6) continue;
      worst = std::min(worst, log_laplacian_check(u, z));
      ++got;
    }
    points += got;
    if (got < 100) {
      report(7, false, fmt("only %d admissible points for %s", got, st.label.c_str()));
      return;
    }
  }
  const double bound = -4 * std::numbers::pi - 1e-2;
  report(7, worst >= bound, fmt("min Laplacian of ln u = %.6f (bound %.6f), %ld points on %zu states", worst, bound,
                                points, states.size()));
}

void criterion8() {
  double e_id = 0.0, e_br = -INFINITY;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto f = random_pure_state(6, 100 + seed);
    const auto rho = DensityMatrix::pure(f);
    const auto max = husimi_max(rho);
    const auto d = deficit_D(rho, max);
    const auto df = deficit_Df(f, max);
    e_id = std::max(e_id, std::abs(d.D - 2 * std::sqrt(1 - max.T)));
    e_br = std::max({e_br, 0.5 * d.D - df.D_f, df.D_f - d.D / std::sqrt(2.0)});
  }
  report(8, e_id <= 1e-6 && e_br <= 1e-8,
         fmt("max |D - 2 sqrt(1-T)| = %.2e, max bracket excess = %.2e", e_id, e_br));
}

void criterion9() {
  const auto t0 = Clock::now();
  const auto fams = default_families();
  const std::vector<double> taus{0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9};
  std::vector<VerificationRun> runs;
  runs.push_back(verify_wehrl(fams, 1e-6));
  for (auto s : {"power:2", "power:3", "hinge:0.2"})
    runs.push_back(verify_generalized(fams, ConvexSymbol::parse(s), 1e-6));
  runs.push_back(verify_stabtau_run(fams, taus, 0.0, 1e-6));
  runs.push_back(verify_faber_krahn_run(fams, taus, 0.0, 1e-6));
  runs.push_back(verify_logsob(fams, 1e-6));
  const double dt = seconds_since(t0);
  int violations = 0, states = 0;
  std::string parts;
  for (const auto& r : runs) {
    violations += r.summary.violations;
    states = std::max(states, r.summary.states);
    parts += fmt(" %s:%d/%d", r.theorem.c_str(), r.summary.violations, r.summary.states);
  }
  report(9, violations == 0 && dt < 300.0,
         fmt("%d violations, up to %d states per suite, %.1f s;%s", violations, states, dt, parts.c_str()));
}

void criterion10() {
  const auto run = verify_wehrl({parse_family("perturbed", {})});
  std::vector<double> ratios;
  std::string parts;
  for (const auto& r : run.results) {
    ratios.push_back(r.ratio);
    parts += fmt(" %s=%.4f", r.label.c_str(), r.ratio);
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  const bool finite = std::all_of(ratios.begin(), ratios.end(), [](double r) { return std::isfinite(r) && r > 0; });
  const double band = finite ? *hi / *lo : INFINITY;
  report(10, finite && ratios.size() == std::size(kPerturbations) && band <= 3.0,
         fmt("max/min ratio = %.3f;%s", band, parts.c_str()));
}

void criterion11() {
  int checked = 0;
  double min_H = INFINITY, min_gap = INFINITY;
  int bad_sign = 0;
  for (const auto& st : default_states()) {
    if (st.coherent) continue;
    const auto p = build_profile(st.rho);
    if (p.no_crossing) continue;
    ++checked;
    for (double h : p.H) min_H = std::min(min_H, h);
    if (p.sign_changes != 1) ++bad_sign;
    min_gap = std::min(min_gap, p.H_tstar - 0.5 * (1 - p.T) * (1 - p.T));
  }
  report(11, checked > 0 && min_H >= -1e-6 && bad_sign == 0 && min_gap >= -1e-6,
         fmt("%d states: min H = %.2e, non-unique sign changes = %d, min H(t*) - (1-T)^2/2 = %.2e", checked, min_H,
             bad_sign, min_gap));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8,
                                                    criterion9, criterion10, criterion11};
  for (std::size_t i = 0; i < criteria.size(); ++i) run(static_cast<int>(i) + 1, criteria[i]);
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAIL" : "PASS", failures, criteria.size());
  return failures ? 1 : 0;
}
