// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "wehrl/levelsets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include <boost/math/tools/toms748_solve.hpp>

#include "wehrl/error.hpp"
#include "wehrl/quadrature.hpp"

namespace wehrl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kScanIntervals = 1000;  // scan step = 1e-3 rmax
constexpr double kRootTol = 1e-12;
constexpr double kCoherentTol = 1e-10;
constexpr double kTstarTol = 1e-8;

}  // namespace

double mu0(double t) { return t < 1.0 ? -std::log(t) : 0.0; }

LevelSetSampler::LevelSetSampler(HusimiEvaluator u, double t_min, int rays, double rmax)
    : u_(std::move(u)), center_(u_.centroid()), rays_(rays) {
  if (rays < 8) throw Error(ErrorCode::InvalidArgument, "need at least 8 rays");
  if (!(t_min > 0.0)) throw Error(ErrorCode::InvalidArgument, "t_min must be positive");
  rmax_ = rmax > 0.0 ? rmax : std::max(0.5, u_.envelope_radius(0.1 * t_min));
  dr_ = rmax_ / kScanIntervals;
  directions_.resize(rays_);
  samples_.resize(rays_);
  for (int k = 0; k < rays_; ++k) {
    // rays in the (x, omega) plane; z = x - i omega
    const double th = 2 * kPi * k / rays_;
    directions_[k] = cplx(std::cos(th), -std::sin(th));
    auto& row = samples_[k];
    row.resize(kScanIntervals + 1);
    for (int i = 0; i <= kScanIntervals; ++i) row[i] = along(k, i * dr_);
  }
}

double LevelSetSampler::along(int ray, double r) const {
  return u_(center_.z() + r * directions_[ray]);
}

double LevelSetSampler::refine(int ray, double lo, double hi, double t) const {
  auto g = [&](double r) { return along(ray, r) - t; };
  const double glo = g(lo), ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  std::uintmax_t iters = 200;
  auto tol = [](double a, double b) { return std::abs(b - a) < kRootTol; };
  const auto [a, b] = boost::math::tools::toms748_solve(g, lo, hi, glo, ghi, tol, iters);
  return 0.5 * (a + b);
}

std::vector<RaySegment> LevelSetSampler::segments(int ray, double t) const {
  const auto& v = samples_.at(ray);
  std::vector<RaySegment> out;
  bool inside = v[0] > t;
  double start = 0.0;
  for (int i = 1; i <= kScanIntervals; ++i) {
    const bool now = v[i] > t;
    if (now == inside) continue;
    const double r = refine(ray, (i - 1) * dr_, i * dr_, t);
    if (now) {
      start = r;
    } else {
      out.push_back({start, r});
    }
    inside = now;
  }
  if (inside) {
    throw Error(ErrorCode::RadiusTooSmall, "super-level set reaches rmax at level " + std::to_string(t));
  }
  return out;
}

double LevelSetSampler::mu(double t) const {
  double total = 0.0;
  for (int k = 0; k < rays_; ++k) {
    for (const auto& s : segments(k, t)) total += 0.5 * (s.r_out * s.r_out - s.r_in * s.r_in);
  }
  return total * 2 * kPi / rays_;
}

double LevelSetSampler::hinge(double tau) const {
  double total = 0.0;
  for (int k = 0; k < rays_; ++k) {
    for (const auto& s : segments(k, tau)) {
      const int panels = std::max(1, static_cast<int>(std::ceil((s.r_out - s.r_in) / 0.5)));
      for (const auto& n : gauss_legendre_panels(s.r_in, s.r_out, panels)) {
        total += n.w * (along(k, n.x) - tau) * n.x;
      }
    }
  }
  return total * 2 * kPi / rays_;
}

double mu_of_t(const DensityMatrix& rho, double t, int rays, double rmax) {
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::InvalidArgument, "level t must lie in (0, 1)");
  if (rays < 256) throw Error(ErrorCode::InvalidArgument, "need at least 256 rays");
  return LevelSetSampler(HusimiEvaluator(rho), t, rays, rmax).mu(t);
}

double LevelProfile::H_at(double t) const {
  if (levels.empty()) return 0.0;
  if (t <= 0.0) return 0.0;
  if (t >= T) {
    auto prim = [](double s) { return s - s * std::log(s); };  // Int -ln
    return H.back() - (prim(std::min(t, 1.0)) - prim(T));
  }
  if (t <= levels.front()) return H.front() * t / levels.front();
  const auto it = std::upper_bound(levels.begin(), levels.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - levels.begin());
  const double w = (t - levels[k - 1]) / (levels[k] - levels[k - 1]);
  return (1 - w) * H[k - 1] + w * H[k];
}

LevelProfile build_profile(const LevelSetSampler& sampler, const MaxReport& max,
                           const ProfileOptions& opts) {
  if (opts.levels < 100) throw Error(ErrorCode::InvalidArgument, "need at least 100 levels");
  LevelProfile p;
  p.T = max.T;
  p.zstar = max.zstar;
  p.eps_t = opts.eps_t;
  p.no_crossing = p.T >= 1.0 - kCoherentTol;
  if (!(p.T > opts.eps_t)) throw Error(ErrorCode::InvalidArgument, "maximum below eps_t");

  const int K = opts.levels;
  const double log_eps = std::log(opts.eps_t);
  const double span = std::log(p.T) - log_eps;
  p.levels.resize(K);
  p.mu.resize(K);
  p.mu0.resize(K);
  p.H.resize(K);
  std::vector<double> dtdx(K);
  // t(x) = exp(log eps + span (1 - (1 - x)^2)): logarithmic near 0, quadratic
  // clustering at T where mu has a square-root or linear edge.
  for (int k = 0; k < K; ++k) {
    const double x = static_cast<double>(k) / (K - 1);
    const double g = 1.0 - (1.0 - x) * (1.0 - x);
    const double t = k == K - 1 ? p.T : std::exp(log_eps + span * g);
    p.levels[k] = t;
    dtdx[k] = t * span * 2.0 * (1.0 - x);
    p.mu[k] = k == K - 1 ? 0.0 : sampler.mu(t);
    p.mu0[k] = mu0(t);
  }

  // Int_0^eps mu ~ eps (mu(eps) + 1), exact for mu = -ln t.
  double acc = opts.eps_t * (p.mu[0] + 1.0);
  const double dx = 1.0 / (K - 1);
  for (int k = 0; k < K; ++k) {
    if (k > 0) acc += 0.5 * dx * (p.mu[k - 1] * dtdx[k - 1] + p.mu[k] * dtdx[k]);
    const double t = p.levels[k];
    p.H[k] = acc - t * (1.0 - std::log(t));
  }
  p.mass = acc;

  double prev = 0.0;
  for (int k = 0; k + 1 < K; ++k) {
    const double d = p.mu[k] - p.mu0[k];
    if (std::abs(d) < 1e-9) continue;
    if (prev != 0.0 && (d > 0) != (prev > 0)) ++p.sign_changes;
    prev = d;
  }

  if (!p.no_crossing) {
    auto diff = [&](double t) { return (t >= p.T ? 0.0 : sampler.mu(t)) - mu0(t); };
    for (int k = 0; k + 1 < K; ++k) {
      const double dk = p.mu[k] - p.mu0[k];
      const double dn = p.mu[k + 1] - p.mu0[k + 1];
      if (!(dk > 0.0 && dn <= 0.0)) continue;
      double lo = p.levels[k], hi = p.levels[k + 1];
      while (hi - lo > kTstarTol) {
        const double mid = 0.5 * (lo + hi);
        (diff(mid) > 0.0 ? lo : hi) = mid;
      }
      p.tstar = 0.5 * (lo + hi);
      const double tk = p.levels[k];
      const double mid = 0.5 * (tk + p.tstar);
      p.H_tstar = p.H[k] + (p.tstar - tk) / 6.0 * (dk + 4.0 * diff(mid));
      break;
    }
  }
  return p;
}

LevelProfile build_profile(const DensityMatrix& rho, const ProfileOptions& opts) {
  HusimiEvaluator u(rho);
  const MaxReport max = husimi_max(u);
  const LevelSetSampler sampler(std::move(u), opts.eps_t, opts.rays, opts.rmax);
  return build_profile(sampler, max, opts);
}

LevelProfile build_profile(const DensityMatrix& rho, int levels) {
  ProfileOptions opts;
  opts.levels = levels;
  return build_profile(rho, opts);
}

MuDifferentialReport check_mu_differential(const LevelProfile& profile, double tol,
                                           double lo_frac, double hi_frac) {
  if (profile.levels.size() < 200) throw Error(ErrorCode::InvalidArgument, "need at least 200 levels");
  MuDifferentialReport r;
  const auto& t = profile.levels;
  const auto& mu = profile.mu;
  for (std::size_t k = 1; k + 1 < t.size(); ++k) {
    if (t[k] <= lo_frac * profile.T || t[k] >= hi_frac * profile.T) continue;
    const double y0 = std::log(t[k - 1]), y1 = std::log(t[k]), y2 = std::log(t[k + 1]);
    const double h1 = y1 - y0, h2 = y2 - y1;
    const double dmu_dy = -h2 / (h1 * (h1 + h2)) * mu[k - 1] + (h2 - h1) / (h1 * h2) * mu[k] +
                          h1 / (h2 * (h1 + h2)) * mu[k + 1];
    const double excess = (dmu_dy + 1.0) / t[k];
    ++r.points;
    if (excess > r.max_excess) {
      r.max_excess = excess;
      r.at_t = t[k];
    }
  }
  r.passed = r.points > 0 && r.max_excess <= tol;
  return r;
}

MuBoundReport check_improved_mu_bound(const LevelProfile& profile, double t0, double C0) {
  if (!(t0 > 0.0 && t0 < 1.0)) throw Error(ErrorCode::InvalidArgument, "t0 must lie in (0, 1)");
  if (profile.T < t0) throw Error(ErrorCode::InvalidArgument, "T below t0");
  MuBoundReport r;
  const double gap = 1.0 - profile.T;
  double need = 0.0;
  for (std::size_t k = 0; k < profile.levels.size(); ++k) {
    const double t = profile.levels[k];
    if (t < t0 || t >= profile.T) continue;
    const double log_ratio = std::log(profile.T / t);
    if (log_ratio < 1e-12) continue;
    ++r.points;
    need = std::max(need, profile.mu[k] / log_ratio - 1.0);
  }
  if (gap < 1e-14) {
    r.minimal_C0 = need > 1e-9 ? std::numeric_limits<double>::infinity() : 0.0;
  } else {
    r.minimal_C0 = std::max(0.0, need / gap);
  }
  r.supplied_ok = C0 >= r.minimal_C0;
  return r;
}

HTReport check_HT_bound(const LevelProfile& profile) {
  if (profile.no_crossing || std::isnan(profile.tstar)) {
    throw Error(ErrorCode::NoCrossing, "no crossing point t* (coherent input)");
  }
  HTReport r;
  r.H_tstar = profile.H_tstar;
  r.ratio = (1.0 - profile.T) / profile.H_tstar;
  r.weak_bound = 0.5 * (1.0 - profile.T) * (1.0 - profile.T);
  r.weak_ok = r.H_tstar >= r.weak_bound - 1e-6;
  return r;
}

}  // namespace wehrl
