// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "wehrl/husimi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "wehrl/error.hpp"
#include "wehrl/optimize.hpp"
#include "wehrl/quadrature.hpp"

namespace wehrl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRangeTol = 1e-12;

// |e_n(z)| e^{-pi|z|^2/2} as a function of s = pi |z|^2.
double radial_weight(int n, double s) {
  if (s <= 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(0.5 * (n * std::log(s) - s - boost::math::lgamma(n + 1.0)));
}

}  // namespace

HusimiEvaluator::HusimiEvaluator(const DensityMatrix& rho) : rho_(rho) {
  const int dim = rho.dim();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  const auto& vals = es.eigenvalues();
  // eigensolver round-off would otherwise inflate the rank of pure input
  const double floor = 1e-14 * std::max(vals[dim - 1], 0.0);
  std::vector<int> keep;
  for (int k = dim - 1; k >= 0; --k) {
    if (vals[k] > floor) keep.push_back(k);
  }
  rank_ = static_cast<int>(keep.size());
  factor_.assign(static_cast<std::size_t>(dim) * rank_, cplx{});
  for (int j = 0; j < rank_; ++j) {
    const double s = std::sqrt(vals[keep[j]]);
    for (int m = 0; m < dim; ++m) factor_[m * rank_ + j] = s * es.eigenvectors()(m, keep[j]);
  }
  centroid_ = husimi_centroid(rho);
  populations_ = rho.matrix().diagonal().real().cwiseMax(0.0);
  abs_rho_ = rho.matrix().cwiseAbs();
}

double HusimiEvaluator::operator()(cplx z) const {
  const int dim = rho_.dim();
  thread_local std::vector<cplx> acc;
  acc.assign(rank_, cplx{});
  const double s = kPi * std::norm(z);
  cplx v = std::exp(-0.5 * s);
  const cplx step = std::sqrt(kPi) * z;
  for (int m = 0; m < dim; ++m) {
    if (m > 0) v *= step / std::sqrt(static_cast<double>(m));
    const cplx* row = &factor_[static_cast<std::size_t>(m) * rank_];
    for (int j = 0; j < rank_; ++j) acc[j] += row[j] * v;
  }
  double u = 0.0;
  for (int j = 0; j < rank_; ++j) u += std::norm(acc[j]);
  if (u > 1.0) {
    if (u > 1.0 + kRangeTol) throw Error(ErrorCode::InvalidState, "Husimi value above 1");
    u = 1.0;
  }
  return u;
}

double HusimiEvaluator::support_s(double tail) const {
  const double s_origin = radial_tail_cutoff(populations_, tail);
  const double r = std::sqrt(s_origin / kPi) + std::abs(centroid_.z());
  return kPi * r * r;
}

double HusimiEvaluator::envelope_radius(double threshold) const {
  if (!(threshold > 0.0)) throw Error(ErrorCode::InvalidArgument, "threshold must be positive");
  const int dim = rho_.dim();
  Eigen::VectorXd w(dim);
  auto bound = [&](double s) {
    for (int n = 0; n < dim; ++n) w[n] = radial_weight(n, s);
    return w.dot(abs_rho_ * w);
  };
  // Each radial weight decreases for s > n, so the bound is monotone beyond dim - 1.
  const double ds = 0.05;
  double last_above = 0.0;
  for (double s = 0.0;; s += ds) {
    const double b = bound(s);
    if (b >= threshold) last_above = s;
    if (s >= dim - 1 && b < threshold) break;
  }
  const double s_out = last_above + ds;
  return std::sqrt(s_out / kPi) + std::abs(centroid_.z());
}

double husimi_eval(const DensityMatrix& rho, const PhasePoint& z) { return HusimiEvaluator(rho)(z); }

namespace {

PhasePoint newton_polish(const HusimiEvaluator& u, PhasePoint p, int& evals) {
  const double h = 1e-4;
  auto lnu = [&](double x, double w) {
    ++evals;
    return std::log(u(PhasePoint{x, w}));
  };
  double best = u(p);
  for (int it = 0; it < 8; ++it) {
    const double f0 = lnu(p.x, p.omega);
    const double fxp = lnu(p.x + h, p.omega), fxm = lnu(p.x - h, p.omega);
    const double fyp = lnu(p.x, p.omega + h), fym = lnu(p.x, p.omega - h);
    const double fpp = lnu(p.x + h, p.omega + h), fpm = lnu(p.x + h, p.omega - h);
    const double fmp = lnu(p.x - h, p.omega + h), fmm = lnu(p.x - h, p.omega - h);
    const double gx = (fxp - fxm) / (2 * h), gy = (fyp - fym) / (2 * h);
    const double hxx = (fxp - 2 * f0 + fxm) / (h * h);
    const double hyy = (fyp - 2 * f0 + fym) / (h * h);
    const double hxy = (fpp - fpm - fmp + fmm) / (4 * h * h);
    const double det = hxx * hyy - hxy * hxy;
    if (!(hxx < 0.0 && det > 0.0)) break;  // not locally concave
    const double dx = -(hyy * gx - hxy * gy) / det;
    const double dy = -(-hxy * gx + hxx * gy) / det;
    if (std::hypot(dx, dy) > 1e-3) break;
    const PhasePoint next{p.x + dx, p.omega + dy};
    const double val = u(next);
    if (val < best) break;
    best = val;
    p = next;
    if (std::hypot(dx, dy) < 1e-14) break;
  }
  return p;
}

}  // namespace

MaxReport husimi_max(const HusimiEvaluator& u, double grid_radius, double grid_step) {
  if (!(grid_radius > 0.0) || !(grid_step > 0.0) || grid_step > grid_radius) {
    throw Error(ErrorCode::InvalidArgument, "bad grid radius/step");
  }
  const PhasePoint c = u.centroid();
  struct Sample {
    PhasePoint p;
    double value;
  };
  std::vector<Sample> interior;
  double boundary_max = 0.0;
  const int rings = static_cast<int>(std::round(grid_radius / grid_step));
  int evals = 0;
  for (int i = 0; i <= rings; ++i) {
    const double r = grid_radius * i / rings;
    const int count = i == 0 ? 1 : std::max(8, static_cast<int>(std::ceil(2 * kPi * r / grid_step)));
    for (int k = 0; k < count; ++k) {
      const double th = 2 * kPi * k / count;
      const PhasePoint p{c.x + r * std::cos(th), c.omega + r * std::sin(th)};
      const double val = u(p);
      ++evals;
      if (i == rings) {
        boundary_max = std::max(boundary_max, val);
      } else {
        interior.push_back({p, val});
      }
    }
  }
  std::sort(interior.begin(), interior.end(),
            [](const Sample& a, const Sample& b) { return a.value > b.value; });
  if (interior.empty() || boundary_max >= interior.front().value) {
    throw Error(ErrorCode::BoundaryMaximum, "maximum of the Husimi grid lies on its boundary");
  }

  MaxReport best;
  const int starts = std::min<int>(5, static_cast<int>(interior.size()));
  NelderMeadOptions opts;
  opts.initial_step = 0.5 * grid_step;
  opts.xtol = 1e-10;
  for (int k = 0; k < starts; ++k) {
    auto res = nelder_mead_2d([&](const Point2& x) { return -u(PhasePoint{x[0], x[1]}); },
                              {interior[k].p.x, interior[k].p.omega}, opts);
    evals += res.evals;
    PhasePoint p = newton_polish(u, PhasePoint{res.x[0], res.x[1]}, evals);
    const double val = u(p);
    if (val > best.T) {
      best.T = val;
      best.zstar = p;
    }
  }
  best.iterations = evals;
  return best;
}

MaxReport husimi_max(const DensityMatrix& rho, double grid_radius, double grid_step) {
  return husimi_max(HusimiEvaluator(rho), grid_radius, grid_step);
}

cplx bargmann_stft(const FockVector& f, const PhasePoint& p) {
  const cplx z = p.z();
  const double s = kPi * std::norm(z);
  // F(z) e^{-s/2} with the same scaled recursion as the evaluator.
  cplx v = std::exp(-0.5 * s);
  cplx acc = f[0] * v;
  const cplx step = std::sqrt(kPi) * z;
  for (int n = 1; n < f.dim(); ++n) {
    v *= step / std::sqrt(static_cast<double>(n));
    acc += f[n] * v;
  }
  return std::polar(1.0, -kPi * p.x * p.omega) * acc;
}

std::vector<double> hermite_functions(double x, int count) {
  std::vector<double> h(std::max(count, 0));
  if (count <= 0) return h;
  const double s = std::sqrt(2 * kPi) * x;
  h[0] = std::pow(2.0, 0.25) * std::exp(-kPi * x * x);
  if (count > 1) h[1] = std::sqrt(2.0) * s * h[0];
  for (int n = 1; n + 1 < count; ++n) {
    h[n + 1] = std::sqrt(2.0 / (n + 1)) * s * h[n] - std::sqrt(static_cast<double>(n) / (n + 1)) * h[n - 1];
  }
  return h;
}

cplx stft_quadrature(const FockVector& f, const PhasePoint& z, int quad_points) {
  if (quad_points < 200) throw Error(ErrorCode::InvalidArgument, "quad_points must be >= 200");
  if (f.dim() > 32) throw Error(ErrorCode::InvalidArgument, "Hermite synthesis limited to dim <= 32");
  // Hermite functions up to degree 31 are negligible beyond |x| ~ 6.5.
  const double lo = std::min(-7.0, z.x - 7.0);
  const double hi = std::max(7.0, z.x + 7.0);
  const double dx = (hi - lo) / (quad_points - 1);
  const double norm0 = std::pow(2.0, 0.25);
  cplx total = 0.0;
  for (int i = 0; i < quad_points; ++i) {
    const double x = lo + i * dx;
    const auto h = hermite_functions(x, f.dim());
    cplx fx = 0.0;
    for (int n = 0; n < f.dim(); ++n) fx += f[n] * h[n];
    // conj(phi_{(x0,w0)}(x)) = e^{-2 pi i w0 x} 2^{1/4} e^{-pi (x - x0)^2}
    const cplx window = std::polar(norm0 * std::exp(-kPi * (x - z.x) * (x - z.x)),
                                   -2 * kPi * z.omega * x);
    const double w = (i == 0 || i == quad_points - 1) ? 0.5 : 1.0;
    total += w * window * fx;
  }
  return total * dx;
}

double log_laplacian_check(const HusimiEvaluator& u, const PhasePoint& z, double h) {
  if (h < 1e-4 || h > 1e-2) throw Error(ErrorCode::InvalidArgument, "h must lie in [1e-4, 1e-2]");
  if (u(z) <= 1e-8) throw Error(ErrorCode::ValueTooSmall, "u(z) <= 1e-8");
  auto lap = [&](double step) {
    const double c = std::log(u(z));
    const double sum = std::log(u(PhasePoint{z.x + step, z.omega})) +
                       std::log(u(PhasePoint{z.x - step, z.omega})) +
                       std::log(u(PhasePoint{z.x, z.omega + step})) +
                       std::log(u(PhasePoint{z.x, z.omega - step}));
    return (sum - 4 * c) / (step * step);
  };
  return (4 * lap(0.5 * h) - lap(h)) / 3.0;
}

double log_laplacian_check(const DensityMatrix& rho, const PhasePoint& z, double h) {
  return log_laplacian_check(HusimiEvaluator(rho), z, h);
}

std::vector<GridSample> husimi_grid(const DensityMatrix& rho, double radius, double step) {
  if (!(radius > 0.0) || !(step > 0.0)) throw Error(ErrorCode::InvalidArgument, "bad grid");
  const HusimiEvaluator u(rho);
  const int n = static_cast<int>(std::round(2 * radius / step));
  std::vector<GridSample> out;
  out.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j) {
    const double w = -radius + j * step;
    for (int i = 0; i <= n; ++i) {
      const double x = -radius + i * step;
      out.push_back({x, w, u(PhasePoint{x, w})});
    }
  }
  return out;
}

}  // namespace wehrl
