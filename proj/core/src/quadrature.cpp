// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "wehrl/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "wehrl/error.hpp"

namespace wehrl {

namespace {

constexpr int kPanelPoints = 30;
constexpr double kMaxPanelWidth = 4.0;
constexpr int kGradedLevels = 12;

const std::vector<Node1D>& reference_rule() {
  static const std::vector<Node1D> rule = [] {
    using G = boost::math::quadrature::gauss<double, kPanelPoints>;
    std::vector<Node1D> r;
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
      r.push_back({x[i], w[i]});
      if (x[i] != 0.0) r.push_back({-x[i], w[i]});
    }
    std::sort(r.begin(), r.end(), [](const Node1D& a, const Node1D& b) { return a.x < b.x; });
    return r;
  }();
  return rule;
}

}  // namespace

std::vector<Node1D> gauss_legendre_panels(double a, double b, int panels) {
  if (panels < 1) throw Error(ErrorCode::InvalidArgument, "need at least one panel");
  const auto& ref = reference_rule();
  std::vector<Node1D> out;
  out.reserve(ref.size() * panels);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    for (const auto& n : ref) out.push_back({lo + 0.5 * h * (n.x + 1.0), 0.5 * h * n.w});
  }
  return out;
}

double radial_tail_cutoff(const Eigen::VectorXd& weights, double tail) {
  auto mass_beyond = [&](double s) {
    double m = 0.0;
    for (Eigen::Index n = 0; n < weights.size(); ++n) {
      if (weights[n] > 0.0) m += weights[n] * boost::math::gamma_q(static_cast<double>(n + 1), s);
    }
    return m;
  };
  double s = 1.0;
  while (mass_beyond(s) >= tail) s *= 1.25;
  double lo = s / 1.25, hi = s;
  for (int i = 0; i < 40; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mass_beyond(mid) >= tail ? lo : hi) = mid;
  }
  return hi;
}

PolarGrid::PolarGrid(std::complex<double> center, double s_max, const QuadratureScheme& scheme,
                     int min_angular)
    : center_(center), s_max_(s_max), angular_(std::max(scheme.angular_nodes, min_angular)) {
  if (!(s_max > 0.0)) throw Error(ErrorCode::InvalidArgument, "s_max must be positive");
  const int by_count = (scheme.radial_nodes + kPanelPoints - 1) / kPanelPoints;
  const int by_width = static_cast<int>(std::ceil(s_max / kMaxPanelWidth));
  const int panels = std::max(by_count, by_width);
  const double h = s_max / panels;
  // geometric grading of the first panel towards s = 0, where zeros of u at
  // the centre make u ln u singular
  double lo = h * std::ldexp(1.0, -kGradedLevels);
  s_nodes_ = gauss_legendre_panels(0.0, lo, 1);
  while (lo < h) {
    const auto part = gauss_legendre_panels(lo, 2.0 * lo, 1);
    s_nodes_.insert(s_nodes_.end(), part.begin(), part.end());
    lo *= 2.0;
  }
  if (panels > 1) {
    const auto rest = gauss_legendre_panels(h, s_max, panels - 1);
    s_nodes_.insert(s_nodes_.end(), rest.begin(), rest.end());
  }
  unit_.resize(angular_);
  for (int k = 0; k < angular_; ++k) {
    unit_[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / angular_);
  }
}

}  // namespace wehrl
