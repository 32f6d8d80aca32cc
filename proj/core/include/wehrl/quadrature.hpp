// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace wehrl {

/// Polar Gauss-Legendre scheme in s = pi r^2 (so dA = ds dtheta / 2pi).
struct QuadratureScheme {
  int radial_nodes = 256;   // lower bound; panels of 30 nodes, width <= 4 in s
  int angular_nodes = 128;  // lower bound; raised to resolve high Fock indices
  double tail_mass = 1e-15;
};

struct Node1D {
  double x;
  double w;
};

/// Composite 30-point Gauss-Legendre rule on [a, b] with `panels` equal panels.
std::vector<Node1D> gauss_legendre_panels(double a, double b, int panels);

/// Smallest s with Sum_n weights[n] * Q(n+1, s) < tail, where Q is the
/// regularized upper incomplete gamma. This bounds the mass of a Husimi density
/// with Fock populations `weights` outside the origin disk of area s.
double radial_tail_cutoff(const Eigen::VectorXd& weights, double tail);

/// Product grid: Gauss-Legendre in s on [0, s_max], trapezoid in theta.
class PolarGrid {
 public:
  PolarGrid(std::complex<double> center, double s_max, const QuadratureScheme& scheme,
            int min_angular = 0);

  /// Integral over the plane of g(z) dA (g negligible beyond s_max).
  template <class F>
  double integrate(F&& g) const {
    const int m = angular_;
    double total = 0.0;
    for (const auto& node : s_nodes_) {
      const double r = std::sqrt(node.x / std::numbers::pi);
      double ring = 0.0;
      for (int k = 0; k < m; ++k) ring += g(center_ + r * unit_[k]);
      total += node.w * ring / m;
    }
    return total;
  }

  std::complex<double> center() const { return center_; }
  double s_max() const { return s_max_; }
  int angular() const { return angular_; }
  std::size_t size() const { return s_nodes_.size() * static_cast<std::size_t>(angular_); }

 private:
  std::complex<double> center_;
  double s_max_;
  int angular_;
  std::vector<Node1D> s_nodes_;
  std::vector<std::complex<double>> unit_;
};

}  // namespace wehrl
