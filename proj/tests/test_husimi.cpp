// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "wehrl/error.hpp"
#include "wehrl/husimi.hpp"

using namespace wehrl;
constexpr double kPi = std::numbers::pi;

TEST(Husimi, FockStateClosedForm) {
  // u_{e_n}(z) = s^n e^{-s} / n!, s = pi |z|^2
  for (int n = 0; n < 4; ++n) {
    const auto rho = DensityMatrix::pure(FockVector::basis(n, 6));
    for (const PhasePoint z : {PhasePoint{0.2, 0.1}, PhasePoint{-0.5, 0.7}, PhasePoint{1.1, 0.0}}) {
      const double s = kPi * std::norm(z.z());
      EXPECT_NEAR(husimi_eval(rho, z), std::pow(s, n) * std::exp(-s) / std::tgamma(n + 1), 1e-14);
    }
  }
}

TEST(Husimi, CoherentStateIsGaussian) {
  const PhasePoint z0{0.4, -0.6};
  const auto rho = DensityMatrix::pure(coherent_fock_vector(z0, 48));
  const PhasePoint z{0.1, 0.2};
  EXPECT_NEAR(husimi_eval(rho, z), std::exp(-kPi * std::norm(z.z() - z0.z())), 1e-13);
}

TEST(Husimi, MixedIsConvexCombination) {
  const auto a = random_pure_state(5, 1), b = random_pure_state(5, 2);
  const auto rho = DensityMatrix::mixture({0.3, 0.7}, {a, b});
  const PhasePoint z{0.3, 0.4};
  const double expect = 0.3 * husimi_eval(DensityMatrix::pure(a), z) +
                        0.7 * husimi_eval(DensityMatrix::pure(b), z);
  EXPECT_NEAR(husimi_eval(rho, z), expect, 1e-14);
}

TEST(Husimi, ClosedFormStftMatchesQuadrature) {
  const auto f = random_pure_state(8, 5);
  for (const PhasePoint z : {PhasePoint{0.0, 0.0}, PhasePoint{0.4, -0.3}, PhasePoint{-0.8, 0.9}}) {
    const cplx a = bargmann_stft(f, z), b = stft_quadrature(f, z, 400);
    EXPECT_NEAR(std::abs(a - b), 0.0, 1e-10);
    EXPECT_NEAR(std::norm(a), husimi_eval(DensityMatrix::pure(f), z), 1e-13);
  }
}

TEST(Husimi, HermiteFunctionsOrthonormal) {
  const int n = 6, q = 2000;
  const double L = 6.0, dx = 2 * L / q;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i <= q; ++i) {
    const auto h = hermite_functions(-L + i * dx, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g(a, b) += h[a] * h[b] * dx;
  }
  EXPECT_NEAR((g - Eigen::MatrixXd::Identity(n, n)).norm(), 0.0, 1e-10);
  EXPECT_NEAR(hermite_functions(0.3, 1)[0], std::pow(2.0, 0.25) * std::exp(-kPi * 0.09), 1e-15);
}

TEST(Husimi, MaximumOfFockStates) {
  // max of s^n e^{-s} / n! is n^n e^{-n} / n!
  for (int n = 1; n < 4; ++n) {
    const auto m = husimi_max(DensityMatrix::pure(FockVector::basis(n, 6)));
    EXPECT_NEAR(m.T, std::pow(n, n) * std::exp(-n) / std::tgamma(n + 1), 1e-12);
    EXPECT_NEAR(kPi * std::norm(m.zstar.z()), n, 1e-5);
  }
  const PhasePoint z0{0.7, 0.2};
  const auto c = husimi_max(DensityMatrix::pure(coherent_fock_vector(z0, 48)));
  EXPECT_NEAR(c.T, 1.0, 1e-12);
  EXPECT_NEAR(std::abs(c.zstar.z() - z0.z()), 0.0, 1e-6);
}

TEST(Husimi, LogLaplacianOfPureState) {
  const auto rho = DensityMatrix::pure(random_pure_state(6, 9));
  for (const PhasePoint z : {PhasePoint{0.1, 0.2}, PhasePoint{-0.3, 0.4}})
    EXPECT_NEAR(log_laplacian_check(rho, z), -4 * kPi, 1e-4);
  const auto far = DensityMatrix::pure(FockVector::basis(0, 3));
  EXPECT_THROW(log_laplacian_check(far, PhasePoint{5.0, 5.0}), Error);
}

TEST(Husimi, GridAndIntegralOne) {
  const auto rho = random_density_matrix(4, 2, 3);
  const double step = 0.05;
  double total = 0.0;
  for (const auto& g : husimi_grid(rho, 4.0, step)) {
    EXPECT_GE(g.u, 0.0);
    EXPECT_LE(g.u, 1.0);
    total += g.u * step * step;
  }
  EXPECT_NEAR(total, 1.0, 1e-6);
}
