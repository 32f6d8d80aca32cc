// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "wehrl/error.hpp"
#include "wehrl/logsob.hpp"

using namespace wehrl;
constexpr double kGamma = std::numbers::egamma;

namespace {

FockFunction linear_monomial(double h = 1.0) {
  CVector a = CVector::Zero(3);
  a(1) = 1.0;
  return FockFunction(a, h);
}

}  // namespace

TEST(FockFunction, Validation) {
  CVector a = CVector::Zero(2);
  a(0) = 2.0;
  EXPECT_THROW(FockFunction{a}, Error);
  EXPECT_NEAR(FockFunction::normalized(a).coeffs().norm(), 1.0, 1e-15);
  EXPECT_THROW(FockFunction::normalized(CVector::Zero(2)), Error);
}

TEST(FockFunction, Evaluation) {
  const auto F = linear_monomial();
  const cplx z(0.3, -0.2);
  EXPECT_NEAR(std::abs(F(z) - std::sqrt(std::numbers::pi) * z), 0.0, 1e-15);
}

TEST(LogSob, DirichletClosedFormVsQuadrature) {
  EXPECT_NEAR(dirichlet_form(linear_monomial()), 1.0, 1e-15);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto F = random_fock_function(6, seed);
    EXPECT_NEAR(dirichlet_form(F), dirichlet_form_quadrature(F), 1e-8);
  }
  const auto G = optimizer_function({0.5, 0.2}, 32);
  EXPECT_NEAR(dirichlet_form(G), dirichlet_form_quadrature(G), 1e-8);
}

TEST(LogSob, LinearMonomialDeficitIsGamma) {
  EXPECT_NEAR(entropy_term(linear_monomial()), 1 - kGamma, 1e-8);
  const auto r = logsob_deficit(linear_monomial());
  EXPECT_NEAR(r.deficit, kGamma, 1e-8);
  EXPECT_NEAR(r.distance2, 2 - 2 * std::exp(-0.5), 1e-6);
}

TEST(LogSob, OptimizersHaveZeroDeficit) {
  for (cplx beta : {cplx(0, 0), cplx(0.4, -0.3), cplx(-0.8, 0.5)}) {
    const auto r = logsob_deficit(optimizer_function(beta, 40));
    EXPECT_NEAR(r.deficit, 0.0, 1e-8);
    EXPECT_LT(r.distance2, 1e-8);
  }
  EXPECT_THROW(optimizer_function({5.0, 5.0}, 8), Error);
}

TEST(LogSob, ScalingInH) {
  // deficit is invariant under the h-rescaling of the same coefficients
  const auto F1 = random_fock_function(5, 7, 1.0), F2 = F1.with_h(2.0);
  EXPECT_NEAR(logsob_deficit(F1).deficit, logsob_deficit(F2).deficit, 1e-8);
  EXPECT_NEAR(logsob_deficit(linear_monomial(2.0)).deficit, kGamma, 1e-8);
}

TEST(LogSob, BridgeIdentity) {
  EXPECT_NEAR(bridge_check(FockVector::basis(1, 3)).logsob, kGamma, 1e-8);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = bridge_check(random_pure_state(6, seed));
    EXPECT_LT(std::abs(r.difference), 1e-6);
    EXPECT_GE(r.logsob, -1e-8);
  }
}
