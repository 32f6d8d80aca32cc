// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/lambert_w.hpp>
#include <gtest/gtest.h>

#include "wehrl/entropy.hpp"
#include "wehrl/error.hpp"

using namespace wehrl;
constexpr double kGamma = std::numbers::egamma;

namespace {

// 1-D radial oracle: Int Phi(u) dA for u = s^n e^{-s} / n!, dA = ds.
double radial(int n, const std::function<double(double)>& phi) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double nf = std::tgamma(n + 1);
  auto g = [&](double s) { return phi(std::pow(s, n) * std::exp(-s) / nf); };
  return ts.integrate(g, 0.0, 2.0 * n + 2) + ts.integrate(g, 2.0 * n + 2, 80.0);
}

DensityMatrix fock(int n) { return DensityMatrix::pure(FockVector::basis(n, n + 4)); }

}  // namespace

TEST(Symbols, ParseAndBasicValues) {
  EXPECT_EQ(ConvexSymbol::parse("wehrl").kind(), SymbolKind::Wehrl);
  EXPECT_EQ(ConvexSymbol::parse("power:3").parameter(), 3.0);
  EXPECT_EQ(ConvexSymbol::parse("hinge:0.25").parameter(), 0.25);
  EXPECT_TRUE(ConvexSymbol::parse("linear").is_linear());
  EXPECT_TRUE(ConvexSymbol::parse("power:1").is_linear());
  EXPECT_THROW(ConvexSymbol::parse("power:0.5"), Error);
  EXPECT_THROW(ConvexSymbol::parse("hinge:1.5"), Error);
  EXPECT_THROW(ConvexSymbol::parse("cosh"), Error);
  EXPECT_EQ(ConvexSymbol::wehrl().value(0.0), 0.0);
  EXPECT_TRUE(std::isinf(ConvexSymbol::wehrl().derivative_at_zero()));
  for (auto s : {"wehrl", "power:2", "hinge:0.3", "linear:2"})
    EXPECT_TRUE(convexity_probe(ConvexSymbol::parse(s))) << s;
  EXPECT_FALSE(convexity_probe(ConvexSymbol::custom(
      "concave", [](double u) { return std::sqrt(u); }, [](double) { return 0.0; },
      [](double) { return 0.0; })));
}

TEST(Symbols, CustomRequiresZeroAtOrigin) {
  EXPECT_THROW(ConvexSymbol::custom(
                   "shifted", [](double u) { return u + 1; }, [](double) { return 1.0; },
                   [](double) { return 0.0; }),
               Error);
}

TEST(CoherentReference, ClosedForms) {
  for (double r : {1.0, 2.0, 3.0, 2.5}) EXPECT_NEAR(coherent_reference(ConvexSymbol::power(r)), 1.0 / r, 1e-10);
  EXPECT_NEAR(coherent_reference(ConvexSymbol::wehrl()), -1.0, 1e-10);
  for (double t : {0.1, std::exp(-1.0), 0.5}) {
    EXPECT_NEAR(coherent_reference(ConvexSymbol::hinge(t)), hinge_reference(t), 1e-10);
    EXPECT_NEAR(hinge_reference(t), 1 - t - t * std::log(1 / t), 1e-15);
  }
  const auto bad = ConvexSymbol::custom(
      "u", [](double u) { return u; }, [](double) { return 1.0; }, [](double) { return 0.0; }, {}, false);
  EXPECT_THROW(coherent_reference(bad), Error);
}

TEST(CPhi, KnownValues) {
  EXPECT_NEAR(c_phi_constant(ConvexSymbol::power(2), 1.0), 1.0 / 9, 1e-10);
  EXPECT_NEAR(c_phi_constant(ConvexSymbol::wehrl(), 1.0), 0.25, 1e-10);
  // hinge: Phi'' = delta_tau
  const double t = 0.3;
  EXPECT_NEAR(c_phi_constant(ConvexSymbol::hinge(t), 2.0), 2 * t * hinge_reference(t), 1e-12);
}

TEST(Superposition, RebuildsSymbols) {
  const std::vector<double> samples{0.0, 0.05, 0.2, 0.5, 0.9, 1.0};
  for (auto s : {"wehrl", "power:2", "power:3.5", "hinge:0.4"})
    EXPECT_LT(superposition_check(ConvexSymbol::parse(s), samples).max_abs_error, 1e-10) << s;
  const auto sqrt_log = ConvexSymbol::custom(
      "ulog2", [](double u) { return u > 0 ? u * std::log(u) * 2 : 0.0; },
      [](double u) { return u > 0 ? 2 * (std::log(u) + 1) : -INFINITY; }, [](double t) { return 2 / t; });
  EXPECT_THROW(superposition_check(sqrt_log, samples), Error);
}

TEST(PhiEntropy, CoherentStates) {
  const auto rho = DensityMatrix::pure(coherent_fock_vector({0.2, 0.4}, 40));
  EXPECT_NEAR(wehrl_entropy(rho), 1.0, 1e-10);
  EXPECT_NEAR(phi_entropy(rho, ConvexSymbol::power(2)), 0.5, 1e-10);
  EXPECT_NEAR(phi_entropy(rho, ConvexSymbol::hinge(0.3)), hinge_reference(0.3), 1e-7);
}

TEST(PhiEntropy, FockStatesAgainstRadialOracle) {
  EXPECT_NEAR(wehrl_entropy(fock(1)), 1 + kGamma, 1e-8);
  for (int n = 1; n <= 3; ++n) {
    EXPECT_NEAR(wehrl_entropy(fock(n)), -radial(n, [](double u) { return u > 0 ? u * std::log(u) : 0.0; }), 1e-8);
    EXPECT_NEAR(phi_entropy(fock(n), ConvexSymbol::power(2)), radial(n, [](double u) { return u * u; }), 1e-10);
    // (2n)! / (n!^2 2^{2n+1})
    const double closed = std::tgamma(2 * n + 1) / std::pow(std::tgamma(n + 1), 2) / std::pow(2.0, 2 * n + 1);
    EXPECT_NEAR(phi_entropy(fock(n), ConvexSymbol::power(2)), closed, 1e-12);
  }
}

TEST(PhiEntropy, HingeOfFirstFockState) {
  const double t = 0.2;
  const double s1 = -boost::math::lambert_w0(-t), s2 = -boost::math::lambert_wm1(-t);
  const double exact = (1 + s1) * std::exp(-s1) - (1 + s2) * std::exp(-s2) - t * (s2 - s1);
  EXPECT_NEAR(hinge_functional(fock(1), t), exact, 1e-7);
}

TEST(PhiEntropy, HingeIsMonotoneAndConvexInTau) {
  const auto rho = random_density_matrix(5, 2, 4);
  std::vector<double> v;
  for (int k = 1; k < 10; ++k) v.push_back(hinge_functional(rho, 0.03 * k));
  for (std::size_t i = 1; i < v.size(); ++i) EXPECT_LT(v[i], v[i - 1]);
  for (std::size_t i = 1; i + 1 < v.size(); ++i) EXPECT_GE(v[i - 1] + v[i + 1] - 2 * v[i], -1e-8);
}

TEST(PhiEntropy, LayerCakeAgreesWithDirect) {
  const auto rho = random_density_matrix(5, 2, 17);
  const auto profile = build_profile(rho);
  for (auto s : {"wehrl", "power:2", "power:3"}) {
    const auto r = phi_entropy_checked(rho, ConvexSymbol::parse(s), profile);
    EXPECT_LT(r.difference, 1e-4) << s;
  }
}

TEST(PhiEntropy, GeneralizedBoundOnFockStates) {
  for (int n = 1; n <= 3; ++n)
    for (auto s : {"power:2", "power:3", "hinge:0.2"}) {
      const auto phi = ConvexSymbol::parse(s);
      EXPECT_LT(phi_entropy(fock(n), phi), coherent_reference(phi)) << s << " n=" << n;
    }
}

TEST(Regularization, ConvergesToWehrl) {
  const auto rho = fock(1);
  const std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4};
  const auto sweep = regularization_sweep(rho, ConvexSymbol::wehrl(), eps);
  ASSERT_EQ(sweep.size(), eps.size());
  EXPECT_EQ(sweep[0].change, 0.0);
  EXPECT_LT(sweep.back().change, sweep[1].change);
  EXPECT_NEAR(sweep.back().value, -(1 + kGamma), 1e-3);
  const auto r = regularized(ConvexSymbol::wehrl(), 0.1);
  EXPECT_NEAR(r.derivative_at_zero(), -10.0, 1e-12);
  EXPECT_TRUE(convexity_probe(r));
}
