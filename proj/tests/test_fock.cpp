// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "wehrl/error.hpp"
#include "wehrl/fock.hpp"

using namespace wehrl;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no wehrl::Error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(FockVector, NormalizationAndValidation) {
  CVector a(3);
  a << 1.0, cplx(0, 1), 1.0;
  const auto f = FockVector::normalized(a);
  EXPECT_NEAR(f.coeffs().norm(), 1.0, 1e-15);
  EXPECT_EQ(code_of([&] { FockVector::from_unit(a); }), ErrorCode::InvalidState);
  EXPECT_EQ(code_of([] { FockVector::normalized(CVector::Zero(4)); }), ErrorCode::InvalidState);
  EXPECT_EQ(code_of([] { FockVector::basis(5, 3); }), ErrorCode::InvalidArgument);
}

TEST(FockVector, InnerIsAntilinearInFirstSlot) {
  CVector a(2), b(2);
  a << cplx(0, 1), 0.0;
  b << 1.0, 0.0;
  const auto f = FockVector::from_unit(a), g = FockVector::from_unit(b);
  EXPECT_NEAR(std::abs(f.inner(g) - cplx(0, -1)), 0.0, 1e-15);
}

TEST(DensityMatrix, RejectsInvalidMatrices) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  m(0, 1) = 0.1;
  EXPECT_EQ(code_of([&] { DensityMatrix::from_matrix(m); }), ErrorCode::InvalidState);  // not Hermitian
  m(1, 0) = 0.1;
  EXPECT_NO_THROW(DensityMatrix::from_matrix(m));
  m(0, 1) = m(1, 0) = 0.9;
  EXPECT_EQ(code_of([&] { DensityMatrix::from_matrix(m); }), ErrorCode::NotPSD);
  m(0, 1) = m(1, 0) = 0.0;
  m(0, 0) = 0.6;
  EXPECT_EQ(code_of([&] { DensityMatrix::from_matrix(m); }), ErrorCode::InvalidState);  // trace
}

TEST(Coherent, OverlapMatchesGaussianKernel) {
  // |<phi_z1, phi_z2>|^2 = exp(-pi |z1 - z2|^2)
  const PhasePoint z1{0.3, 0.8}, z2{-0.4, 0.1};
  const auto a = coherent_fock_vector(z1, 64), b = coherent_fock_vector(z2, 64);
  const double d2 = std::norm(z1.z() - z2.z());
  EXPECT_NEAR(std::norm(a.inner(b)), std::exp(-std::numbers::pi * d2), 1e-13);
}

TEST(Coherent, TailGuard) {
  EXPECT_EQ(code_of([] { coherent_fock_vector({3.0, 3.0}, 16); }), ErrorCode::TailTooLarge);
  const PhasePoint z{1.0, -1.0};
  const int d = coherent_dim(z, 8, 1e-14);
  EXPECT_LT(coherent_tail_mass(z, d), 1e-14);
  EXPECT_NO_THROW(coherent_fock_vector(z, d));
}

TEST(Coherent, CentroidIsCentre) {
  const PhasePoint z0{0.3, 0.8};
  const auto c = husimi_centroid(DensityMatrix::pure(coherent_fock_vector(z0, 64)));
  EXPECT_NEAR(c.x, z0.x, 1e-12);
  EXPECT_NEAR(c.omega, z0.omega, 1e-12);
}

TEST(Spectral, RebuildAndOrdering) {
  const auto rho = random_density_matrix(6, 3, 11);
  const auto sd = spectral_decompose(rho, 1e-14);
  ASSERT_EQ(sd.weights.size(), 3u);
  EXPECT_GE(sd.weights[0], sd.weights[1]);
  EXPECT_GE(sd.weights[1], sd.weights[2]);
  EXPECT_NEAR((sd.rebuild() - rho.matrix()).norm(), 0.0, 1e-13);
}

TEST(Random, DeterministicPerSeed) {
  const auto a = random_density_matrix(5, 2, 7), b = random_density_matrix(5, 2, 7);
  EXPECT_EQ((a.matrix() - b.matrix()).norm(), 0.0);
  EXPECT_NEAR(a.matrix().trace().real(), 1.0, 1e-14);
  const auto c = random_density_matrix(5, 2, 8);
  EXPECT_GT((a.matrix() - c.matrix()).norm(), 1e-3);
  const auto f = random_pure_state(5, 7);
  EXPECT_NEAR(DensityMatrix::pure(f).purity(), 1.0, 1e-14);
}

TEST(DensityMatrix, MixtureAndPadding) {
  const auto rho = DensityMatrix::mixture({1.0, 3.0}, {FockVector::basis(0, 3), FockVector::basis(2, 3)});
  EXPECT_NEAR(rho(0, 0).real(), 0.25, 1e-15);
  EXPECT_NEAR(rho(2, 2).real(), 0.75, 1e-15);
  const auto big = rho.padded(5);
  EXPECT_EQ(big.dim(), 5);
  EXPECT_EQ(big(4, 4), cplx(0.0));
}
