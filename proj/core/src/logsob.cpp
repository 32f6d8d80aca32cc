// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "wehrl/logsob.hpp"

#include <cmath>
#include <numbers>

#include "wehrl/entropy.hpp"
#include "wehrl/error.hpp"
#include "wehrl/husimi.hpp"
#include "wehrl/optimize.hpp"

namespace wehrl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNormTol = 1e-12;

// v_n = e^{-s/2} (pi/h)^{n/2} z^n / sqrt(n!), s = pi |z|^2 / h.
void scaled_basis(cplx z, double h, int dim, std::vector<cplx>& v) {
  v.resize(dim);
  const double s = kPi * std::norm(z) / h;
  v[0] = std::exp(-0.5 * s);
  const cplx step = std::sqrt(kPi / h) * z;
  for (int n = 1; n < dim; ++n) v[n] = v[n - 1] * step / std::sqrt(static_cast<double>(n));
}

struct Frame {
  cplx center;
  double s_max;
};

// Quadrature frame in z: centred at the (scaled) Husimi centroid.
Frame frame_for(const FockFunction& F, const QuadratureScheme& scheme) {
  const HusimiEvaluator u(DensityMatrix::pure(FockVector::from_unit(F.coeffs())));
  return {std::sqrt(F.h()) * u.centroid().z(), F.h() * u.support_s(scheme.tail_mass)};
}

// |<G_gamma, a>| for the unit optimizer with b_n ~ gamma^n / sqrt(n!).
double overlap(const CVector& a, cplx gamma) {
  const PhasePoint z0{gamma.real() / std::sqrt(kPi), gamma.imag() / std::sqrt(kPi)};
  const int dim = static_cast<int>(a.size());
  return std::abs(coherent_fock_vector(z0, coherent_dim(z0, dim)).coeffs().head(dim).dot(a));
}

}  // namespace

FockFunction::FockFunction(CVector coeffs, double h) : coeffs_(std::move(coeffs)), h_(h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "h must be positive");
  if (coeffs_.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty coefficient vector");
  if (std::abs(coeffs_.squaredNorm() - 1.0) > kNormTol) {
    throw Error(ErrorCode::InvalidArgument, "Fock function must have unit norm");
  }
}

FockFunction FockFunction::normalized(CVector coeffs, double h) {
  const double n = coeffs.norm();
  if (!(n > 0.0)) throw Error(ErrorCode::InvalidArgument, "zero coefficient vector");
  return FockFunction(coeffs / n, h);
}

cplx FockFunction::operator()(cplx z) const {
  cplx sum = 0.0, term = 1.0;
  const cplx step = std::sqrt(kPi / h_) * z;
  for (int n = 0; n < dim(); ++n) {
    if (n > 0) term *= step / std::sqrt(static_cast<double>(n));
    sum += coeffs_[n] * term;
  }
  return sum;
}

double dirichlet_form(const FockFunction& F) {
  double d = 0.0;
  for (int n = 1; n < F.dim(); ++n) d += n * std::norm(F.coeffs()[n]);
  return d;
}

double dirichlet_form_quadrature(const FockFunction& F, const QuadratureScheme& scheme) {
  const Frame fr = frame_for(F, scheme);
  const PolarGrid grid(fr.center, fr.s_max, scheme, 2 * F.dim() + 64);
  const double h = F.h();
  const int dim = F.dim();
  std::vector<cplx> v;
  return grid.integrate([&](cplx z) {
    scaled_basis(z, h, dim, v);
    cplx d = 0.0;
    for (int n = 1; n < dim; ++n) d += F.coeffs()[n] * std::sqrt(n * kPi / h) * v[n - 1];
    return std::norm(d) / kPi;
  });
}

double entropy_term(const FockFunction& F, const QuadratureScheme& scheme) {
  const Frame fr = frame_for(F, scheme);
  const PolarGrid grid(fr.center, fr.s_max, scheme, 2 * F.dim() + 64);
  const double h = F.h();
  const int dim = F.dim();
  std::vector<cplx> v;
  return grid.integrate([&](cplx z) {
    scaled_basis(z, h, dim, v);
    cplx g = 0.0;
    for (int n = 0; n < dim; ++n) g += F.coeffs()[n] * v[n];
    const double q = std::norm(g);  // |F|^2 e^{-s}
    if (q <= 0.0) return 0.0;
    return q * (std::log(q) + kPi * std::norm(z) / h) / h;
  });
}

FockFunction optimizer_function(cplx beta, int dim, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "h must be positive");
  const cplx gamma = beta * std::sqrt(h / kPi);
  const PhasePoint z0{gamma.real() / std::sqrt(kPi), gamma.imag() / std::sqrt(kPi)};
  if (coherent_tail_mass(z0, dim) >= 1e-12) {
    throw Error(ErrorCode::TailTooLarge, "optimizer not representable in dim " + std::to_string(dim));
  }
  CVector b(dim);
  b[0] = std::exp(-0.5 * std::norm(gamma));
  for (int n = 1; n < dim; ++n) b[n] = b[n - 1] * gamma / std::sqrt(static_cast<double>(n));
  return FockFunction::normalized(std::move(b), h);
}

LogSobReport logsob_deficit(const FockFunction& F, const QuadratureScheme& scheme) {
  LogSobReport r;
  r.dirichlet = dirichlet_form(F);
  r.entropy = entropy_term(F, scheme);
  r.deficit = r.dirichlet - r.entropy;
  if (r.deficit < -1e-8) {
    throw Error(ErrorCode::AssertionFailure, "negative log-Sobolev deficit " + std::to_string(r.deficit));
  }

  // search over gamma = beta sqrt(h / pi), where b_n ~ gamma^n / sqrt(n!)
  const CVector& a = F.coeffs();
  std::vector<cplx> seeds;
  if (std::abs(a[0]) > 0.1 && F.dim() > 1) seeds.push_back(a[1] / a[0]);
  cplx best_grid = 0.0;
  double best_val = -1.0;
  for (double x = -3.0; x <= 3.0 + 1e-9; x += 0.5) {
    for (double y = -3.0; y <= 3.0 + 1e-9; y += 0.5) {
      const double o = overlap(a, {x, y});
      if (o > best_val) {
        best_val = o;
        best_grid = {x, y};
      }
    }
  }
  seeds.push_back(best_grid);
  auto objective = [&](const Point2& p) { return -overlap(a, {p[0], p[1]}); };
  NelderMeadOptions opts;
  opts.initial_step = 0.1;
  double best = -1.0;
  cplx gamma = 0.0;
  for (const cplx s : seeds) {
    const auto res = nelder_mead_2d(objective, {s.real(), s.imag()}, opts);
    if (-res.value > best) {
      best = -res.value;
      gamma = {res.x[0], res.x[1]};
    }
  }
  r.distance2 = std::max(0.0, 2.0 - 2.0 * std::min(best, 1.0));
  r.beta = gamma * std::sqrt(kPi / F.h());
  r.ratio = r.distance2 > 1e-12 ? r.deficit / r.distance2 : std::numeric_limits<double>::quiet_NaN();
  return r;
}

FockFunction bargmann_bridge(const FockVector& f) { return FockFunction::normalized(f.coeffs(), 1.0); }

BridgeReport bridge_check(const FockVector& f, const QuadratureScheme& scheme) {
  BridgeReport r;
  const FockFunction F = bargmann_bridge(f);
  r.logsob = dirichlet_form(F) - entropy_term(F, scheme);
  r.wehrl_minus_1 = wehrl_entropy(DensityMatrix::pure(f), scheme) - 1.0;
  r.difference = std::abs(r.logsob - r.wehrl_minus_1);
  return r;
}

FockFunction random_fock_function(int dim, std::uint64_t seed, double h) {
  return FockFunction::normalized(random_pure_state(dim, seed).coeffs(), h);
}

}  // namespace wehrl
