// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "wehrl/entropy.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "wehrl/error.hpp"
#include "wehrl/husimi.hpp"

namespace wehrl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kQuadTol = 1e-13;
constexpr double kRouteTol = 1e-3;

template <class F>
double integrate(F f, double a, double b) {
  if (!(b > a)) return 0.0;
  thread_local boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, a, b, kQuadTol);
}

// Splits [a, b] at atom positions and integrates piecewise.
template <class F>
double integrate_split(F f, double a, double b, const std::vector<MeasureAtom>& atoms) {
  std::vector<double> cuts{a};
  for (const auto& at : atoms) {
    if (at.position > a && at.position < b) cuts.push_back(at.position);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate(f, cuts[i], cuts[i + 1]);
  return total;
}

double parse_number(std::string_view text, std::string_view spec) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidArgument, "bad symbol parameter in '" + std::string(spec) + "'");
  }
  return v;
}

double u_log_u(double u) { return u > 0.0 ? u * std::log(u) : 0.0; }

}  // namespace

ConvexSymbol ConvexSymbol::power(double r) {
  if (!(r >= 1.0)) throw Error(ErrorCode::InvalidArgument, "power symbol needs r >= 1");
  ConvexSymbol s;
  s.kind_ = SymbolKind::Power;
  s.parameter_ = r;
  s.name_ = "power:" + std::to_string(r);
  s.value_ = [r](double u) { return u > 0.0 ? std::pow(u, r) : 0.0; };
  s.derivative_ = [r](double u) {
    if (r == 1.0) return 1.0;
    return u > 0.0 ? r * std::pow(u, r - 1.0) : 0.0;
  };
  s.density_ = [r](double t) { return r == 1.0 ? 0.0 : r * (r - 1.0) * std::pow(t, r - 2.0); };
  return s;
}

ConvexSymbol ConvexSymbol::wehrl() {
  ConvexSymbol s;
  s.kind_ = SymbolKind::Wehrl;
  s.name_ = "wehrl";
  s.value_ = u_log_u;
  s.derivative_ = [](double u) { return u > 0.0 ? std::log(u) + 1.0 : -kInf; };
  s.density_ = [](double t) { return 1.0 / t; };
  return s;
}

ConvexSymbol ConvexSymbol::hinge(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw Error(ErrorCode::InvalidArgument, "hinge needs 0 < tau < 1");
  ConvexSymbol s;
  s.kind_ = SymbolKind::Hinge;
  s.parameter_ = tau;
  s.name_ = "hinge:" + std::to_string(tau);
  s.value_ = [tau](double u) { return std::max(u - tau, 0.0); };
  s.derivative_ = [tau](double u) { return u >= tau ? 1.0 : 0.0; };
  s.density_ = [](double) { return 0.0; };
  s.atoms_ = {{tau, 1.0}};
  return s;
}

ConvexSymbol ConvexSymbol::linear(double slope) {
  ConvexSymbol s;
  s.kind_ = SymbolKind::Linear;
  s.parameter_ = slope;
  s.name_ = "linear:" + std::to_string(slope);
  s.value_ = [slope](double u) { return slope * u; };
  s.derivative_ = [slope](double) { return slope; };
  s.density_ = [](double) { return 0.0; };
  return s;
}

ConvexSymbol ConvexSymbol::custom(std::string name, Fn value, Fn right_derivative, Fn density,
                                  std::vector<MeasureAtom> atoms, bool integrable) {
  if (!value || !right_derivative || !density) {
    throw Error(ErrorCode::InvalidArgument, "custom symbol needs value, derivative and density");
  }
  if (value(0.0) != 0.0) throw Error(ErrorCode::InvalidArgument, "custom symbol must vanish at 0");
  for (const auto& a : atoms) {
    if (!(a.mass >= 0.0)) throw Error(ErrorCode::InvalidArgument, "negative atom mass");
  }
  ConvexSymbol s;
  s.kind_ = SymbolKind::Custom;
  s.name_ = std::move(name);
  s.value_ = std::move(value);
  s.derivative_ = std::move(right_derivative);
  s.density_ = std::move(density);
  s.atoms_ = std::move(atoms);
  s.integrable_ = integrable;
  return s;
}

ConvexSymbol ConvexSymbol::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const bool has_arg = colon != std::string_view::npos;
  const std::string_view arg = has_arg ? spec.substr(colon + 1) : std::string_view{};
  if (head == "wehrl" && !has_arg) return wehrl();
  if (head == "power" && has_arg) return power(parse_number(arg, spec));
  if (head == "hinge" && has_arg) return hinge(parse_number(arg, spec));
  if (head == "linear") return linear(has_arg ? parse_number(arg, spec) : 1.0);
  throw Error(ErrorCode::InvalidArgument, "unknown symbol '" + std::string(spec) + "'");
}

bool ConvexSymbol::is_linear() const {
  switch (kind_) {
    case SymbolKind::Linear: return true;
    case SymbolKind::Power: return parameter_ == 1.0;
    case SymbolKind::Custom: {
      if (!atoms_.empty()) return false;
      for (int k = 1; k < 20; ++k) {
        if (density_(k / 20.0) != 0.0) return false;
      }
      return true;
    }
    default: return false;
  }
}

ConvexSymbol regularized(const ConvexSymbol& phi, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const double slope = -1.0 / eps;
  if (phi.derivative_at_zero() >= slope) return phi;
  // crossover: Phi(u) / u = -1/eps, Phi(u)/u nondecreasing
  double lo = 0.0, hi = 1.0;
  if (phi.value(1.0) < slope) return ConvexSymbol::linear(slope);
  for (int i = 0; i < 200 && hi - lo > 1e-300; ++i) {
    const double mid = lo > 0.0 ? std::sqrt(lo * hi) : 0.5 * hi;
    const double q = phi.value(mid) / mid;
    (q < slope ? lo : hi) = mid;
    if (hi < 1e-300) break;
  }
  const double uc = hi;
  auto value = [phi, slope](double u) { return std::max(phi.value(u), slope * u); };
  auto derivative = [phi, slope, uc](double u) { return u < uc ? slope : phi.derivative(u); };
  auto density = [phi, uc](double t) { return t > uc ? phi.density(t) : 0.0; };
  std::vector<MeasureAtom> atoms{{uc, phi.derivative(uc) - slope}};
  for (const auto& a : phi.atoms()) {
    if (a.position > uc) atoms.push_back(a);
  }
  return ConvexSymbol::custom(phi.name() + "@eps=" + std::to_string(eps), value, derivative,
                              density, std::move(atoms), true);
}

bool convexity_probe(const ConvexSymbol& phi, int points, double tol) {
  if (points < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 probe points");
  if (phi.value(0.0) != 0.0) return false;
  for (int i = 0; i < points; ++i) {
    for (int j = i + 2; j < points; j += 2) {
      const double a = static_cast<double>(i) / (points - 1);
      const double b = static_cast<double>(j) / (points - 1);
      if (phi.value(0.5 * (a + b)) > 0.5 * (phi.value(a) + phi.value(b)) + tol) return false;
    }
  }
  return true;
}

double coherent_reference(const ConvexSymbol& phi) {
  if (!phi.integrable()) throw Error(ErrorCode::NonIntegrable, "Phi(t)/t not integrable at 0: " + phi.name());
  const double v = integrate_split([&](double t) { return phi.value(t) / t; }, 0.0, 1.0, phi.atoms());
  if (!std::isfinite(v)) throw Error(ErrorCode::NonIntegrable, "reference integral diverges: " + phi.name());
  return v;
}

double hinge_reference(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw Error(ErrorCode::InvalidArgument, "hinge needs 0 < tau < 1");
  return 1.0 - tau + tau * std::log(tau);
}

double hinge_functional(const DensityMatrix& rho, double tau, int rays) {
  if (!(tau > 0.0 && tau < 1.0)) throw Error(ErrorCode::InvalidArgument, "hinge needs 0 < tau < 1");
  return LevelSetSampler(HusimiEvaluator(rho), tau, rays).hinge(tau);
}

double phi_entropy(const DensityMatrix& rho, const ConvexSymbol& phi, const QuadratureScheme& scheme) {
  if (phi.kind() == SymbolKind::Hinge) return hinge_functional(rho, phi.parameter());
  const HusimiEvaluator u(rho);
  const PolarGrid grid(u.centroid().z(), u.support_s(scheme.tail_mass), scheme, 2 * rho.dim() + 64);
  if (phi.kind() == SymbolKind::Wehrl) return grid.integrate([&](cplx z) { return u_log_u(u(z)); });
  return grid.integrate([&](cplx z) { return phi.value(u(z)); });
}

double layer_cake_entropy(const LevelProfile& profile, const ConvexSymbol& phi) {
  const auto& t = profile.levels;
  const auto& mu = profile.mu;
  if (t.size() < 2) throw Error(ErrorCode::InvalidArgument, "empty profile");
  // Stieltjes sum of mu against dPhi on the level grid
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    total += 0.5 * (mu[k] + mu[k + 1]) * (phi.value(t[k + 1]) - phi.value(t[k]));
  }
  // below eps mu = -ln t + const: Int_0^eps Phi' mu = Phi(eps) mu(eps) + Int_0^eps Phi / t
  const double eps = t.front();
  total += phi.value(eps) * mu.front();
  total += integrate([&](double s) { return phi.value(s) / s; }, 0.0, eps);
  return total;
}

PhiEntropyResult phi_entropy_checked(const DensityMatrix& rho, const ConvexSymbol& phi,
                                     const LevelProfile& profile, const QuadratureScheme& scheme) {
  PhiEntropyResult r;
  r.direct = phi_entropy(rho, phi, scheme);
  r.layer_cake = layer_cake_entropy(profile, phi);
  r.difference = std::abs(r.direct - r.layer_cake);
  if (r.difference > kRouteTol) {
    throw Error(ErrorCode::QuadratureDisagreement,
                "direct " + std::to_string(r.direct) + " vs layer-cake " + std::to_string(r.layer_cake));
  }
  return r;
}

double wehrl_entropy(const DensityMatrix& rho, const QuadratureScheme& scheme) {
  return -phi_entropy(rho, ConvexSymbol::wehrl(), scheme);
}

SuperpositionReport superposition_check(const ConvexSymbol& phi, std::span<const double> samples) {
  const bool wehrl = phi.kind() == SymbolKind::Wehrl;
  const double d0 = phi.derivative_at_zero();
  if (!wehrl && !std::isfinite(d0)) {
    throw Error(ErrorCode::InvalidArgument, "superposition needs a finite Phi'(0); regularize first");
  }
  SuperpositionReport r;
  for (const double u : samples) {
    if (!(u >= 0.0)) throw Error(ErrorCode::InvalidArgument, "samples must be nonnegative");
    double v = 0.0;
    if (wehrl) {
      if (u > 0.0) {
        const double a = std::min(u, 1.0);
        v = integrate([&](double t) { return ((u - t) - u) / t; }, 0.0, a);
        v += integrate([&](double t) { return -u / t; }, a, 1.0);
        v += integrate([&](double t) { return (u - t) / t; }, 1.0, std::max(u, 1.0));
        v += u;
      }
    } else {
      v = d0 * u;
      for (const auto& at : phi.atoms()) v += at.mass * std::max(u - at.position, 0.0);
      v += integrate_split([&](double t) { return (u - t) * phi.density(t); }, 0.0, u, phi.atoms());
    }
    r.samples.push_back(u);
    r.reconstructed.push_back(v);
    r.max_abs_error = std::max(r.max_abs_error, std::abs(v - phi.value(u)));
  }
  return r;
}

double c_phi_constant(const ConvexSymbol& phi, double c) {
  if (!(c > 0.0)) throw Error(ErrorCode::InvalidArgument, "c must be positive");
  if (!phi.integrable()) throw Error(ErrorCode::NonIntegrable, "symbol declared non-integrable");
  auto weight = [](double t) { return t * (1.0 - t + t * std::log(t)); };
  double v = integrate_split([&](double t) { return weight(t) * phi.density(t); }, 0.0, 1.0, phi.atoms());
  for (const auto& at : phi.atoms()) {
    if (at.position > 0.0 && at.position < 1.0) v += at.mass * weight(at.position);
  }
  if (!std::isfinite(v)) throw Error(ErrorCode::NonIntegrable, "c_Phi integral diverges");
  return c * v;
}

std::vector<RegularizationPoint> regularization_sweep(const DensityMatrix& rho, const ConvexSymbol& phi,
                                                      std::span<const double> eps,
                                                      const QuadratureScheme& scheme) {
  std::vector<RegularizationPoint> out;
  for (const double e : eps) {
    const double v = phi_entropy(rho, regularized(phi, e), scheme);
    out.push_back({e, v, out.empty() ? 0.0 : std::abs(v - out.back().value)});
  }
  return out;
}

}  // namespace wehrl
