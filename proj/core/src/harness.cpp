// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "wehrl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "wehrl/error.hpp"
#include "wehrl/husimi.hpp"
#include "wehrl/levelsets.hpp"
#include "wehrl/logsob.hpp"

namespace wehrl {

namespace {

using json = nlohmann::json;

constexpr double kZeroD = 1e-6;
constexpr double kStrict = 1e-8;

int family_dim(const FamilySpec& s) {
  if (s.dim > 0) return s.dim;
  if (s.name == "coherent") return 24;
  if (s.name == "ginibre") return 6;
  return 8;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// WEHRL_THREADS overrides the hardware thread count.
std::size_t worker_count() {
  if (const char* env = std::getenv("WEHRL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// out[i] = fn(i) on a worker pool. Results land by index, so output does not
// depend on scheduling; the lowest-index exception is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(n, worker_count());
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto& v : slots) out.push_back(std::move(*v));
  return out;
}

std::vector<TestState> collect(const std::vector<FamilySpec>& families, bool pure_only) {
  std::vector<TestState> out;
  for (const auto& spec : families) {
    for (auto& st : make_family(spec)) {
      if (!pure_only || st.pure) out.push_back(std::move(st));
    }
  }
  return out;
}

std::vector<StateResult> flatten(std::vector<std::vector<StateResult>> nested) {
  std::vector<StateResult> out;
  for (auto& v : nested) std::move(v.begin(), v.end(), std::back_inserter(out));
  return out;
}

// A test state with its maximum and trace-norm distance computed once.
struct Prepared {
  TestState state;
  MaxReport max;
  DistanceResult dist;
};

std::vector<Prepared> prepare(const std::vector<FamilySpec>& families) {
  auto states = collect(families, false);
  return parallel_map<Prepared>(states.size(), [&](std::size_t i) {
    Prepared p{std::move(states[i]), {}, {}};
    p.max = husimi_max(p.state.rho);
    p.dist = deficit_D(p.state.rho, p.max);
    return p;
  });
}

template <class Fn>
std::vector<StateResult> map_prepared(const std::vector<Prepared>& ps, Fn&& fn) {
  return parallel_map<StateResult>(ps.size(), [&](std::size_t i) { return fn(ps[i]); });
}

StateResult base_result(const Prepared& p, std::string quantity) {
  StateResult r;
  r.family = p.state.family;
  r.label = p.state.label;
  r.seed = p.state.seed;
  r.dim = p.state.rho.dim();
  r.quantity = std::move(quantity);
  r.D = p.dist.D;
  r.T = p.max.T;
  return r;
}

void summarize(VerificationRun& run) {
  RunSummary s;
  for (const auto& r : run.results) {
    ++s.states;
    if (!r.ok) ++s.violations;
    s.min_deficit = std::min(s.min_deficit, r.deficit);
    s.max_violation = std::max(s.max_violation, -r.deficit);
    if (std::isfinite(r.ratio)) {
      s.min_ratio = std::min(s.min_ratio, r.ratio);
      s.max_ratio = std::max(s.max_ratio, r.ratio);
    }
  }
  run.summary = s;
}

StateResult wehrl_result(const Prepared& p, double tol) {
  StateResult r = base_result(p, "wehrl");
  r.value = wehrl_entropy(p.state.rho);
  r.reference = 1.0;
  r.deficit = r.value - 1.0;
  if (r.D > kZeroD) r.ratio = r.deficit / (r.D * r.D);
  r.ok = r.value >= 1.0 - tol;
  return r;
}

StateResult phi_result(const Prepared& p, const ConvexSymbol& phi, double reference, double tol) {
  StateResult r = base_result(p, phi.name());
  r.value = phi_entropy(p.state.rho, phi);
  r.reference = reference;
  r.deficit = reference - r.value;
  if (r.D > kZeroD) r.ratio = r.deficit / (r.D * r.D);
  r.ok = r.value <= reference + tol;
  return r;
}

StabTauReport stabtau_impl(const FockVector& f, const MaxReport& max, double tau, double c) {
  if (!(tau > 0.0 && tau < 1.0)) throw Error(ErrorCode::InvalidArgument, "tau must lie in (0, 1)");
  StabTauReport r;
  r.tau = tau;
  r.lhs = hinge_functional(DensityMatrix::pure(f), tau);
  r.reference = hinge_reference(tau);
  r.D_f = deficit_Df(f, max).D_f;
  const double d2 = r.D_f * r.D_f;
  r.rhs_factor = 1.0 - c * tau * d2;
  if (d2 > kZeroD * kZeroD && r.reference > 1e-14) {
    r.empirical_c = (1.0 - r.lhs / r.reference) / (tau * d2);
  } else if (r.reference > 1e-14) {
    r.empirical_c = std::numeric_limits<double>::infinity();
  }
  r.ok = r.lhs <= r.reference + kStrict;
  r.candidate_ok = r.lhs <= r.rhs_factor * r.reference + kStrict;
  return r;
}

FaberKrahnReport faber_krahn_impl(const FockVector& f, const MaxReport& max, double tau, double c0) {
  if (!(tau > 0.0)) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
  if (tau >= max.T) throw Error(ErrorCode::EmptyLevelSet, "tau >= T = " + fmt(max.T));
  const LevelSetSampler sampler(HusimiEvaluator(DensityMatrix::pure(f)), tau);
  FaberKrahnReport r;
  r.tau = tau;
  r.area = sampler.mu(tau);
  r.lhs = sampler.hinge(tau) + tau * r.area;
  r.base = 1.0 - std::exp(-r.area);
  r.D_f = deficit_Df(f, max).D_f;
  const double w = std::exp(-r.area) * r.D_f * r.D_f;
  if (w > 1e-14 && r.base > 0.0) {
    r.empirical_c0 = (1.0 - r.lhs / r.base) / w;
  } else {
    r.empirical_c0 = std::numeric_limits<double>::infinity();
  }
  r.ok = r.lhs <= r.base + kStrict;
  r.candidate_ok = r.lhs <= (1.0 - c0 * w) * r.base + kStrict;
  return r;
}

std::string tau_label(std::string_view what, double tau) { return std::string(what) + ":" + fmt(tau); }

}  // namespace

std::string FamilySpec::label() const {
  return name == "ginibre" ? "ginibre:" + std::to_string(rank) : name;
}

std::vector<TestState> make_family(const FamilySpec& spec) {
  const int dim = family_dim(spec);
  std::vector<std::uint64_t> seeds = spec.seeds;
  if (seeds.empty()) seeds = {1};
  std::vector<TestState> out;
  auto push_pure = [&](std::string label, std::uint64_t seed, FockVector f, bool coherent) {
    TestState st{spec.label(), std::move(label), seed, DensityMatrix::pure(f), f, coherent};
    out.push_back(std::move(st));
  };
  if (spec.name == "coherent") {
    for (const auto s : seeds) {
      std::mt19937_64 gen(s);
      std::uniform_real_distribution<double> uni(-1.0, 1.0);
      const PhasePoint z0{uni(gen), uni(gen)};
      const int d = spec.dim > 0 ? dim : coherent_dim(z0, dim, 1e-13);
      push_pure("coherent:s" + std::to_string(s), s, coherent_fock_vector(z0, d), true);
    }
  } else if (spec.name == "fock") {
    if (dim < 5) throw Error(ErrorCode::ConfigError, "fock family needs dim >= 5");
    for (int n = 0; n < 5; ++n) {
      push_pure("fock:e" + std::to_string(n), n, FockVector::basis(n, dim), n == 0);
    }
  } else if (spec.name == "perturbed") {
    if (dim < 3) throw Error(ErrorCode::ConfigError, "perturbed family needs dim >= 3");
    for (std::size_t i = 0; i < std::size(kPerturbations); ++i) {
      CVector a = CVector::Zero(dim);
      a[0] = 1.0;
      a[2] = kPerturbations[i];
      push_pure("perturbed:eps=" + fmt(kPerturbations[i]), i, FockVector::normalized(a), false);
    }
  } else if (spec.name == "pure") {
    for (const auto s : seeds) push_pure("pure:s" + std::to_string(s), s, random_pure_state(dim, s), false);
  } else if (spec.name == "ginibre") {
    if (spec.rank < 1 || spec.rank > dim) throw Error(ErrorCode::ConfigError, "ginibre rank out of range");
    for (const auto s : seeds) {
      const std::string label = "ginibre:r" + std::to_string(spec.rank) + ":s" + std::to_string(s);
      if (spec.rank == 1) {
        push_pure(label, s, random_pure_state(dim, s), false);
      } else {
        out.push_back({spec.label(), label, s, random_density_matrix(dim, spec.rank, s), std::nullopt, false});
      }
    }
  } else {
    throw Error(ErrorCode::ConfigError, "unknown family '" + spec.name + "'");
  }
  return out;
}

std::vector<FamilySpec> default_families(std::uint64_t seed, int dim) {
  std::vector<std::uint64_t> seeds(10);
  for (int i = 0; i < 10; ++i) seeds[i] = seed + i;
  return {
      {"coherent", dim, 1, seeds},
      {"fock", dim, 1, {}},
      {"perturbed", dim, 1, {}},
      {"ginibre", dim, 1, seeds},
      {"ginibre", dim, 2, seeds},
      {"ginibre", dim, 4, seeds},
  };
}

FamilySpec parse_family(std::string_view name, std::vector<std::uint64_t> seeds, int dim) {
  FamilySpec s;
  s.dim = dim;
  s.seeds = std::move(seeds);
  const auto colon = name.find(':');
  s.name = std::string(name.substr(0, colon));
  if (s.name == "ginibre") {
    if (colon == std::string_view::npos) throw Error(ErrorCode::ConfigError, "ginibre needs a rank: ginibre:<r>");
    try {
      s.rank = std::stoi(std::string(name.substr(colon + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, "bad ginibre rank in '" + std::string(name) + "'");
    }
  } else if (colon != std::string_view::npos ||
             (s.name != "coherent" && s.name != "fock" && s.name != "perturbed" && s.name != "pure")) {
    throw Error(ErrorCode::ConfigError, "unknown family '" + std::string(name) + "'");
  }
  return s;
}

void VerificationRun::assert_ok() const {
  if (ok()) return;
  std::string msg = theorem + ": " + std::to_string(summary.violations) + " violation(s):";
  for (const auto& r : results) {
    if (!r.ok) msg += " " + r.label + "[seed " + std::to_string(r.seed) + ", " + r.quantity + "]";
  }
  throw Error(ErrorCode::AssertionFailure, msg);
}

std::string VerificationRun::to_json() const {
  json j;
  j["theorem"] = theorem;
  j["tol"] = tol;
  j["ok"] = ok();
  j["summary"] = {{"states", summary.states},
                  {"violations", summary.violations},
                  {"min_deficit", number(summary.min_deficit)},
                  {"min_ratio", number(summary.min_ratio)},
                  {"max_ratio", number(summary.max_ratio)},
                  {"max_violation", number(summary.max_violation)}};
  json fams = json::array();
  for (const auto& f : families) {
    fams.push_back({{"name", f.name}, {"dim", family_dim(f)}, {"rank", f.rank}, {"seeds", f.seeds}});
  }
  j["families"] = fams;
  json states = json::array();
  for (const auto& r : results) {
    states.push_back({{"family", r.family},
                      {"label", r.label},
                      {"seed", r.seed},
                      {"dim", r.dim},
                      {"quantity", r.quantity},
                      {"value", number(r.value)},
                      {"reference", number(r.reference)},
                      {"deficit", number(r.deficit)},
                      {"D", number(r.D)},
                      {"T", number(r.T)},
                      {"ratio", number(r.ratio)},
                      {"ok", r.ok}});
  }
  j["states"] = states;
  return j.dump(2);
}

std::string VerificationRun::to_csv() const {
  std::ostringstream os;
  os << "family,label,seed,dim,quantity,value,reference,deficit,D,T,ratio,ok\n";
  for (const auto& r : results) {
    os << r.family << ',' << r.label << ',' << r.seed << ',' << r.dim << ',' << r.quantity << ','
       << fmt(r.value) << ',' << fmt(r.reference) << ',' << fmt(r.deficit) << ',' << fmt(r.D) << ','
       << fmt(r.T) << ',' << fmt(r.ratio) << ',' << (r.ok ? 1 : 0) << '\n';
  }
  return os.str();
}

VerificationRun verify_wehrl(const std::vector<FamilySpec>& families, double tol) {
  VerificationRun run{"wehrl", tol, families, {}, {}};
  run.results = map_prepared(prepare(families), [&](const Prepared& p) { return wehrl_result(p, tol); });
  summarize(run);
  return run;
}

VerificationRun verify_generalized(const std::vector<FamilySpec>& families, const ConvexSymbol& phi,
                                   double tol) {
  if (phi.is_linear()) throw Error(ErrorCode::ConfigError, "linear symbol excluded: " + phi.name());
  VerificationRun run{"generalized:" + phi.name(), tol, families, {}, {}};
  if (phi.kind() == SymbolKind::Wehrl) {
    // u ln u enters with the opposite sign convention
    run.results = map_prepared(prepare(families), [&](const Prepared& p) {
      StateResult r = wehrl_result(p, tol);
      r.quantity = phi.name();
      return r;
    });
  } else {
    const double ref = coherent_reference(phi);
    run.results = map_prepared(prepare(families), [&](const Prepared& p) { return phi_result(p, phi, ref, tol); });
  }
  summarize(run);
  return run;
}

VerificationRun verify_logsob(const std::vector<FamilySpec>& families, double tol) {
  VerificationRun run{"logsob", tol, families, {}, {}};
  const auto states = collect(families, true);
  run.results = parallel_map<StateResult>(states.size(), [&](std::size_t i) {
    const TestState& st = states[i];
    const FockFunction F = bargmann_bridge(*st.pure);
    StateResult r;
    r.family = st.family;
    r.label = st.label;
    r.seed = st.seed;
    r.dim = st.rho.dim();
    r.quantity = "logsob";
    r.value = dirichlet_form(F);
    r.reference = entropy_term(F);
    r.deficit = r.value - r.reference;
    r.ok = r.deficit >= -tol;
    if (r.deficit >= -1e-8) {
      const LogSobReport rep = logsob_deficit(F);
      r.D = std::sqrt(rep.distance2);
      r.ratio = rep.distance2 > kZeroD * kZeroD ? r.deficit / rep.distance2
                                               : std::numeric_limits<double>::quiet_NaN();
    }
    return r;
  });
  summarize(run);
  return run;
}

StabTauReport verify_stabtau(const FockVector& f, double tau, double c_candidate) {
  return stabtau_impl(f, husimi_max(DensityMatrix::pure(f)), tau, c_candidate);
}

FaberKrahnReport verify_faber_krahn(const FockVector& f, double tau, double c0_candidate) {
  return faber_krahn_impl(f, husimi_max(DensityMatrix::pure(f)), tau, c0_candidate);
}

VerificationRun verify_stabtau_run(const std::vector<FamilySpec>& families, const std::vector<double>& taus,
                                   double c_candidate, double tol) {
  VerificationRun run{"stabtau", tol, families, {}, {}};
  const auto states = collect(families, true);
  run.results = flatten(parallel_map<std::vector<StateResult>>(states.size(), [&](std::size_t i) {
    const TestState& st = states[i];
    std::vector<StateResult> rows;
    const MaxReport max = husimi_max(st.rho);
    for (const double tau : taus) {
      const StabTauReport rep = stabtau_impl(*st.pure, max, tau, c_candidate);
      StateResult r;
      r.family = st.family;
      r.label = st.label;
      r.seed = st.seed;
      r.dim = st.rho.dim();
      r.quantity = tau_label("stabtau", tau);
      r.value = rep.lhs;
      r.reference = rep.reference;
      r.deficit = rep.reference - rep.lhs;
      r.D = rep.D_f;
      r.T = max.T;
      if (std::isfinite(rep.empirical_c)) r.ratio = rep.empirical_c;
      r.ok = rep.lhs <= rep.reference + tol;
      rows.push_back(r);
    }
    return rows;
  }));
  summarize(run);
  return run;
}

VerificationRun verify_faber_krahn_run(const std::vector<FamilySpec>& families,
                                       const std::vector<double>& taus, double c0_candidate, double tol) {
  VerificationRun run{"faber-krahn", tol, families, {}, {}};
  const auto states = collect(families, true);
  run.results = flatten(parallel_map<std::vector<StateResult>>(states.size(), [&](std::size_t i) {
    const TestState& st = states[i];
    std::vector<StateResult> rows;
    const MaxReport max = husimi_max(st.rho);
    for (const double tau : taus) {
      if (tau >= max.T) continue;
      const FaberKrahnReport rep = faber_krahn_impl(*st.pure, max, tau, c0_candidate);
      StateResult r;
      r.family = st.family;
      r.label = st.label;
      r.seed = st.seed;
      r.dim = st.rho.dim();
      r.quantity = tau_label("faber-krahn", tau);
      r.value = rep.lhs;
      r.reference = rep.base;
      r.deficit = rep.base - rep.lhs;
      r.D = rep.D_f;
      r.T = max.T;
      if (std::isfinite(rep.empirical_c0)) r.ratio = rep.empirical_c0;
      r.ok = rep.lhs <= rep.base + tol;
      rows.push_back(r);
    }
    return rows;
  }));
  summarize(run);
  return run;
}

SweepConfig parse_config(std::string_view json_text, int dim_override) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ConfigError, "config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "families" && key != "phis" && key != "taus" && key != "seeds" && key != "dim" && key != "tol") {
      throw Error(ErrorCode::ConfigError, "unknown config key '" + key + "'");
    }
  }
  SweepConfig c;
  try {
    const int dim = dim_override > 0 ? dim_override : j.value("dim", 0);
    c.tol = j.value("tol", 1e-6);
    if (j.contains("seeds")) c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    if (c.seeds.empty()) c.seeds = {1};
    if (j.contains("taus")) c.taus = j.at("taus").get<std::vector<double>>();
    if (j.contains("phis")) c.phis = j.at("phis").get<std::vector<std::string>>();
    if (!j.contains("families") || !j.at("families").is_array() || j.at("families").empty()) {
      throw Error(ErrorCode::ConfigError, "config needs a non-empty families[] array");
    }
    for (const auto& f : j.at("families")) {
      if (f.is_string()) {
        c.families.push_back(parse_family(f.get<std::string>(), c.seeds, dim));
      } else if (f.is_object()) {
        FamilySpec s = parse_family(f.at("name").get<std::string>() == "ginibre"
                                        ? "ginibre:" + std::to_string(f.value("rank", 1))
                                        : f.at("name").get<std::string>(),
                                    c.seeds, dim > 0 ? dim : f.value("dim", 0));
        c.families.push_back(s);
      } else {
        throw Error(ErrorCode::ConfigError, "family entries must be strings or objects");
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("bad config value: ") + e.what());
  }
  for (const double t : c.taus) {
    if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::ConfigError, "taus must lie in (0, 1)");
  }
  for (const auto& p : c.phis) {
    try {
      if (ConvexSymbol::parse(p).is_linear()) throw Error(ErrorCode::ConfigError, "linear symbol excluded: " + p);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ConfigError) throw;
      throw Error(ErrorCode::ConfigError, e.what());
    }
  }
  if (c.phis.empty() && c.taus.empty()) c.phis = {"wehrl"};
  return c;
}

SweepConfig load_config(const std::filesystem::path& path, int dim_override) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), dim_override);
}

std::vector<SweepRow> sweep_constants(const SweepConfig& config) {
  std::vector<SweepRow> rows;
  auto add_row = [&](const FamilySpec& fam, const std::string& quantity, const std::vector<StateResult>& rs) {
    SweepRow row{fam.label(), quantity, static_cast<int>(rs.size())};
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& r : rs) {
      if (!r.ok) ++row.violations;
      if (std::isfinite(r.ratio)) {
        lo = std::min(lo, r.ratio);
        hi = std::max(hi, r.ratio);
      }
    }
    if (lo <= hi) {
      row.min_ratio = lo;
      row.max_ratio = hi;
    }
    rows.push_back(row);
  };
  for (const auto& fam : config.families) {
    const auto prepared = prepare({fam});
    for (const auto& spec : config.phis) {
      const ConvexSymbol phi = ConvexSymbol::parse(spec);
      std::vector<StateResult> rs;
      if (phi.kind() == SymbolKind::Wehrl) {
        rs = map_prepared(prepared, [&](const Prepared& p) { return wehrl_result(p, config.tol); });
      } else {
        const double ref = coherent_reference(phi);
        rs = map_prepared(prepared, [&](const Prepared& p) { return phi_result(p, phi, ref, config.tol); });
      }
      add_row(fam, phi.name(), rs);
    }
    for (const double tau : config.taus) {
      std::vector<Prepared> pure;
      for (const auto& p : prepared) {
        if (p.state.pure) pure.push_back(p);
      }
      const auto rs = map_prepared(pure, [&](const Prepared& p) {
        const StabTauReport rep = stabtau_impl(*p.state.pure, p.max, tau, 0.0);
        StateResult r = base_result(p, tau_label("stabtau", tau));
        r.value = rep.lhs;
        r.reference = rep.reference;
        r.deficit = rep.reference - rep.lhs;
        if (std::isfinite(rep.empirical_c)) r.ratio = rep.empirical_c;
        r.ok = rep.lhs <= rep.reference + config.tol;
        return r;
      });
      add_row(fam, tau_label("stabtau", tau), rs);
    }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "family,quantity,states,min_ratio,max_ratio,violations\n";
  for (const auto& r : rows) {
    os << r.family << ',' << r.quantity << ',' << r.states << ',' << fmt(r.min_ratio) << ','
       << fmt(r.max_ratio) << ',' << r.violations << '\n';
  }
  return os.str();
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"family", r.family},
                   {"quantity", r.quantity},
                   {"states", r.states},
                   {"min_ratio", number(r.min_ratio)},
                   {"max_ratio", number(r.max_ratio)},
                   {"violations", r.violations}});
  }
  return arr.dump(2);
}

}  // namespace wehrl
