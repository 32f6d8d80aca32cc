// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

// wehrl: command-line front end for the wehrlkit core library.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wehrl/deficit.hpp"
#include "wehrl/entropy.hpp"
#include "wehrl/error.hpp"
#include "wehrl/harness.hpp"
#include "wehrl/husimi.hpp"
#include "wehrl/levelsets.hpp"
#include "wehrl/logsob.hpp"
#include "wehrl/state_io.hpp"

namespace {

using json = nlohmann::json;
using namespace wehrl;

struct Globals {
  int dim = 0;
  std::uint64_t seed = 1;
  double tol = 1e-6;
  std::string out;
  std::string format;  // empty: command default
};

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
json point(const PhasePoint& p) { return {{"x", p.x}, {"omega", p.omega}}; }

std::string csv_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(g.out);
  if (!os) throw Error(ErrorCode::InvalidArgument, "cannot write " + g.out);
  os << text;
  if (!text.empty() && text.back() != '\n') os << '\n';
}

bool want_csv(const Globals& g, bool csv_default = false) {
  if (g.format.empty()) return csv_default;
  return g.format == "csv";
}

// Loads a state and pads it to --dim when that is larger.
LoadedState load(const Globals& g, const std::string& path) {
  LoadedState s = load_state(path);
  if (g.dim > s.rho.dim()) {
    s.rho = s.rho.padded(g.dim);
    if (s.pure) s.pure = s.pure->resized(g.dim);
  }
  return s;
}

std::vector<FamilySpec> families_for(const Globals& g, const std::string& config) {
  if (config.empty()) return default_families(g.seed, g.dim);
  return load_config(config, g.dim).families;
}

int finish_run(const Globals& g, const VerificationRun& run) {
  emit(g, want_csv(g) ? run.to_csv() : run.to_json());
  if (!run.ok()) {
    try {
      run.assert_ok();
    } catch (const Error& e) {
      std::cerr << e.what() << '\n';
    }
    return 1;
  }
  return 0;
}

std::vector<double> default_taus() {
  std::vector<double> t{0.05};
  for (int k = 1; k <= 9; ++k) t.push_back(0.1 * k);
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Husimi functions, Wehrl-type entropies and coherent-state deficits"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--dim", g.dim, "Fock dimension (pads loaded states; overrides family defaults)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "base seed for random families");
  app.add_option("--tol", g.tol, "tolerance for asserted inequalities")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "write output to FILE instead of stdout");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));

  int rc = 0;

  // entropy
  std::string state_path, phi_spec = "wehrl";
  auto* ent = app.add_subcommand("entropy", "Phi-entropy of a state against its coherent value");
  ent->add_option("--state", state_path, "state file")->required()->check(CLI::ExistingFile);
  ent->add_option("--phi", phi_spec, "wehrl | power:r | hinge:tau");
  ent->callback([&] {
    const LoadedState s = load(g, state_path);
    const ConvexSymbol phi = ConvexSymbol::parse(phi_spec);
    const double value = phi_entropy(s.rho, phi);
    const double ref = coherent_reference(phi);
    json j{{"phi", phi.name()}, {"value", value}, {"reference", ref}, {"deficit", ref - value}};
    if (phi.kind() == SymbolKind::Wehrl) j["wehrl_entropy"] = -value;
    emit(g, j.dump(2));
  });

  // husimi-grid
  double radius = 3.0, step = 0.1;
  auto* grid = app.add_subcommand("husimi-grid", "Husimi function on a square grid");
  grid->add_option("--state", state_path, "state file")->required()->check(CLI::ExistingFile);
  grid->add_option("--radius", radius, "half-width of the grid")->check(CLI::PositiveNumber);
  grid->add_option("--step", step, "grid spacing")->check(CLI::PositiveNumber);
  grid->callback([&] {
    const LoadedState s = load(g, state_path);
    const auto pts = husimi_grid(s.rho, radius, step);
    if (want_csv(g, true)) {
      std::ostringstream os;
      os << "x,omega,u\n";
      for (const auto& p : pts) os << csv_num(p.x) << ',' << csv_num(p.omega) << ',' << csv_num(p.u) << '\n';
      emit(g, os.str());
    } else {
      json arr = json::array();
      for (const auto& p : pts) arr.push_back({p.x, p.omega, p.u});
      emit(g, json{{"radius", radius}, {"step", step}, {"columns", {"x", "omega", "u"}}, {"points", arr}}.dump());
    }
  });

  // mu-profile
  int levels = 401, rays = 256;
  auto* prof = app.add_subcommand("mu-profile", "Distribution function mu(t) and H(t)");
  prof->add_option("--state", state_path, "state file")->required()->check(CLI::ExistingFile);
  prof->add_option("--levels", levels, "number of levels")->check(CLI::Range(100, 100000));
  prof->add_option("--rays", rays, "number of rays")->check(CLI::Range(256, 1 << 16));
  prof->callback([&] {
    const LoadedState s = load(g, state_path);
    ProfileOptions opts;
    opts.levels = levels;
    opts.rays = rays;
    const LevelProfile p = build_profile(s.rho, opts);
    if (want_csv(g)) {
      std::ostringstream os;
      os << "t,mu,mu0,H\n";
      for (std::size_t k = 0; k < p.levels.size(); ++k) {
        os << csv_num(p.levels[k]) << ',' << csv_num(p.mu[k]) << ',' << csv_num(p.mu0[k]) << ','
           << csv_num(p.H[k]) << '\n';
      }
      emit(g, os.str());
      return;
    }
    json lv = json::array();
    for (std::size_t k = 0; k < p.levels.size(); ++k) {
      lv.push_back({{"t", p.levels[k]}, {"mu", p.mu[k]}, {"mu0", p.mu0[k]}, {"H", p.H[k]}});
    }
    const MuDifferentialReport dm = check_mu_differential(p, 5e-3);
    json j{{"T", p.T},
           {"zstar", point(p.zstar)},
           {"coherent", p.no_crossing},
           {"tstar", num(p.tstar)},
           {"H_tstar", num(p.H_tstar)},
           {"mass", p.mass},
           {"sign_changes", p.sign_changes},
           {"mu_differential", {{"max_excess", dm.max_excess}, {"at_t", dm.at_t}, {"passed", dm.passed}}},
           {"levels", lv}};
    if (!p.no_crossing) {
      const HTReport ht = check_HT_bound(p);
      j["HT"] = {{"ratio", ht.ratio}, {"weak_bound", ht.weak_bound}, {"weak_ok", ht.weak_ok}};
    }
    emit(g, j.dump(2));
  });

  // deficit
  auto* def = app.add_subcommand("deficit", "Distance to coherent states and Wehrl deficit");
  def->add_option("--state", state_path, "state file")->required()->check(CLI::ExistingFile);
  def->add_option("--phi", phi_spec, "wehrl | power:r | hinge:tau");
  def->callback([&] {
    const LoadedState s = load(g, state_path);
    const DeficitReport r = deficit_report(s.rho, ConvexSymbol::parse(phi_spec), s.pure);
    json j{{"T", r.T},
           {"zstar", point(r.zstar)},
           {"z0", point(r.z0)},
           {"D_rho", r.D_rho},
           {"D_f", r.D_f ? json(*r.D_f) : json(nullptr)},
           {"entropy_value", r.entropy_value},
           {"reference", r.reference},
           {"deficit", r.deficit},
           {"ratio", num(r.ratio)}};
    emit(g, j.dump(2));
  });

  // logsob
  std::string coeffs_path;
  double h = 1.0;
  auto* ls = app.add_subcommand("logsob", "Log-Sobolev deficit of a Fock-space function");
  ls->set_help_flag("--help", "Print this help message and exit");
  ls->add_option("--coeffs", coeffs_path, "pure state file with the coefficients")
      ->required()
      ->check(CLI::ExistingFile);
  ls->add_option("--h", h, "semiclassical parameter")->check(CLI::PositiveNumber);
  ls->callback([&] {
    const LoadedState s = load(g, coeffs_path);
    if (!s.pure) throw Error(ErrorCode::InvalidState, "logsob needs a pure coefficient file");
    const LogSobReport r = logsob_deficit(FockFunction(s.pure->coeffs(), h));
    json j{{"dirichlet", r.dirichlet},
           {"entropy", r.entropy},
           {"deficit", r.deficit},
           {"distance2", r.distance2},
           {"beta", {r.beta.real(), r.beta.imag()}},
           {"ratio", num(r.ratio)}};
    emit(g, j.dump(2));
  });

  // verify
  std::string config_path, verify_phi = "power:2";
  std::vector<double> taus;
  double c_candidate = 0.0;
  auto* ver = app.add_subcommand("verify", "Check an inequality over test-state families");
  ver->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "config file (families, seeds)")->check(CLI::ExistingFile);
  };
  auto* vw = ver->add_subcommand("wehrl", "Wehrl entropy >= 1");
  add_common(vw);
  vw->callback([&] { rc = finish_run(g, verify_wehrl(families_for(g, config_path), g.tol)); });
  auto* vg = ver->add_subcommand("generalized", "Int Phi(u) <= coherent value");
  add_common(vg);
  vg->add_option("--phi", verify_phi, "power:r | hinge:tau | wehrl");
  vg->callback([&] {
    rc = finish_run(g, verify_generalized(families_for(g, config_path), ConvexSymbol::parse(verify_phi), g.tol));
  });
  auto* vs = ver->add_subcommand("stabtau", "Hinge functional against its coherent value");
  add_common(vs);
  vs->add_option("--tau", taus, "levels (default 0.05, 0.1, ..., 0.9)");
  vs->add_option("--c", c_candidate, "candidate constant c")->check(CLI::NonNegativeNumber);
  vs->callback([&] {
    rc = finish_run(g, verify_stabtau_run(families_for(g, config_path), taus.empty() ? default_taus() : taus,
                                          c_candidate, g.tol));
  });
  auto* vf = ver->add_subcommand("faber-krahn", "Super-level mass against the centred disk");
  add_common(vf);
  vf->add_option("--tau", taus, "levels (default 0.05, 0.1, ..., 0.9)");
  vf->add_option("--c0", c_candidate, "candidate constant c0")->check(CLI::NonNegativeNumber);
  vf->callback([&] {
    rc = finish_run(g, verify_faber_krahn_run(families_for(g, config_path),
                                              taus.empty() ? default_taus() : taus, c_candidate, g.tol));
  });
  auto* vl = ver->add_subcommand("logsob", "Log-Sobolev deficit >= 0 on the pure states");
  add_common(vl);
  vl->callback([&] { rc = finish_run(g, verify_logsob(families_for(g, config_path), g.tol)); });

  // sweep
  auto* sw = app.add_subcommand("sweep", "Empirical constants per family and quantity");
  sw->add_option("--config", config_path, "config file")->required()->check(CLI::ExistingFile);
  sw->callback([&] {
    SweepConfig cfg = load_config(config_path, g.dim);
    if (app.count("--tol")) cfg.tol = g.tol;
    const auto rows = sweep_constants(cfg);
    emit(g, want_csv(g, true) ? sweep_to_csv(rows) : sweep_to_json(rows));
    for (const auto& r : rows) {
      if (r.violations > 0) rc = 1;
    }
  });

  // make-state
  std::string kind = "coherent";
  double x0 = 0.0, w0 = 0.0;
  int n = 0, rank = 1;
  auto* mk = app.add_subcommand("make-state", "Write a test state file");
  mk->add_option("--kind", kind, "coherent | fock | random | ginibre")
      ->check(CLI::IsMember({"coherent", "fock", "random", "ginibre"}));
  mk->add_option("--x", x0, "coherent centre x");
  mk->add_option("--omega", w0, "coherent centre omega");
  mk->add_option("--n", n, "Fock index")->check(CLI::NonNegativeNumber);
  mk->add_option("--rank", rank, "Ginibre rank")->check(CLI::PositiveNumber);
  mk->callback([&] {
    const int dim = g.dim > 0 ? g.dim : (kind == "coherent" ? kDefaultDim : 8);
    std::string text;
    if (kind == "coherent") text = state_to_json(coherent_fock_vector({x0, w0}, dim));
    if (kind == "fock") text = state_to_json(FockVector::basis(n, dim));
    if (kind == "random") text = state_to_json(random_pure_state(dim, g.seed));
    if (kind == "ginibre") text = state_to_json(random_density_matrix(dim, rank, g.seed));
    emit(g, text);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::AssertionFailure ? 1 : 2;
  }
  return rc;
}
