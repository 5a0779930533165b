// Command-line front end: verification suite, single-density evaluation, and
// bulk tables over random scenarios.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <specwres/specwres.hpp>

using namespace specwres;

namespace {

CliffordRep build_rep(int n, ModuleKind kind) {
  return kind == ModuleKind::spin ? build_spin_gammas(n) : build_lambda_ops(n);
}

std::optional<Grading> pick_grading(const CliffordRep& rep, const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (rep.kind == ModuleKind::spin) {
    if (name == "spin") return build_spin_chirality(rep);
    throw CLI::ValidationError("--grading", "spin module only supports 'spin'");
  }
  HodgeGradings gr = build_hodge_gradings(rep);
  if (name == "euler") return gr.euler;
  if (name == "hodge") return gr.hodge;
  if (name == "hat") return gr.hat;
  throw CLI::ValidationError("--grading", "hodge module supports euler|hodge|hat");
}

double env_tolerance() {
  const char* v = std::getenv("SPECWRES_TOL");
  if (!v) return 0.0;
  return std::atof(v);
}

double rel(cplx a, cplx b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// Fills report.oracle/residual by cross-checking closed forms against the
// trace engine whenever both paths exist.
DensityReport evaluate_density(const Scenario& s, const std::string& functional, bool chiral,
                               const std::string& grading_name) {
  CliffordRep rep = build_rep(s.n, s.module);
  std::string gname = grading_name;
  if (chiral && gname.empty()) gname = s.module == ModuleKind::spin ? "spin" : "hodge";
  std::optional<Grading> chi = chiral ? pick_grading(rep, gname) : std::nullopt;

  DensityReport r;
  r.functional = functional;
  r.n = s.n;
  r.kind = s.module;
  r.chiral = chiral;
  r.coeff_uw = Tensor(2, s.n);
  r.coeff_u_dw = Tensor(3, s.n);

  PerturbationJet b = s.module == ModuleKind::spin ? spin_torsion_B(s.torsion, rep)
                                                   : hodge_torsion_B(s.torsion, rep);

  if (functional == "metric") {
    if (!chiral) {
      r.value = metric_density(s.u.value, s.w.value, rep);
      r.oracle = "closed-form";
    } else {
      r.value = chiral_metric_density(s.u.value, s.w.value, rep, *chi);
      r.oracle = "closed-form";
    }
    return r;
  }
  if (functional == "einstein") {
    if (!chiral) {
      DensityReport closed = s.module == ModuleKind::spin
                                 ? einstein_spin_torsion(s.u, s.w, s.torsion, s.n)
                                 : einstein_hodge_torsion(s.u, s.w, s.torsion, s.n);
      DensityReport engine = einstein_delta_general(s.u, s.w, b, rep);
      closed.oracle = "trace-engine";
      closed.residual = rel(closed.value, engine.value);
      return closed;
    }
    if (s.module == ModuleKind::spin) {
      DensityReport closed = chiral_einstein_spin_torsion(s.u, s.w, s.torsion, s.n);
      DensityReport engine = einstein_delta_general(s.u, s.w, b, rep, chi);
      closed.oracle = "trace-engine";
      closed.residual = rel(closed.value, engine.value);
      return closed;
    }
    DensityReport engine = einstein_delta_general(s.u, s.w, b, rep, chi);
    engine.functional = functional;
    return engine;
  }
  if (functional == "torsion") {
    // Third argument slot: a deterministic draw from the scenario seed.
    OneFormJet v = random_one_form_jet(s.n, s.seed + 17);
    cplx engine;
    if (!chiral) {
      engine = torsion_functional(s.u.value, v.value, s.w.value, b.B0, rep);
    } else {
      Mat e = clifford_one_form(s.u.value, rep) * clifford_one_form(v.value, rep) *
              clifford_one_form(s.w.value, rep);
      engine = wres_density_ED(e, b.B0, rep, *chi);
    }
    if (!chiral) {
      cplx closed = torsion_functional_closed(s.u.value, v.value, s.w.value, s.torsion, s.n,
                                              s.module);
      r.value = closed;
      r.oracle = "trace-engine";
      r.residual = rel(closed, engine);
    } else if (s.module == ModuleKind::spin) {
      cplx closed = chiral_torsion_spin(s.u.value, v.value, s.w.value, s.torsion, s.n);
      r.value = closed;
      r.oracle = "trace-engine";
      r.residual = rel(closed, engine);
    } else {
      r.value = engine;
    }
    return r;
  }
  if (functional == "scalar") {
    if (!chiral) {
      cplx closed = scalar_density_closed(s.f, s.torsion, s.geometry, s.n, s.module);
      cplx engine = scalar_density(s.f, b.B0, rep, s.geometry);
      r.value = closed;
      r.oracle = "trace-engine";
      r.residual = rel(closed, engine);
    } else if (s.module == ModuleKind::spin && chi->kind == GradingKind::spin_gamma) {
      cplx engine = chiral_scalar_density(s.f, b, rep, *chi);
      cplx closed = chiral_scalar_spin_closed(s.f, s.torsion, s.n);
      r.value = closed;
      r.oracle = "trace-engine";
      r.residual = rel(closed, engine);
    } else {
      r.value = chiral_scalar_density(s.f, b, rep, *chi);
    }
    return r;
  }
  throw CLI::ValidationError("--functional", "unknown functional: " + functional);
}

void print_report(const DensityReport& r, bool as_json) {
  if (as_json) {
    std::cout << nlohmann::json(r).dump(2) << "\n";
    return;
  }
  std::printf("%s%s density (n=%d, %s): %.12g %+.12gi\n", r.chiral ? "chiral " : "",
              r.functional.c_str(), r.n, r.kind == ModuleKind::spin ? "spin" : "hodge",
              r.value.real(), r.value.imag());
  if (r.oracle != "engine-only")
    std::printf("  cross-check: %s, residual %.3e\n", r.oracle.c_str(), r.residual);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residue densities of torsion-perturbed Dirac-type operators"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::vector<std::string> groups;
  std::uint64_t seed = 20260825;
  bool as_json = false;
  double tolerance = env_tolerance();
  verify->add_option("--group", groups, "check groups to run (default: all)");
  verify->add_option("--seed", seed, "base seed for random draws");
  verify->add_option("--tolerance", tolerance,
                     "override pass threshold for every check (0: built-in)");
  verify->add_flag("--json", as_json, "machine-readable output");

  // density
  auto* density = app.add_subcommand("density", "evaluate one functional density");
  std::string scenario_path, functional = "einstein", grading_name, kind_name = "spin";
  int n = 4;
  bool chiral = false;
  std::uint64_t dseed = 1;
  density->add_option("--scenario", scenario_path, "scenario JSON file (overrides --n/--kind/--seed)");
  density->add_option("--functional", functional, "metric|einstein|torsion|scalar");
  density->add_option("--n", n, "dimension (even, 2..6)");
  density->add_option("--kind", kind_name, "spin|hodge");
  density->add_option("--seed", dseed, "random scenario seed");
  density->add_flag("--chiral", chiral, "grading-twisted variant");
  density->add_option("--grading", grading_name, "spin|euler|hodge|hat (with --chiral)");
  density->add_flag("--json", as_json, "machine-readable output");

  // table
  auto* table = app.add_subcommand("table", "tabulate densities over random scenarios");
  int count = 5;
  table->add_option("--n", n, "dimension (even, 2..6)");
  table->add_option("--kind", kind_name, "spin|hodge");
  table->add_option("--count", count, "number of scenarios");
  table->add_option("--seed", dseed, "base seed");
  table->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (groups.empty()) groups = check_group_names();
      bool all_ok = true;
      nlohmann::json out = nlohmann::json::array();
      for (const auto& name : groups) {
        CheckGroup g = run_check_group(name, seed);
        if (tolerance > 0.0)
          for (auto& r : g.results) r.pass = r.residual <= tolerance;
        bool ok = !g.results.empty();
        for (const auto& r : g.results) ok = ok && r.pass;
        all_ok = all_ok && ok;
        if (as_json) {
          nlohmann::json checks = nlohmann::json::array();
          for (const auto& r : g.results)
            checks.push_back({{"name", r.name},
                              {"residual", r.residual},
                              {"tol", tolerance > 0.0 ? tolerance : r.tol},
                              {"pass", r.pass}});
          out.push_back({{"group", g.name}, {"pass", ok}, {"checks", checks}});
        } else {
          std::printf("[%s] %s\n", ok ? "ok" : "FAIL", g.name.c_str());
          for (const auto& r : g.results)
            std::printf("  %-55s residual %.3e  %s\n", r.name.c_str(), r.residual,
                        r.pass ? "ok" : "FAIL");
          std::fflush(stdout);
        }
      }
      if (as_json) std::cout << out.dump(2) << "\n";
      return all_ok ? 0 : 1;
    }

    ModuleKind kind;
    if (kind_name == "spin")
      kind = ModuleKind::spin;
    else if (kind_name == "hodge")
      kind = ModuleKind::hodge;
    else
      throw CLI::ValidationError("--kind", "must be spin or hodge");

    if (density->parsed()) {
      Scenario s = scenario_path.empty() ? random_scenario(n, kind, dseed)
                                         : load_scenario(scenario_path);
      print_report(evaluate_density(s, functional, chiral, grading_name), as_json);
      return 0;
    }

    if (table->parsed()) {
      nlohmann::json rows = nlohmann::json::array();
      if (!as_json)
        std::printf("%6s %12s %28s %28s %28s\n", "seed", "metric", "einstein", "torsion",
                    "scalar");
      for (int i = 0; i < count; ++i) {
        Scenario s = random_scenario(n, kind, dseed + static_cast<std::uint64_t>(i));
        DensityReport me, ei, to, sc;
        me = evaluate_density(s, "metric", false, "");
        ei = evaluate_density(s, "einstein", false, "");
        to = evaluate_density(s, "torsion", false, "");
        sc = evaluate_density(s, "scalar", false, "");
        if (as_json) {
          rows.push_back({{"seed", s.seed},
                          {"metric", me},
                          {"einstein", ei},
                          {"torsion", to},
                          {"scalar", sc}});
        } else {
          std::printf("%6llu %12.5g %14.5g%+.5gi %14.5g%+.5gi %14.5g%+.5gi\n",
                      static_cast<unsigned long long>(s.seed), me.value.real(), ei.value.real(),
                      ei.value.imag(), to.value.real(), to.value.imag(), sc.value.real(),
                      sc.value.imag());
        }
      }
      if (as_json) std::cout << rows.dump(2) << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
