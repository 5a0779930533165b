// Acceptance gate: one line per criterion group, nonzero exit on any failure.
// Tolerances are pinned inside the check implementations.

#include <cstdio>
#include <specwres/checks.hpp>

int main() {
  const std::uint64_t seed = 20260825;
  const std::vector<std::pair<std::string, std::string>> criteria = {
      {"clifford", "Clifford/CAR algebra axioms and gradings (exact)"},
      {"trace-lemmas", "form-module trace identities"},
      {"spin-traces", "spin torsion trace identities"},
      {"vanishing", "spectral closedness vanishing theorems"},
      {"two-path", "closed forms vs trace engine on random scenarios"},
      {"fluctuation", "one-form fluctuation invariance"},
      {"parametrix", "raw symbol-calculus oracle and inverse corrections"},
      {"chiral", "chiral functional closed forms"},
      {"grading", "grading compatibility of the torsion coupling"},
      {"antisymmetry", "torsion functional antisymmetry and total-derivative symmetry"},
  };
  bool all_ok = true;
  int idx = 0;
  for (const auto& [group, title] : criteria) {
    ++idx;
    specwres::CheckGroup g;
    bool ok = false;
    double res = 0.0;
    std::string note;
    try {
      g = specwres::run_check_group(group, seed);
      ok = g.all_pass();
      res = g.max_residual();
    } catch (const std::exception& e) {
      note = std::string(" exception: ") + e.what();
    }
    std::printf("%s criterion %2d [%s]: %s (checks %zu, max residual %.3e)%s\n",
                ok ? "PASS" : "FAIL", idx, group.c_str(), title.c_str(), g.results.size(), res,
                note.c_str());
    if (!ok) {
      for (const auto& r : g.results)
        if (!r.pass)
          std::printf("       failed: %s residual %.3e tol %.3e\n", r.name.c_str(), r.residual,
                      r.tol);
      all_ok = false;
    }
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
