#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "specwres/jets.hpp"

namespace specwres {

// One self-contained pointwise evaluation input: geometry, torsion, test
// one-forms, and a scale for the scalar functional.
struct Scenario {
  int n = 4;
  ModuleKind module = ModuleKind::spin;
  GeometryJet geometry;
  TorsionJet torsion;
  OneFormJet u;
  OneFormJet w;
  double f = 1.0;
  std::uint64_t seed = 0;
};

inline void to_json(nlohmann::json& j, const Scenario& s) {
  j = {{"n", s.n},
       {"module", s.module == ModuleKind::spin ? "spin" : "hodge"},
       {"geometry", s.geometry.riemann},
       {"torsion", {{"value", s.torsion.value}, {"deriv", s.torsion.deriv}}},
       {"u", {{"value", s.u.value}, {"deriv", s.u.deriv}}},
       {"w", {{"value", s.w.value}, {"deriv", s.w.deriv}}},
       {"f", s.f},
       {"seed", s.seed}};
}

inline void from_json(const nlohmann::json& j, Scenario& s) {
  s.n = j.at("n").get<int>();
  if (s.n < 2 || s.n > 8 || s.n % 2 != 0)
    throw std::invalid_argument("scenario: n must be even, 2 <= n <= 8");
  const std::string mod = j.at("module").get<std::string>();
  if (mod == "spin")
    s.module = ModuleKind::spin;
  else if (mod == "hodge")
    s.module = ModuleKind::hodge;
  else
    throw std::invalid_argument("scenario: module must be spin or hodge");
  s.geometry = make_geometry(j.at("geometry").get<Tensor>());
  s.torsion.value = j.at("torsion").at("value").get<Tensor>();
  s.torsion.deriv = j.at("torsion").at("deriv").get<Tensor>();
  s.u.value = j.at("u").at("value").get<Tensor>();
  s.u.deriv = j.at("u").at("deriv").get<Tensor>();
  s.w.value = j.at("w").at("value").get<Tensor>();
  s.w.deriv = j.at("w").at("deriv").get<Tensor>();
  s.f = j.value("f", 1.0);
  s.seed = j.value("seed", std::uint64_t{0});
  auto check = [&](int rank, int dim, const Tensor& t, const char* what) {
    if (t.rank() != rank || t.dim() != dim)
      throw std::invalid_argument(std::string("scenario: bad shape for ") + what);
  };
  check(4, s.n, s.geometry.riemann, "geometry");
  check(3, s.n, s.torsion.value, "torsion.value");
  check(4, s.n, s.torsion.deriv, "torsion.deriv");
  check(1, s.n, s.u.value, "u.value");
  check(2, s.n, s.u.deriv, "u.deriv");
  check(1, s.n, s.w.value, "w.value");
  check(2, s.n, s.w.deriv, "w.deriv");
}

inline Scenario random_scenario(int n, ModuleKind kind, std::uint64_t seed) {
  Scenario s;
  s.n = n;
  s.module = kind;
  s.seed = seed;
  s.geometry = random_geometry_jet(n, seed);
  s.torsion = random_torsion_jet(n, seed + 1, kind == ModuleKind::spin);
  s.u = random_one_form_jet(n, seed + 2);
  s.w = random_one_form_jet(n, seed + 3);
  s.f = 1.0;
  return s;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  nlohmann::json j;
  in >> j;
  return j.get<Scenario>();
}

inline void save_scenario(const Scenario& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scenario file: " + path);
  out << nlohmann::json(s).dump(2) << "\n";
}

}  // namespace specwres
