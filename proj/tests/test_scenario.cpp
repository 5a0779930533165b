#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include <specwres/scenario.hpp>

using namespace specwres;

TEST_CASE("scenario json round trip") {
  Scenario s = random_scenario(4, ModuleKind::hodge, 1234);
  nlohmann::json j = s;
  Scenario back = j.get<Scenario>();
  CHECK(back.n == 4);
  CHECK(back.module == ModuleKind::hodge);
  CHECK(back.seed == 1234);
  CHECK(back.geometry.riemann.approx(s.geometry.riemann));
  CHECK(back.torsion.value.approx(s.torsion.value));
  CHECK(back.torsion.deriv.approx(s.torsion.deriv));
  CHECK(back.u.value.approx(s.u.value));
  CHECK(back.w.deriv.approx(s.w.deriv));
  CHECK(std::abs(back.geometry.scalar - s.geometry.scalar) < 1e-12);
}

TEST_CASE("scenario file round trip") {
  Scenario s = random_scenario(2, ModuleKind::spin, 77);
  const std::string path = "scenario_roundtrip_tmp.json";
  save_scenario(s, path);
  Scenario back = load_scenario(path);
  std::remove(path.c_str());
  CHECK(back.n == 2);
  CHECK(back.module == ModuleKind::spin);
  CHECK(back.torsion.value.approx(s.torsion.value));
}

TEST_CASE("scenario validation") {
  Scenario s = random_scenario(4, ModuleKind::spin, 5);
  nlohmann::json j = s;
  j["n"] = 5;
  CHECK_THROWS_AS(j.get<Scenario>(), std::invalid_argument);
  j["n"] = 4;
  j["module"] = "other";
  CHECK_THROWS_AS(j.get<Scenario>(), std::invalid_argument);
  j["module"] = "spin";
  j["torsion"]["value"] = Tensor(3, 2);
  CHECK_THROWS_AS(j.get<Scenario>(), std::invalid_argument);
  CHECK_THROWS(load_scenario("missing_scenario_file.json"));
}
