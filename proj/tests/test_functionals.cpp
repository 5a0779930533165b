#include <catch2/catch_amalgamated.hpp>

#include <specwres/functionals.hpp>
#include <specwres/scenario.hpp>

using namespace specwres;

namespace {
double rel(cplx a, cplx b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}
}  // namespace

TEST_CASE("metric density") {
  for (int n : {2, 4, 6}) {
    CliffordRep rep = build_spin_gammas(n);
    Tensor u(1, n), w(1, n);
    u(0) = 2.0;
    w(0) = 3.0;
    w(n - 1) = 1.0;
    cplx v = metric_density(u, w, rep);
    CHECK(rel(v, 6.0 * sphere_volume(n) * static_cast<double>(rep.fiber_dim)) < 1e-12);
  }
}

TEST_CASE("chiral metric density cases") {
  CliffordRep rep2 = build_spin_gammas(2);
  Grading chi2 = build_spin_chirality(rep2);
  Tensor e0(1, 2), e1(1, 2);
  e0(0) = 1.0;
  e1(1) = 1.0;
  cplx v = chiral_metric_density(e0, e1, rep2, chi2);
  CHECK(rel(v, cplx{0.0, 8.0 * std::numbers::pi}) < 1e-12);
  CHECK(rel(chiral_metric_density(e1, e0, rep2, chi2), -v) < 1e-12);

  CliffordRep h2 = build_lambda_ops(2);
  HodgeGradings gr = build_hodge_gradings(h2);
  CHECK(rel(chiral_metric_density(e0, e1, h2, gr.hodge), cplx{0.0, -8.0 * std::numbers::pi}) <
        1e-12);
  CHECK(std::abs(chiral_metric_density(e0, e1, h2, gr.euler)) == 0.0);
  CHECK_THROWS_AS(chiral_metric_density(e0, e1, h2, gr.hat), std::invalid_argument);
}

TEST_CASE("torsion functional closed form vs trace engine") {
  for (int n : {2, 4}) {
    for (ModuleKind kind : {ModuleKind::spin, ModuleKind::hodge}) {
      CliffordRep rep = kind == ModuleKind::spin ? build_spin_gammas(n) : build_lambda_ops(n);
      TorsionJet t = random_torsion_jet(n, 71 + n, kind == ModuleKind::spin);
      PerturbationJet b =
          kind == ModuleKind::spin ? spin_torsion_B(t, rep) : hodge_torsion_B(t, rep);
      Rng rng(42);
      Tensor u(1, n), v(1, n), w(1, n);
      for (int a = 0; a < n; ++a) {
        u(a) = rng.normal();
        v(a) = rng.normal();
        w(a) = rng.normal();
      }
      cplx engine = torsion_functional(u, v, w, b.B0, rep);
      cplx closed = torsion_functional_closed(u, v, w, t, n, kind);
      CHECK(rel(engine, closed) < 1e-10);
    }
  }
}

TEST_CASE("einstein closed forms vs trace engine") {
  const int n = 4;
  {
    CliffordRep rep = build_spin_gammas(n);
    TorsionJet t = random_torsion_jet(n, 81, true);
    PerturbationJet b = spin_torsion_B(t, rep);
    OneFormJet u = random_one_form_jet(n, 82);
    OneFormJet w = random_one_form_jet(n, 83);
    DensityReport closed = einstein_spin_torsion(u, w, t, n);
    DensityReport engine = einstein_delta_general(u, w, b, rep);
    CHECK(rel(closed.value, engine.value) < 1e-10);
    CHECK(rel(closed.contract(u, w), closed.value) < 1e-12);
  }
  {
    CliffordRep rep = build_lambda_ops(n);
    TorsionJet t = random_torsion_jet(n, 84, false);
    PerturbationJet b = hodge_torsion_B(t, rep);
    OneFormJet u = random_one_form_jet(n, 85);
    OneFormJet w = random_one_form_jet(n, 86);
    DensityReport closed = einstein_hodge_torsion(u, w, t, n);
    DensityReport engine = einstein_delta_general(u, w, b, rep);
    CHECK(rel(closed.value, engine.value) < 1e-10);
  }
}

TEST_CASE("scalar density closed forms and effective curvature") {
  for (int n : {4, 6}) {
    GeometryJet geom = random_geometry_jet(n, 91 + n);
    for (ModuleKind kind : {ModuleKind::spin, ModuleKind::hodge}) {
      TorsionJet t = random_torsion_jet(n, 93 + n, kind == ModuleKind::spin);
      const double f = 1.7;
      cplx closed = scalar_density_closed(f, t, geom, n, kind);
      const double dimv = kind == ModuleKind::spin ? std::pow(2.0, n / 2) : std::pow(2.0, n);
      // Closed form = -(dim(V)(n-2) nu / 24) f R_T with the effective
      // curvature R_T.
      cplx via_rt = -(dimv * (n - 2) * sphere_volume(n) / 24.0) * f * effective_RT(t, geom, kind);
      CHECK(rel(closed, via_rt) < 1e-12);
    }
  }
}

TEST_CASE("chiral scalar spin closed form is a pure divergence term") {
  const int n = 4;
  CliffordRep rep = build_spin_gammas(n);
  Grading chi = build_spin_chirality(rep);
  TorsionJet t = random_torsion_jet(n, 101, true);
  PerturbationJet b = spin_torsion_B(t, rep);
  cplx engine = chiral_scalar_density(2.0, b, rep, chi);
  cplx closed = chiral_scalar_spin_closed(2.0, t, n);
  CHECK(rel(engine, closed) < 1e-10);
  // Constant torsion: no derivative term, the density vanishes.
  TorsionJet tc = t;
  tc.deriv = Tensor(4, n);
  PerturbationJet bc = spin_torsion_B(tc, rep);
  CHECK(std::abs(chiral_scalar_density(2.0, bc, rep, chi)) < 1e-12);
}

TEST_CASE("density report json schema") {
  const int n = 4;
  TorsionJet t = random_torsion_jet(n, 111, true);
  OneFormJet u = random_one_form_jet(n, 112);
  OneFormJet w = random_one_form_jet(n, 113);
  DensityReport r = einstein_spin_torsion(u, w, t, n);
  nlohmann::json j = r;
  CHECK(j.at("functional") == "einstein");
  CHECK(j.at("n") == 4);
  CHECK(j.at("kind") == "spin");
  CHECK(j.at("chiral") == false);
  CHECK(j.at("value").is_array());
  CHECK(j.at("coeff_uw").at("rank") == 2);
  CHECK(j.at("coeff_u_dw").at("rank") == 3);
}
