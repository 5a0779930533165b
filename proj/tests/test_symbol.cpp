#include <catch2/catch_amalgamated.hpp>

#include <specwres/symbol.hpp>

using namespace specwres;

namespace {

double eval_residual(const SymbolPoly& a, const SymbolPoly& b, Rng& rng) {
  const int n = a.n();
  double res = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<double> x(n), xi(n);
    for (double& v : x) v = 0.5 * rng.normal();
    for (double& v : xi) v = rng.normal();
    Mat da = a.eval(x, xi), db = b.eval(x, xi);
    double scale = std::max({1.0, da.cwiseAbs().maxCoeff(), db.cwiseAbs().maxCoeff()});
    res = std::max(res, (da - db).cwiseAbs().maxCoeff() / scale);
  }
  return res;
}

}  // namespace

TEST_CASE("symbol term bookkeeping") {
  SymbolPoly s(2, 2);
  std::vector<int> z{0, 0}, mu{1, 0};
  s.add_term(Mat::Identity(2, 2), z, mu, 0);
  s.add_term(Mat::Identity(2, 2), z, mu, 0);
  REQUIRE(s.terms().size() == 1);
  CHECK(s.hi() == 1);
  s.add_term(Mat::Identity(2, 2), z, z, -2);
  CHECK(s.hi() == 1);
  // Terms of x-degree above two are dropped on entry.
  s.add_term(Mat::Identity(2, 2), {2, 1}, z, 0);
  CHECK(s.terms().size() == 2);
}

TEST_CASE("composition reproduces the squared flat perturbed operator") {
  for (int n : {2, 4}) {
    CliffordRep rep = build_spin_gammas(n);
    PerturbationJet b = random_perturbation_jet(rep, 100 + n);
    SymbolPoly d = dirac_symbol(b, rep);
    SymbolPoly d2 = compose(d, d, 0);
    SymbolPoly l = laplace_symbol(perturb_laplace_data(zero_laplace_jet(rep), b, rep),
                                  flat_geometry(n), rep);
    Rng rng(5);
    // The x-dependence of the zeroth xi-order of sigma(D^2) is below jet
    // order (the Laplace data keeps only Q at the point); compare the parts
    // the jet actually carries.
    auto carried = [](const SymbolPoly::Key& key) {
      return SymbolPoly::homogeneity(key) >= 1 || SymbolPoly::xdeg_total(key) == 0;
    };
    SymbolPoly d2_low(n, rep.fiber_dim);
    for (const auto& [key, m] : d2.terms())
      if (carried(key)) d2_low.add_term(m, key.xdeg, key.mu, key.k);
    SymbolPoly l_low(n, rep.fiber_dim);
    for (const auto& [key, m] : l.terms())
      if (carried(key)) l_low.add_term(m, key.xdeg, key.mu, key.k);
    CHECK(eval_residual(d2_low, l_low, rng) < 1e-12);
  }
}

TEST_CASE("parametrix inverts the symbol within its window") {
  CliffordRep rep = build_spin_gammas(4);
  PerturbationJet b = random_perturbation_jet(rep, 55);
  GeometryJet geom = random_geometry_jet(4, 56);
  LaplaceJet lj = perturb_laplace_data(spin_laplace_jet(geom, rep), b, rep);
  SymbolPoly l = laplace_symbol(lj, geom, rep);
  SymbolPoly inv = parametrix_inverse_square(l, -4);
  CHECK(inv.lo() == -4);
  CHECK(inv.hi() == -2);
  SymbolPoly resid = SymbolPoly::identity(4, rep.fiber_dim) - compose(l, inv, -2);
  double res = 0.0;
  for (const auto& [key, m] : resid.terms()) res = std::max(res, m.cwiseAbs().maxCoeff());
  CHECK(res < 1e-10);
}

TEST_CASE("parametrix rejects non-elliptic symbols") {
  CliffordRep rep = build_spin_gammas(2);
  SymbolPoly s(2, rep.fiber_dim);
  std::vector<int> z{0, 0};
  s.add_term(rep.gamma[0], z, {2, 0}, 0);  // gamma xi_1^2: not ||xi||^2 Id
  CHECK_THROWS_AS(parametrix_inverse_square(s, -4), std::invalid_argument);
}

TEST_CASE("power symbol narrows the validity window") {
  CliffordRep rep = build_spin_gammas(2);
  PerturbationJet b = random_perturbation_jet(rep, 77);
  SymbolPoly l = laplace_symbol(perturb_laplace_data(zero_laplace_jet(rep), b, rep),
                                flat_geometry(2), rep);
  SymbolPoly inv = parametrix_inverse_square(l, -4);
  SymbolPoly inv2 = power_symbol(inv, 2);
  CHECK(inv2.hi() == -4);
  CHECK(inv2.lo() == -6);
  // Each extra factor keeps a window of width two: b^k is valid down to
  // b.lo + (k-1) b.hi.
  SymbolPoly inv3 = power_symbol(inv, 3);
  CHECK(inv3.hi() == -6);
  CHECK(inv3.lo() == -8);
  CHECK_THROWS_AS(power_symbol(inv, 0), std::invalid_argument);
}

TEST_CASE("raw residue needs enough truncation depth") {
  CliffordRep rep = build_spin_gammas(4);
  PerturbationJet b = random_perturbation_jet(rep, 88);
  SymbolPoly l = laplace_symbol(perturb_laplace_data(zero_laplace_jet(rep), b, rep),
                                flat_geometry(4), rep);
  SymbolPoly inv = parametrix_inverse_square(l, -4);
  // sigma(D^{-2}) alone cannot reach homogeneity -6 needed by an op of hi 0.
  SymbolPoly op = SymbolPoly::constant(rep.id(), 4);
  CHECK_THROWS_AS(raw_wres(op, inv, 6), std::invalid_argument);
  CHECK_NOTHROW(raw_wres(op, inv, 4));
}

TEST_CASE("symbol json export") {
  CliffordRep rep = build_spin_gammas(2);
  PerturbationJet b = random_perturbation_jet(rep, 90);
  nlohmann::json j = symbol_to_json(dirac_symbol(b, rep));
  CHECK(j.at("n") == 2);
  CHECK(j.at("fiber_dim") == 2);
  CHECK(j.at("terms").is_array());
  CHECK(!j.at("terms").empty());
}
