#include <catch2/catch_amalgamated.hpp>

#include <specwres/jets.hpp>

using namespace specwres;

TEST_CASE("random geometry has the full curvature symmetries") {
  for (int n : {2, 4, 6}) {
    GeometryJet g = random_geometry_jet(n, 99 + n);
    double res = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            res = std::max(res, std::abs(g.riemann(a, b, c, d) + g.riemann(b, a, c, d)));
            res = std::max(res, std::abs(g.riemann(a, b, c, d) + g.riemann(a, b, d, c)));
            res = std::max(res, std::abs(g.riemann(a, b, c, d) - g.riemann(c, d, a, b)));
            res = std::max(res, std::abs(g.riemann(a, b, c, d) + g.riemann(a, c, d, b) +
                                         g.riemann(a, d, b, c)));
          }
    CHECK(res < 1e-12);
    // Ricci is symmetric; the scalar is its trace.
    double rres = 0.0;
    cplx tr = 0.0;
    for (int a = 0; a < n; ++a) {
      tr += g.ricci(a, a);
      for (int b = 0; b < n; ++b)
        rres = std::max(rres, std::abs(g.ricci(a, b) - g.ricci(b, a)));
    }
    CHECK(rres < 1e-12);
    CHECK(std::abs(tr - g.scalar) < 1e-12);
    CHECK(g.riemann.max_norm() > 0.0);
  }
}

TEST_CASE("perturbation of laplace data") {
  CliffordRep rep = build_spin_gammas(4);
  PerturbationJet b = random_perturbation_jet(rep, 7);
  LaplaceJet lj = perturb_laplace_data(zero_laplace_jet(rep), b, rep);
  const cplx I{0.0, 1.0};
  for (int a = 0; a < 4; ++a) {
    CHECK((lj.S[a] - I * anticomm(rep.gamma[a], b.B0)).cwiseAbs().maxCoeff() < 1e-14);
    for (int c = 0; c < 4; ++c)
      CHECK((lj.P[a][c] - I * anticomm(rep.gamma[a], b.Ba[c])).cwiseAbs().maxCoeff() < 1e-14);
  }
  Mat q = b.B0 * b.B0;
  for (int a = 0; a < 4; ++a) q += I * rep.gamma[a] * b.Ba[a];
  CHECK((lj.Q - q).cwiseAbs().maxCoeff() < 1e-14);
  // A base with a first-order term is rejected.
  LaplaceJet bad = zero_laplace_jet(rep);
  bad.S[0] = rep.id();
  CHECK_THROWS(perturb_laplace_data(bad, b, rep));
}

TEST_CASE("squared-operator coefficient traces") {
  for (int n : {2, 4}) {
    GeometryJet g = random_geometry_jet(n, 31 + n);
    {
      CliffordRep rep = build_spin_gammas(n);
      LaplaceJet lj = spin_laplace_jet(g, rep);
      cplx trp = 0.0;
      for (int a = 0; a < n; ++a) trp += lj.P[a][a].trace();
      // Tr P_aa = (2/3) R dim, the gamma part is traceless by antisymmetry.
      CHECK(std::abs(trp - (2.0 / 3.0) * g.scalar * rep.fiber_dim) < 1e-10);
      CHECK(std::abs(lj.Q.trace() - 0.25 * g.scalar * rep.fiber_dim) < 1e-10);
      // Combined: Tr(-12Q + 6P_aa - 2R) = -R dim(V).
      cplx combined = -12.0 * lj.Q.trace() + 6.0 * trp - 2.0 * g.scalar * rep.fiber_dim;
      CHECK(std::abs(combined + g.scalar * rep.fiber_dim) < 1e-9);
    }
    {
      CliffordRep rep = build_lambda_ops(n);
      auto [trp, trq] = hodge_laplace_trace_data(g, rep);
      cplx combined = -12.0 * trq + 6.0 * trp - 2.0 * g.scalar * rep.fiber_dim;
      CHECK(std::abs(combined + g.scalar * rep.fiber_dim) < 1e-9);
    }
  }
}

TEST_CASE("antisymmetric torsion draw") {
  TorsionJet t = random_torsion_jet(4, 12, true);
  double res = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        res = std::max(res, std::abs(t.value(i, j, k) + t.value(j, i, k)));
        res = std::max(res, std::abs(t.value(i, j, k) + t.value(i, k, j)));
        for (int c = 0; c < 4; ++c)
          res = std::max(res, std::abs(t.deriv(c, i, j, k) + t.deriv(c, j, i, k)));
      }
  CHECK(res < 1e-14);
  CHECK(t.value.max_norm() > 0.0);
}
