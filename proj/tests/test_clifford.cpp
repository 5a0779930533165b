#include <catch2/catch_amalgamated.hpp>

#include <specwres/clifford.hpp>

using namespace specwres;

TEST_CASE("spin generators are hermitian and square to one") {
  for (int n = 2; n <= 8; n += 2) {
    CliffordRep rep = build_spin_gammas(n);
    REQUIRE(rep.fiber_dim == (1 << (n / 2)));
    for (int a = 0; a < n; ++a) {
      CHECK((rep.gamma[a] - rep.gamma[a].adjoint()).cwiseAbs().maxCoeff() == 0.0);
      CHECK((rep.gamma[a] * rep.gamma[a] - rep.id()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("spin generator contraction sums to n") {
  for (int n = 2; n <= 6; n += 2) {
    CliffordRep rep = build_spin_gammas(n);
    Mat s = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
    for (int a = 0; a < n; ++a) s += rep.gamma[a] * rep.gamma[a];
    CHECK((s - static_cast<double>(n) * rep.id()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("spin chirality is hermitian, involutive, traceless") {
  for (int n = 2; n <= 6; n += 2) {
    CliffordRep rep = build_spin_gammas(n);
    Grading chi = build_spin_chirality(rep);
    CHECK((chi.chi - chi.chi.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((chi.chi * chi.chi - rep.id()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(chi.chi.trace()) < 1e-14);
  }
}

TEST_CASE("form module gamma and gamma-tilde from ladder operators") {
  for (int n = 2; n <= 6; n += 2) {
    CliffordRep rep = build_lambda_ops(n);
    REQUIRE(rep.fiber_dim == (1 << n));
    const cplx I{0.0, 1.0};
    for (int p = 0; p < n; ++p) {
      Mat g = -I * (rep.lambda_plus[p] - rep.lambda_minus[p]);
      Mat gt = rep.lambda_plus[p] + rep.lambda_minus[p];
      CHECK((g - rep.gamma[p]).cwiseAbs().maxCoeff() == 0.0);
      CHECK((gt - rep.gamma_tilde[p]).cwiseAbs().maxCoeff() == 0.0);
      CHECK((rep.lambda_plus[p] - rep.lambda_minus[p].adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("form module trace sweep") {
  for (int n = 2; n <= 6; n += 2) {
    CliffordRep rep = build_lambda_ops(n);
    TraceLemmaReport rpt = verify_trace_lemma_hodge(rep);
    REQUIRE(!rpt.entries.empty());
    for (const auto& e : rpt.entries) {
      INFO(e.name);
      CHECK(e.residual < 1e-12);
    }
  }
}

TEST_CASE("hodge gradings relate as a product") {
  for (int n = 2; n <= 4; n += 2) {
    CliffordRep rep = build_lambda_ops(n);
    HodgeGradings gr = build_hodge_gradings(rep);
    CHECK((gr.hat.chi - gr.hodge.chi * gr.euler.chi).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((gr.euler.chi * gr.hodge.chi - gr.hodge.chi * gr.euler.chi).cwiseAbs().maxCoeff() <
          1e-14);
  }
}

TEST_CASE("dimension guards") {
  CHECK_THROWS(build_spin_gammas(3));
  CHECK_THROWS(build_spin_gammas(10));
  CHECK_THROWS(build_lambda_ops(8));
}
