#include <catch2/catch_amalgamated.hpp>

#include <specwres/tensor.hpp>

using namespace specwres;

TEST_CASE("permutation signs") {
  CHECK(permutation_sign({0, 1, 2}, {0, 1, 2}) == 1);
  CHECK(permutation_sign({1, 0, 2}, {0, 1, 2}) == -1);
  CHECK(permutation_sign({2, 0, 1}, {0, 1, 2}) == 1);
  CHECK(permutation_sign({0, 0, 1}, {0, 1, 0}) == 0);
  CHECK(epsilon_generalized({0, 2, 3}, 2, {0, 3}) == -1);
  CHECK(epsilon_generalized({0, 2, 3}, 1, {2, 3}) == 0);
  CHECK(levi_civita_sign({0, 1, 2, 3}) == 1);
  CHECK(levi_civita_sign({0, 1, 2, 2}) == 0);
  CHECK(levi_civita_sign({3, 2, 1, 0}) == 1);
  CHECK(levi_civita_sign({1, 0, 2, 3}) == -1);
}

TEST_CASE("tensor indexing and arithmetic") {
  Tensor t(3, 4);
  t(1, 2, 3) = cplx{2.0, -1.0};
  CHECK(t(1, 2, 3) == cplx{2.0, -1.0});
  CHECK(t(0, 0, 0) == cplx{0.0, 0.0});
  CHECK(t.max_norm() == Catch::Approx(std::abs(cplx{2.0, -1.0})));
  Tensor s = t;
  s += t;
  CHECK(s(1, 2, 3) == cplx{4.0, -2.0});
  CHECK_THROWS(t.at({5, 0, 0}));
}

TEST_CASE("tensor json round trip") {
  Tensor t(2, 3);
  t(0, 1) = cplx{1.5, 0.5};
  t(2, 2) = cplx{-3.0, 0.0};
  nlohmann::json j = t;
  Tensor back = j.get<Tensor>();
  REQUIRE(back.rank() == 2);
  REQUIRE(back.dim() == 3);
  CHECK(back(0, 1) == t(0, 1));
  CHECK(back(2, 2) == t(2, 2));
}

TEST_CASE("cyclic antisymmetrization") {
  const int n = 3;
  Tensor t(3, n);
  Rng rng(5);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = rng.normal();
  Tensor a = antisymmetrize_torsion(t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // Cyclic average of the cyclic average is itself.
        cplx cyc = (a(i, j, k) + a(k, i, j) + a(j, k, i)) / 3.0;
        CHECK(std::abs(cyc - a(i, j, k)) < 1e-14);
      }
}

TEST_CASE("cosphere volumes") {
  const double pi = std::numbers::pi;
  CHECK(sphere_volume(2) == Catch::Approx(2.0 * pi));
  CHECK(sphere_volume(4) == Catch::Approx(2.0 * pi * pi));
  CHECK(sphere_volume(6) == Catch::Approx(pi * pi * pi));
}

TEST_CASE("cosphere monomial integrals") {
  for (int n : {2, 3, 4, 6}) {
    const double nu = sphere_volume(n);
    std::vector<int> mu(n, 0);
    CHECK(sphere_monomial_integral(mu) == Catch::Approx(nu));
    mu[0] = 1;
    CHECK(sphere_monomial_integral(mu) == 0.0);
    mu[0] = 2;
    CHECK(sphere_monomial_integral(mu) == Catch::Approx(nu / n));
    mu[0] = 4;
    CHECK(sphere_monomial_integral(mu) == Catch::Approx(3.0 * nu / (n * (n + 2))));
    if (n >= 2) {
      mu[0] = 2;
      mu[1] = 2;
      CHECK(sphere_monomial_integral(mu) == Catch::Approx(nu / (n * (n + 2))));
    }
  }
  // Sum rule: sum_a int xi_a^2 = nu.
  for (int n : {2, 4, 6}) {
    double total = 0.0;
    for (int a = 0; a < n; ++a) {
      std::vector<int> mu(n, 0);
      mu[a] = 2;
      total += sphere_monomial_integral(mu);
    }
    CHECK(total == Catch::Approx(sphere_volume(n)));
  }
}
