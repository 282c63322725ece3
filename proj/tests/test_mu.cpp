#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dgl/mu.hpp"
#include "test_support.hpp"

using namespace dgl;

TEST_CASE("factorization of monic polynomials") {
  FqCtx C(3);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 40; ++t) {
    PolyA a = test::random_monic(C, rng, 1 + (t % 6));
    auto fac = factorize_monic(a);
    PolyA prod = PolyA::one(C);
    for (auto& [f, e] : fac) {
      CHECK(is_irreducible(f));
      prod *= pow(f, e);
    }
    CHECK(prod == a);
  }
}

TEST_CASE("mu and nu on prime powers") {
  FqCtx C(3);

  SUBCASE("Carlitz: mu = 1, nu = f^m") {
    MuTable T(carlitz(C));
    for (auto& f : enumerate_monic_irreducibles(C, 2)) {
      for (int m = 0; m <= 6; ++m) {
        CHECK(T.mu(f, m) == PolyA::one(C));
        CHECK(T.nu(f, m) == pow(f, m));
      }
    }
  }
  SUBCASE("rank 2: mu(f^2) = mu(f)^2 - chi(f) f") {
    DrinfeldModule phi(C, {PolyA::one(C), PolyA::one(C)});
    MuTable T(phi);
    for (auto& f : enumerate_monic_irreducibles(C, 3)) {
      PolyA mu1 = T.mu(f, 1);
      Fq chi = phi.chi(f);
      CHECK(T.mu(f, 2) == mu1 * mu1 - f * chi);
      CHECK(T.mu(f, 0) == PolyA::one(C));
      // mu(f) = (-1)^{r+1} chi c_1 and nu(f) = -c_{r-1}
      const FrobCharPoly& P = T.frob(f);
      CHECK(mu1 == -(P.c[1] * chi));
      CHECK(T.nu(f, 1) == -P.c[1]);
    }
  }
  SUBCASE("dual paths agree to m = 10 for deg f <= 3 (checked internally)") {
    // extend_mu/extend_nu throw internal_error on any disagreement
    for (auto kappa1 : {PolyA::zero(C), PolyA::one(C), PolyA::theta(C)}) {
      DrinfeldModule phi(C, {kappa1, PolyA::one(C)});
      MuTable T(phi);
      for (auto& f : enumerate_monic_irreducibles(C, 3)) CHECK_NOTHROW(T.mu_powers(f, 10));
    }
    DrinfeldModule phi3(C, {PolyA::one(C), PolyA::theta(C), PolyA::constant(C, 2)});
    MuTable T3(phi3);
    for (auto& f : enumerate_monic_irreducibles(C, 2)) {
      CHECK_NOTHROW(T3.mu_powers(f, 10));
      CHECK_NOTHROW(T3.nu_powers(f, 10));
    }
  }
}

TEST_CASE("boldmu on prime powers") {
  FqCtx C(3);
  DrinfeldModule phi(C, {PolyA::one(C), PolyA::one(C)});
  MuTable T(phi);
  PolyA f = PolyA::theta(C);

  SUBCASE("k = (m) collapses to mu(f^m) in rank 2") {
    for (int m = 0; m <= 8; ++m) CHECK(T.boldmu_prime(f, {m}) == T.mu(f, m));
  }
  SUBCASE("rank 3: e-slot values reproduce the Q_dual_fX display") {
    DrinfeldModule phi3(C, {PolyA::one(C), PolyA::theta(C), PolyA::constant(C, 2)});
    MuTable T3(phi3);
    for (auto& g : enumerate_monic_irreducibles(C, 3)) {
      auto qv = T3.frob(g).Q_dual_fX();
      // Q^v(fX) = 1 - boldmu(f,1)X + boldmu(1,f) f X^2 - chi f^2 X^3 (r=3)
      CHECK(qv.coeff(1) == -T3.boldmu_prime(g, {1, 0}));
      CHECK(qv.coeff(2) == T3.boldmu_prime(g, {0, 1}) * g);
      Fq chi = phi3.chi(g);
      CHECK(qv.coeff(3) == -(pow(g, 2) * chi));
    }
  }
  SUBCASE("values lie in A with the degree bound (internal asserts)") {
    DrinfeldModule phi3(C, {PolyA::zero(C), PolyA::one(C), PolyA::one(C)});
    MuTable T3(phi3);
    for (auto& g : enumerate_monic_irreducibles(C, 2))
      for (long k1 = 0; k1 <= 3; ++k1)
        for (long k2 = 0; k2 <= 2; ++k2) CHECK_NOTHROW(T3.boldmu_prime(g, {k1, k2}));
  }
}

TEST_CASE("boldmu multiplicative extension") {
  FqCtx C(3);
  DrinfeldModule phi(C, {PolyA::one(C), PolyA::one(C)});
  MuTable T(phi);

  SUBCASE("all ones") { CHECK(T.boldmu({PolyA::one(C)}) == PolyA::one(C)); }
  SUBCASE("(a) equals mu(a) for composite a via multiplicativity") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
      PolyA a = test::random_monic(C, rng, 4);
      PolyA expect = PolyA::one(C);
      for (auto& [g, e] : factorize_monic(a)) expect *= T.mu(g, e);
      CHECK(T.boldmu({a}) == expect);
    }
  }
  SUBCASE("coprime split multiplies, rank 3") {
    DrinfeldModule phi3(C, {PolyA::one(C), PolyA::theta(C), PolyA::constant(C, 2)});
    MuTable T3(phi3);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 12; ++t) {
      PolyA a1 = test::random_monic(C, rng, 2), a2 = test::random_monic(C, rng, 2);
      PolyA b1 = test::random_monic(C, rng, 2), b2 = test::random_monic(C, rng, 2);
      if (gcd(a1 * a2, b1 * b2).deg() != 0) continue;
      CHECK(T3.boldmu({a1 * b1, a2 * b2}) == T3.boldmu({a1, a2}) * T3.boldmu({b1, b2}));
    }
  }
}

TEST_CASE("boldmu recursive relations") {
  FqCtx C(3);
  SUBCASE("rank 2: the Hecke-type relation mu(f)^2 = mu(f^2) + chi f") {
    DrinfeldModule phi(C, {PolyA::one(C), PolyA::one(C)});
    MuTable T(phi);
    for (auto& f : enumerate_monic_irreducibles(C, 2)) {
      auto rep = boldmu_relation_checks(T, f, 4);
      CHECK(rep.pass);
      PolyA mu1 = T.mu(f, 1);
      CHECK(mu1 * mu1 == T.mu(f, 2) + f * phi.chi(f));
    }
  }
  SUBCASE("rank 3") {
    DrinfeldModule phi(C, {PolyA::one(C), PolyA::theta(C), PolyA::constant(C, 2)});
    MuTable T(phi);
    PolyA f = PolyA::theta(C);
    auto rep = boldmu_relation_checks(T, f, 3);
    CHECK(rep.pass);
    CHECK(rep.checks > 10);
  }
  SUBCASE("rank 4, small bound") {
    FqCtx C5(5);
    DrinfeldModule phi(C5, {PolyA::one(C5), PolyA::zero(C5), PolyA::zero(C5), PolyA::constant(C5, 2)});
    MuTable T(phi);
    auto rep = boldmu_relation_checks(T, PolyA::theta(C5), 2);
    CHECK(rep.pass);
  }
}
