#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dgl/schur.hpp"
#include "test_support.hpp"

using namespace dgl;

TEST_CASE("elementary symmetric from a monic polynomial") {
  FqCtx C(5);
  // X^2 - 3X + 2: e1 = 3, e2 = 2
  PolyT<PolyA> P(PolyA::zero(C));
  P.set_coeff(2, PolyA::one(C));
  P.set_coeff(1, PolyA::constant(C, 2));  // -3 mod 5
  P.set_coeff(0, PolyA::constant(C, 2));
  auto e = elementary_from_monic(P);
  CHECK(e[1] == PolyA::constant(C, 3));
  CHECK(e[2] == PolyA::constant(C, 2));

  // X^n: all e_i = 0
  PolyT<PolyA> Pn(PolyA::zero(C));
  Pn.set_coeff(3, PolyA::one(C));
  auto e2 = elementary_from_monic(Pn);
  for (int i = 1; i <= 3; ++i) CHECK(e2[i].is_zero());

  // X - a: e1 = a
  PolyT<PolyA> Pl(PolyA::zero(C));
  Pl.set_coeff(1, PolyA::one(C));
  Pl.set_coeff(0, -PolyA::theta(C));
  CHECK(elementary_from_monic(Pl)[1] == PolyA::theta(C));
}

TEST_CASE("complete homogeneous symmetric polynomials") {
  FqCtx C(5);
  SUBCASE("n=1: h_i = a^i") {
    std::vector<PolyA> e = {PolyA::one(C), PolyA::theta(C)};
    auto h = complete_h(e, 4);
    CHECK(h[0] == PolyA::one(C));
    for (int i = 1; i <= 4; ++i) CHECK(h[i] == pow(PolyA::theta(C), i));
  }
  SUBCASE("n=2: h_2 = e_1^2 - e_2") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
      std::vector<PolyA> e = {PolyA::one(C), test::random_poly(C, rng, 2), test::random_poly(C, rng, 2)};
      auto h = complete_h(e, 2);
      CHECK(h[2] == e[1] * e[1] - e[2]);
    }
  }
}

TEST_CASE("Schur specializations via Jacobi-Trudi") {
  FqCtx C(3);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    // three variables with distinct nonzero values
    std::vector<RatK> xs;
    while (xs.size() < 3) {
      RatK v(test::random_nonzero_poly(C, rng, 2));
      bool dup = false;
      for (auto& u : xs) dup |= (u == v);
      if (!dup) xs.push_back(v);
    }
    std::vector<RatK> e(4, RatK::zero(C));
    e[0] = RatK::one(C);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j >= 1; --j) e[j] += e[j - 1] * xs[i];
    auto h = complete_h(e, 8);

    // S_{(1,0)} = h_1 = e_1, S_{(0,1)} = e_2
    CHECK(schur_jacobi_trudi(SchurIndex(3, {1, 0}), h) == h[1]);
    CHECK(schur_jacobi_trudi(SchurIndex(3, {1, 0}), h) == e[1]);
    CHECK(schur_jacobi_trudi(SchurIndex(3, {0, 1}), h) == e[2]);
    // S_{(i,0)} = h_i
    CHECK(schur_jacobi_trudi(SchurIndex(3, {4, 0}), h) == h[4]);
    // empty index = 1
    CHECK(schur_jacobi_trudi(SchurIndex(3, {0, 0}), h) == RatK::one(C));
  }
  // n=2: S_(m) = h_m
  std::vector<RatK> e2 = {RatK::one(C), RatK(PolyA::theta(C)), RatK(PolyA::one(C))};
  auto h2 = complete_h(e2, 6);
  CHECK(schur_jacobi_trudi(SchurIndex(2, {5}), h2) == h2[5]);

  CHECK_THROWS_AS(schur_jacobi_trudi(SchurIndex(3, {9, 0}), h2), guard_error);
}

TEST_CASE("bialternant oracle") {
  FqCtx C(3);
  PolyA th = PolyA::theta(C);

  SUBCASE("n=2 basics") {
    std::vector<RatK> xs = {RatK(th), RatK(th + PolyA::one(C))};
    CHECK(schur_bialternant_oracle(SchurIndex(2, {1}), xs) == xs[0] + xs[1]);
    // S_(2) = x1^2 + x1 x2 + x2^2
    CHECK(schur_bialternant_oracle(SchurIndex(2, {2}), xs) ==
          xs[0] * xs[0] + xs[0] * xs[1] + xs[1] * xs[1]);
  }
  SUBCASE("repeated values rejected") {
    std::vector<RatK> xs = {RatK(th), RatK(th)};
    CHECK_THROWS_AS(schur_bialternant_oracle(SchurIndex(2, {1}), xs), guard_error);
  }
  SUBCASE("Jacobi-Trudi equals bialternant, all indices of weight <= 6, n <= 4") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 4; ++n) {
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<RatK> xs;
        while (static_cast<int>(xs.size()) < n) {
          RatK v(test::random_nonzero_poly(C, rng, 2));
          bool dup = false;
          for (auto& u : xs) dup |= (u == v);
          if (!dup) xs.push_back(v);
        }
        std::vector<RatK> e(n + 1, RatK::zero(C));
        e[0] = RatK::one(C);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j >= 1; --j) e[j] += e[j - 1] * xs[i];
        auto h = complete_h(e, 12);
        std::vector<long> wts(n - 1);
        for (int i = 0; i < n - 1; ++i) wts[i] = i + 1;
        schur_detail::enumerate_weighted(n - 1, wts, 6, [&](const std::vector<long>& k) {
          SchurIndex idx(n, k);
          CHECK(schur_jacobi_trudi(idx, h) == schur_bialternant_oracle(idx, xs));
        });
        if (trial >= 4) break;  // 5 random specializations per n keep this quick
      }
    }
  }
}

TEST_CASE("identity suites") {
  FqCtx C(3);
  struct Cfg {
    int n, W;
  };
  for (Cfg cfg : {Cfg{2, 6}, Cfg{3, 5}, Cfg{4, 4}}) {
    for (auto which : {SchurIdentity::Cauchy, SchurIdentity::CauchyRect, SchurIdentity::LittlewoodSym,
                       SchurIdentity::LittlewoodAlt, SchurIdentity::Reorder}) {
      auto rep = schur_identity_suite(C, which, cfg.n, cfg.W, 5, 12345);
      INFO(rep.which << " n=" << cfg.n << " W=" << cfg.W);
      CHECK(rep.pass);
    }
  }
  CHECK_THROWS_AS(schur_identity_suite(C, SchurIdentity::Cauchy, 5, 4, 1, 1), guard_error);
  CHECK_THROWS_AS(schur_identity_suite(C, SchurIdentity::Cauchy, 3, 9, 1, 1), guard_error);
}

TEST_CASE("degree of S_k at weight") {
  // deg S_k = weight(k) for generic specializations
  FqCtx C(3);
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 3; ++n) {
    std::vector<RatK> xs;
    while (static_cast<int>(xs.size()) < n) {
      RatK v(test::random_monic(C, rng, 1));
      bool dup = false;
      for (auto& u : xs) dup |= (u == v);
      if (!dup) xs.push_back(v);
    }
    std::vector<RatK> e(n + 1, RatK::zero(C));
    e[0] = RatK::one(C);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j >= 1; --j) e[j] += e[j - 1] * xs[i];
    auto h = complete_h(e, 10);
    std::vector<long> wts(n - 1);
    for (int i = 0; i < n - 1; ++i) wts[i] = i + 1;
    schur_detail::enumerate_weighted(n - 1, wts, 5, [&](const std::vector<long>& k) {
      SchurIndex idx(n, k);
      RatK v = schur_jacobi_trudi(idx, h);
      if (!v.is_zero()) CHECK(v.deg() <= idx.weight());
    });
  }
}
