#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgl/frobenius.hpp"

using namespace dgl;

TEST_CASE("Carlitz characteristic polynomials: P_f(X) = X - f") {
  FqCtx C(3);
  DrinfeldModule carl = carlitz(C);
  for (auto& f : enumerate_monic_irreducibles(C, 3)) {
    FrobCharPoly P = frob_charpoly(carl, f);
    CHECK(P.c[0] == -f);
    CHECK(P.P().coeff(1) == PolyA::one(C));
    // dual display: P^v = X - 1/f, so Q^v(fX) = 1 - X
    auto qvfx = P.Q_dual_fX();
    CHECK(qvfx.coeff(0) == PolyA::one(C));
    CHECK(qvfx.coeff(1) == -PolyA::one(C));
  }
}

TEST_CASE("worked example: q=3, phi_t = theta + tau + tau^2, f = theta") {
  FqCtx C(3);
  DrinfeldModule phi(C, {PolyA::one(C), PolyA::one(C)});
  FrobCharPoly P = frob_charpoly(phi, PolyA::theta(C));
  // P_f(X) = X^2 + X + 2 theta
  CHECK(P.c[1] == PolyA::one(C));
  CHECK(P.c[0] == PolyA::theta(C) * Fq(C, 2));
  CHECK(P.c_f == -Fq(C, 1));
  // c_f P_f(1) = order oracle
  PolyA p1 = P.P().eval(PolyA::one(C));
  TModule E(phi.action_t());
  CHECK(p1 * P.c_f == module_order_oracle(E, PolyA::theta(C)));
}

TEST_CASE("degree bound forces constant c_1 when d=1, r=2") {
  FqCtx C(5);
  DrinfeldModule phi(C, {PolyA::theta(C), PolyA::constant(C, 2)});
  FrobCharPoly P = frob_charpoly(phi, PolyA::theta(C) + PolyA::one(C));
  CHECK(P.c[1].deg() <= 0);
}

TEST_CASE("self-verification across primes and fields") {
  // frob_charpoly internally checks P_f(tau^d) = 0, the c_f closed form and
  // the degree bounds; here we add c_0 and the order identity.
  for (uint32_t q : {3u, 5u}) {
    FqCtx C(q);
    DrinfeldModule phi(C, {PolyA::one(C), PolyA::one(C)});
    for (auto& f : enumerate_monic_irreducibles(C, 2)) {
      FrobCharPoly P = frob_charpoly(phi, f);
      // c_0 = (-1)^r chibar(f) f
      CHECK(P.c[0] == f * phi.chi_bar(f));
      PolyA p1 = P.P().eval(PolyA::one(C));
      TModule E(phi.action_t());
      CHECK(p1 * P.c_f == module_order_oracle(E, f));
    }
  }
}

TEST_CASE("dual and reciprocal forms") {
  FqCtx C(3);
  DrinfeldModule phi(C, {PolyA::theta(C), PolyA::one(C)});
  PolyA f = pow(PolyA::theta(C), 2) + PolyA::one(C);
  FrobCharPoly P = frob_charpoly(phi, f);

  // P^v(X) = c_0^{-1} X^r P(1/X): check the displayed coefficients
  auto pd = P.P_dual();
  RatK fr(f);
  CHECK(pd.coeff(2) == RatK::one(C));
  CHECK(pd.coeff(1) == RatK(P.c[1] * P.chi_f) / fr);  // (-1)^r chi c_1 / f with r=2
  CHECK(pd.coeff(0) == RatK(PolyA::constant(C, P.chi_f.v)) / fr);

  // r=2 display: Q^v(fX) = 1 + chi c_1 X + chi f X^2
  auto qv = P.Q_dual_fX();
  CHECK(qv.coeff(0) == PolyA::one(C));
  CHECK(qv.coeff(1) == P.c[1] * P.chi_f);
  CHECK(qv.coeff(2) == f * P.chi_f);

  // Q^v(1)^{-1} = f / ((-1)^r chi(f) P(1))
  RatK qv1 = P.Q_dual().eval(RatK::one(C));
  PolyA p1 = P.P().eval(PolyA::one(C));
  CHECK(qv1.inv() == RatK(f) / RatK(p1 * P.chi_f));

  // reciprocal pairs
  CHECK(reciprocal(P.Q(), 2) == P.P());
  auto pdual_flip = reciprocal(P.Q_dual(), 2);
  for (int i = 0; i <= 2; ++i) CHECK(pdual_flip.coeff(i) == pd.coeff(i));
}

TEST_CASE("twisted identity holds on random extension points") {
  FqCtx C(3);
  DrinfeldModule phi(C, {PolyA::one(C), PolyA::one(C)});
  PolyA f = PolyA::theta(C) + PolyA::one(C);
  FrobCharPoly P = frob_charpoly(phi, f);
  // evaluate P_f(tau^d), coefficients through phibar, on points of an
  // extension F_{f'} of F_f of degree 2 over f... use the degree-2
  // extension field F_{q^2} realized as A/(g) with g irreducible of degree 2
  // congruent setup: points x with x in F_g where f | g? Simpler: evaluate
  // inside F_f itself and a degree-2 extension of the prime field containing
  // theta_bar: here F_f = F_3, so F_9 works.
  auto R = std::make_shared<const ResidueCtx>(f);
  TwistedPoly<FfElem> phibar = phi.reduce(R);
  const int d = f.deg();
  // build P_f(tau^d) as a twisted polynomial and check it kills 20 points
  FfElem z = FfElem::raw(R, PolyA::zero(C));
  auto tau_pow = [&](int k) {
    TwistedPoly<FfElem> p(Side::Tau, 1, z);
    p.set_coeff(k, Mat<FfElem>::identity(1, z));
    return p;
  };
  TwistedPoly<FfElem> total = tau_pow(2 * d);
  std::vector<TwistedPoly<FfElem>> cache = {
      TwistedPoly<FfElem>::constant(Side::Tau, Mat<FfElem>::identity(1, z))};
  for (int i = 0; i < 2; ++i) {
    TwistedPoly<FfElem> pci(Side::Tau, 1, z);
    for (int j = 0; j <= P.c[i].deg(); ++j)
      if (P.c[i].coeff_packed(j) != 0) {
        auto term = tpow_at(cache, phibar, j);
        for (int k = 0; k <= term.deg(); ++k) {
          auto m = term.coeff(k);
          m(0, 0) = m(0, 0) * FfElem(R, PolyA::constant(C, P.c[i].coeff_packed(j)));
          term.set_coeff(k, m);
        }
        pci += term;
      }
    total += pci * tau_pow(d * i);
  }
  CHECK(total.is_zero_twisted());
  for (auto& x : all_elements(R)) CHECK(total.evaluate({x})[0].is_zero());
}

TEST_CASE("tensor structure characteristic polynomials") {
  FqCtx C(3);
  DrinfeldModule phi(C, {PolyA::one(C), PolyA::one(C)});
  DrinfeldModule psi(C, {PolyA::theta(C), PolyA::constant(C, 2)});

  SUBCASE("degree-1 inputs: (T-x) tensor (T-y) = T - xy") {
    DrinfeldModule c1 = carlitz(C);
    PolyA f = PolyA::theta(C);
    FrobCharPoly P = frob_charpoly(c1, f), Q = frob_charpoly(c1, f);
    auto t = tensor_structure_charpoly(P, &Q, TensorKind::Tensor2);
    CHECK(t.deg() == 1);
    CHECK(t.coeff(0) == -(f * f));
  }
  SUBCASE("alt2 of a quadratic is X - c_0") {
    PolyA f = PolyA::theta(C) + PolyA::one(C);
    FrobCharPoly P = frob_charpoly(phi, f);
    auto a = tensor_structure_charpoly(P, nullptr, TensorKind::Alt2);
    CHECK(a.deg() == 1);
    CHECK(a.coeff(0) == -P.c[0]);
  }
  SUBCASE("degrees r*l, r(r+1)/2, r(r-1)/2") {
    PolyA f = PolyA::theta(C);
    FrobCharPoly P = frob_charpoly(phi, f), Q = frob_charpoly(psi, f);
    CHECK(tensor_structure_charpoly(P, &Q, TensorKind::Tensor2).deg() == 4);
    CHECK(tensor_structure_charpoly(P, nullptr, TensorKind::Sym2).deg() == 3);
    CHECK(tensor_structure_charpoly(P, nullptr, TensorKind::Alt2).deg() == 1);
  }
  SUBCASE("factorization P tensor P = Sym2 P * Alt2 P") {
    for (auto& f : enumerate_monic_irreducibles(C, 3)) {
      FrobCharPoly P = frob_charpoly(phi, f);
      auto ten = tensor_structure_charpoly(P, &P, TensorKind::Tensor2);
      auto sym = tensor_structure_charpoly(P, nullptr, TensorKind::Sym2);
      auto alt = tensor_structure_charpoly(P, nullptr, TensorKind::Alt2);
      CHECK(ten == sym * alt);
    }
  }
}

TEST_CASE("order identities for the three tensor kinds") {
  FqCtx C(3);
  DrinfeldModule phi(C, {PolyA::one(C), PolyA::one(C)});
  DrinfeldModule psi(C, {PolyA::theta(C), PolyA::constant(C, 2)});
  for (auto& f : enumerate_monic_irreducibles(C, 2)) {
    auto ten = verify_order_identity(TensorKind::Tensor2, phi, &psi, f);
    CHECK(ten.equal);
    CHECK(ten.second_form_ok);
    CHECK(ten.monic);
    CHECK(ten.constant_term_ok);
    auto sym = verify_order_identity(TensorKind::Sym2, phi, nullptr, f);
    CHECK(sym.equal);
    CHECK(sym.second_form_ok);
    CHECK(sym.monic);
    auto alt = verify_order_identity(TensorKind::Alt2, phi, nullptr, f);
    CHECK(alt.equal);
    CHECK(alt.second_form_ok);
    CHECK(alt.monic);
  }
  // guard: d*l too large
  PolyA big = enumerate_monic_irreducibles(C, 3).back();
  CHECK_THROWS_AS(verify_order_identity(TensorKind::Tensor2, phi, &psi, big, 8), guard_error);
}
