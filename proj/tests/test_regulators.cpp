#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgl/regulators.hpp"

using namespace dgl;

namespace {
DrinfeldModule rank2(const FqCtx& C, PolyA k1) { return DrinfeldModule(C, {std::move(k1), PolyA::one(C)}); }
}  // namespace

TEST_CASE("B_m recursion and the beta families") {
  FqCtx C(3);
  DrinfeldModule phi = rank2(C, PolyA::one(C));
  BmSequence B(phi);

  SUBCASE("B_0 = 1 and B_1 = kappa_1/(t - theta^q)") {
    CHECK(B.bm(0) == BivarRat::one(C));
    BivarRat b1(PolyAt::constant(phi.kappa(1)), B.t_minus_theta_q(1));
    CHECK(B.bm(1) == b1);
    CHECK(B.bm(-1).is_zero_rat());
  }
  SUBCASE("B_2 matches the two-term expansion") {
    // B_2 = kappa_1^(1) kappa_1 / ((t-theta^(q^2))(t-theta^q)) + kappa_2/(t-theta^(q^2))
    BivarRat lhs = B.bm(2);
    BivarRat t1(PolyAt::constant(phi.kappa(1).twist_n(1) * phi.kappa(1)),
                B.t_minus_theta_q(2) * B.t_minus_theta_q(1));
    BivarRat t2(PolyAt::constant(phi.kappa(2)), B.t_minus_theta_q(2));
    CHECK(lhs == t1 + t2);
  }
  SUBCASE("beta_m equals the logarithm coefficient of phi, m <= 10") {
    TModule E(phi.action_t());
    ExpLogCoeffs el(E, 10);
    for (int m = 0; m <= 10; ++m) CHECK(B.beta(m) == el.log_coeff(m)(0, 0));
    // and beta is the evaluation of B_m at t = theta (reduced-form oracle,
    // kept to m <= 5 where the gcd normalization stays small)
    for (int m = 0; m <= 5; ++m) CHECK(B.beta(m).to_ratk() == B.bm(m).eval_t_theta());
  }
  SUBCASE("beta_tilde is the twisted evaluation") {
    for (int m = 0; m <= 5; ++m) CHECK(B.beta_tilde(m).to_ratk() == B.bm(m).twist_n(1).eval_t_theta());
  }
  SUBCASE("beta_prime is the t-derivative at theta") {
    for (int m = 0; m <= 5; ++m)
      CHECK(B.beta_prime(m).to_ratk() == B.bm(m).derivative_t().eval_t_theta());
  }
  SUBCASE("beta_hat is the theta-derivative at theta") {
    for (int m = 0; m <= 5; ++m)
      CHECK(B.beta_hat(m).to_ratk() == B.bm(m).derivative_theta().eval_t_theta());
  }
  SUBCASE("seeds") {
    CHECK(B.beta(0) == GFrac::one(C));
    CHECK(B.beta_tilde(0) == GFrac::one(C));
    CHECK(B.beta_prime(0).is_zero_frac());
    CHECK(B.beta_hat(0).is_zero_frac());
  }
  SUBCASE("chain rule for m <= 10, three modules") {
    for (auto k1 : {PolyA::zero(C), PolyA::one(C), PolyA::theta(C)}) {
      BmSequence Bk(rank2(C, k1));
      for (int m = 0; m <= 10; ++m) CHECK(Bk.chain_rule_holds(m));
    }
  }
}

TEST_CASE("R_{E,m} closed form and recursion") {
  FqCtx C(3);
  DrinfeldModule phi = rank2(C, PolyA::theta(C));
  BmSequence B(phi);
  Mat<BivarRat> Pinv1 = phi_inverse_twist1(phi);

  SUBCASE("m = 1 base case is (Phi^{-1})^{(1)} itself") {
    Mat<BivarRat> base(2, 2, BivarRat::zero(C));
    base(0, 0) = B.bm(1);
    base(0, 1) = BivarRat(PolyAt::constant(phi.kappa(2)), B.t_minus_theta_q(1));
    base(1, 0) = B.bm(0);
    base(1, 1) = BivarRat::zero(C);
    CHECK(base == Pinv1);
  }
  SUBCASE("alt2 m=1 is the 2x2 determinant") {
    Mat<BivarRat> r1 = r_em(B, TensorKind::Alt2, 1);
    REQUIRE(r1.rows() == 1);
    // det of [[B_1, kappa_2/(t-theta^(1))], [1, 0]] = -kappa_2/(t-theta^(1))
    BivarRat expect = -BivarRat(PolyAt::constant(phi.kappa(2)), B.t_minus_theta_q(1));
    CHECK(r1(0, 0) == expect);
  }
  SUBCASE("tensor2 m=1 has the Kronecker shape") {
    CHECK(r_em(B, TensorKind::Tensor2, 1).rows() == 4);
    CHECK(r_em(B, TensorKind::Sym2, 1).rows() == 3);
  }
  SUBCASE("recursion R_m = R_{m-1}^(1) (Phi^{-1})^(1) for m = 2, 3, all kinds") {
    for (auto kind : {TensorKind::Tensor2, TensorKind::Sym2, TensorKind::Alt2}) {
      Mat<BivarRat> Tpinv = matrix_T(Pinv1, kind);
      for (int m = 2; m <= 3; ++m) {
        Mat<BivarRat> lhs = r_em(B, kind, m);
        Mat<BivarRat> rhs = twist(r_em(B, kind, m - 1), 1) * Tpinv;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("L_m matrix entries") {
  FqCtx C(3);
  DrinfeldModule phi = rank2(C, PolyA::one(C));
  BmSequence B(phi);
  for (int m = 1; m <= 3; ++m) {
    auto F = log_family(B, m);
    Mat<GFrac> L = lm_matrix_gfrac(B, m);
    CHECK(L(3, 3) == B.beta(m) * B.beta(m));       // L_{1,m} = beta_m^2
    CHECK(L(1, 3) == F.Lt1);                       // Ltilde_{1,m}
    Fq k2inv = Fq(C, phi.kappa(2).coeff_packed(0)).inv();
    GFrac gm(GFrac::g(C, m));
    CHECK(L(1, 0) == (gm * F.Lt1).scaled(k2inv));  // (theta-theta^(m))/kappa_2 Ltilde_1
  }
  // m = 1: Ltilde_{0,1} reduces to the two-term display (beta_{-1} = 0)
  auto F1 = log_family(B, 1);
  GFrac expect = -(GFrac(phi.kappa(2)) * B.beta(0) * B.beta_tilde(0)).div_g(1);
  CHECK(F1.Lt0 == expect);
  // RatK conversion of the full matrix stays exact
  Mat<RatK> LR = lm_matrix(B, 2);
  CHECK(LR(3, 3) == B.beta(2).to_ratk() * B.beta(2).to_ratk());
}

TEST_CASE("log coefficient crosscheck against the generic recursion") {
  FqCtx C(3);
  for (auto k1 : {PolyA::zero(C), PolyA::one(C), PolyA::theta(C)}) {
    DrinfeldModule phi = rank2(C, k1);
    for (auto kind : {TensorKind::Tensor2, TensorKind::Sym2, TensorKind::Alt2}) {
      auto rep = log_coeff_crosscheck(phi, kind, 6);
      INFO(tensor_kind_name(kind) << " kappa_1=" << k1.str());
      CHECK(rep.pass);
    }
  }
  CHECK_THROWS_AS(log_coeff_crosscheck(rank2(C, PolyA::one(C)), TensorKind::Alt2, 9), guard_error);
}

TEST_CASE("logarithm evaluation") {
  FqCtx C(3);
  DrinfeldModule phi = rank2(C, PolyA::one(C));

  SUBCASE("tensor2 at z = 0 is 0") {
    std::vector<PolyA> z(4, PolyA::zero(C));
    auto v = log_tensor_eval(phi, TensorKind::Tensor2, z, 12);
    for (auto& x : v) CHECK(x.is_zero_to_prec());
  }
  SUBCASE("alt2 at z = 1 matches 1 + sum Ltilde_0") {
    auto v = log_tensor_eval(phi, TensorKind::Alt2, {PolyA::one(C)}, 16);
    BmSequence B(phi);
    LaurentKInf direct = LaurentKInf::from_poly(PolyA::one(C));
    direct.truncate(16);
    for (int m = 1; m <= 10; ++m) direct += log_family(B, m).Lt0.to_laurent(16);
    CHECK(LaurentKInf::agree_to_precision(v[0], direct));
  }
  SUBCASE("dilog coefficient of z^q is beta_1^2") {
    // evaluate at z=1 and z=theta and recover the q-power coefficient shape
    BmSequence B(phi);
    LaurentKInf d1 = dilog(phi, PolyA::one(C), 14);
    LaurentKInf expect = LaurentKInf::from_poly(PolyA::one(C));
    expect.truncate(14);
    for (int m = 1; m <= 10; ++m) expect += (B.beta(m) * B.beta(m)).to_laurent(14);
    CHECK(LaurentKInf::agree_to_precision(d1, expect));
    CHECK(dilog(phi, PolyA::zero(C), 14).is_zero_to_prec());
  }
  SUBCASE("divergence guard rejects large kappa_1") {
    DrinfeldModule bad = rank2(C, PolyA::monomial(C, 4, 1));
    CHECK_THROWS_AS(log_tensor_eval(bad, TensorKind::Sym2, {PolyA::one(C), PolyA::zero(C), PolyA::zero(C)}, 8),
                    guard_error);
  }
}

TEST_CASE("regulator pipelines") {
  FqCtx C(3);
  const int M = 20;
  for (auto k1 : {PolyA::zero(C), PolyA::one(C)}) {
    DrinfeldModule phi = rank2(C, k1);
    INFO("kappa_1 = " << k1.str());

    RegulatorResult alt_c = reg_closed_form(phi, TensorKind::Alt2, M);
    RegulatorResult alt_b = reg_via_basis(phi, TensorKind::Alt2, M);
    CHECK(LaurentKInf::agree_to_precision(alt_c.value, alt_b.value));
    CHECK(alt_c.value.sign().is_one());

    RegulatorResult sym_c = reg_closed_form(phi, TensorKind::Sym2, M);
    RegulatorResult sym_b = reg_via_basis(phi, TensorKind::Sym2, M);
    LaurentKInf diff = sym_c.value - sym_b.value;
    CHECK(diff.deg_upper_bound() <= -18);

    RegulatorResult ten_b = reg_via_basis(phi, TensorKind::Tensor2, M);
    LaurentKInf prod = LaurentKInf::mul(sym_b.value, alt_b.value);
    // product law Reg_{phi tensor 2} = Reg_sym * Reg_alt
    CHECK(LaurentKInf::sub(ten_b.value, prod).deg_upper_bound() <= -18);
  }
  // kappa_1 = 0 kills the odd-m terms of the alt2 series
  BmSequence B0(rank2(C, PolyA::zero(C)));
  for (int m = 1; m <= 7; m += 2) CHECK(B0.beta(m).is_zero_frac());
}
