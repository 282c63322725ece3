#pragma once

#include <chrono>
#include <functional>
#include <future>
#include <mutex>
#include <thread>
#include <string>
#include <vector>

#include "dgl/specialvalues.hpp"

namespace dgl {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int index;
  std::string name;
  std::function<bool(std::string&)> fn;
};

// The verification criteria, each pinned to its stated tolerance.  These are
// identity-based checks at desk scale; `verify-all` runs the full list.
// Each criterion body owns its field context so the list can run on a pool.
inline std::vector<Criterion> acceptance_criteria() {
  std::vector<Criterion> out;

  out.push_back({1, "Carlitz class-formula sanity: |zeta_C(1) - Log_C(1)| <= q^-18 at M=20, D=20",
                 [](std::string& d) {
                   FqCtx C(3);
                   auto rep = special_value_carlitz(C, 20, 20);
                   d = "residual degree " + std::to_string(*rep.identity_residual_deg);
                   return *rep.identity_residual_deg <= -18;
                 }});

  out.push_back({2, "Alt^2 special value: L(A,chi_phi,1) = Log_{Alt^2 phi}(1) to q^-10 at M=12, D=12",
                 [](std::string& d) {
                   FqCtx C(3);
                   DrinfeldModule phi(C, {PolyA::one(C), PolyA::one(C)});
                   auto rep = special_value_tensor_structure(phi, TensorKind::Alt2, 12, 12);
                   d = "residual degree " + std::to_string(*rep.identity_residual_deg);
                   return *rep.identity_residual_deg <= -10;
                 }});

  out.push_back({3, "Euler-factor factorization, all kinds, deg f <= 3, coefficients through u^8",
                 [](std::string& d) {
                   FqCtx C(3);
                   DrinfeldModule phi2(C, {PolyA::one(C), PolyA::one(C)});
                   DrinfeldModule psi2(C, {PolyA::theta(C), PolyA::constant(C, 2)});
                   DrinfeldModule phi3(C, {PolyA::one(C), PolyA::one(C), PolyA::one(C)});
                   int checks = 0;
                   bool ok = true;
                   for (auto& f : enumerate_monic_irreducibles(C, 3)) {
                     {
                       LSeriesContext ctx(phi2, psi2);
                       ok &= euler_factor_identity_check(ctx, TensorKind::Tensor2, f, 8).pass;
                     }
                     {
                       LSeriesContext ctx(phi2, phi3);
                       ok &= euler_factor_identity_check(ctx, TensorKind::Tensor2, f, 8).pass;
                     }
                     for (auto* m : {&phi2, &phi3}) {
                       LSeriesContext ctx(*m);
                       ok &= euler_factor_identity_check(ctx, TensorKind::Sym2, f, 8).pass;
                       ok &= euler_factor_identity_check(ctx, TensorKind::Alt2, f, 8).pass;
                     }
                     checks += 6;
                   }
                   d = std::to_string(checks) + " factor identities";
                   return ok;
                 }});

  out.push_back({4, "A-order identities: brute-force order oracle vs chi-scaled P(1), deg f <= 2",
                 [](std::string& d) {
                   FqCtx C(3);
                   DrinfeldModule phi2(C, {PolyA::one(C), PolyA::one(C)});
                   DrinfeldModule psi2(C, {PolyA::theta(C), PolyA::constant(C, 2)});
                   int checks = 0;
                   bool ok = true;
                   for (auto& f : enumerate_monic_irreducibles(C, 2)) {
                     auto t = verify_order_identity(TensorKind::Tensor2, phi2, &psi2, f);
                     auto s = verify_order_identity(TensorKind::Sym2, phi2, nullptr, f);
                     auto a = verify_order_identity(TensorKind::Alt2, phi2, nullptr, f);
                     for (auto* r : {&t, &s, &a}) {
                       ok &= r->equal && r->second_form_ok && r->monic;
                       ++checks;
                     }
                   }
                   d = std::to_string(checks) + " exact order identities";
                   return ok;
                 }});

  out.push_back({5, "Frobenius charpoly self-verification, q in {3,5}, r=2, deg f <= 4",
                 [](std::string& d) {
                   int checks = 0;
                   bool ok = true;
                   auto verify_one = [&](const DrinfeldModule& phi, const PolyA& f) {
                     FrobCharPoly P = frob_charpoly(phi, f);  // internal: identity, c_f form, bounds
                     ok &= (P.c[0] == f * phi.chi_bar(f));
                     TModule E(phi.action_t());
                     ok &= (P.P().eval(PolyA::one(phi.ctx())) * P.c_f == module_order_oracle(E, f));
                     ++checks;
                   };
                   {
                     FqCtx C(3);
                     DrinfeldModule phi(C, {PolyA::one(C), PolyA::one(C)});
                     for (auto& f : enumerate_monic_irreducibles(C, 4)) verify_one(phi, f);
                   }
                   {
                     FqCtx C(5);
                     DrinfeldModule phi(C, {PolyA::theta(C), PolyA::constant(C, 2)});
                     for (auto& f : enumerate_monic_irreducibles(C, 4)) verify_one(phi, f);
                   }
                   d = std::to_string(checks) + " primes verified";
                   return ok;
                 }});

  out.push_back({6, "Tensor factorization of charpolys: P tensor P = Sym^2 P * Alt^2 P, deg f <= 3",
                 [](std::string& d) {
                   FqCtx C(3);
                   DrinfeldModule phi2(C, {PolyA::one(C), PolyA::one(C)});
                   int checks = 0;
                   bool ok = true;
                   for (auto& f : enumerate_monic_irreducibles(C, 3)) {
                     FrobCharPoly P = frob_charpoly(phi2, f);
                     auto ten = tensor_structure_charpoly(P, &P, TensorKind::Tensor2);
                     auto sym = tensor_structure_charpoly(P, nullptr, TensorKind::Sym2);
                     auto alt = tensor_structure_charpoly(P, nullptr, TensorKind::Alt2);
                     ok &= (ten == sym * alt);
                     ++checks;
                   }
                   d = std::to_string(checks) + " factorizations";
                   return ok;
                 }});

  out.push_back({7, "Log-coefficient crosscheck, m <= 6, all kinds, kappa_1 in {0,1,theta}",
                 [](std::string& d) {
                   FqCtx C(3);
                   bool ok = true;
                   int checks = 0;
                   for (auto k1 : {PolyA::zero(C), PolyA::one(C), PolyA::theta(C)}) {
                     DrinfeldModule phi(C, {k1, PolyA::one(C)});
                     for (auto kind : {TensorKind::Tensor2, TensorKind::Sym2, TensorKind::Alt2}) {
                       ok &= log_coeff_crosscheck(phi, kind, 6).pass;
                       ++checks;
                     }
                   }
                   d = std::to_string(checks) + " coefficient families";
                   return ok;
                 }});

  out.push_back({8, "Regulator pipelines agree to theta^-18 and the product law holds",
                 [](std::string& d) {
                   FqCtx C(3);
                   bool ok = true;
                   const int M = 21;
                   for (auto k1 : {PolyA::zero(C), PolyA::one(C)}) {
                     DrinfeldModule phi(C, {k1, PolyA::one(C)});
                     auto alt_c = reg_closed_form(phi, TensorKind::Alt2, M);
                     auto alt_b = reg_via_basis(phi, TensorKind::Alt2, M);
                     auto sym_c = reg_closed_form(phi, TensorKind::Sym2, M);
                     auto sym_b = reg_via_basis(phi, TensorKind::Sym2, M);
                     auto ten_b = reg_via_basis(phi, TensorKind::Tensor2, M);
                     ok &= LaurentKInf::sub(alt_c.value, alt_b.value).deg_upper_bound() <= -18;
                     ok &= LaurentKInf::sub(sym_c.value, sym_b.value).deg_upper_bound() <= -18;
                     LaurentKInf prod = LaurentKInf::mul(sym_b.value, alt_b.value);
                     ok &= LaurentKInf::sub(ten_b.value, prod).deg_upper_bound() <= -18;
                   }
                   d = "kappa_1 in {0,1}, both pipelines and the product law";
                   return ok;
                 }});

  out.push_back({9, "Sym^2 class-order candidate is monic within theta^-6 at M=10", [](std::string& d) {
                   FqCtx C(3);
                   DrinfeldModule phi(C, {PolyA::one(C), PolyA::one(C)});
                   auto rep = special_value_tensor_structure(phi, TensorKind::Sym2, 10);
                   d = "candidate " + rep.class_order_candidate->str() + ", residual degree " +
                       std::to_string(*rep.candidate_residual_deg);
                   return rep.candidate_monic && *rep.candidate_residual_deg <= -6;
                 }});

  out.push_back({10, "Symmetric-function identity suites at (n,W) in {(2,6),(3,5),(4,4)}, 50 seeded trials",
                 [](std::string& d) {
                   FqCtx C(3);
                   bool ok = true;
                   int suites = 0;
                   struct Cfg {
                     int n, W;
                   };
                   for (Cfg cfg : {Cfg{2, 6}, Cfg{3, 5}, Cfg{4, 4}}) {
                     for (auto which :
                          {SchurIdentity::Cauchy, SchurIdentity::CauchyRect, SchurIdentity::LittlewoodSym,
                           SchurIdentity::LittlewoodAlt, SchurIdentity::Reorder}) {
                       ok &= schur_identity_suite(C, which, cfg.n, cfg.W, 50, 0x5eed).pass;
                       ++suites;
                     }
                   }
                   d = std::to_string(suites) + " suites";
                   return ok;
                 }});

  out.push_back({11, "mu/nu dual-path agreement (inversion vs recursion), m <= 10, deg f <= 3",
                 [](std::string& d) {
                   FqCtx C(3);
                   DrinfeldModule phi2(C, {PolyA::one(C), PolyA::one(C)});
                   DrinfeldModule psi2(C, {PolyA::theta(C), PolyA::constant(C, 2)});
                   int checks = 0;
                   for (auto* m : {&phi2, &psi2}) {
                     MuTable T(*m);
                     for (auto& f : enumerate_monic_irreducibles(C, 3)) {
                       T.mu_powers(f, 10);  // throws internal_error on any disagreement
                       T.nu_powers(f, 10);
                       ++checks;
                     }
                   }
                   d = std::to_string(checks) + " primes, both functions";
                   return true;
                 }});

  out.push_back({12, "Cutoff stability: raising D by 2 changes no certified coefficient",
                 [](std::string& d) {
                   FqCtx C(3);
                   DrinfeldModule phi2(C, {PolyA::one(C), PolyA::one(C)});
                   bool ok = true;
                   {
                     DrinfeldModule carl = carlitz(C);
                     LSeriesContext ctx(carl);
                     SeriesSpec a{SeriesKind::GossDual, 0, 20, 20, 1};
                     SeriesSpec b = a;
                     b.cutoff = 22;
                     ok &= LaurentKInf::agree_to_precision(dirichlet_sum(ctx, a).value,
                                                           dirichlet_sum(ctx, b).value);
                   }
                   {
                     LSeriesContext ctx(phi2);
                     SeriesSpec a{SeriesKind::TwistedZeta, 1, 12, 12, phi2.chi_unit().v};
                     SeriesSpec b = a;
                     b.cutoff = 14;
                     ok &= LaurentKInf::agree_to_precision(dirichlet_sum(ctx, a).value,
                                                           dirichlet_sum(ctx, b).value);
                   }
                   {
                     LSeriesContext ctx(phi2);
                     SeriesSpec a{SeriesKind::SymTwiddle, 0, 10, -1, 1};
                     auto base = dirichlet_sum(ctx, a);
                     SeriesSpec b = a;
                     b.cutoff = base.cutoff_used + 2;
                     ok &= LaurentKInf::agree_to_precision(base.value, dirichlet_sum(ctx, b).value);
                   }
                   d = "criteria 1, 2 and 9 series";
                   return ok;
                 }});

  return out;
}

// Runs the criteria (on `workers` threads when > 1; results always come back
// in index order) and reports each through on_done.
inline std::vector<CriterionResult> run_acceptance(
    int workers = 1, const std::function<void(const CriterionResult&)>& on_done = {}) {
  auto criteria = acceptance_criteria();
  auto execute = [](const Criterion& c) {
    CriterionResult r;
    r.index = c.index;
    r.name = c.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.pass = c.fn(r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };
  std::vector<CriterionResult> out;
  if (workers <= 1) {
    for (auto& c : criteria) {
      out.push_back(execute(c));
      if (on_done) on_done(out.back());
    }
  } else {
    std::vector<CriterionResult> res(criteria.size());
    size_t next = 0;
    std::mutex mu;
    auto worker = [&] {
      while (true) {
        size_t i;
        {
          std::lock_guard<std::mutex> lk(mu);
          if (next >= criteria.size()) return;
          i = next++;
        }
        res[i] = execute(criteria[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& r : res) {
      out.push_back(r);
      if (on_done) on_done(out.back());
    }
  }
  return out;
}

}  // namespace dgl
