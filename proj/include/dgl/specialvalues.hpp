#pragma once

#include <optional>
#include <string>

#include "dgl/regulators.hpp"

namespace dgl {

struct SpecialValueReport {
  std::string kind;
  int precision = 0;
  int cutoff_used = 0;
  LaurentKInf conv_value;                       // the convolution L-value at s = 0
  std::optional<LaurentKInf> zeta_factor;       // twisted Carlitz zeta factor
  std::optional<LaurentKInf> L_E;               // L(E^v, 0)
  std::optional<LaurentKInf> regulator;         // rank-2 closed form, sign 1
  std::optional<PolyA> class_order_candidate;   // nearest polynomial of L/Reg
  std::optional<int> candidate_residual_deg;
  bool candidate_monic = false;
  // residual of the direct identity (Carlitz and Alt^2 cases)
  std::optional<int> identity_residual_deg;
};

// Log_E(1) for a Drinfeld module (1-dimensional t-module), summed to
// certified precision via the exact coefficient degrees
inline LaurentKInf drinfeld_log_at_one(const DrinfeldModule& phi, int M) {
  const FqCtx& C = phi.ctx();
  // generous order: coefficient degrees fall off geometrically
  int order = 2;
  while (true) {
    TModule E(phi.action_t());
    ExpLogCoeffs el(E, order);
    LaurentKInf acc = LaurentKInf::from_poly(PolyA::one(C));
    acc.truncate(M);
    bool certified = false;
    long prev = 1;
    int run = 0;
    for (int m = 1; m <= order; ++m) {
      const GFrac& cm = el.log_coeff(m)(0, 0);
      acc += cm.to_laurent(M);
      long d = cm.is_zero_frac() ? RatK::kZeroDeg : cm.deg();
      if (d == RatK::kZeroDeg || (d < prev && d < -(M + 1)))
        ++run;
      else
        run = 0;
      if (d != RatK::kZeroDeg) prev = d;
      if (run >= 4) {
        certified = true;
        break;
      }
    }
    if (certified) return acc;
    if (order > 40) throw guard_error("Log(1) failed the convergence guard");
    order *= 2;
  }
}

// Special-value reports against the class module formula.
//  - "carlitz": zeta_C(1) against Log_C(1) (trivial class module)
//  - alt2:      L(A, chi_phi, 1) against Log_{Alt^2 phi}(1)
//  - sym2:      candidate order = L(mu~,0) L(A,chi^2,2) / Reg_{Sym^2}
//  - tensor2:   candidate order = L(mu x mu,0) L(A,chi chi,2) / Reg_{phi x phi}
inline SpecialValueReport special_value_carlitz(const FqCtx& C, int M, int cutoff = -1) {
  SpecialValueReport rep;
  rep.kind = "carlitz";
  rep.precision = M;
  DrinfeldModule carl = carlitz(C);
  LSeriesContext ctx(carl);
  SeriesSpec spec{SeriesKind::GossDual, 0, M, cutoff, 1};
  auto res = dirichlet_sum(ctx, spec);
  rep.conv_value = res.value;
  rep.cutoff_used = res.cutoff_used;
  LaurentKInf log1 = drinfeld_log_at_one(carl, M);
  rep.regulator = log1;
  rep.L_E = res.value;
  rep.identity_residual_deg = LaurentKInf::sub(res.value, log1).deg_upper_bound();
  return rep;
}

inline SpecialValueReport special_value_tensor_structure(const DrinfeldModule& phi, TensorKind kind, int M,
                                                         int cutoff = -1) {
  const FqCtx& C = phi.ctx();
  if (phi.rank() != 2) throw guard_error("special-value reports need a rank-2 module");
  SpecialValueReport rep;
  rep.kind = tensor_kind_name(kind);
  rep.precision = M;
  Fq u = phi.chi_unit();

  if (kind == TensorKind::Alt2) {
    // L(A, chi_phi, 1) = Log_{Alt^2 phi}(1): r = 2, so L(muhat, s) = 1
    LSeriesContext ctx(phi);
    SeriesSpec zeta{SeriesKind::TwistedZeta, 1, M, cutoff, u.v};
    auto z = dirichlet_sum(ctx, zeta);
    rep.conv_value = LaurentKInf::from_poly(PolyA::one(C));  // L(muhat, 0)
    rep.zeta_factor = z.value;
    rep.cutoff_used = z.cutoff_used;
    rep.L_E = z.value;
    RegulatorResult reg = reg_closed_form(phi, TensorKind::Alt2, M);
    rep.regulator = reg.value;
    rep.identity_residual_deg = LaurentKInf::sub(z.value, reg.value).deg_upper_bound();
    return rep;
  }

  SeriesKind conv_kind = (kind == TensorKind::Sym2) ? SeriesKind::SymTwiddle : SeriesKind::ConvEqualRank;
  LSeriesContext ctx(phi, phi);
  SeriesSpec conv{conv_kind, 0, M, cutoff, 1};
  auto cv = dirichlet_sum(ctx, conv);
  rep.conv_value = cv.value;
  rep.cutoff_used = cv.cutoff_used;
  // the zeta twist is chi_phi^2 for Sym^2 and chi_phi chi_psi = chi_phi^2
  // for the tensor square
  SeriesSpec zeta{SeriesKind::TwistedZeta, 2, M, -1, (u * u).v};
  auto z = dirichlet_sum(ctx, zeta);
  rep.zeta_factor = z.value;
  LaurentKInf LE = LaurentKInf::mul(cv.value, z.value);
  rep.L_E = LE;
  RegulatorResult reg = reg_closed_form(phi, kind, M);
  rep.regulator = reg.value;
  // candidate class module order = L(E^v, 0) / Reg
  LaurentKInf V = LaurentKInf::mul(LE, LaurentKInf::invert(reg.value, M));
  auto [cand, tail] = V.nearest_polynomial();
  rep.class_order_candidate = cand;
  rep.candidate_residual_deg = tail.deg_upper_bound();
  rep.candidate_monic = cand.is_monic();
  return rep;
}

}  // namespace dgl
