#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dgl/lseries.hpp"
#include "dgl/tmodule.hpp"

namespace dgl {

// Rank-2 logarithm machinery: the rational functions B_m(t) with
// B_m(theta) = beta_m (the m-th logarithm coefficient of phi), their
// twisted/differentiated evaluations, and the coefficient families feeding
// the explicit Log and regulator formulas.  All scalar values are kept as
// GFrac (denominators are monomials in g_j = theta - theta^(q^j)).
class BmSequence {
 public:
  explicit BmSequence(DrinfeldModule phi) : phi_(std::move(phi)) {
    if (phi_.rank() != 2) throw guard_error("BmSequence requires rank 2");
    if (phi_.kappa(2).deg() != 0) throw guard_error("BmSequence requires kappa_2 in F_q^x");
    const FqCtx& C = ctx();
    beta_ = {GFrac::one(C)};
    tilde_ = {GFrac::one(C)};
    prime_ = {GFrac::zero(C)};
    hat_ = {GFrac::zero(C)};
  }

  const FqCtx& ctx() const { return phi_.ctx(); }
  const DrinfeldModule& phi() const { return phi_; }

  const GFrac& beta(int m) { return at(beta_, m); }
  const GFrac& beta_tilde(int m) { return at(tilde_, m); }
  const GFrac& beta_prime(int m) { return at(prime_, m); }
  const GFrac& beta_hat(int m) { return at(hat_, m); }

  // B_m(t) as an element of K(t) with the known denominator
  // prod_{i=1..m} (t - theta^(q^i))
  BivarRat bm(int m) {
    const FqCtx& C = ctx();
    if (m < 0) return BivarRat::zero(C);
    PolyA z = PolyA::zero(C);
    std::vector<PolyAt> num = {PolyAt::constant(PolyA::one(C))};
    std::vector<PolyAt> den = {PolyAt::constant(PolyA::one(C))};
    PolyAt prev = PolyAt::zero(z);  // N_{-1} = 0
    for (int k = 1; k <= m; ++k) {
      PolyAt nk = twist(PolyAt::constant(phi_.kappa(1)), k - 1) * num.back();
      if (k >= 2) nk += PolyAt::constant(phi_.kappa(2)) * prev * t_minus_theta_q(k - 1);
      prev = num.back();
      num.push_back(nk);
      den.push_back(den.back() * t_minus_theta_q(k));
    }
    return BivarRat(num[m], den[m]);
  }

  void extend(int m_max) {
    const FqCtx& C = ctx();
    GFrac k2(phi_.kappa(2));
    for (int m = static_cast<int>(beta_.size()); m <= m_max; ++m) {
      GFrac k1m1(phi_.kappa(1).twist_n(m - 1));
      GFrac k1m(phi_.kappa(1).twist_n(m));
      GFrac bprev2 = (m >= 2) ? beta_[m - 2] : GFrac::zero(C);
      beta_.push_back((k1m1 * beta_[m - 1] + k2 * bprev2).div_g(m));
      GFrac tprev2 = (m >= 2) ? tilde_[m - 2] : GFrac::zero(C);
      tilde_.push_back((k1m * tilde_[m - 1] + k2 * tprev2).div_g(m + 1));
      GFrac pprev2 = (m >= 2) ? prime_[m - 2] : GFrac::zero(C);
      prime_.push_back((k1m1 * prime_[m - 1] + k2 * pprev2 - beta_[m]).div_g(m));
      GFrac hprev2 = (m >= 2) ? hat_[m - 2] : GFrac::zero(C);
      GFrac extra = (m == 1) ? GFrac(phi_.kappa(1).derivative()) * beta_[0] : GFrac::zero(C);
      hat_.push_back((k1m1 * hat_[m - 1] + k2 * hprev2 + extra).div_g(m));
    }
  }

  // chain rule: beta'_m - d/dtheta(beta_m) = -betahat_m
  bool chain_rule_holds(int m) {
    return beta_prime(m) - beta(m).derivative() == -beta_hat(m);
  }

  PolyAt t_minus_theta_q(int i) const {
    const FqCtx& C = ctx();
    PolyAt p = PolyAt::t(PolyA::zero(C));
    PolyA th = PolyA::theta(C).twist_n(i);
    return p - PolyAt::constant(th);
  }

 private:
  DrinfeldModule phi_;
  std::vector<GFrac> beta_, tilde_, prime_, hat_;

  const GFrac& at(std::vector<GFrac>& v, int m) {
    if (m < 0) throw internal_error("negative beta index");
    if (m >= static_cast<int>(v.size())) extend(m);
    return v[m];
  }
};

// the coefficient families L_{i,m}, L'_{i,m}, Ltilde_{i,m}, Lhat_{i,m}
struct LogFamily {
  GFrac L1, L2, L1p, L2p, Lt0, Lt1, Lt2, Lh1, Lh2;
};

inline LogFamily log_family(BmSequence& B, int m) {
  const FqCtx& C = B.ctx();
  GFrac k2(B.phi().kappa(2));
  Fq two = Fq(C, 1) + Fq(C, 1);
  auto k2g1 = [&](const GFrac& x) { return (k2 * x).div_g(1); };  // kappa_2/(theta - theta^(1)) *
  GFrac bm = B.beta(m), bm1 = B.beta(m - 1);
  GFrac tm1 = B.beta_tilde(m - 1);
  GFrac tm2 = (m >= 2) ? B.beta_tilde(m - 2) : GFrac::zero(C);
  LogFamily F;
  F.L1 = bm * bm;
  F.L2 = bm * bm1;
  F.L1p = (bm * B.beta_prime(m)).scaled(two);
  F.L2p = B.beta_prime(m) * bm1 + bm * B.beta_prime(m - 1);
  F.Lt0 = k2g1(bm * tm2 - bm1 * tm1);
  F.Lt1 = k2g1(bm * tm1);
  F.Lt2 = k2g1(bm1 * tm1);
  F.Lh1 = (bm * B.beta_hat(m)).scaled(two);
  F.Lh2 = B.beta_hat(m) * bm1 + bm * B.beta_hat(m - 1);
  return F;
}

// the 4x4 matrix L_m of the logarithm corollary, over GFrac
inline Mat<GFrac> lm_matrix_gfrac(BmSequence& B, int m) {
  const FqCtx& C = B.ctx();
  LogFamily F = log_family(B, m);
  GFrac gm(GFrac::g(C, m));  // theta - theta^(q^m)
  GFrac k1m(B.phi().kappa(1).twist_n(m));
  Fq k2 = Fq(C, B.phi().kappa(2).coeff_packed(0));
  Fq k2inv = k2.inv();
  Mat<GFrac> L(4, 4, GFrac::zero(C));
  L(0, 0) = F.L1 + gm * F.L1p;
  L(0, 1) = F.L2p.scaled(k2);
  L(0, 2) = k1m * F.L1p + F.L2p.scaled(k2);
  L(0, 3) = F.L1p.scaled(k2);
  L(1, 0) = (gm * F.Lt1).scaled(k2inv);
  L(1, 1) = F.Lt0 + F.Lt2;
  L(1, 2) = (k1m * F.Lt1).scaled(k2inv) + F.Lt2;
  L(1, 3) = F.Lt1;
  L(2, 0) = L(1, 0);
  L(2, 1) = F.Lt2;
  L(2, 2) = F.Lt0 + (k1m * F.Lt1).scaled(k2inv) + F.Lt2;
  L(2, 3) = F.Lt1;
  L(3, 0) = (gm * F.L1).scaled(k2inv);
  L(3, 1) = F.L2;
  L(3, 2) = (k1m * F.L1).scaled(k2inv) + F.L2;
  L(3, 3) = F.L1;
  return L;
}

inline Mat<RatK> lm_matrix(BmSequence& B, int m) {
  return lm_matrix_gfrac(B, m).map([](const GFrac& x) { return x.to_ratk(); });
}

// constant prefactor of the logarithm corollary and the z-column duplication
inline Mat<GFrac> log_prefactor(const DrinfeldModule& phi, TensorKind kind) {
  const FqCtx& C = phi.ctx();
  GFrac z = GFrac::zero(C), one = GFrac::one(C);
  Fq k2 = Fq(C, phi.kappa(2).coeff_packed(0));
  GFrac k1_over_k2 = GFrac(phi.kappa(1)).scaled(k2.inv());
  switch (kind) {
    case TensorKind::Tensor2: {
      Mat<GFrac> P = Mat<GFrac>::identity(4, z);
      P(3, 2) = -k1_over_k2;
      return P;
    }
    case TensorKind::Sym2: {
      Fq half = (Fq(C, 1) + Fq(C, 1)).inv();
      Mat<GFrac> P(3, 4, z);
      P(0, 0) = one;
      P(1, 1) = one.scaled(half);
      P(1, 2) = one.scaled(half);
      P(2, 1) = -k1_over_k2.scaled(half);
      P(2, 2) = -k1_over_k2.scaled(half);
      P(2, 3) = one;
      return P;
    }
    case TensorKind::Alt2: {
      Mat<GFrac> P(1, 1, one);
      return P;
    }
  }
  throw internal_error("unreachable");
}

inline Mat<GFrac> sym_duplication(const FqCtx& C) {
  Mat<GFrac> D(4, 3, GFrac::zero(C));
  D(0, 0) = GFrac::one(C);
  D(1, 1) = GFrac::one(C);
  D(2, 1) = GFrac::one(C);
  D(3, 2) = GFrac::one(C);
  return D;
}

// m-th logarithm coefficient matrix of the tensor structure, assembled from
// the corollary (prefactor times L_m with the sym2 column duplication)
inline Mat<GFrac> log_coeff_from_lm(BmSequence& B, TensorKind kind, int m) {
  const FqCtx& C = B.ctx();
  switch (kind) {
    case TensorKind::Tensor2: return log_prefactor(B.phi(), kind) * lm_matrix_gfrac(B, m);
    case TensorKind::Sym2: return log_prefactor(B.phi(), kind) * lm_matrix_gfrac(B, m) * sym_duplication(C);
    case TensorKind::Alt2: {
      Mat<GFrac> L(1, 1, log_family(B, m).Lt0);
      return L;
    }
  }
  throw internal_error("unreachable");
}

struct CrosscheckReport {
  TensorKind kind;
  int m_max = 0;
  bool pass = false;
};

// Corollary assembly versus the generic functional-equation recursion.
inline CrosscheckReport log_coeff_crosscheck(const DrinfeldModule& phi, TensorKind kind, int m_max) {
  if (m_max > 8) throw guard_error("log coefficient crosscheck guard: m_max <= 8");
  BmSequence B(phi);
  TModule E = [&] {
    switch (kind) {
      case TensorKind::Tensor2: return build_tensor(phi, phi);
      case TensorKind::Sym2: return build_sym2(phi);
      case TensorKind::Alt2: return build_alt2(phi);
    }
    throw internal_error("unreachable");
  }();
  ExpLogCoeffs el(E, m_max);
  CrosscheckReport rep{kind, m_max, true};
  for (int m = 1; m <= m_max; ++m) {
    Mat<GFrac> lhs = log_coeff_from_lm(B, kind, m);
    if (lhs != el.log_coeff(m)) rep.pass = false;
  }
  return rep;
}

// ---- series evaluation with the certified stopping rule ----

namespace reg_detail {

// Evaluates z + sum_m coeff_m(z) with coeff matrices from log_coeff_from_lm,
// stopping once the exact term degrees have decreased strictly for a run of
// consecutive indices and dropped below the precision floor.  Throws if the
// guard horizon is exhausted (divergent parameters).
template <class TermFn, class DegFn>
void sum_terms(int M, int horizon, TermFn&& add_term, DegFn&& term_deg) {
  int run = 0;
  long prev = LONG_MAX;
  for (int m = 1; m <= horizon; ++m) {
    add_term(m);
    long d = term_deg(m);
    if (d == RatK::kZeroDeg) {
      ++run;  // an exactly-zero term never raises the tail
    } else if (d < prev && d < -(M + 1)) {
      ++run;
      prev = d;
    } else {
      run = 0;
      prev = d;
    }
    if (run >= 6) return;
  }
  throw guard_error("log series failed the convergence guard");
}

}  // namespace reg_detail

// Log_E(z) for z with entries in A, to certified precision M.
inline std::vector<LaurentKInf> log_tensor_eval(const DrinfeldModule& phi, TensorKind kind,
                                                const std::vector<PolyA>& z, int M) {
  const FqCtx& C = phi.ctx();
  BmSequence B(phi);
  const int ell = (kind == TensorKind::Tensor2) ? 4 : (kind == TensorKind::Sym2 ? 3 : 1);
  if (static_cast<int>(z.size()) != ell) throw guard_error("log_tensor_eval dimension mismatch");
  // convergence hypotheses of the explicit-logarithm theorems
  long e = std::max(phi.kappa(1).deg(), 0);
  if (kind == TensorKind::Alt2) {
    if (2 * e > static_cast<long>(C.q()) + 1) throw guard_error("Alt^2 log needs deg kappa_1 <= (q+1)/2");
  } else if (e > 1) {
    throw guard_error("tensor/sym log needs deg kappa_1 <= 1");
  }

  std::vector<LaurentKInf> acc(ell, LaurentKInf(C, M));
  for (int i = 0; i < ell; ++i) acc[i] = LaurentKInf::from_poly(z[i]);
  long last_deg = 0;
  auto add_term = [&](int m) {
    Mat<GFrac> Cm = log_coeff_from_lm(B, kind, m);
    long worst = RatK::kZeroDeg;
    for (int i = 0; i < ell; ++i) {
      GFrac entry = GFrac::zero(C);
      for (int j = 0; j < ell; ++j) {
        if (z[j].is_zero()) continue;
        uint64_t qm = 1;
        for (int t = 0; t < m; ++t) qm *= C.q();
        entry += Cm(i, j) * GFrac(pow(z[j], qm));
      }
      if (!entry.is_zero_frac()) worst = std::max<long>(worst, entry.deg());
      acc[i] += entry.to_laurent(M);
    }
    last_deg = worst;
  };
  reg_detail::sum_terms(M, 40, add_term, [&](int) { return last_deg; });
  for (auto& v : acc) v.truncate(M);
  return acc;
}

// dilogarithm Log_{phi,2}(z) = z + sum beta_m^2 z^(q^m)
inline LaurentKInf dilog(const DrinfeldModule& phi, const PolyA& z, int M) {
  const FqCtx& C = phi.ctx();
  BmSequence B(phi);
  long e = std::max(phi.kappa(1).deg(), 0);
  if (e > 1) throw guard_error("dilog convergence guard needs deg kappa_1 <= 1");
  LaurentKInf acc = LaurentKInf::from_poly(z);
  acc.truncate(M);
  if (z.is_zero()) return acc;
  long deg_cache = 0;
  auto add_term = [&](int m) {
    uint64_t qm = 1;
    for (int t = 0; t < m; ++t) qm *= C.q();
    GFrac term = B.beta(m) * B.beta(m) * GFrac(pow(z, qm));
    deg_cache = term.is_zero_frac() ? RatK::kZeroDeg : term.deg();
    acc += term.to_laurent(M);
  };
  reg_detail::sum_terms(
      M, 40, add_term, [&](int) { return deg_cache; });
  acc.truncate(M);
  return acc;
}

struct RegulatorResult {
  LaurentKInf value;  // sign-normalized (leading coefficient 1)
  Fq gamma;           // the recorded normalizing unit
};

namespace reg_detail {

inline RegulatorResult normalize_sign(LaurentKInf v) {
  if (v.is_zero_to_prec()) throw internal_error("regulator vanished to working precision");
  Fq lead = v.sign();
  Fq gamma = lead.inv();
  RegulatorResult out{LaurentKInf::mul(v, LaurentKInf::from_poly(PolyA::constant(*lead.C, gamma.v))),
                      gamma};
  return out;
}

// series sums of the coefficient families at a point z in A
struct FamilyEval {
  BmSequence* B;
  int M;
  // which: 0 -> Lhat1, 1 -> Lhat2, 2 -> Ltilde1, 3 -> Ltilde2, 4 -> L2, 5 -> L1
  LaurentKInf eval(int which, const PolyA& z) {
    const FqCtx& C = B->ctx();
    LaurentKInf acc(C, M);
    if (z.is_zero()) return acc;
    long deg_cache = 0;
    auto add_term = [&](int m) {
      LogFamily F = log_family(*B, m);
      const GFrac* coeff = nullptr;
      switch (which) {
        case 0: coeff = &F.Lh1; break;
        case 1: coeff = &F.Lh2; break;
        case 2: coeff = &F.Lt1; break;
        case 3: coeff = &F.Lt2; break;
        case 4: coeff = &F.L2; break;
        default: coeff = &F.L1; break;
      }
      uint64_t qm = 1;
      for (int t = 0; t < m; ++t) qm *= C.q();
      GFrac term = *coeff * GFrac(pow(z, qm));
      deg_cache = term.is_zero_frac() ? RatK::kZeroDeg : term.deg();
      acc += term.to_laurent(M);
    };
    sum_terms(
        M, 40, add_term, [&](int) { return deg_cache; });
    acc.truncate(M);
    return acc;
  }
};

}  // namespace reg_detail

// closed-form regulators of the rank-2 tensor structures
inline RegulatorResult reg_closed_form(const DrinfeldModule& phi, TensorKind kind, int M) {
  const FqCtx& C = phi.ctx();
  long e = std::max(phi.kappa(1).deg(), 0);
  BmSequence B(phi);
  reg_detail::FamilyEval ev{&B, M};
  PolyA one = PolyA::one(C), th = PolyA::theta(C), k1 = phi.kappa(1);
  Fq k2 = Fq(C, phi.kappa(2).coeff_packed(0));

  if (kind == TensorKind::Alt2) {
    if (2 * e > static_cast<long>(C.q()) + 1)
      throw guard_error("Alt^2 regulator needs deg kappa_1 <= (q+1)/2");
    // Reg = Log_{Alt^2 phi}(1) = 1 + sum Ltilde_{0,m}
    std::vector<LaurentKInf> v = log_tensor_eval(phi, TensorKind::Alt2, {one}, M);
    return reg_detail::normalize_sign(v[0]);
  }
  if (e > 1) throw guard_error("Sym^2/tensor regulator needs deg kappa_1 <= 1");

  if (kind == TensorKind::Tensor2) {
    RegulatorResult a = reg_closed_form(phi, TensorKind::Sym2, M);
    RegulatorResult b = reg_closed_form(phi, TensorKind::Alt2, M);
    RegulatorResult out{LaurentKInf::mul(a.value, b.value), a.gamma * b.gamma};
    return out;
  }

  // Sym^2: gamma * det of the displayed 3x3 matrix
  LaurentKInf one_l = LaurentKInf::from_poly(one);
  auto scale = [&](LaurentKInf x, Fq s) {
    return LaurentKInf::mul(x, LaurentKInf::from_poly(PolyA::constant(C, s.v)));
  };
  Fq two = Fq(C, 1) + Fq(C, 1);
  LaurentKInf alt1 = log_tensor_eval(phi, TensorKind::Alt2, {one}, M)[0];
  Mat<LaurentKInf> Mx(3, 3, LaurentKInf(C, M));
  Mx(0, 0) = one_l + ev.eval(0, th);
  Mx(0, 1) = scale(ev.eval(0, k1), -Fq(C, 1)) - scale(ev.eval(1, one), two * k2) -
             LaurentKInf::from_poly(k1.derivative());
  Mx(0, 2) = scale(ev.eval(0, one), -k2);
  Mx(1, 0) = scale(ev.eval(2, th), -k2.inv());
  Mx(1, 1) = alt1 + scale(ev.eval(2, k1), k2.inv()) + scale(ev.eval(3, one), two);
  Mx(1, 2) = ev.eval(2, one);
  Mx(2, 0) = scale(dilog(phi, th, M), -k2.inv());
  Mx(2, 1) = scale(dilog(phi, k1, M), k2.inv()) + scale(ev.eval(4, one), two);
  Mx(2, 2) = dilog(phi, one, M);
  // 3x3 determinant by cofactors (division-free)
  auto mul3 = [](const LaurentKInf& a, const LaurentKInf& b, const LaurentKInf& c) {
    return LaurentKInf::mul(LaurentKInf::mul(a, b), c);
  };
  LaurentKInf det = mul3(Mx(0, 0), Mx(1, 1), Mx(2, 2)) + mul3(Mx(0, 1), Mx(1, 2), Mx(2, 0)) +
                    mul3(Mx(0, 2), Mx(1, 0), Mx(2, 1)) - mul3(Mx(0, 2), Mx(1, 1), Mx(2, 0)) -
                    mul3(Mx(0, 0), Mx(1, 2), Mx(2, 1)) - mul3(Mx(0, 1), Mx(1, 0), Mx(2, 2));
  return reg_detail::normalize_sign(det);
}

// regulators from an explicit basis: rows are Log_E(e_i) with the
// derivative corrections of the basis lemma, then a sign-normalized
// determinant
inline RegulatorResult reg_via_basis(const DrinfeldModule& phi, TensorKind kind, int M) {
  const FqCtx& C = phi.ctx();
  long e = std::max(phi.kappa(1).deg(), 0);
  if (e > 1) throw guard_error("reg_via_basis needs deg kappa_1 <= 1");
  const int ell = (kind == TensorKind::Tensor2) ? 4 : (kind == TensorKind::Sym2 ? 3 : 1);
  PolyA zero = PolyA::zero(C);
  // columns Log_E(e_j)
  Mat<LaurentKInf> R(ell, ell, LaurentKInf(C, M));
  for (int j = 0; j < ell; ++j) {
    std::vector<PolyA> z(ell, zero);
    z[j] = PolyA::one(C);
    auto col = log_tensor_eval(phi, kind, z, M);
    for (int i = 0; i < ell; ++i) R(i, j) = col[i];
  }
  // row corrections: row_1 -= kappa_1 d(row_a) + kappa_2 d(row_b)
  auto correct = [&](int ra, int rb) {
    for (int j = 0; j < ell; ++j) {
      LaurentKInf d1 = LaurentKInf::mul(R(ra, j).derivative(), LaurentKInf::from_poly(phi.kappa(1)));
      LaurentKInf d2 = LaurentKInf::mul(R(rb, j).derivative(), LaurentKInf::from_poly(phi.kappa(2)));
      R(0, j) = R(0, j) - d1 - d2;
    }
  };
  if (kind == TensorKind::Tensor2) correct(2, 3);
  if (kind == TensorKind::Sym2) correct(1, 2);

  // determinant by cofactor expansion
  std::function<LaurentKInf(std::vector<int>, std::vector<int>)> det = [&](std::vector<int> rows,
                                                                           std::vector<int> cols) {
    if (rows.size() == 1) return R(rows[0], cols[0]);
    LaurentKInf acc(C, M);
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> rs(rows.begin() + 1, rows.end());
      std::vector<int> cs;
      for (size_t t = 0; t < cols.size(); ++t)
        if (t != k) cs.push_back(cols[t]);
      LaurentKInf term = LaurentKInf::mul(R(rows[0], cols[k]), det(rs, cs));
      if (k % 2 == 1) term = term.negated();
      acc += term;
    }
    return acc;
  };
  std::vector<int> idx(ell);
  for (int i = 0; i < ell; ++i) idx[i] = i;
  return reg_detail::normalize_sign(det(idx, idx));
}

// R_{E,m} = T_E of the displayed 2x2 matrix of B's, over K(t)
inline Mat<BivarRat> r_em(BmSequence& B, TensorKind kind, int m) {
  if (m < 1) throw guard_error("r_em needs m >= 1");
  const FqCtx& C = B.ctx();
  BivarRat k2 = BivarRat(PolyAt::constant(B.phi().kappa(2)));
  BivarRat tq1 = BivarRat(B.t_minus_theta_q(1));
  Mat<BivarRat> base(2, 2, BivarRat::zero(C));
  base(0, 0) = B.bm(m);
  base(0, 1) = k2 / tq1 * B.bm(m - 1).twist_n(1);
  base(1, 0) = B.bm(m - 1);
  base(1, 1) = k2 / tq1 * B.bm(m - 2).twist_n(1);
  return matrix_T(base, kind);
}

// (Phi_phi^{-1})^{(1)}: all entries twist-nonnegative, in K(t)
inline Mat<BivarRat> phi_inverse_twist1(const DrinfeldModule& phi) {
  const FqCtx& C = phi.ctx();
  BivarRat z = BivarRat::zero(C);
  Mat<BivarRat> m(2, 2, z);
  // entries of Phi^{-1} carry kappa_1^(-1); one twist brings everything to
  // nonnegative twists: kappa_1/(t - theta^(1)), kappa_2/(t - theta^(1))
  PolyAt den = PolyAt::t(PolyA::zero(C)) - PolyAt::constant(PolyA::theta(C).twist_n(1));
  m(0, 0) = BivarRat(PolyAt::constant(phi.kappa(1)), den);
  m(0, 1) = BivarRat(PolyAt::constant(phi.kappa(2)), den);
  m(1, 0) = BivarRat::one(C);
  return m;
}

}  // namespace dgl
