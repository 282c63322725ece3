#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgl/laurent.hpp"
#include "dgl/mu.hpp"

namespace dgl {

// Smallest-prime-factor sieve over monic polynomials, used to factor the
// Dirichlet-sum enumerations without per-term trial division.
class MonicSieve {
 public:
  MonicSieve(const FqCtx& C, int dmax) : C_(&C), dmax_(dmax) {
    spf_.resize(dmax + 1);
    uint64_t qd = 1;
    for (int d = 1; d <= dmax; ++d) {
      qd *= C.q();
      spf_[d].assign(qd, UNSET);
    }
    for (int d = 1; d <= dmax; ++d) {
      uint64_t count = spf_[d].size();
      for (uint64_t idx = 0; idx < count; ++idx) {
        if (spf_[d][idx] != UNSET) continue;
        // idx is irreducible of degree d
        uint32_t fid = static_cast<uint32_t>(irr_.size());
        irr_.push_back(monic_from_index(C, d, idx));
        spf_[d][idx] = fid;
        const PolyA& f = irr_.back();
        for (int dm = 1; dm + d <= dmax; ++dm) {
          uint64_t mcount = 1;
          for (int i = 0; i < dm; ++i) mcount *= C.q();
          for (uint64_t midx = 0; midx < mcount; ++midx) {
            PolyA prod = f * monic_from_index(C, dm, midx);
            uint64_t pidx = monic_index(prod);
            if (spf_[d + dm][pidx] == UNSET) spf_[d + dm][pidx] = fid;
          }
        }
      }
    }
  }

  int dmax() const { return dmax_; }
  const std::vector<PolyA>& irreducibles() const { return irr_; }

  bool is_irreducible_indexed(int d, uint64_t idx) const {
    return irr_[spf_[d][idx]].deg() == d;
  }

  // prime-power factorization (f, e) pairs, smallest prime first
  std::vector<std::pair<uint32_t, int>> factor_ids(const PolyA& a) const {
    std::vector<std::pair<uint32_t, int>> out;
    PolyA rest = a;
    while (rest.deg() > 0) {
      uint32_t fid = spf_[rest.deg()][monic_index(rest)];
      const PolyA& f = irr_[fid];
      int e = 0;
      while (true) {
        auto [q, r] = rest.divrem(f);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++e;
      }
      out.push_back({fid, e});
    }
    return out;
  }

 private:
  static constexpr uint32_t UNSET = UINT32_MAX;
  const FqCtx* C_;
  int dmax_;
  std::vector<std::vector<uint32_t>> spf_;
  std::vector<PolyA> irr_;
};

enum class SeriesKind { GossDual, TwistedZeta, ConvEqualRank, ConvUnequalRank, SymTwiddle, AltHat };

inline const char* series_kind_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::GossDual: return "goss_dual";
    case SeriesKind::TwistedZeta: return "twisted_zeta";
    case SeriesKind::ConvEqualRank: return "conv_equal_rank";
    case SeriesKind::ConvUnequalRank: return "conv_unequal_rank";
    case SeriesKind::SymTwiddle: return "sym_twiddle";
    case SeriesKind::AltHat: return "alt_hat";
  }
  return "?";
}

struct SeriesSpec {
  SeriesKind kind;
  long s = 0;
  int precision = 32;  // requested absolute precision M
  int cutoff = -1;     // weighted-degree cutoff D; -1 selects the certified auto value
  uint64_t chi_unit = 1;  // character data for twisted_zeta: chi(a) = u^(deg a)
};

// Shared evaluation context: the mu tables of the one or two modules and a
// lazily grown factorization sieve.
class LSeriesContext {
 public:
  explicit LSeriesContext(DrinfeldModule phi) : phi_(std::move(phi)) {}
  LSeriesContext(DrinfeldModule phi, DrinfeldModule psi)
      : phi_(std::move(phi)), psi_(MuTable(std::move(psi))) {}

  MuTable& phi() { return phi_; }
  MuTable& psi() {
    if (!psi_) throw guard_error("series kind needs a second Drinfeld module");
    return *psi_;
  }
  bool has_psi() const { return psi_.has_value(); }
  const FqCtx& ctx() const { return phi_.ctx(); }

  const MonicSieve& sieve(int dmax) {
    if (!sieve_ || sieve_->dmax() < dmax) sieve_ = std::make_unique<MonicSieve>(ctx(), dmax);
    return *sieve_;
  }

  // multiplicative evaluation through the sieve
  PolyA mu_phi_of(const PolyA& a, int dmax) {
    PolyA out = PolyA::one(ctx());
    for (auto& [fid, e] : sieve(dmax).factor_ids(a)) out *= phi_.mu(sieve_->irreducibles()[fid], e);
    return out;
  }
  // boldmu of (a_1^scale, ..., a_{r-1}^scale), factoring through the sieve
  PolyA boldmu_of(MuTable& T, const std::vector<PolyA>& a, int dmax, int scale = 1) {
    const int slots = T.rank() - 1;
    if (static_cast<int>(a.size()) != slots) throw internal_error("boldmu slot mismatch");
    std::map<uint32_t, std::vector<long>> groups;
    for (int i = 0; i < slots; ++i)
      if (a[i].deg() > 0)
        for (auto& [fid, e] : sieve(dmax).factor_ids(a[i])) {
          auto& k = groups[fid];
          k.resize(slots, 0);
          k[i] += static_cast<long>(e) * scale;
        }
    PolyA out = PolyA::one(ctx());
    for (auto& [fid, k] : groups) out *= T.boldmu_prime(sieve_->irreducibles()[fid], k);
    return out;
  }

 private:
  MuTable phi_;
  std::optional<MuTable> psi_;
  std::unique_ptr<MonicSieve> sieve_;
};

// tail-decay exponent per unit of weighted degree, as a fraction (num, den)
inline std::pair<long, long> series_tail_exponent(const SeriesSpec& spec, int r, int l) {
  switch (spec.kind) {
    case SeriesKind::TwistedZeta: return {spec.s, 1};
    case SeriesKind::GossDual: return {spec.s * r + 1, r};
    case SeriesKind::ConvEqualRank: return {2 + r * spec.s, r};
    case SeriesKind::SymTwiddle: return {2 + r * spec.s, r};
    case SeriesKind::AltHat: return {1 + r * spec.s, r};
    // boldmu_phi and boldmu_psi each contribute their Prop. degree bound:
    // the i-th slot decays like 1/r + 1/l + s per unit of weighted degree
    case SeriesKind::ConvUnequalRank: return {l + r + r * l * spec.s, r * l};
  }
  throw internal_error("unreachable");
}

namespace lseries_detail {

// coefficient accumulator over exponents 0 .. -floor, plus exact summation
struct Accumulator {
  const FqCtx* C;
  int floor;
  std::vector<uint64_t> c;  // c[i] is the coefficient of theta^(-i)
  Accumulator(const FqCtx& ctx, int floor_) : C(&ctx), floor(floor_), c(floor_ + 1, 0) {}
  void add(const LaurentKInf& x) {
    int top = x.deg_upper_bound();
    if (top == LaurentKInf::kZeroDeg) return;
    if (top > 0) throw internal_error("accumulator expects deg <= 0 terms");
    for (int e = top; e >= -floor; --e) {
      uint64_t v = x.coeff_packed(e);
      if (v) c[-e] = C->add(c[-e], v);
    }
  }
  LaurentKInf value(int prec) const {
    LaurentKInf r = LaurentKInf::from_window(*C, 0, c, floor);
    r.truncate(prec);
    return r;
  }
};

// enumerate degree vectors (d_1..d_len) with sum w_i d_i <= D, then all monic
// tuples with those degrees
inline void for_each_tuple(const FqCtx& C, const std::vector<long>& wts, long D,
                           const std::function<void(const std::vector<PolyA>&)>& fn) {
  const int len = static_cast<int>(wts.size());
  std::vector<long> dv(len, 0);
  std::vector<PolyA> tup(len, PolyA::one(C));
  std::function<void(int)> emit = [&](int pos) {
    if (pos == len) {
      fn(tup);
      return;
    }
    uint64_t count = 1;
    for (long i = 0; i < dv[pos]; ++i) count *= C.q();
    for (uint64_t idx = 0; idx < count; ++idx) {
      tup[pos] = monic_from_index(C, static_cast<int>(dv[pos]), idx);
      emit(pos + 1);
    }
  };
  std::function<void(int, long)> deg_rec = [&](int pos, long left) {
    if (pos == len) {
      emit(0);
      return;
    }
    for (long d = 0; d * wts[pos] <= left; ++d) {
      dv[pos] = d;
      deg_rec(pos + 1, left - d * wts[pos]);
      dv[pos] = 0;
      if (wts[pos] == 0) break;
    }
  };
  deg_rec(0, D);
}

}  // namespace lseries_detail

struct DirichletResult {
  LaurentKInf value;
  int cutoff_used = 0;
  int certified_precision = 0;
  long terms = 0;
};

inline LaurentKInf local_conv_factor(LSeriesContext& ctx, const SeriesSpec& spec, const PolyA& f, long Dloc,
                                     int M);

// Exact Dirichlet-sum evaluation with a certified tail: every omitted term
// has weighted degree > D and hence norm <= q^(-eps (D+1)); the returned
// precision is floor(eps (D+1)) - 1 capped at the requested M.
inline DirichletResult dirichlet_sum(LSeriesContext& ctx, const SeriesSpec& spec) {
  const FqCtx& C = ctx.ctx();
  const int r = ctx.phi().rank();
  const int l = ctx.has_psi() ? ctx.psi().rank() : r;
  if (spec.s < 0) throw guard_error("series needs s >= 0");
  switch (spec.kind) {
    case SeriesKind::ConvEqualRank:
      if (!ctx.has_psi() || r != l || r < 2) throw guard_error("conv_equal_rank needs r = l >= 2");
      break;
    case SeriesKind::ConvUnequalRank:
      if (!ctx.has_psi() || !(2 <= r && r < l)) throw guard_error("conv_unequal_rank needs 2 <= r < l");
      break;
    case SeriesKind::SymTwiddle:
    case SeriesKind::AltHat:
      require_odd_characteristic(C, "sym/alt convolution");
      if (r < 2) throw guard_error("sym/alt convolution needs r >= 2");
      break;
    default: break;
  }

  auto [en, ed] = series_tail_exponent(spec, r, l);
  if (en <= 0) {
    if (spec.kind == SeriesKind::TwistedZeta && spec.chi_unit != 1 && spec.s == 0) {
      // all degree-d blocks with d >= 1 vanish: sum_{deg a = d} chi(a) = u^d q^d = 0
      DirichletResult res{LaurentKInf::from_poly(PolyA::one(C)), 0, LaurentKInf::kExact, 1};
      return res;
    }
    throw guard_error("divergent series spec (nonpositive tail exponent)");
  }

  const int M = spec.precision;
  long D;
  if (spec.cutoff >= 0)
    D = spec.cutoff;
  else
    D = (static_cast<long>(M + 1) * ed + en - 1) / en - 1;  // ceil((M+1)/eps) - 1
  long tail = (en * (D + 1)) / ed - 1;  // certified absolute precision of the tail
  int prec = static_cast<int>(std::min<long>(M, tail));
  if (prec < 0) throw guard_error("cutoff too small for any certified precision");

  lseries_detail::Accumulator acc(C, M + 1);
  long terms = 0;

  auto laurent_term = [&](const PolyA& num, const PolyA& den, const Fq& scale) {
    LaurentKInf inv = LaurentKInf::inv_of_poly(den, M + num.deg() + 1);
    LaurentKInf t = LaurentKInf::mul(LaurentKInf::from_poly(num * scale), inv);
    acc.add(t);
    ++terms;
  };

  switch (spec.kind) {
    case SeriesKind::TwistedZeta: {
      Fq u(C, spec.chi_unit);
      Fq chid(C, 1);
      for (long d = 0; d <= D; ++d) {
        // The expansion of 1/a^s through theta^-(M+1) only involves the top
        // M+1-s*d coefficients of a; summing over any free coefficient
        // multiplies the block by q = 0 in F_q, so blocks with free
        // coefficients vanish identically on the stored window.
        long window = static_cast<long>(M) + 1 - spec.s * d;
        if (d >= 1 && window < d) {
          chid = chid * u;
          continue;
        }
        uint64_t count = 1;
        for (long i = 0; i < d; ++i) count *= C.q();
        for (uint64_t idx = 0; idx < count; ++idx) {
          PolyA a = monic_from_index(C, static_cast<int>(d), idx);
          laurent_term(PolyA::one(C), pow(a, static_cast<uint64_t>(spec.s)), chid);
        }
        chid = chid * u;
      }
      break;
    }
    case SeriesKind::GossDual: {
      if (r == 1) {
        // rank 1: mu(a) = chi(a) = u^(deg a), so L(phi^v, s) is the twisted
        // zeta at s+1
        SeriesSpec zeta = spec;
        zeta.kind = SeriesKind::TwistedZeta;
        zeta.s = spec.s + 1;
        zeta.chi_unit = ctx.phi().phi().chi_unit().v;
        return dirichlet_sum(ctx, zeta);
      }
      int dmax = static_cast<int>(D);
      if (dmax > 0) ctx.sieve(dmax);
      for (long d = 0; d <= D; ++d) {
        uint64_t count = 1;
        for (long i = 0; i < d; ++i) count *= C.q();
        for (uint64_t idx = 0; idx < count; ++idx) {
          PolyA a = monic_from_index(C, static_cast<int>(d), idx);
          PolyA num = (d == 0) ? PolyA::one(C) : ctx.mu_phi_of(a, dmax);
          laurent_term(num, pow(a, static_cast<uint64_t>(spec.s + 1)), Fq(C, 1));
        }
      }
      break;
    }
    case SeriesKind::ConvEqualRank: {
      std::vector<long> wts(r - 1);
      for (int i = 0; i < r - 1; ++i) wts[i] = i + 1;
      int dmax = static_cast<int>(D);
      if (dmax > 0) ctx.sieve(dmax);
      lseries_detail::for_each_tuple(C, wts, D, [&](const std::vector<PolyA>& a) {
        PolyA num = ctx.boldmu_of(ctx.phi(), a, dmax) * ctx.boldmu_of(ctx.psi(), a, dmax);
        if (num.is_zero()) return;
        PolyA den = PolyA::one(C);
        for (int i = 0; i < r - 1; ++i) den *= pow(a[i], static_cast<uint64_t>(2 + (i + 1) * spec.s));
        laurent_term(num, den, Fq(C, 1));
      });
      break;
    }
    case SeriesKind::ConvUnequalRank: {
      std::vector<long> wts(r);
      for (int i = 0; i < r; ++i) wts[i] = i + 1;
      int dmax = static_cast<int>(D);
      if (dmax > 0) ctx.sieve(dmax);
      lseries_detail::for_each_tuple(C, wts, D, [&](const std::vector<PolyA>& a) {
        std::vector<PolyA> aphi(a.begin(), a.end() - 1);
        std::vector<PolyA> apsi(a);
        apsi.resize(l - 1, PolyA::one(C));
        PolyA num = ctx.boldmu_of(ctx.phi(), aphi, dmax) * ctx.boldmu_of(ctx.psi(), apsi, dmax);
        if (num.is_zero()) return;
        Fq tw = ctx.phi().phi().chi(a[r - 1]);
        PolyA den = PolyA::one(C);
        for (int i = 0; i < r; ++i) den *= pow(a[i], static_cast<uint64_t>(2 + (i + 1) * spec.s));
        laurent_term(num, den, tw);
      });
      break;
    }
    case SeriesKind::SymTwiddle: {
      std::vector<long> wts(r - 1);
      for (int i = 0; i < r - 1; ++i) wts[i] = i + 1;
      int dmax = static_cast<int>(D);
      if (dmax > 0) ctx.sieve(dmax);
      lseries_detail::for_each_tuple(C, wts, D, [&](const std::vector<PolyA>& a) {
        PolyA num = ctx.boldmu_of(ctx.phi(), a, dmax, /*scale=*/2);
        if (num.is_zero()) return;
        PolyA den = PolyA::one(C);
        for (int i = 0; i < r - 1; ++i) den *= pow(a[i], static_cast<uint64_t>(2 + (i + 1) * spec.s));
        laurent_term(num, den, Fq(C, 1));
      });
      break;
    }
    case SeriesKind::AltHat: {
      // only even slots vary; the lightest slot has weight 2
      int w = (r - 1) / 2;
      std::vector<long> wts(w);
      for (int i = 0; i < w; ++i) wts[i] = 2 * (i + 1);
      int dmax = (w == 0) ? 0 : static_cast<int>(D / 2);
      if (dmax > 0) ctx.sieve(dmax);
      lseries_detail::for_each_tuple(C, wts, D, [&](const std::vector<PolyA>& even_slots) {
        std::vector<PolyA> a(r - 1, PolyA::one(C));
        for (int i = 0; i < w; ++i) a[2 * i + 1] = even_slots[i];
        PolyA num = ctx.boldmu_of(ctx.phi(), a, dmax);
        if (num.is_zero()) return;
        PolyA den = PolyA::one(C);
        for (int i = 0; i < r - 1; ++i) den *= pow(a[i], static_cast<uint64_t>(1 + (i + 1) * spec.s));
        laurent_term(num, den, Fq(C, 1));
      });
      break;
    }
  }

  DirichletResult res{acc.value(prec), static_cast<int>(D), prec, terms};
  return res;
}

// Euler product over monic irreducibles of degree <= d_max; the local factor
// of each convolution kind is its own boldmu sum (multiplicativity), so the
// product is an independent route to the Dirichlet sum.
inline DirichletResult euler_product(LSeriesContext& ctx, const SeriesSpec& spec, int d_max) {
  const FqCtx& C = ctx.ctx();
  const int r = ctx.phi().rank();
  const int l = ctx.has_psi() ? ctx.psi().rank() : r;
  auto [en, ed] = series_tail_exponent(spec, r, l);
  if (en <= 0) throw guard_error("divergent series spec (nonpositive tail exponent)");
  const int M = spec.precision;

  LaurentKInf prod = LaurentKInf::from_poly(PolyA::one(C));
  prod.truncate(M);
  long terms = 0;

  auto fpow_neg = [&](const PolyA& f, long e) {  // f^(-e) as a Laurent series
    return LaurentKInf::inv_of_poly(pow(f, static_cast<uint64_t>(e)), M + 1);
  };

  std::vector<PolyA> primes;
  for (auto& f : ctx.sieve(d_max).irreducibles())
    if (f.deg() <= d_max) primes.push_back(f);
  std::sort(primes.begin(), primes.end());
  for (auto& f : primes) {
    const int d = f.deg();
    LaurentKInf local(C, M);
      switch (spec.kind) {
        case SeriesKind::TwistedZeta: {
          Fq u(C, spec.chi_unit);
          LaurentKInf x = fpow_neg(f, spec.s) * LaurentKInf::from_poly(PolyA::constant(C, u.pow(d).v));
          local = LaurentKInf::invert(LaurentKInf::from_poly(PolyA::one(C)) - x, M);
          break;
        }
        case SeriesKind::GossDual: {
          auto qd = ctx.phi().frob(f).Q_dual();
          LaurentKInf val(C, M);
          for (int k = 0; k <= qd.deg(); ++k) {
            RatK ck = qd.coeff(k);
            if (ck.is_zero()) continue;
            LaurentKInf t = LaurentKInf::expand(ck, M + 1) * fpow_neg(f, spec.s * k);
            val += t;
          }
          local = LaurentKInf::invert(val, M);
          break;
        }
        default: {
          // boldmu-sum local factor, truncated at the certified local weight
          long Dloc = (static_cast<long>(M + 1) * ed + en * d - 1) / (en * d) - 1;
          if (Dloc < 0) Dloc = 0;
          local = local_conv_factor(ctx, spec, f, Dloc, M);
          break;
        }
      }
    prod = LaurentKInf::mul(prod, local);
    prod.truncate(M);
    ++terms;
  }
  DirichletResult res{prod, d_max, prod.precision(), terms};
  return res;
}

/// local factor of the convolution kinds at f: the k-sum of the matching
// global series restricted to powers of f, through weighted degree Dloc
inline LaurentKInf local_conv_factor(LSeriesContext& ctx, const SeriesSpec& spec, const PolyA& f, long Dloc,
                                     int M) {
  const FqCtx& C = ctx.ctx();
  const int r = ctx.phi().rank();
  const int l = ctx.has_psi() ? ctx.psi().rank() : r;
  const int d = f.deg();
  LaurentKInf sum(C, M);
  auto add_term = [&](const PolyA& num, long den_exp, Fq scale) {
    if (num.is_zero()) return;
    LaurentKInf t = LaurentKInf::from_poly(num * scale);
    if (den_exp > 0) {
      LaurentKInf inv =
          LaurentKInf::inv_of_poly(pow(f, static_cast<uint64_t>(den_exp)), M + num.deg() + 1);
      t = LaurentKInf::mul(t, inv);
    }
    sum += t;
  };
  switch (spec.kind) {
    case SeriesKind::ConvEqualRank: {
      std::vector<long> wts(r - 1);
      for (int i = 0; i < r - 1; ++i) wts[i] = i + 1;
      schur_detail::enumerate_weighted(r - 1, wts, Dloc, [&](const std::vector<long>& k) {
        long ksum = 0, kwt = 0;
        for (int i = 0; i < r - 1; ++i) ksum += k[i], kwt += (i + 1) * k[i];
        PolyA num = ctx.phi().boldmu_prime(f, k) * ctx.psi().boldmu_prime(f, k);
        add_term(num, 2 * ksum + spec.s * kwt, Fq(C, 1));
      });
      break;
    }
    case SeriesKind::ConvUnequalRank: {
      std::vector<long> wts(r);
      for (int i = 0; i < r; ++i) wts[i] = i + 1;
      Fq chif = ctx.phi().phi().chi(f);
      schur_detail::enumerate_weighted(r, wts, Dloc, [&](const std::vector<long>& k) {
        long ksum = 0, kwt = 0;
        for (int i = 0; i < r; ++i) ksum += k[i], kwt += (i + 1) * k[i];
        std::vector<long> kphi(k.begin(), k.end() - 1);
        std::vector<long> kpsi(k);
        kpsi.resize(l - 1, 0);
        PolyA num = ctx.phi().boldmu_prime(f, kphi) * ctx.psi().boldmu_prime(f, kpsi);
        Fq tw(C, 1);
        for (long t = 0; t < k[r - 1]; ++t) tw = tw * chif;
        add_term(num, 2 * ksum + spec.s * kwt, tw);
      });
      break;
    }
    case SeriesKind::SymTwiddle: {
      std::vector<long> wts(r - 1);
      for (int i = 0; i < r - 1; ++i) wts[i] = i + 1;
      schur_detail::enumerate_weighted(r - 1, wts, Dloc, [&](const std::vector<long>& k) {
        long ksum = 0, kwt = 0;
        std::vector<long> k2(k);
        for (int i = 0; i < r - 1; ++i) {
          k2[i] *= 2;
          ksum += k[i];
          kwt += (i + 1) * k[i];
        }
        PolyA num = ctx.phi().boldmu_prime(f, k2);
        add_term(num, 2 * ksum + spec.s * kwt, Fq(C, 1));
      });
      break;
    }
    case SeriesKind::AltHat: {
      int w = (r - 1) / 2;
      std::vector<long> wts(w);
      for (int i = 0; i < w; ++i) wts[i] = 2 * (i + 1);
      schur_detail::enumerate_weighted(w, wts, Dloc, [&](const std::vector<long>& kk) {
        std::vector<long> k(r - 1, 0);
        long ksum = 0, kwt = 0;
        for (int i = 0; i < w; ++i) {
          k[2 * i + 1] = kk[i];
          ksum += kk[i];
          kwt += 2 * (i + 1) * kk[i];
        }
        PolyA num = ctx.phi().boldmu_prime(f, k);
        add_term(num, ksum + spec.s * kwt, Fq(C, 1));
      });
      break;
    }
    default: throw internal_error("local_conv_factor on a non-convolution kind");
  }
  sum.truncate(M);
  return sum;
}

struct EulerFactorCheck {
  TensorKind kind;
  PolyA f;
  int W = 0;
  bool pass = false;
};

// Per-prime factorization theorems, checked in the formal variable u = f^{-s}:
// invert the dual reciprocal charpoly of the tensor structure as a series in
// u and compare with the zeta-factor times the boldmu sum, coefficient by
// coefficient in K through u^W.
inline EulerFactorCheck euler_factor_identity_check(LSeriesContext& ctx, TensorKind kind, const PolyA& f,
                                                    int W) {
  if (W > 10) throw guard_error("euler factor check guard: W <= 10");
  const FqCtx& C = ctx.ctx();
  const int r = ctx.phi().rank();
  MuTable& Tphi = ctx.phi();
  FrobCharPoly Pphi = Tphi.frob(f);
  RatK z = RatK::zero(C);
  RatK finv = RatK(PolyA::one(C), f);

  // left side: Q^v_E(u)^{-1}
  PolyT<RatK> Pd = [&] {
    if (kind == TensorKind::Tensor2) {
      FrobCharPoly Ppsi = ctx.psi().frob(f);
      return tensor_structure_charpoly_dual(Pphi, &Ppsi, kind);
    }
    return tensor_structure_charpoly_dual(Pphi, nullptr, kind);
  }();
  const int n = Pd.deg();
  PolyT<RatK> Qd = reciprocal(Pd, n);
  TruncSeries<RatK> lhs(W, z);
  for (int k = 0; k <= std::min(W, n); ++k) lhs.c[k] = Qd.coeff(k);
  lhs = lhs.inverse();

  // right side: zeta factor and boldmu sum per the displayed expansions
  TruncSeries<RatK> rhs = TruncSeries<RatK>::one(W, z);
  Fq chif = Pphi.chi_f;
  auto fpow = [&](long e) {  // f^(-e) in K
    RatK v = RatK::one(C);
    for (long i = 0; i < e; ++i) v *= finv;
    return v;
  };
  switch (kind) {
    case TensorKind::Tensor2: {
      MuTable& Tpsi = ctx.psi();
      const int l = Tpsi.rank();
      TruncSeries<RatK> sum(W, z);
      if (r == l) {
        std::vector<long> wts(r - 1);
        for (int i = 0; i < r - 1; ++i) wts[i] = i + 1;
        schur_detail::enumerate_weighted(r - 1, wts, W, [&](const std::vector<long>& k) {
          long ksum = 0, kwt = 0;
          for (int i = 0; i < r - 1; ++i) ksum += k[i], kwt += (i + 1) * k[i];
          sum.c[kwt] += RatK(Tphi.boldmu_prime(f, k) * Tpsi.boldmu_prime(f, k)) * fpow(2 * ksum);
        });
        Fq uu = chif * Tpsi.frob(f).chi_f;
        RatK head = RatK(PolyA::constant(C, uu.v)) * fpow(2);
        rhs = geometric(W, head, r).mul(sum);
      } else {
        std::vector<long> wts(r);
        for (int i = 0; i < r; ++i) wts[i] = i + 1;
        schur_detail::enumerate_weighted(r, wts, W, [&](const std::vector<long>& k) {
          long ksum = 0, kwt = 0;
          for (int i = 0; i < r; ++i) ksum += k[i], kwt += (i + 1) * k[i];
          std::vector<long> kphi(k.begin(), k.end() - 1);
          std::vector<long> kpsi(k);
          kpsi.resize(l - 1, 0);
          Fq tw(C, 1);
          for (long t = 0; t < k[r - 1]; ++t) tw = tw * chif;
          sum.c[kwt] +=
              RatK(Tphi.boldmu_prime(f, kphi) * Tpsi.boldmu_prime(f, kpsi) * tw) * fpow(2 * ksum);
        });
        rhs = sum;
      }
      break;
    }
    case TensorKind::Sym2: {
      TruncSeries<RatK> sum(W, z);
      std::vector<long> wts(r - 1);
      for (int i = 0; i < r - 1; ++i) wts[i] = i + 1;
      schur_detail::enumerate_weighted(r - 1, wts, W, [&](const std::vector<long>& k) {
        long ksum = 0, kwt = 0;
        std::vector<long> k2(k);
        for (int i = 0; i < r - 1; ++i) {
          k2[i] *= 2;
          ksum += k[i];
          kwt += (i + 1) * k[i];
        }
        sum.c[kwt] += RatK(Tphi.boldmu_prime(f, k2)) * fpow(2 * ksum);
      });
      Fq uu = chif * chif;
      rhs = geometric(W, RatK(PolyA::constant(C, uu.v)) * fpow(2), r).mul(sum);
      break;
    }
    case TensorKind::Alt2: {
      TruncSeries<RatK> sum(W, z);
      int w = (r - 1) / 2;
      std::vector<long> wts(w);
      for (int i = 0; i < w; ++i) wts[i] = i + 1;  // u-exponent is (i/2) k_i
      schur_detail::enumerate_weighted(w, wts, W, [&](const std::vector<long>& kk) {
        std::vector<long> k(r - 1, 0);
        long ksum = 0, texp = 0;
        for (int i = 0; i < w; ++i) {
          k[2 * i + 1] = kk[i];
          ksum += kk[i];
          texp += (i + 1) * kk[i];
        }
        sum.c[texp] += RatK(Tphi.boldmu_prime(f, k)) * fpow(ksum);
      });
      if (r % 2 == 0) {
        RatK head = RatK(PolyA::constant(C, chif.v)) * finv;
        rhs = geometric(W, head, r / 2).mul(sum);
      } else {
        rhs = sum;
      }
      break;
    }
  }

  EulerFactorCheck out;
  out.kind = kind;
  out.f = f;
  out.W = W;
  out.pass = (lhs == rhs);
  return out;
}

}  // namespace dgl
