#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dgl/frobenius.hpp"
#include "dgl/schur.hpp"

namespace dgl {

inline std::vector<std::pair<PolyA, int>> factorize_monic(const PolyA& a) {
  if (!a.is_monic()) throw guard_error("factorization expects a monic polynomial");
  std::vector<std::pair<PolyA, int>> out;
  PolyA rest = a;
  const FqCtx& C = a.ctx();
  for (int d = 1; rest.deg() > 0 && d <= rest.deg() / 2; ++d) {
    for (auto& f : monic_polys_of_degree(C, d)) {
      if (rest.deg() < 2 * d) break;
      if (!is_irreducible(f)) continue;
      int e = 0;
      while (true) {
        auto [q, r] = rest.divrem(f);
        if (!r.is_zero()) break;
        rest = q;
        ++e;
      }
      if (e > 0) out.push_back({f, e});
    }
  }
  if (rest.deg() > 0) out.push_back({rest, 1});
  return out;
}

// Memoized mu_phi, nu_phi and the Schur-valued boldmu_phi for one Drinfeld
// module.  mu/nu come from inverting Q_f^v(fX) and Q_f(X); each prefix is
// recomputed through the induced recursive relations and compared, so a
// disagreement is an internal error rather than silent data.
class MuTable {
 public:
  explicit MuTable(DrinfeldModule phi) : phi_(std::move(phi)) {}

  const DrinfeldModule& phi() const { return phi_; }
  const FqCtx& ctx() const { return phi_.ctx(); }
  int rank() const { return phi_.rank(); }

  const FrobCharPoly& frob(const PolyA& f) {
    auto key = key_of(f);
    auto it = frob_.find(key);
    if (it == frob_.end()) it = frob_.emplace(key, frob_charpoly(phi_, f)).first;
    return it->second;
  }

  // mu_phi(f^0..f^m_max)
  const std::vector<PolyA>& mu_powers(const PolyA& f, int m_max) {
    auto key = key_of(f);
    auto& v = mu_[key];
    if (static_cast<int>(v.size()) <= m_max) extend_mu(f, v, m_max);
    return v;
  }
  const std::vector<PolyA>& nu_powers(const PolyA& f, int m_max) {
    auto key = key_of(f);
    auto& v = nu_[key];
    if (static_cast<int>(v.size()) <= m_max) extend_nu(f, v, m_max);
    return v;
  }
  PolyA mu(const PolyA& f, int m) { return mu_powers(f, m)[m]; }
  PolyA nu(const PolyA& f, int m) { return nu_powers(f, m)[m]; }

  // boldmu_phi(f^{k_1}, ..., f^{k_{r-1}}), computed root-free: the
  // Jacobi-Trudi determinant in mu-values equals f^{weight} S_k(alpha), and
  // boldmu = f^{sum} S_k(alpha), so the determinant is divided by
  // f^{weight - sum} (an exact division by Prop. boldmu in A).
  PolyA boldmu_prime(const PolyA& f, const std::vector<long>& k) {
    const int r = rank();
    if (r < 2) throw guard_error("boldmu needs rank >= 2");
    if (static_cast<int>(k.size()) != r - 1) throw guard_error("boldmu needs r-1 exponents");
    SchurIndex idx(r, k);
    long wt = idx.weight(), sm = idx.sum();
    long hmax = idx.partition()[0] + r;
    const auto& mus = mu_powers(f, static_cast<int>(hmax));
    PolyA det = schur_jt_partition(idx.partition(), mus);
    if (wt > sm) {
      auto [q, rem] = det.divrem(pow(f, static_cast<uint64_t>(wt - sm)));
      if (!rem.is_zero()) throw internal_error("boldmu determinant not divisible by the f-power");
      det = q;
    }
    // degree bound (1/r) sum (r-i) deg a_i
    long bound = 0;
    for (size_t i = 0; i < k.size(); ++i) bound += (r - 1 - static_cast<long>(i)) * k[i] * f.deg();
    if (!det.is_zero() && det.deg() * r > bound) throw internal_error("boldmu degree bound violated");
    return det;
  }

  // multiplicative extension to tuples of monic polynomials
  PolyA boldmu(const std::vector<PolyA>& a) {
    const int r = rank();
    if (static_cast<int>(a.size()) != r - 1) throw guard_error("boldmu needs r-1 arguments");
    // group prime powers across the tuple
    std::map<std::pair<int, uint64_t>, std::pair<PolyA, std::vector<long>>> groups;
    for (size_t i = 0; i < a.size(); ++i) {
      for (auto& [f, e] : factorize_monic(a[i])) {
        auto key = key_of(f);
        auto it = groups.find(key);
        if (it == groups.end())
          it = groups.emplace(key, std::make_pair(f, std::vector<long>(r - 1, 0))).first;
        it->second.second[i] += e;
      }
    }
    PolyA out = PolyA::one(ctx());
    for (auto& [key, fe] : groups) out *= boldmu_prime(fe.first, fe.second);
    long bound = 0;
    for (size_t i = 0; i < a.size(); ++i) bound += (r - 1 - static_cast<long>(i)) * std::max(a[i].deg(), 0);
    if (!out.is_zero() && out.deg() * r > bound) throw internal_error("boldmu degree bound violated");
    return out;
  }

 private:
  DrinfeldModule phi_;
  std::map<std::pair<int, uint64_t>, FrobCharPoly> frob_;
  std::map<std::pair<int, uint64_t>, std::vector<PolyA>> mu_, nu_;

  std::pair<int, uint64_t> key_of(const PolyA& f) const { return {f.deg(), monic_index(f)}; }

  void extend_mu(const PolyA& f, std::vector<PolyA>& v, int m_max) {
    const FrobCharPoly& P = frob(f);
    const int r = rank();
    PolyT<PolyA> qv = P.Q_dual_fX();
    // series inversion of 1 + q_1 X + ... + q_r X^r
    if (v.empty()) v.push_back(PolyA::one(ctx()));
    for (int m = static_cast<int>(v.size()); m <= m_max; ++m) {
      PolyA acc(ctx());
      for (int j = 1; j <= std::min(r, m); ++j) acc += qv.coeff(j) * v[m - j];
      v.push_back(-acc);
    }
    // independent path: the induced recursion with seed mu(f) = (-1)^{r+1} chi(f) c_1
    Fq chi = P.chi_f;
    Fq sgn = (r % 2 == 0) ? Fq(ctx(), 1) : -Fq(ctx(), 1);  // (-1)^r
    std::vector<PolyA> w;
    w.push_back(PolyA::one(ctx()));
    if (m_max >= 1) {
      // mu(f) = (-1)^{r+1} chi(f) c_1; for r = 1 the generating series is
      // 1 - chi(f) X, so mu(f) = chi(f)
      PolyA mu1 = (r == 1) ? PolyA::constant(ctx(), chi.v) : P.c[1] * (-(sgn * chi));
      w.push_back(mu1);
    }
    for (int n = 2; n <= m_max; ++n) {
      // mu(f^n) = mu(f) mu(f^{n-1}) - (-1)^r chi sum_{j=2}^{r-1} c_j f^{j-1} mu(f^{n-j})
      //           - (-1)^r chi f^{r-1} mu(f^{n-r}), negative powers = 0
      // (the displayed relation is for r >= 2; for r = 1 the first term is
      // already the whole recurrence)
      PolyA acc = w[1] * w[n - 1];
      PolyA fp = f;  // f^{j-1}
      for (int j = 2; j <= r - 1; ++j) {
        if (n - j >= 0) acc -= P.c[j] * fp * w[n - j] * (sgn * chi);
        fp *= f;
      }
      if (r >= 2 && n - r >= 0) acc -= pow(f, static_cast<uint64_t>(r - 1)) * w[n - r] * (sgn * chi);
      w.push_back(acc);
    }
    for (int m = 0; m <= m_max; ++m)
      if (!(v[m] == w[m])) throw internal_error("mu inversion and recursion disagree");
  }

  void extend_nu(const PolyA& f, std::vector<PolyA>& v, int m_max) {
    const FrobCharPoly& P = frob(f);
    const int r = rank();
    PolyT<PolyA> q = P.Q();
    if (v.empty()) v.push_back(PolyA::one(ctx()));
    for (int m = static_cast<int>(v.size()); m <= m_max; ++m) {
      PolyA acc(ctx());
      for (int j = 1; j <= std::min(r, m); ++j) acc += q.coeff(j) * v[m - j];
      v.push_back(-acc);
    }
    // independent path: nu(f) = -c_{r-1}, then the induced recursion
    Fq chibar = P.chi_f.inv();
    Fq sgn = (r % 2 == 0) ? Fq(ctx(), 1) : -Fq(ctx(), 1);
    std::vector<PolyA> w;
    w.push_back(PolyA::one(ctx()));
    if (m_max >= 1) w.push_back(r == 1 ? f * chibar : -P.c[r - 1]);
    for (int n = 2; n <= m_max; ++n) {
      PolyA acc = w[1] * w[n - 1];
      for (int j = 2; j <= r - 1; ++j)
        if (n - j >= 0) acc -= P.c[r - j] * w[n - j];
      if (r >= 2 && n - r >= 0) acc -= f * w[n - r] * (sgn * chibar);
      w.push_back(acc);
    }
    for (int m = 0; m <= m_max; ++m)
      if (!(v[m] == w[m])) throw internal_error("nu inversion and recursion disagree");
  }
};

struct BoldmuRelationReport {
  int r = 0;
  long bound = 0;
  int checks = 0;
  bool pass = true;
};

// The displayed recursive relations on boldmu: the full-sum product formula
// and the explicit slot-shift families, verified by direct enumeration.
inline BoldmuRelationReport boldmu_relation_checks(MuTable& T, const PolyA& f, long bound) {
  const int r = T.rank();
  if (r < 2) throw guard_error("boldmu relations need rank >= 2");
  BoldmuRelationReport rep;
  rep.r = r;
  rep.bound = bound;
  const FqCtx& C = T.ctx();
  Fq chi = T.frob(f).chi_f;

  auto e_slot = [&](int pos) {  // (1,..,f at pos,..,1), 1-based pos
    std::vector<long> k(r - 1, 0);
    k[pos - 1] = 1;
    return k;
  };
  auto first_slot = [&](long kk) {
    std::vector<long> k(r - 1, 0);
    k[0] = kk;
    return k;
  };

  // base tuples (k_1..k_{r-1}) of small weight for the full-sum display
  std::vector<std::vector<long>> bases;
  {
    std::vector<long> wts(r - 1, 1);
    schur_detail::enumerate_weighted(r - 1, wts, std::min<long>(bound, 3),
                                     [&](const std::vector<long>& k) { bases.push_back(k); });
  }

  auto chipow = [&](long e) {
    Fq v(C, 1);
    for (long i = 0; i < e; ++i) v = v * chi;
    return v;
  };

  for (long kk = 0; kk <= bound; ++kk) {
    // full-sum display:
    // boldmu(f^k,1,..) boldmu(f^{k_1},..) =
    //   sum_{m_0+..+m_{r-1}=k, m_i<=k_i} boldmu(f^{k_1+m_0-m_1},...) chi^{m_{r-1}} f^{k-m_0}
    for (const auto& base : bases) {
      PolyA lhs = T.boldmu_prime(f, first_slot(kk)) * T.boldmu_prime(f, base);
      PolyA rhs(C);
      std::vector<long> m(r, 0);
      std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == r - 1) {
          m[r - 1] = left;
          if (r - 1 >= 1 && left > base[r - 2]) return;  // m_{r-1} <= k_{r-1}
          std::vector<long> arg(r - 1);
          for (int i = 1; i <= r - 1; ++i) arg[i - 1] = base[i - 1] + m[i - 1] - m[i];
          for (long v : arg)
            if (v < 0) return;
          rhs += T.boldmu_prime(f, arg) * chipow(m[r - 1]) * pow(f, static_cast<uint64_t>(kk - m[0]));
          return;
        }
        long cap = (pos == 0) ? left : std::min(left, base[pos - 1]);
        for (long v = 0; v <= cap; ++v) {
          m[pos] = v;
          rec(pos + 1, left - v);
        }
      };
      rec(0, kk);
      ++rep.checks;
      if (!(lhs == rhs)) rep.pass = false;
    }

    if (kk < 1) continue;
    // slot-shift displays: boldmu(f^k,1,..) boldmu(e_s) =
    //   boldmu(f^k with f at slot s) + boldmu(f^{k-1} with f at slot s+1) f,
    // the overflowing slot r turning into chi(f) f (the last display)
    for (int s = 1; s <= std::min(3, r - 1); ++s) {
      PolyA lhs = T.boldmu_prime(f, first_slot(kk)) * T.boldmu_prime(f, e_slot(s));
      std::vector<long> t1 = first_slot(kk);
      t1[s - 1] += 1;
      PolyA rhs = T.boldmu_prime(f, t1);
      if (s + 1 <= r - 1) {
        std::vector<long> t2 = first_slot(kk - 1);
        t2[s] += 1;
        rhs += T.boldmu_prime(f, t2) * f;
      } else {
        rhs += T.boldmu_prime(f, first_slot(kk - 1)) * f * chi;
      }
      ++rep.checks;
      if (!(lhs == rhs)) rep.pass = false;
    }
    // the last display (f in the final slot) when distinct from the loop above
    if (r - 1 > 3) {
      PolyA lhs = T.boldmu_prime(f, first_slot(kk)) * T.boldmu_prime(f, e_slot(r - 1));
      std::vector<long> t1 = first_slot(kk);
      t1[r - 2] += 1;
      PolyA rhs = T.boldmu_prime(f, t1) + T.boldmu_prime(f, first_slot(kk - 1)) * f * chi;
      ++rep.checks;
      if (!(lhs == rhs)) rep.pass = false;
    }
  }
  return rep;
}

}  // namespace dgl
