#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dgl/charpoly.hpp"

namespace dgl {

// Index (k_1, ..., k_{n-1}) of the Schur polynomial S_k in n variables; the
// associated partition is lambda_i = k_i + ... + k_{n-1}.
struct SchurIndex {
  int n;
  std::vector<long> k;

  SchurIndex(int n_, std::vector<long> k_) : n(n_), k(std::move(k_)) {
    if (static_cast<int>(k.size()) != n - 1) throw guard_error("SchurIndex needs n-1 entries");
    for (long v : k)
      if (v < 0) throw guard_error("SchurIndex entries must be nonnegative");
  }

  std::vector<long> partition() const {
    std::vector<long> lam(n, 0);
    long acc = 0;
    for (int i = n - 2; i >= 0; --i) {
      acc += k[i];
      lam[i] = acc;
    }
    return lam;
  }
  // degree of S_k: k_1 + 2 k_2 + ... + (n-1) k_{n-1}
  long weight() const {
    long w = 0;
    for (size_t i = 0; i < k.size(); ++i) w += static_cast<long>(i + 1) * k[i];
    return w;
  }
  long sum() const {
    long s = 0;
    for (long v : k) s += v;
    return s;
  }
};

// e_1..e_n of the roots of a monic polynomial: e_i = (-1)^i [X^{n-i}] P
template <class T>
std::vector<T> elementary_from_monic(const PolyT<T>& P) {
  const int n = P.deg();
  if (n < 0 || !(P.coeff(n) == one_like(P.sample()))) throw guard_error("elementary_from_monic needs monic input");
  std::vector<T> e(n + 1, zero_like(P.sample()));
  e[0] = one_like(P.sample());
  for (int i = 1; i <= n; ++i) {
    T v = P.coeff(n - i);
    if (i % 2 == 1) v = -v;
    e[i] = v;
  }
  return e;
}

// complete homogeneous h_0..h_{m_max} from e_0..e_n via
// sum h_i T^i * sum (-1)^i e_i T^i = 1
template <class T>
std::vector<T> complete_h(const std::vector<T>& e, int m_max) {
  const T z = zero_like(e.at(0));
  std::vector<T> h(m_max + 1, z);
  h[0] = one_like(e[0]);
  const int n = static_cast<int>(e.size()) - 1;
  for (int m = 1; m <= m_max; ++m) {
    T acc = z;
    for (int i = 1; i <= std::min(m, n); ++i) {
      T term = e[i] * h[m - i];
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    h[m] = acc;
  }
  return h;
}

// Jacobi-Trudi determinant for a partition (h's are the n-variable ones)
template <class T>
T schur_jt_partition(const std::vector<long>& lambda, const std::vector<T>& h) {
  size_t len = lambda.size();
  while (len > 0 && lambda[len - 1] == 0) --len;
  const T z = zero_like(h.at(0));
  if (len == 0) return one_like(h[0]);
  long need = lambda[0] + static_cast<long>(len) - 1;
  if (need >= static_cast<long>(h.size())) throw guard_error("insufficient h values for Jacobi-Trudi");
  Mat<T> M(static_cast<int>(len), static_cast<int>(len), z);
  for (size_t i = 0; i < len; ++i)
    for (size_t j = 0; j < len; ++j) {
      long idx = lambda[i] - static_cast<long>(i) + static_cast<long>(j);
      M(static_cast<int>(i), static_cast<int>(j)) = (idx < 0) ? z : h[static_cast<size_t>(idx)];
    }
  return det_division_free(M);
}

template <class T>
T schur_jacobi_trudi(const SchurIndex& idx, const std::vector<T>& h) {
  return schur_jt_partition(idx.partition(), h);
}

// bialternant quotient det(x_j^{lambda_i + n - i}) / V(x); small-n oracle
template <class T>
T schur_bialternant_oracle(const SchurIndex& idx, const std::vector<T>& x) {
  if (idx.n > 4) throw guard_error("bialternant oracle limited to n <= 4");
  if (static_cast<int>(x.size()) != idx.n) throw guard_error("bialternant needs n values");
  const T z = zero_like(x[0]);
  T vand = one_like(x[0]);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j) vand *= (x[i] - x[j]);
  if (is_zero(vand)) throw guard_error("bialternant needs pairwise distinct values");
  auto lam = idx.partition();
  Mat<T> M(idx.n, idx.n, z);
  for (int i = 0; i < idx.n; ++i)
    for (int j = 0; j < idx.n; ++j) {
      long e = lam[i] + idx.n - 1 - i;
      T p = one_like(x[0]);
      for (long t = 0; t < e; ++t) p *= x[j];
      M(i, j) = p;
    }
  return det_division_free(M) / vand;
}

// ---- truncated power series in T over a ring ----

template <class T>
struct TruncSeries {
  std::vector<T> c;  // coefficients 0..W
  explicit TruncSeries(int W, const T& sample) : c(W + 1, zero_like(sample)) {}

  int order() const { return static_cast<int>(c.size()) - 1; }

  static TruncSeries one(int W, const T& sample) {
    TruncSeries s(W, sample);
    s.c[0] = one_like(sample);
    return s;
  }
  TruncSeries mul(const TruncSeries& o) const {
    TruncSeries r(order(), zero_like(c[0]));
    for (int i = 0; i <= order(); ++i) {
      if (is_zero(c[i])) continue;
      for (int j = 0; i + j <= order(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    return r;
  }
  // inverse of a series with invertible constant term
  TruncSeries inverse() const {
    TruncSeries r(order(), zero_like(c[0]));
    T inv0 = one_like(c[0]) / c[0];
    r.c[0] = inv0;
    for (int m = 1; m <= order(); ++m) {
      T acc = zero_like(c[0]);
      for (int i = 1; i <= m; ++i) acc += c[i] * r.c[m - i];
      r.c[m] = -(acc * inv0);
    }
    return r;
  }
  bool operator==(const TruncSeries& o) const {
    for (int i = 0; i <= order(); ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }
};

// (1 - v T^e)^{-1} truncated
template <class T>
TruncSeries<T> geometric(int W, const T& v, int e) {
  TruncSeries<T> s(W, zero_like(v));
  T p = one_like(v);
  for (int i = 0; i * e <= W; ++i) {
    s.c[i * e] = p;
    p = p * v;
  }
  return s;
}

namespace schur_detail {

// enumerate (k_1..k_len) >= 0 with sum of w_i k_i <= W
inline void enumerate_weighted(int len, const std::vector<long>& wts, long W,
                               const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> k(len, 0);
  std::function<void(int, long)> rec = [&](int pos, long left) {
    if (pos == len) {
      fn(k);
      return;
    }
    long w = wts[pos];
    for (long v = 0;; ++v) {
      if (w > 0 && v * w > left) break;
      if (w == 0 && v > 0) break;
      k[pos] = v;
      rec(pos + 1, left - v * w);
      k[pos] = 0;
      if (w == 0) break;
    }
  };
  rec(0, W);
}

}  // namespace schur_detail

enum class SchurIdentity { Cauchy, CauchyRect, LittlewoodSym, LittlewoodAlt, Reorder };

struct SchurSuiteReport {
  std::string which;
  int n = 0, W = 0, trials = 0;
  uint64_t seed = 0;
  bool pass = false;
  int failures = 0;
};

// Verifies the Cauchy/Littlewood/reorder identities as truncated power
// series in T over random specializations in A (deg <= 2 values).
inline SchurSuiteReport schur_identity_suite(const FqCtx& C, SchurIdentity which, int n, int W, int trials,
                                             uint64_t seed) {
  if (n < 2 || n > 4 || W > 8) throw guard_error("identity suite guard: 2 <= n <= 4, W <= 8");
  SchurSuiteReport rep;
  rep.n = n;
  rep.W = W;
  rep.trials = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint64_t> dv(0, C.q() - 1);
  std::uniform_int_distribution<int> dd(0, 2);

  auto random_value = [&]() {
    PolyA f(C);
    int d = dd(rng);
    for (int i = 0; i < d; ++i) f.set_coeff(i, dv(rng));
    std::uniform_int_distribution<uint64_t> lead(1, C.q() - 1);
    f.set_coeff(d, lead(rng));
    return RatK(f);
  };
  auto distinct_values = [&](int count) {
    std::vector<RatK> xs;
    while (static_cast<int>(xs.size()) < count) {
      RatK v = random_value();
      bool dup = false;
      for (auto& u : xs)
        if (u == v) dup = true;
      if (!dup) xs.push_back(v);
    }
    return xs;
  };
  auto hs_of_values = [&](const std::vector<RatK>& xs, long hmax) {
    // e_i from the product (1 + x_i T), then h from e
    std::vector<RatK> e(xs.size() + 1, RatK::zero(C));
    e[0] = RatK::one(C);
    for (size_t i = 0; i < xs.size(); ++i)
      for (size_t j = i + 1; j >= 1; --j) e[j] = e[j] + e[j - 1] * xs[i];
    return complete_h(e, static_cast<int>(hmax));
  };

  RatK z = RatK::zero(C);
  auto run_trial = [&]() -> bool {
    switch (which) {
      case SchurIdentity::Cauchy: {
        auto xs = distinct_values(n), ys = distinct_values(n);
        // geometric(.) is already (1 - xyT)^{-1}
        TruncSeries<RatK> lhs = TruncSeries<RatK>::one(W, z);
        for (auto& x : xs)
          for (auto& y : ys) lhs = lhs.mul(geometric(W, x * y, 1));
        RatK X = RatK::one(C), Y = RatK::one(C);
        for (auto& x : xs) X *= x;
        for (auto& y : ys) Y *= y;
        auto hx = hs_of_values(xs, W + n), hy = hs_of_values(ys, W + n);
        TruncSeries<RatK> sum(W, z);
        std::vector<long> wts(n - 1);
        for (int i = 0; i < n - 1; ++i) wts[i] = i + 1;
        schur_detail::enumerate_weighted(n - 1, wts, W, [&](const std::vector<long>& k) {
          SchurIndex idx(n, k);
          sum.c[idx.weight()] += schur_jacobi_trudi(idx, hx) * schur_jacobi_trudi(idx, hy);
        });
        return geometric(W, X * Y, n).mul(sum) == lhs;
      }
      case SchurIdentity::CauchyRect: {
        int l = n + 1;  // rectangular case with one extra y variable
        auto xs = distinct_values(n), ys = distinct_values(l);
        TruncSeries<RatK> lhs = TruncSeries<RatK>::one(W, z);
        for (auto& x : xs)
          for (auto& y : ys) lhs = lhs.mul(geometric(W, x * y, 1));
        RatK X = RatK::one(C);
        for (auto& x : xs) X *= x;
        auto hx = hs_of_values(xs, W + n), hy = hs_of_values(ys, W + l);
        TruncSeries<RatK> sum(W, z);
        std::vector<long> wts(n);
        for (int i = 0; i < n; ++i) wts[i] = i + 1;
        schur_detail::enumerate_weighted(n, wts, W, [&](const std::vector<long>& k) {
          // k = (k_1..k_n); S_k(x) uses (k_1..k_{n-1}); S_{k'}(y) pads with 0s
          std::vector<long> kx(k.begin(), k.end() - 1);
          std::vector<long> ky = k;
          ky.resize(l - 1, 0);
          long w = 0;
          for (int i = 0; i < n; ++i) w += (i + 1) * k[i];
          RatK Xk = RatK::one(C);
          for (long t = 0; t < k[n - 1]; ++t) Xk *= X;
          sum.c[w] +=
              schur_jacobi_trudi(SchurIndex(n, kx), hx) * schur_jacobi_trudi(SchurIndex(l, ky), hy) * Xk;
        });
        return sum == lhs;
      }
      case SchurIdentity::LittlewoodSym: {
        auto xs = distinct_values(n);
        TruncSeries<RatK> lhs = TruncSeries<RatK>::one(W, z);
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) lhs = lhs.mul(geometric(W, xs[i] * xs[j], 1));
        RatK X = RatK::one(C);
        for (auto& x : xs) X *= x;
        auto hx = hs_of_values(xs, 2L * W + n + 2);
        TruncSeries<RatK> sum(W, z);
        std::vector<long> wts(n - 1);
        for (int i = 0; i < n - 1; ++i) wts[i] = i + 1;
        // even indices k = 2k'; the T-grading counts pairs, so S_{2k'}
        // contributes at half the weight of 2k'
        schur_detail::enumerate_weighted(n - 1, wts, W, [&](const std::vector<long>& k) {
          std::vector<long> k2(k);
          for (auto& v : k2) v *= 2;
          SchurIndex idx(n, k2);
          long texp = idx.weight() / 2;
          if (texp > W) return;
          sum.c[texp] += schur_jacobi_trudi(idx, hx);
        });
        return geometric(W, X * X, n).mul(sum) == lhs;
      }
      case SchurIdentity::LittlewoodAlt: {
        auto xs = distinct_values(n);
        TruncSeries<RatK> lhs = TruncSeries<RatK>::one(W, z);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) lhs = lhs.mul(geometric(W, xs[i] * xs[j], 1));
        RatK X = RatK::one(C);
        for (auto& x : xs) X *= x;
        auto hx = hs_of_values(xs, 2L * W + n + 2);
        TruncSeries<RatK> sum(W, z);
        // nonzero entries only in even slots i = 2,4,...; T-exponent is
        // sum (i/2) k_i
        int w_count = (n - 1) / 2;
        std::vector<long> wts(w_count);
        for (int i = 0; i < w_count; ++i) wts[i] = i + 1;
        schur_detail::enumerate_weighted(w_count, wts, W, [&](const std::vector<long>& kk) {
          std::vector<long> k(n - 1, 0);
          long texp = 0;
          for (int i = 0; i < w_count; ++i) {
            k[2 * i + 1] = kk[i];  // slot 2(i+1) in 1-based numbering
            texp += (i + 1) * kk[i];
          }
          SchurIndex idx(n, k);
          sum.c[texp] += schur_jacobi_trudi(idx, hx);
        });
        bool even = (n % 2 == 0);
        TruncSeries<RatK> rhs = even ? geometric(W, X, n / 2).mul(sum) : sum;
        return rhs == lhs;
      }
      case SchurIdentity::Reorder: {
        // Lemma: (x_1...x_n)^{k_1+...+k_{n-1}} S_k(x^{-1}) = S_{rev k}(x),
        // plus the factorization s_lambda = (x_1...x_n)^{lambda_n} S_{diffs}.
        auto xs = distinct_values(n);  // values are nonzero by construction
        std::vector<RatK> xinv;
        for (auto& x : xs) xinv.push_back(x.inv());
        RatK X = RatK::one(C);
        for (auto& x : xs) X *= x;
        auto hx = hs_of_values(xs, W + n + 2);
        auto hinv = hs_of_values(xinv, W + n + 2);
        std::vector<long> wts(n - 1);
        for (int i = 0; i < n - 1; ++i) wts[i] = i + 1;
        bool ok = true;
        schur_detail::enumerate_weighted(n - 1, wts, W, [&](const std::vector<long>& k) {
          if (!ok) return;
          SchurIndex idx(n, k);
          std::vector<long> krev(k.rbegin(), k.rend());
          SchurIndex ridx(n, krev);
          RatK Xk = RatK::one(C);
          for (long t = 0; t < idx.sum(); ++t) Xk *= X;
          if (!(Xk * schur_jacobi_trudi(idx, hinv) == schur_jacobi_trudi(ridx, hx))) ok = false;
          // factorization lemma with lambda_n = 1 appended
          auto lam = idx.partition();
          for (auto& v : lam) v += 1;
          RatK lhs2 = schur_jt_partition(lam, hx);
          if (!(lhs2 == X * schur_jacobi_trudi(idx, hx))) ok = false;
        });
        return ok;
      }
    }
    return false;
  };

  rep.pass = true;
  for (int t = 0; t < trials; ++t) {
    if (!run_trial()) {
      rep.pass = false;
      ++rep.failures;
    }
  }
  switch (which) {
    case SchurIdentity::Cauchy: rep.which = "cauchy"; break;
    case SchurIdentity::CauchyRect: rep.which = "cauchy_rect"; break;
    case SchurIdentity::LittlewoodSym: rep.which = "littlewood_sym"; break;
    case SchurIdentity::LittlewoodAlt: rep.which = "littlewood_alt"; break;
    case SchurIdentity::Reorder: rep.which = "reorder"; break;
  }
  return rep;
}

}  // namespace dgl
