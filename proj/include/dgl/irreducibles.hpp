#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dgl/poly.hpp"

namespace dgl {

inline PolyA powmod(PolyA base, uint64_t e, const PolyA& mod) {
  PolyA r = PolyA::one(base.ctx());
  base = base % mod;
  while (e) {
    if (e & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return r;
}

// x^(q^k) mod f for k = 0..kmax
inline std::vector<PolyA> frobenius_powers_mod(const PolyA& f, int kmax) {
  const FqCtx& C = f.ctx();
  std::vector<PolyA> xs;
  PolyA x = PolyA::theta(C) % f;
  xs.push_back(x);
  for (int k = 1; k <= kmax; ++k) xs.push_back(powmod(xs.back(), C.q(), f));
  return xs;
}

// Distinct-degree irreducibility test; for deg <= 4 an exhaustive divisor
// search cross-checks the answer.
inline bool is_irreducible(const PolyA& f) {
  const FqCtx& C = f.ctx();
  const int d = f.deg();
  if (d <= 0) return false;
  bool answer;
  if (d == 1) {
    answer = true;
  } else {
    std::vector<PolyA> xs = frobenius_powers_mod(f, d);
    PolyA x = PolyA::theta(C) % f;
    answer = (xs[d] == x);
    if (answer) {
      for (int e = 2; e <= d && answer; ++e) {
        if (d % e != 0) continue;
        bool e_prime = true;
        for (int t = 2; t * t <= e; ++t)
          if (e % t == 0) e_prime = false;
        if (!e_prime) continue;
        PolyA g = gcd(xs[d / e] - x, f);
        if (g.deg() != 0) answer = false;
      }
    }
  }
  if (d >= 2 && d <= 4) {
    // exhaustive search for a monic divisor of degree <= d/2
    bool found = false;
    for (int dd = 1; dd <= d / 2 && !found; ++dd) {
      uint64_t count = 1;
      for (int i = 0; i < dd; ++i) count *= C.q();
      for (uint64_t n = 0; n < count && !found; ++n) {
        PolyA g(C);
        uint64_t v = n;
        for (int i = 0; i < dd; ++i) {
          g.set_coeff(i, v % C.q());
          v /= C.q();
        }
        g.set_coeff(dd, 1);
        if ((f % g).is_zero()) found = true;
      }
    }
    if (found == answer) throw internal_error("irreducibility cross-check disagreement");
  }
  return answer;
}

// all monic polynomials of the given degree, ordered by top-down
// lexicographic coefficient comparison
inline std::vector<PolyA> monic_polys_of_degree(const FqCtx& C, int d) {
  uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= C.q();
  std::vector<PolyA> out;
  out.reserve(count);
  for (uint64_t n = 0; n < count; ++n) {
    PolyA f(C);
    f.set_coeff(d, 1);
    uint64_t v = n;
    for (int i = 0; i < d; ++i) {
      f.set_coeff(i, v % C.q());
      v /= C.q();
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// monic irreducibles of degree <= d_max, sorted by (degree, lexicographic)
inline std::vector<PolyA> enumerate_monic_irreducibles(const FqCtx& C, int d_max) {
  if (d_max < 1) throw guard_error("d_max must be >= 1");
  std::vector<PolyA> out;
  for (int d = 1; d <= d_max; ++d)
    for (auto& f : monic_polys_of_degree(C, d))
      if (is_irreducible(f)) out.push_back(f);
  return out;
}

// expected count of monic irreducibles of degree d (Gauss / Mobius)
inline uint64_t irreducible_count(uint64_t q, int d) {
  auto mobius = [](int n) {
    int m = 1;
    for (int pr = 2; pr * pr <= n; ++pr) {
      if (n % pr) continue;
      n /= pr;
      if (n % pr == 0) return 0;
      m = -m;
    }
    if (n > 1) m = -m;
    return m;
  };
  int64_t total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    uint64_t qe = 1;
    for (int i = 0; i < d / e; ++i) qe *= q;
    total += mobius(e) * static_cast<int64_t>(qe);
  }
  return static_cast<uint64_t>(total) / d;
}

// packed index of a monic polynomial of known degree (its lower d
// coefficients, base q, constant term least significant)
inline uint64_t monic_index(const PolyA& f) {
  const FqCtx& C = f.ctx();
  uint64_t n = 0;
  for (int i = f.deg() - 1; i >= 0; --i) n = n * C.q() + f.coeff_packed(i);
  return n;
}
inline PolyA monic_from_index(const FqCtx& C, int d, uint64_t n) {
  PolyA f(C);
  f.set_coeff(d, 1);
  for (int i = 0; i < d; ++i) {
    f.set_coeff(i, n % C.q());
    n /= C.q();
  }
  return f;
}

}  // namespace dgl
