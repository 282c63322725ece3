#pragma once

#include <map>
#include <vector>

#include "dgl/laurent.hpp"
#include "dgl/poly.hpp"

namespace dgl {

// Element of K whose denominator is a monomial in the family
// g_j = theta - theta^(q^j), j >= 1.  The family is stable under Frobenius
// twisting (g_j^(k) = g_j^(q^k)), and every denominator produced by the
// exponential/logarithm recursions and the rank-2 beta families stays inside
// it, so arithmetic here never needs a polynomial gcd: cancellation is plain
// trial division by the g_j.
class GFrac {
 public:
  GFrac() = default;
  explicit GFrac(PolyA n) : num_(std::move(n)) {}
  GFrac(PolyA n, std::map<int, long> den_exp) : num_(std::move(n)), e_(std::move(den_exp)) { reduce(); }

  static GFrac zero(const FqCtx& C) { return GFrac(PolyA::zero(C)); }
  static GFrac one(const FqCtx& C) { return GFrac(PolyA::one(C)); }

  const PolyA& num() const { return num_; }
  const std::map<int, long>& den_exponents() const { return e_; }
  const FqCtx& ctx() const { return num_.ctx(); }
  bool is_zero_frac() const { return num_.is_zero(); }

  // g_j = theta - theta^(q^j)
  static PolyA g(const FqCtx& C, int j) {
    uint64_t e = 1;
    for (int i = 0; i < j; ++i) e *= C.q();
    PolyA p(C);
    p.set_coeff(1, 1);
    p.set_coeff(static_cast<int>(e), C.neg(1));
    return p;
  }

  PolyA den_poly() const {
    PolyA d = PolyA::one(ctx());
    for (auto& [j, e] : e_) {
      PolyA gj = g(ctx(), j);
      for (long k = 0; k < e; ++k) d *= gj;
    }
    return d;
  }

  int deg() const {
    if (num_.is_zero()) return RatK::kZeroDeg;
    long d = num_.deg();
    for (auto& [j, e] : e_) {
      uint64_t qe = 1;
      for (int i = 0; i < j; ++i) qe *= ctx().q();
      d -= e * static_cast<long>(qe);
    }
    return static_cast<int>(d);
  }

  GFrac operator+(const GFrac& o) const {
    const FqCtx& C = ctx();
    if (num_.is_zero()) return o;
    if (o.num_.is_zero()) return *this;
    std::map<int, long> den;
    for (auto& [j, e] : e_) den[j] = e;
    for (auto& [j, e] : o.e_) den[j] = std::max(den[j], e);
    PolyA a = num_, b = o.num_;
    for (auto& [j, e] : den) {
      long ea = 0, eb = 0;
      if (auto it = e_.find(j); it != e_.end()) ea = it->second;
      if (auto it = o.e_.find(j); it != o.e_.end()) eb = it->second;
      if (e > ea) a *= g_power(C, j, e - ea);
      if (e > eb) b *= g_power(C, j, e - eb);
    }
    return GFrac(a + b, std::move(den));
  }
  GFrac operator-(const GFrac& o) const { return *this + (-o); }
  GFrac operator-() const {
    GFrac r(*this);
    r.num_ = -r.num_;
    return r;
  }
  GFrac operator*(const GFrac& o) const {
    if (num_.is_zero() || o.num_.is_zero()) return zero(ctx());
    std::map<int, long> den = e_;
    for (auto& [j, e] : o.e_) den[j] += e;
    return GFrac(num_ * o.num_, std::move(den));
  }
  GFrac& operator+=(const GFrac& o) { return *this = *this + o; }
  GFrac& operator-=(const GFrac& o) { return *this = *this - o; }
  GFrac& operator*=(const GFrac& o) { return *this = *this * o; }

  GFrac scaled(const Fq& s) const {
    GFrac r(*this);
    r.num_ = r.num_ * s;
    if (r.num_.is_zero()) r.e_.clear();
    return r;
  }
  // division by the family generator g_j
  GFrac div_g(int j, long count = 1) const {
    if (num_.is_zero()) return *this;
    GFrac r(*this);
    r.e_[j] += count;
    r.reduce();
    return r;
  }

  bool operator==(const GFrac& o) const {
    // align denominators, compare numerators
    GFrac d = *this - o;
    return d.num_.is_zero();
  }
  bool operator!=(const GFrac& o) const { return !(*this == o); }

  GFrac twist_n(long k) const {
    if (k == 0) return *this;
    uint64_t qk = 1;
    for (long i = 0; i < k; ++i) qk *= ctx().q();
    std::map<int, long> den;
    for (auto& [j, e] : e_) den[j] = e * static_cast<long>(qk);
    return GFrac(num_.twist_n(k), std::move(den));
  }

  // first hyperderivative d/dtheta; the g_j are theta-derivative-stable:
  // d/dtheta g_j = 1 since q^j = 0 in F_q
  GFrac derivative() const {
    const FqCtx& C = ctx();
    GFrac r = GFrac(num_.derivative(), e_);
    for (auto& [j, e] : e_) {
      if (e % C.p() == 0) continue;  // (g^-e)' = -e g^-e-1 g'
      std::map<int, long> den = e_;
      den[j] += 1;
      PolyA n = num_ * Fq(C, C.from_int(-e));
      r += GFrac(std::move(n), std::move(den));
    }
    return r;
  }

  RatK to_ratk() const { return RatK(num_, den_poly()); }

  LaurentKInf to_laurent(int M) const {
    const FqCtx& C = ctx();
    if (num_.is_zero()) return LaurentKInf::from_poly(num_);
    if (e_.empty()) return LaurentKInf::from_poly(num_);
    int d = deg();
    if (d < -M - 1) {  // entirely below precision
      LaurentKInf z(C, M);
      return z;
    }
    PolyA den = den_poly();
    LaurentKInf inv = LaurentKInf::inv_of_poly(den, M + std::max(num_.deg(), 0) + 1);
    LaurentKInf r = LaurentKInf::mul(LaurentKInf::from_poly(num_), inv);
    r.truncate(M);
    return r;
  }

 private:
  PolyA num_;
  std::map<int, long> e_;

  static PolyA g_power(const FqCtx& C, int j, long e) {
    PolyA gj = g(C, j);
    PolyA r = PolyA::one(C);
    PolyA base = gj;
    while (e) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  void reduce() {
    if (num_.is_zero()) {
      e_.clear();
      return;
    }
    for (auto it = e_.begin(); it != e_.end();) {
      PolyA gj = g(ctx(), it->first);
      while (it->second > 0) {
        auto [q, r] = num_.divrem(gj);
        if (!r.is_zero()) break;
        num_ = std::move(q);
        --it->second;
      }
      if (it->second <= 0)
        it = e_.erase(it);
      else
        ++it;
    }
  }
};

inline GFrac zero_like(const GFrac& x) { return GFrac::zero(x.ctx()); }
inline GFrac one_like(const GFrac& x) { return GFrac::one(x.ctx()); }
inline bool is_zero(const GFrac& x) { return x.is_zero_frac(); }
inline GFrac twist(const GFrac& x, long n) { return x.twist_n(n); }

}  // namespace dgl
