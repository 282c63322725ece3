#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgl/fq.hpp"

namespace dgl {

// Dense polynomial in theta over F_q, i.e. an element of A = F_q[theta].
// Coefficients are stored packed (constant term first) with a single
// context pointer, which keeps the inner loops tight enough for the
// Dirichlet-sum scale enumerations.
class PolyA {
 public:
  PolyA() = default;
  explicit PolyA(const FqCtx& C) : C_(&C) {}
  PolyA(const FqCtx& C, std::vector<uint64_t> coeffs) : C_(&C), c_(std::move(coeffs)) { trim(); }

  static PolyA zero(const FqCtx& C) { return PolyA(C); }
  static PolyA one(const FqCtx& C) { return constant(C, 1); }
  static PolyA constant(const FqCtx& C, uint64_t v) {
    PolyA r(C);
    if (v != 0) r.c_ = {v};
    return r;
  }
  static PolyA theta(const FqCtx& C) { return PolyA(C, {0, 1}); }
  // theta^n with coefficient c
  static PolyA monomial(const FqCtx& C, int n, uint64_t coef = 1) {
    PolyA r(C);
    if (coef != 0) {
      r.c_.assign(n + 1, 0);
      r.c_[n] = coef;
    }
    return r;
  }

  const FqCtx& ctx() const { return *C_; }
  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is the sentinel -1 (callers treat it as -infinity)
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  uint64_t coeff_packed(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
  Fq coeff(int i) const { return Fq(*C_, coeff_packed(i)); }
  Fq lead() const { return Fq(*C_, c_.empty() ? 0 : c_.back()); }
  const std::vector<uint64_t>& coeffs() const { return c_; }

  void set_coeff(int i, uint64_t v) {
    if (i >= static_cast<int>(c_.size())) {
      if (v == 0) return;
      c_.resize(i + 1, 0);
    }
    c_[i] = v;
    trim();
  }

  PolyA operator+(const PolyA& o) const {
    PolyA r(*C_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = C_->add(coeff_packed(i), o.coeff_packed(i));
    r.trim();
    return r;
  }
  PolyA operator-(const PolyA& o) const {
    PolyA r(*C_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = C_->sub(coeff_packed(i), o.coeff_packed(i));
    r.trim();
    return r;
  }
  PolyA operator-() const {
    PolyA r(*this);
    for (auto& v : r.c_) v = C_->neg(v);
    return r;
  }

  PolyA operator*(const PolyA& o) const {
    if (is_zero() || o.is_zero()) return PolyA(*C_);
    PolyA r(*C_);
    if (C_->m() == 1) {
      // lazy-reduction schoolbook: products of residues < p^2 accumulate in
      // 64 bits for any desk-scale operand length
      const uint64_t p = C_->p();
      r.c_.assign(c_.size() + o.c_.size() - 1, 0);
      std::vector<uint64_t> acc(r.c_.size(), 0);
      for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const uint64_t a = c_[i];
        for (size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += a * o.c_[j];
      }
      for (size_t k = 0; k < acc.size(); ++k) r.c_[k] = acc[k] % p;
    } else {
      r.c_.assign(c_.size() + o.c_.size() - 1, 0);
      for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
          r.c_[i + j] = C_->add(r.c_[i + j], C_->mul(c_[i], o.c_[j]));
      }
    }
    r.trim();
    return r;
  }

  PolyA operator*(const Fq& s) const {
    PolyA r(*this);
    if (s.is_zero()) return PolyA(*C_);
    for (auto& v : r.c_) v = C_->mul(v, s.v);
    return r;
  }

  PolyA& operator+=(const PolyA& o) { return *this = *this + o; }
  PolyA& operator-=(const PolyA& o) { return *this = *this - o; }
  PolyA& operator*=(const PolyA& o) { return *this = *this * o; }

  bool operator==(const PolyA& o) const { return c_ == o.c_; }
  bool operator!=(const PolyA& o) const { return c_ != o.c_; }
  // (degree, lexicographic from the top coefficient down), used for the
  // canonical prime ordering
  bool operator<(const PolyA& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;)
      if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
  }

  // quotient and remainder; divisor must have invertible leading
  // coefficient.  The subtraction loop only visits the divisor's nonzero
  // coefficients (the twist-family divisors theta - theta^(q^j) are
  // two-term polynomials of large degree).
  std::pair<PolyA, PolyA> divrem(const PolyA& d) const {
    if (d.is_zero()) throw internal_error("polynomial division by zero");
    PolyA q(*C_), r(*this);
    if (r.deg() < d.deg()) return {q, r};
    const uint64_t dinv = C_->inv(d.c_.back());
    std::vector<std::pair<int, uint64_t>> dnz;
    for (int j = 0; j <= d.deg(); ++j)
      if (d.c_[j] != 0) dnz.push_back({j, d.c_[j]});
    q.c_.assign(r.deg() - d.deg() + 1, 0);
    for (int i = r.deg(); i >= d.deg(); --i) {
      uint64_t t = C_->mul(r.coeff_packed(i), dinv);
      if (t == 0) continue;
      q.c_[i - d.deg()] = t;
      for (auto& [j, dj] : dnz) r.c_[i - d.deg() + j] = C_->sub(r.c_[i - d.deg() + j], C_->mul(t, dj));
    }
    q.trim();
    r.trim();
    return {q, r};
  }
  PolyA operator/(const PolyA& d) const { return divrem(d).first; }
  PolyA operator%(const PolyA& d) const { return divrem(d).second; }
  bool divides(const PolyA& multiple) const { return multiple.divrem(*this).second.is_zero(); }

  PolyA make_monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
  }

  Fq eval(const Fq& x) const {
    Fq r(*C_, 0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + Fq(*C_, c_[i]);
    return r;
  }

  // formal derivative d/dtheta (the first hyperderivative on A)
  PolyA derivative() const {
    PolyA r(*C_);
    if (c_.size() <= 1) return r;
    r.c_.assign(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); ++i)
      r.c_[i - 1] = C_->mul(c_[i], C_->from_int(static_cast<int64_t>(i)));
    r.trim();
    return r;
  }

  // Frobenius twist theta -> theta^(q^n), n >= 0
  PolyA twist_n(long n) const {
    if (n < 0) throw guard_error("negative Frobenius twist is not supported on A");
    if (n == 0 || c_.size() <= 1) return *this;
    uint64_t step = 1;
    for (long i = 0; i < n; ++i) {
      if (step > (1ull << 40) / C_->q()) throw guard_error("twist exponent overflow");
      step *= C_->q();
    }
    PolyA r(*C_);
    r.c_.assign(static_cast<size_t>(deg()) * step + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * step] = c_[i];  // scalars are twist-fixed
    r.trim();
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
      if (i >= 1) {
        if (c_[i] != 1) s += "*";
        s += "theta";
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  const FqCtx* C_ = nullptr;
  std::vector<uint64_t> c_;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

inline PolyA zero_like(const PolyA& x) { return PolyA::zero(x.ctx()); }
inline PolyA one_like(const PolyA& x) { return PolyA::one(x.ctx()); }
inline bool is_zero(const PolyA& x) { return x.is_zero(); }
inline PolyA twist(const PolyA& x, long n) { return x.twist_n(n); }

inline PolyA gcd(PolyA a, PolyA b) {
  while (!b.is_zero()) {
    PolyA r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.make_monic();
}

inline PolyA pow(PolyA base, uint64_t e) {
  PolyA r = PolyA::one(base.ctx());
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Element of K = F_q(theta), kept reduced with a monic denominator so that
// equality is plain coefficient equality.
class RatK {
 public:
  RatK() = default;
  explicit RatK(PolyA n) : num_(std::move(n)), den_(PolyA::one(num_.ctx())) {}
  RatK(PolyA n, PolyA d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  static RatK zero(const FqCtx& C) { return RatK(PolyA::zero(C)); }
  static RatK one(const FqCtx& C) { return RatK(PolyA::one(C)); }

  const PolyA& num() const { return num_; }
  const PolyA& den() const { return den_; }
  const FqCtx& ctx() const { return num_.ctx(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.deg() == 0; }

  // deg = deg num - deg den (log_q of the infinity-adic norm); -INT_MAX-ish for 0
  int deg() const { return num_.is_zero() ? kZeroDeg : num_.deg() - den_.deg(); }
  static constexpr int kZeroDeg = -(1 << 28);

  RatK operator+(const RatK& o) const { return RatK(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  RatK operator-(const RatK& o) const { return RatK(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
  RatK operator*(const RatK& o) const { return RatK(num_ * o.num_, den_ * o.den_); }
  RatK operator-() const {
    RatK r(*this);
    r.num_ = -r.num_;
    return r;
  }
  RatK inv() const {
    if (num_.is_zero()) throw internal_error("division by zero in K");
    return RatK(den_, num_);
  }
  RatK operator/(const RatK& o) const { return *this * o.inv(); }
  RatK& operator+=(const RatK& o) { return *this = *this + o; }
  RatK& operator-=(const RatK& o) { return *this = *this - o; }
  RatK& operator*=(const RatK& o) { return *this = *this * o; }
  bool operator==(const RatK& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatK& o) const { return !(*this == o); }

  RatK twist_n(long n) const {
    RatK r;
    r.num_ = num_.twist_n(n);
    r.den_ = den_.twist_n(n);
    return r;  // twisting preserves reducedness and monicity
  }

  // first hyperderivative with respect to theta (quotient rule)
  RatK derivative() const {
    return RatK(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  PolyA num_, den_;

  void reduce() {
    if (den_.is_zero()) throw internal_error("zero denominator in K");
    if (num_.is_zero()) {
      den_ = PolyA::one(num_.ctx());
      return;
    }
    PolyA g = gcd(num_, den_);
    if (g.deg() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    Fq lc = den_.lead();
    if (!lc.is_one()) {
      Fq s = lc.inv();
      num_ = num_ * s;
      den_ = den_ * s;
    }
  }
};

inline RatK zero_like(const RatK& x) { return RatK::zero(x.ctx()); }
inline RatK one_like(const RatK& x) { return RatK::one(x.ctx()); }
inline bool is_zero(const RatK& x) { return x.is_zero(); }
inline RatK twist(const RatK& x, long n) { return x.twist_n(n); }

}  // namespace dgl
