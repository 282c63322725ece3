#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dgl/poly.hpp"

namespace dgl {

// Truncated element of K_inf = F_q((1/theta)) with absolute precision
// tracking: coefficients of theta^j are stored for top >= j >= -prec and the
// tail below theta^(-prec) is unknown.  Values coming from polynomials keep
// prec = kExact.  The leading stored coefficient is nonzero unless the value
// is zero to its precision (empty coefficient vector).
class LaurentKInf {
 public:
  static constexpr int kExact = 1 << 28;
  static constexpr int kZeroDeg = RatK::kZeroDeg;

  LaurentKInf() = default;
  explicit LaurentKInf(const FqCtx& C, int prec = kExact) : C_(&C), prec_(prec) {}

  static LaurentKInf from_poly(const PolyA& a) {
    LaurentKInf r(a.ctx(), kExact);
    r.top_ = a.deg();
    r.c_.resize(a.deg() + 1);
    for (int i = 0; i <= a.deg(); ++i) r.c_[i] = a.coeff_packed(a.deg() - i);
    return r;
  }

  // expansion of num/den, exact when the value is a polynomial or has a
  // monomial denominator, otherwise carrying absolute precision M
  static LaurentKInf expand(const RatK& x, int M) {
    if (x.is_polynomial()) return from_poly(x.num());
    const PolyA& den = x.den();
    bool monomial = true;
    for (int i = 0; i < den.deg(); ++i)
      if (den.coeff_packed(i) != 0) {
        monomial = false;
        break;
      }
    if (monomial) {
      LaurentKInf r = from_poly(x.num());
      r.top_ -= den.deg();
      return r;
    }
    LaurentKInf d = inv_of_poly(den, M + std::max(x.num().deg(), 0) + 1);
    LaurentKInf r = mul(from_poly(x.num()), d);
    r.truncate(M);
    return r;
  }

  // raw construction from a packed coefficient window (top exponent downward)
  static LaurentKInf from_window(const FqCtx& C, int top, std::vector<uint64_t> coeffs, int prec) {
    LaurentKInf r(C, prec);
    r.top_ = top;
    r.c_ = std::move(coeffs);
    r.normalize();
    return r;
  }

  // long-division inverse of a nonzero polynomial, to absolute precision M
  static LaurentKInf inv_of_poly(const PolyA& a, int M) {
    if (a.is_zero()) throw internal_error("inverting zero polynomial");
    const FqCtx& C = a.ctx();
    LaurentKInf r(C, M);
    const int d = a.deg();
    r.top_ = -d;
    if (M < -r.top_) {  // nothing representable
      r.top_ = -M - 1;
      return r;
    }
    const int n = M - d + 1;  // number of coefficients theta^(-d) .. theta^(-M)
    r.c_.assign(n, 0);
    const uint64_t lead_inv = C.inv(a.coeff_packed(d));
    for (int k = 0; k < n; ++k) {
      uint64_t s = k == 0 ? 1 : 0;
      // r_k = (delta_{k,0} - sum_{j=1..min(k,d)} a_{d-j} r_{k-j}) / a_d
      uint64_t acc = 0;
      for (int j = 1; j <= std::min(k, d); ++j) acc = C.add(acc, C.mul(a.coeff_packed(d - j), r.c_[k - j]));
      r.c_[k] = C.mul(C.sub(s, acc), lead_inv);
    }
    r.normalize();
    return r;
  }

  const FqCtx& ctx() const { return *C_; }
  int precision() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact; }
  bool is_zero_to_prec() const { return c_.empty(); }
  bool is_exact_zero() const { return c_.empty() && is_exact(); }

  // deg = log_q |.|; kZeroDeg when zero to precision
  int deg() const { return c_.empty() ? kZeroDeg : top_; }
  // upper bound on deg valid even for the unknown tail
  int deg_upper_bound() const { return c_.empty() ? (is_exact() ? kZeroDeg : -prec_ - 1) : top_; }
  Fq sign() const { return Fq(*C_, c_.empty() ? 0 : c_[0]); }

  uint64_t coeff_packed(int e) const {
    if (c_.empty() || e > top_ || e < top_ - static_cast<int>(c_.size()) + 1) return 0;
    return c_[top_ - e];
  }
  Fq coeff(int e) const { return Fq(*C_, coeff_packed(e)); }

  void truncate(int M) {
    if (M >= prec_) return;
    prec_ = M;
    if (!c_.empty()) {
      int lowest = top_ - static_cast<int>(c_.size()) + 1;
      if (lowest < -M) {
        int keep = top_ + M + 1;
        if (keep <= 0)
          c_.clear();
        else
          c_.resize(keep);
      }
    }
    normalize();
  }

  static LaurentKInf add(const LaurentKInf& a, const LaurentKInf& b) {
    const FqCtx& C = *a.C_;
    LaurentKInf r(C, std::min(a.prec_, b.prec_));
    int top = std::max(a.c_.empty() ? INT32_MIN : a.top_, b.c_.empty() ? INT32_MIN : b.top_);
    if (top == INT32_MIN) return r;
    int bot = r.is_exact() ? std::min(a.bottom(), b.bottom()) : -r.prec_;
    if (top < bot) return r;
    r.top_ = top;
    r.c_.assign(top - bot + 1, 0);
    for (int e = top; e >= bot; --e) r.c_[top - e] = C.add(a.coeff_packed(e), b.coeff_packed(e));
    r.normalize();
    return r;
  }

  static LaurentKInf sub(const LaurentKInf& a, const LaurentKInf& b) { return add(a, b.negated()); }

  LaurentKInf negated() const {
    LaurentKInf r(*this);
    for (auto& v : r.c_) v = C_->neg(v);
    return r;
  }

  static LaurentKInf mul(const LaurentKInf& a, const LaurentKInf& b) {
    const FqCtx& C = *a.C_;
    long prec = kExact;
    // unknown tails: a*U_b has degree <= deg a - prec_b - 1, symmetrically
    // for b*U_a, and U_a*U_b sits below both
    if (!b.is_exact() && a.deg_upper_bound() != kZeroDeg)
      prec = std::min<long>(prec, static_cast<long>(b.prec_) - a.deg_upper_bound());
    if (!a.is_exact() && b.deg_upper_bound() != kZeroDeg)
      prec = std::min<long>(prec, static_cast<long>(a.prec_) - b.deg_upper_bound());
    if (!a.is_exact() && !b.is_exact())
      prec = std::min<long>(prec, static_cast<long>(a.prec_) + b.prec_ + 1);
    LaurentKInf r(C, static_cast<int>(std::min<long>(prec, kExact)));
    if (a.c_.empty() || b.c_.empty()) return r;
    int top = a.top_ + b.top_;
    int bot = r.is_exact() ? a.bottom() + b.bottom() : std::max(-r.prec_, a.bottom() + b.bottom());
    r.top_ = top;
    r.c_.assign(top - bot + 1, 0);
    const size_t imax = std::min(a.c_.size(), r.c_.size());
    if (C.m() == 1) {
      const uint64_t p = C.p();
      std::vector<uint64_t> acc(r.c_.size(), 0);
      for (size_t i = 0; i < imax; ++i) {
        if (a.c_[i] == 0) continue;
        size_t jmax = std::min(b.c_.size(), r.c_.size() - i);
        for (size_t j = 0; j < jmax; ++j) acc[i + j] += a.c_[i] * b.c_[j];
      }
      for (size_t k = 0; k < acc.size(); ++k) r.c_[k] = acc[k] % p;
    } else {
      for (size_t i = 0; i < imax; ++i) {
        if (a.c_[i] == 0) continue;
        size_t jmax = std::min(b.c_.size(), r.c_.size() - i);
        for (size_t j = 0; j < jmax; ++j) r.c_[i + j] = C.add(r.c_[i + j], C.mul(a.c_[i], b.c_[j]));
      }
    }
    r.normalize();
    return r;
  }

  // inverse of a series that is nonzero to its precision.  target_prec is
  // used when the input is exact (an exact inverse is generally infinite).
  static LaurentKInf invert(const LaurentKInf& a, int target_prec = 64) {
    if (a.c_.empty()) throw guard_error("inverting a series that is zero to its precision");
    const FqCtx& C = *a.C_;
    int M = a.is_exact() ? target_prec : a.prec_ + 2 * a.top_;
    LaurentKInf r(C, M);
    r.top_ = -a.top_;
    int n = M + r.top_ + 1;  // coefficients theta^(-top) .. theta^(-M)
    if (n <= 0) {
      r.top_ = -M - 1;
      return r;
    }
    r.c_.assign(n, 0);
    uint64_t lead_inv = C.inv(a.c_[0]);
    for (int k = 0; k < n; ++k) {
      uint64_t acc = 0;
      for (int j = 1; j <= std::min<int>(k, static_cast<int>(a.c_.size()) - 1); ++j)
        acc = C.add(acc, C.mul(a.c_[j], r.c_[k - j]));
      r.c_[k] = C.mul(C.sub(k == 0 ? 1 : 0, acc), lead_inv);
    }
    r.normalize();
    return r;
  }

  LaurentKInf operator+(const LaurentKInf& o) const { return add(*this, o); }
  LaurentKInf operator-(const LaurentKInf& o) const { return sub(*this, o); }
  LaurentKInf operator*(const LaurentKInf& o) const { return mul(*this, o); }
  LaurentKInf& operator+=(const LaurentKInf& o) { return *this = add(*this, o); }
  LaurentKInf& operator-=(const LaurentKInf& o) { return *this = sub(*this, o); }
  LaurentKInf& operator*=(const LaurentKInf& o) { return *this = mul(*this, o); }

  // equality of all stored coefficients on the common known range
  static bool agree_to_precision(const LaurentKInf& a, const LaurentKInf& b) {
    LaurentKInf d = sub(a, b);
    return d.c_.empty();
  }

  // principal part (coefficients of theta^j, j >= 0) and the residual tail
  std::pair<PolyA, LaurentKInf> nearest_polynomial() const {
    PolyA p(*C_);
    for (int e = std::max(0, bottom()); e <= (c_.empty() ? -1 : top_); ++e) p.set_coeff(e, coeff_packed(e));
    LaurentKInf tail(*C_, prec_);
    int t = std::min(-1, c_.empty() ? -1 : top_);
    int bot = is_exact() ? bottom() : -prec_;
    if (!c_.empty() && bot <= -1) {
      tail.top_ = t;
      tail.c_.assign(t - bot + 1, 0);
      for (int e = t; e >= bot; --e) tail.c_[t - e] = coeff_packed(e);
      tail.normalize();
    }
    return {p, tail};
  }

  // first hyperderivative d/dtheta; precision drops by one
  LaurentKInf derivative() const {
    LaurentKInf r(*C_, is_exact() ? kExact : prec_ + 1);
    if (c_.empty()) return r;
    r.top_ = top_ - 1;
    r.c_.assign(c_.size(), 0);
    for (size_t i = 0; i < c_.size(); ++i) {
      int e = top_ - static_cast<int>(i);
      r.c_[i] = C_->mul(c_[i], C_->from_int(e));
    }
    r.normalize();
    return r;
  }

  std::string str() const {
    if (c_.empty()) return is_exact() ? "0" : "O(theta^-" + std::to_string(prec_ + 1) + ")";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      int e = top_ - static_cast<int>(i);
      if (!s.empty()) s += " + ";
      s += std::to_string(c_[i]);
      if (e != 0) s += "*theta^" + std::to_string(e);
    }
    if (s.empty()) s = "0";
    if (!is_exact()) s += " + O(theta^" + std::to_string(-prec_ - 1) + ")";
    return s;
  }

  int bottom() const { return c_.empty() ? (is_exact() ? 0 : -prec_) : top_ - static_cast<int>(c_.size()) + 1; }

  // raw access for serialization
  int top_exponent() const { return top_; }
  const std::vector<uint64_t>& raw_coeffs() const { return c_; }

 private:
  const FqCtx* C_ = nullptr;
  int top_ = 0;
  std::vector<uint64_t> c_;
  int prec_ = kExact;

  void normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      top_ -= static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (!is_exact() && !c_.empty()) {
      // drop stored coefficients below the precision floor
      int bot = top_ - static_cast<int>(c_.size()) + 1;
      if (bot < -prec_) {
        int keep = top_ + prec_ + 1;
        if (keep <= 0)
          c_.clear();
        else
          c_.resize(keep);
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
      }
    }
  }
};

}  // namespace dgl
