#pragma once

#include <utility>
#include <vector>

#include "dgl/poly.hpp"

namespace dgl {

// Dense polynomial in t with coefficients in an arbitrary ring T
// (T = PolyA gives A[t], T = RatK gives K[t]).
template <class T>
class PolyT {
 public:
  PolyT() = default;
  explicit PolyT(T sample) : sample_(std::move(sample)) {}
  PolyT(T sample, std::vector<T> coeffs) : sample_(std::move(sample)), c_(std::move(coeffs)) { trim(); }

  static PolyT zero(const T& sample) { return PolyT(sample); }
  static PolyT constant(T v) {
    PolyT r(v);
    if (!is_zero(v)) r.c_ = {std::move(v)};
    return r;
  }
  static PolyT t(const T& sample) {
    PolyT r(sample);
    r.c_ = {zero_like(sample), one_like(sample)};
    return r;
  }

  const T& sample() const { return sample_; }
  bool is_zero_poly() const { return c_.empty(); }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero_like(sample_); }
  const std::vector<T>& coeffs() const { return c_; }

  void set_coeff(int i, T v) {
    if (i >= static_cast<int>(c_.size())) {
      if (is_zero(v)) return;
      c_.resize(i + 1, zero_like(sample_));
    }
    c_[i] = std::move(v);
    trim();
  }

  PolyT operator+(const PolyT& o) const {
    PolyT r(sample_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), zero_like(sample_));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }
  PolyT operator-(const PolyT& o) const {
    PolyT r(sample_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), zero_like(sample_));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }
  PolyT operator-() const {
    PolyT r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }
  PolyT operator*(const PolyT& o) const {
    PolyT r(sample_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, zero_like(sample_));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (is_zero(c_[i])) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
  }
  PolyT operator*(const T& s) const {
    if (is_zero(s)) return PolyT(sample_);
    PolyT r(*this);
    for (auto& v : r.c_) v = v * s;
    r.trim();
    return r;
  }
  PolyT& operator+=(const PolyT& o) { return *this = *this + o; }
  PolyT& operator-=(const PolyT& o) { return *this = *this - o; }
  PolyT& operator*=(const PolyT& o) { return *this = *this * o; }
  bool operator==(const PolyT& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }
  bool operator!=(const PolyT& o) const { return !(*this == o); }

  T eval(const T& x) const {
    T r = zero_like(sample_);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  // formal d/dt
  PolyT derivative_t() const {
    PolyT r(sample_);
    if (c_.size() <= 1) return r;
    r.c_.assign(c_.size() - 1, zero_like(sample_));
    for (size_t i = 1; i < c_.size(); ++i) {
      T k = zero_like(sample_);
      for (size_t j = 0; j < i; ++j) k = k + one_like(sample_);
      r.c_[i - 1] = c_[i] * k;
    }
    r.trim();
    return r;
  }

 private:
  T sample_;
  std::vector<T> c_;

  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
};

template <class T>
PolyT<T> zero_like(const PolyT<T>& x) {
  return PolyT<T>::zero(x.sample());
}
template <class T>
PolyT<T> one_like(const PolyT<T>& x) {
  return PolyT<T>::constant(one_like(x.sample()));
}
template <class T>
bool is_zero(const PolyT<T>& x) {
  return x.is_zero_poly();
}

using PolyAt = PolyT<PolyA>;  // A[t]

inline PolyAt twist(const PolyAt& x, long n) {
  // theta -> theta^(q^n) on the coefficients; t is fixed
  PolyAt r = x;
  std::vector<PolyA> cs(x.coeffs());
  for (auto& c : cs) c = c.twist_n(n);
  return PolyAt(x.sample(), std::move(cs));
}

// coefficient-wise d/dtheta
inline PolyAt derivative_theta(const PolyAt& x) {
  std::vector<PolyA> cs(x.coeffs());
  for (auto& c : cs) c = c.derivative();
  return PolyAt(x.sample(), std::move(cs));
}

// Element of F_q(theta)(t) as a quotient of A[t]-polynomials.  Not kept in a
// canonical reduced form (bivariate gcds are avoided); equality is decided by
// cross-multiplication.
class BivarRat {
 public:
  BivarRat() = default;
  BivarRat(PolyAt n, PolyAt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero_poly()) throw internal_error("zero denominator in K(t)");
    normalize_zero();
  }
  explicit BivarRat(PolyAt n) : num_(std::move(n)), den_(one_like(num_)) {}

  static BivarRat zero(const FqCtx& C) { return BivarRat(PolyAt::zero(PolyA::zero(C))); }
  static BivarRat one(const FqCtx& C) { return BivarRat(PolyAt::constant(PolyA::one(C))); }
  static BivarRat t(const FqCtx& C) { return BivarRat(PolyAt::t(PolyA::zero(C))); }
  static BivarRat from_ratk(const RatK& x) {
    return BivarRat(PolyAt::constant(x.num()), PolyAt::constant(x.den()));
  }

  const PolyAt& num() const { return num_; }
  const PolyAt& den() const { return den_; }
  bool is_zero_rat() const { return num_.is_zero_poly(); }

  BivarRat operator+(const BivarRat& o) const { return BivarRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  BivarRat operator-(const BivarRat& o) const { return BivarRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
  BivarRat operator*(const BivarRat& o) const { return BivarRat(num_ * o.num_, den_ * o.den_); }
  BivarRat operator-() const { return BivarRat(-num_, den_); }
  BivarRat inv() const {
    if (num_.is_zero_poly()) throw internal_error("division by zero in K(t)");
    return BivarRat(den_, num_);
  }
  BivarRat operator/(const BivarRat& o) const { return *this * o.inv(); }
  BivarRat& operator+=(const BivarRat& o) { return *this = *this + o; }
  BivarRat& operator*=(const BivarRat& o) { return *this = *this * o; }

  bool operator==(const BivarRat& o) const { return (num_ * o.den_) == (o.num_ * den_); }
  bool operator!=(const BivarRat& o) const { return !(*this == o); }

  BivarRat twist_n(long n) const { return BivarRat(twist(num_, n), twist(den_, n)); }

  BivarRat derivative_t() const {
    return BivarRat(num_.derivative_t() * den_ - num_ * den_.derivative_t(), den_ * den_);
  }
  BivarRat derivative_theta() const {
    return BivarRat(dgl::derivative_theta(num_) * den_ - num_ * dgl::derivative_theta(den_), den_ * den_);
  }

  // evaluation t = x in K; the denominator must not vanish there
  RatK eval_t(const RatK& x) const {
    RatK n = eval_poly(num_, x), d = eval_poly(den_, x);
    if (d.is_zero()) throw guard_error("K(t) evaluation hits a pole");
    return n / d;
  }
  RatK eval_t_theta() const {
    const FqCtx& C = num_.sample().ctx();
    return eval_t(RatK(PolyA::theta(C)));
  }

 private:
  PolyAt num_, den_;

  static RatK eval_poly(const PolyAt& p, const RatK& x) {
    RatK r = RatK::zero(p.sample().ctx());
    for (int i = p.deg(); i >= 0; --i) r = r * x + RatK(p.coeff(i));
    return r;
  }

  void normalize_zero() {
    if (num_.is_zero_poly()) den_ = one_like(num_);
  }
};

inline BivarRat zero_like(const BivarRat& x) { return BivarRat(zero_like(x.num()), one_like(x.num())); }
inline BivarRat one_like(const BivarRat& x) { return BivarRat(one_like(x.num()), one_like(x.num())); }
inline bool is_zero(const BivarRat& x) { return x.is_zero_rat(); }
inline BivarRat twist(const BivarRat& x, long n) { return x.twist_n(n); }

}  // namespace dgl
