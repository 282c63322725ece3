#pragma once

#include <vector>

#include "dgl/matrix.hpp"

namespace dgl {

enum class Side { Tau, Sigma };

// Element of Mat_l(R)[tau] or Mat_l(R)[sigma] subject to the twisted
// commutation rules tau*B = B^(1)*tau and sigma*B = B^(-1)*sigma.
template <class R>
class TwistedPoly {
 public:
  TwistedPoly() = default;
  TwistedPoly(Side side, int ell, const R& sample) : side_(side), ell_(ell), sample_(sample) {}

  static TwistedPoly constant(Side side, Mat<R> B) {
    TwistedPoly p(side, B.rows(), B(0, 0));
    p.c_.push_back(std::move(B));
    p.trim();
    return p;
  }
  static TwistedPoly zero(Side side, int ell, const R& sample) { return TwistedPoly(side, ell, sample); }
  // the generator tau (or sigma)
  static TwistedPoly generator(Side side, int ell, const R& sample) {
    TwistedPoly p(side, ell, sample);
    p.c_.push_back(Mat<R>::zero(ell, ell, sample));
    p.c_.push_back(Mat<R>::identity(ell, sample));
    return p;
  }

  Side side() const { return side_; }
  int ell() const { return ell_; }
  const R& sample() const { return sample_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_twisted() const { return c_.empty(); }

  Mat<R> coeff(int i) const {
    if (i >= 0 && i < static_cast<int>(c_.size())) return c_[i];
    return Mat<R>::zero(ell_, ell_, sample_);
  }
  // constant term with respect to tau/sigma (the "d" map)
  Mat<R> constant_term() const { return coeff(0); }

  void set_coeff(int i, Mat<R> B) {
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, Mat<R>::zero(ell_, ell_, sample_));
    c_[i] = std::move(B);
    trim();
  }

  TwistedPoly operator+(const TwistedPoly& o) const {
    require_compatible(o);
    TwistedPoly r(side_, ell_, sample_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Mat<R>::zero(ell_, ell_, sample_));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }
  TwistedPoly operator-(const TwistedPoly& o) const { return *this + (-o); }
  TwistedPoly operator-() const {
    TwistedPoly r(*this);
    for (auto& B : r.c_) B = -B;
    return r;
  }

  // (A tau^i)(B tau^j) = A B^(i) tau^(i+j); on the sigma side the inner
  // twist is by -i
  TwistedPoly operator*(const TwistedPoly& o) const {
    require_compatible(o);
    TwistedPoly r(side_, ell_, sample_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Mat<R>::zero(ell_, ell_, sample_));
    const long dir = side_ == Side::Tau ? 1 : -1;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero_mat()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j)
        r.c_[i + j] += c_[i] * twist(o.c_[j], dir * static_cast<long>(i));
    }
    r.trim();
    return r;
  }
  TwistedPoly& operator+=(const TwistedPoly& o) { return *this = *this + o; }
  TwistedPoly& operator*=(const TwistedPoly& o) { return *this = *this * o; }

  bool operator==(const TwistedPoly& o) const { return side_ == o.side_ && ell_ == o.ell_ && c_ == o.c_; }
  bool operator!=(const TwistedPoly& o) const { return !(*this == o); }

  // beta(x) = B_0 x + B_1 x^(1) + ... (tau side; sigma side twists by -i)
  std::vector<R> evaluate(const std::vector<R>& x) const {
    if (static_cast<int>(x.size()) != ell_) throw internal_error("twisted evaluation dimension mismatch");
    std::vector<R> out(ell_, zero_like(sample_));
    const long dir = side_ == Side::Tau ? 1 : -1;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero_mat()) continue;
      std::vector<R> xt;
      xt.reserve(x.size());
      for (const auto& e : x) xt.push_back(twist(e, dir * static_cast<long>(i)));
      std::vector<R> term = c_[i].apply(xt);
      for (int k = 0; k < ell_; ++k) out[k] += term[k];
    }
    return out;
  }

 private:
  Side side_ = Side::Tau;
  int ell_ = 0;
  R sample_;
  std::vector<Mat<R>> c_;

  void require_compatible(const TwistedPoly& o) const {
    if (side_ != o.side_) throw guard_error("twisted polynomial side mismatch");
    if (ell_ != o.ell_) throw guard_error("twisted polynomial dimension mismatch");
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero_mat()) c_.pop_back();
  }

  template <class S>
  friend TwistedPoly<S> ore_star(const TwistedPoly<S>& b);
};

// Ore anti-involution (sum b_i tau^i)^* = sum b_i^(-i) sigma^i extended to
// matrices by transpose of entry-wise star.  Requires a coefficient ring
// closed under the inverse twist (F_f, F_q).
template <class R>
TwistedPoly<R> ore_star(const TwistedPoly<R>& b) {
  Side flip = b.side() == Side::Tau ? Side::Sigma : Side::Tau;
  TwistedPoly<R> r(flip, b.ell(), b.sample());
  const long dir = b.side() == Side::Tau ? -1 : 1;
  r.c_.reserve(b.c_.size());
  for (size_t i = 0; i < b.c_.size(); ++i)
    r.c_.push_back(twist(b.c_[i], dir * static_cast<long>(i)).transposed());
  r.trim();
  return r;
}

}  // namespace dgl
