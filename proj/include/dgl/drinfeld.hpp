#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "dgl/residue.hpp"
#include "dgl/twisted.hpp"

namespace dgl {

// Drinfeld module phi_t = theta + kappa_1 tau + ... + kappa_r tau^r over A.
class DrinfeldModule {
 public:
  DrinfeldModule(const FqCtx& C, std::vector<PolyA> kappa) : C_(&C), kappa_(std::move(kappa)) {
    if (kappa_.empty() || kappa_.back().is_zero()) throw config_error("Drinfeld module needs kappa_r != 0");
  }

  const FqCtx& ctx() const { return *C_; }
  int rank() const { return static_cast<int>(kappa_.size()); }
  // kappa_i for 1 <= i <= r
  const PolyA& kappa(int i) const { return kappa_[i - 1]; }
  bool everywhere_good() const { return kappa_.back().deg() == 0; }

  // phi_t as a twisted polynomial (1x1 matrices over A)
  TwistedPoly<PolyA> action_t() const {
    TwistedPoly<PolyA> p(Side::Tau, 1, PolyA::zero(*C_));
    p.set_coeff(0, mat1(PolyA::theta(*C_)));
    for (int i = 1; i <= rank(); ++i) p.set_coeff(i, mat1(kappa_[i - 1]));
    return p;
  }

  // phi_a for a in F_q[t]; the argument's variable is read as t
  TwistedPoly<PolyA> action(const PolyA& a_in_t) const {
    TwistedPoly<PolyA> r = TwistedPoly<PolyA>::zero(Side::Tau, 1, PolyA::zero(*C_));
    TwistedPoly<PolyA> power = TwistedPoly<PolyA>::constant(Side::Tau, mat1(PolyA::one(*C_)));
    TwistedPoly<PolyA> pt = action_t();
    for (int i = 0; i <= a_in_t.deg(); ++i) {
      if (a_in_t.coeff_packed(i) != 0) {
        Fq s(*C_, a_in_t.coeff_packed(i));
        TwistedPoly<PolyA> term = power;
        for (int k = 0; k <= term.deg(); ++k) term.set_coeff(k, term.coeff(k) * PolyA::constant(*C_, s.v));
        r += term;
      }
      if (i < a_in_t.deg()) power *= pt;
    }
    return r;
  }

  // reduction mod f as a twisted polynomial over F_f
  TwistedPoly<FfElem> reduce(const std::shared_ptr<const ResidueCtx>& R) const {
    FfElem z = FfElem::raw(R, PolyA::zero(*C_));
    TwistedPoly<FfElem> p(Side::Tau, 1, z);
    Mat<FfElem> m0(1, 1, FfElem(R, PolyA::theta(*C_)));
    p.set_coeff(0, m0);
    for (int i = 1; i <= rank(); ++i) {
      Mat<FfElem> mi(1, 1, FfElem(R, kappa_[i - 1]));
      p.set_coeff(i, mi);
    }
    return p;
  }

  // chi_phi(a) = ((-1)^(r+1) kappa_r)^(deg a) for monic a
  Fq chi(const PolyA& a) const {
    if (!a.is_monic()) throw guard_error("chi is defined on monic polynomials");
    return chi_unit().pow(static_cast<uint64_t>(a.deg()));
  }
  Fq chi_bar(const PolyA& a) const { return chi(a).inv(); }
  // the unit ((-1)^(r+1) kappa_r)
  Fq chi_unit() const {
    if (!everywhere_good()) throw guard_error("chi requires everywhere good reduction");
    Fq u(*C_, kappa_.back().coeff_packed(0));
    if (rank() % 2 == 0) u = -u;
    return u;
  }

  // exponent of the convergence radius of Log_phi: R = |theta|^e with
  // e = -max{(deg kappa_i - q^i) / (q^i - 1)}, as an exact fraction
  std::pair<long, long> log_radius_exponent() const {
    long bn = 0, bd = 1;  // current max, as bn/bd
    bool first = true;
    uint64_t qi = 1;
    for (int i = 1; i <= rank(); ++i) {
      qi *= C_->q();
      if (kappa_[i - 1].is_zero()) continue;
      long n = kappa_[i - 1].deg() - static_cast<long>(qi);
      long d = static_cast<long>(qi) - 1;
      if (first || n * bd > bn * d) {
        bn = n;
        bd = d;
        first = false;
      }
    }
    long g = std::gcd(std::abs(bn), bd);
    if (g > 1) {
      bn /= g;
      bd /= g;
    }
    return {-bn, bd};
  }

  bool operator==(const DrinfeldModule& o) const { return kappa_ == o.kappa_; }

 private:
  const FqCtx* C_;
  std::vector<PolyA> kappa_;

  Mat<PolyA> mat1(PolyA v) const {
    Mat<PolyA> m(1, 1, PolyA::zero(*C_));
    m(0, 0) = std::move(v);
    return m;
  }
};

inline DrinfeldModule carlitz(const FqCtx& C) { return DrinfeldModule(C, {PolyA::one(C)}); }

}  // namespace dgl
