#pragma once

#include <memory>
#include <utility>

#include "dgl/irreducibles.hpp"
#include "dgl/poly.hpp"

namespace dgl {

// F_f = A/fA for f monic irreducible of degree d.
struct ResidueCtx {
  PolyA f;
  int d;
  ResidueCtx(PolyA modulus) : f(std::move(modulus)), d(f.deg()) {
    if (!f.is_monic() || !is_irreducible(f)) throw guard_error("residue field modulus must be monic irreducible");
  }
  const FqCtx& base() const { return f.ctx(); }
};

struct FfElem {
  std::shared_ptr<const ResidueCtx> R;
  PolyA v;

  FfElem() = default;
  FfElem(std::shared_ptr<const ResidueCtx> ctx, PolyA value) : R(std::move(ctx)), v(std::move(value) % R->f) {}

  static FfElem theta_bar(const std::shared_ptr<const ResidueCtx>& R) {
    return FfElem(R, PolyA::theta(R->base()));
  }

  bool is_zero() const { return v.is_zero(); }

  FfElem operator+(const FfElem& o) const { return raw(R, v + o.v); }
  FfElem operator-(const FfElem& o) const { return raw(R, v - o.v); }
  FfElem operator-() const { return raw(R, -v); }
  FfElem operator*(const FfElem& o) const { return FfElem(R, v * o.v); }
  FfElem& operator+=(const FfElem& o) { return *this = *this + o; }
  FfElem& operator-=(const FfElem& o) { return *this = *this - o; }
  FfElem& operator*=(const FfElem& o) { return *this = *this * o; }
  bool operator==(const FfElem& o) const { return v == o.v; }
  bool operator!=(const FfElem& o) const { return !(v == o.v); }

  FfElem inv() const {
    if (v.is_zero()) throw internal_error("division by zero in F_f");
    uint64_t e = 1;
    for (int i = 0; i < R->d; ++i) e *= R->base().q();
    return raw(R, powmod(v, e - 2, R->f));
  }
  FfElem operator/(const FfElem& o) const { return *this * o.inv(); }

  // Frobenius twist x -> x^(q^n); the automorphism group is cyclic of order
  // d, so negative twists reduce mod d
  FfElem twist_n(long n) const {
    long k = ((n % R->d) + R->d) % R->d;
    uint64_t e = 1;
    for (long i = 0; i < k; ++i) e *= R->base().q();
    return raw(R, powmod(v, e, R->f));
  }

  static FfElem raw(std::shared_ptr<const ResidueCtx> R, PolyA value) {
    FfElem x;
    x.R = std::move(R);
    x.v = std::move(value);
    return x;
  }
};

inline FfElem zero_like(const FfElem& x) { return FfElem::raw(x.R, PolyA::zero(x.R->base())); }
inline FfElem one_like(const FfElem& x) { return FfElem::raw(x.R, PolyA::one(x.R->base())); }
inline bool is_zero(const FfElem& x) { return x.is_zero(); }
inline FfElem twist(const FfElem& x, long n) { return x.twist_n(n); }

// enumerate all q^d elements (packed coefficient order)
inline std::vector<FfElem> all_elements(const std::shared_ptr<const ResidueCtx>& R) {
  const FqCtx& C = R->base();
  uint64_t count = 1;
  for (int i = 0; i < R->d; ++i) count *= C.q();
  std::vector<FfElem> out;
  out.reserve(count);
  for (uint64_t n = 0; n < count; ++n) {
    PolyA g(C);
    uint64_t v = n;
    for (int i = 0; i < R->d; ++i) {
      g.set_coeff(i, v % C.q());
      v /= C.q();
    }
    out.push_back(FfElem::raw(R, std::move(g)));
  }
  return out;
}

}  // namespace dgl
