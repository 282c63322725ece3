#pragma once

#include <random>

#include "dgl/bivar.hpp"
#include "dgl/matrix.hpp"
#include "dgl/poly.hpp"

namespace dgl::test {

inline PolyA random_poly(const FqCtx& C, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> dd(-1, max_deg);
  int d = dd(rng);
  PolyA f(C);
  if (d < 0) return f;
  std::uniform_int_distribution<uint64_t> dv(0, C.q() - 1);
  for (int i = 0; i < d; ++i) f.set_coeff(i, dv(rng));
  std::uniform_int_distribution<uint64_t> dl(1, C.q() - 1);
  f.set_coeff(d, dl(rng));
  return f;
}

inline PolyA random_nonzero_poly(const FqCtx& C, std::mt19937_64& rng, int max_deg) {
  PolyA f = random_poly(C, rng, max_deg);
  while (f.is_zero()) f = random_poly(C, rng, max_deg);
  return f;
}

inline PolyA random_monic(const FqCtx& C, std::mt19937_64& rng, int deg) {
  PolyA f(C);
  std::uniform_int_distribution<uint64_t> dv(0, C.q() - 1);
  for (int i = 0; i < deg; ++i) f.set_coeff(i, dv(rng));
  f.set_coeff(deg, 1);
  return f;
}

// Characteristic polynomial oracle independent of the Berkowitz path:
// fraction-field Gaussian-elimination determinants of c*I - M at deg(M)+1
// scalar points, then Lagrange interpolation over K.
inline RatK det_gauss(Mat<RatK> M) {
  const int n = M.rows();
  RatK det = RatK::one(M(0, 0).ctx());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!M(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return RatK::zero(M(0, 0).ctx());
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(M(piv, j), M(col, j));
      det = -det;
    }
    det *= M(col, col);
    RatK inv = M(col, col).inv();
    for (int r = col + 1; r < n; ++r) {
      if (M(r, col).is_zero()) continue;
      RatK factor = M(r, col) * inv;
      for (int j = col; j < n; ++j) M(r, j) -= factor * M(col, j);
    }
  }
  return det;
}

inline PolyT<RatK> charpoly_gauss_oracle(const Mat<PolyA>& M) {
  const FqCtx& C = M(0, 0).ctx();
  const int n = M.rows();
  // distinct evaluation points: the polynomial with base-q digit expansion k
  std::vector<RatK> pts;
  for (uint64_t k = 0; pts.size() <= static_cast<size_t>(n); ++k) {
    PolyA p(C);
    uint64_t v = k;
    for (int i = 0; v != 0; ++i, v /= C.q()) p.set_coeff(i, v % C.q());
    pts.push_back(RatK(p));
  }
  std::vector<RatK> vals;
  for (const RatK& c : pts) {
    Mat<RatK> S(n, n, RatK::zero(C));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        S(i, j) = -RatK(M(i, j));
        if (i == j) S(i, j) += c;
      }
    vals.push_back(det_gauss(S));
  }
  // Lagrange interpolation
  PolyT<RatK> result(RatK::zero(C));
  PolyT<RatK> X = PolyT<RatK>::t(RatK::zero(C));
  for (size_t i = 0; i < pts.size(); ++i) {
    PolyT<RatK> li = PolyT<RatK>::constant(RatK::one(C));
    RatK denom = RatK::one(C);
    for (size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      li *= (X - PolyT<RatK>::constant(pts[j]));
      denom *= (pts[i] - pts[j]);
    }
    result += li * (vals[i] / denom);
  }
  return result;
}

}  // namespace dgl::test
