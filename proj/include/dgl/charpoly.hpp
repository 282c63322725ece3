#pragma once

#include <vector>

#include "dgl/bivar.hpp"
#include "dgl/matrix.hpp"

namespace dgl {

// Division-free characteristic polynomial det(X*I - A) via the Berkowitz
// vector recurrence.  Works over any commutative ring element type; the
// coefficient rings here have characteristic p, so the integer-division
// tricks of Faddeev-LeVerrier are unavailable.
template <class T>
PolyT<T> charpoly_division_free(const Mat<T>& A) {
  if (A.rows() != A.cols()) throw internal_error("charpoly of a non-square matrix");
  const int n = A.rows();
  const T z = zero_like(A(0, 0));
  const T one = one_like(A(0, 0));
  if (n == 0) return PolyT<T>::constant(one);

  // V holds the charpoly coefficients of the leading principal submatrix,
  // highest degree first: V[0] = 1.
  std::vector<T> V = {one, -A(0, 0)};
  for (int i = 1; i < n; ++i) {
    // Toeplitz column for row/column i against the i x i principal block
    std::vector<T> c(static_cast<size_t>(i) + 2, z);
    c[0] = one;
    c[1] = -A(i, i);
    std::vector<T> w(static_cast<size_t>(i), z);
    for (int k = 0; k < i; ++k) w[k] = A(k, i);
    for (int k = 2; k <= i + 1; ++k) {
      T dot = z;
      for (int j = 0; j < i; ++j) dot += A(i, j) * w[j];
      c[k] = -dot;
      if (k <= i) {
        std::vector<T> w2(static_cast<size_t>(i), z);
        for (int r = 0; r < i; ++r) {
          T acc = z;
          for (int s = 0; s < i; ++s) acc += A(r, s) * w[s];
          w2[r] = acc;
        }
        w = std::move(w2);
      }
    }
    std::vector<T> Vn(static_cast<size_t>(i) + 2, z);
    for (size_t j = 0; j < Vn.size(); ++j)
      for (size_t k = 0; k <= j && k < c.size(); ++k)
        if (j - k < V.size()) Vn[j] += c[k] * V[j - k];
    V = std::move(Vn);
  }

  PolyT<T> out(z);
  for (int j = 0; j <= n; ++j) out.set_coeff(n - j, V[j]);
  return out;
}

template <class T>
T det_division_free(const Mat<T>& A) {
  PolyT<T> p = charpoly_division_free(A);
  T d = p.coeff(0);
  if (A.rows() % 2 == 1) d = -d;
  return d;
}

// companion matrix of a monic polynomial (eigenvalues = roots)
template <class T>
Mat<T> companion(const PolyT<T>& p) {
  const int n = p.deg();
  if (n < 1) throw internal_error("companion matrix needs degree >= 1");
  Mat<T> m = Mat<T>::zero(n, n, p.sample());
  for (int i = 1; i < n; ++i) m(i, i - 1) = one_like(p.sample());
  for (int i = 0; i < n; ++i) m(i, n - 1) = -p.coeff(i);
  return m;
}

// evaluate a polynomial at a square matrix
template <class T>
Mat<T> eval_at_matrix(const PolyT<T>& p, const Mat<T>& A) {
  Mat<T> r = Mat<T>::zero(A.rows(), A.cols(), A(0, 0));
  for (int i = p.deg(); i >= 0; --i) {
    r = r * A;
    for (int k = 0; k < A.rows(); ++k) r(k, k) += p.coeff(i);
  }
  return r;
}

}  // namespace dgl
