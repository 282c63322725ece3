#pragma once
#include <utility>

#include <initializer_list>
#include <utility>
#include <vector>

#include "dgl/fq.hpp"

namespace dgl {

// Dense matrix over a self-contained ring element type.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, const T& fill) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols, fill) {}

  static Mat identity(int n, const T& sample) {
    Mat m(n, n, zero_like(sample));
    for (int i = 0; i < n; ++i) m(i, i) = one_like(sample);
    return m;
  }
  static Mat zero(int rows, int cols, const T& sample) { return Mat(rows, cols, zero_like(sample)); }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

  bool is_zero_mat() const {
    for (const auto& x : d_)
      if (!is_zero(x)) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    Mat m(*this);
    for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] + o.d_[i];
    return m;
  }
  Mat operator-(const Mat& o) const {
    Mat m(*this);
    for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] - o.d_[i];
    return m;
  }
  Mat operator-() const {
    Mat m(*this);
    for (auto& x : m.d_) x = -x;
    return m;
  }
  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw internal_error("matrix dimension mismatch");
    const T& s = d_.empty() ? o.d_.front() : d_.front();
    Mat m(r_, o.c_, zero_like(s));
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (int j = 0; j < o.c_; ++j) m(i, j) += a * o(k, j);
      }
    return m;
  }
  Mat operator*(const T& s) const {
    Mat m(*this);
    for (auto& x : m.d_) x = x * s;
    return m;
  }
  Mat& operator+=(const Mat& o) { return *this = *this + o; }
  Mat& operator-=(const Mat& o) { return *this = *this - o; }

  bool operator==(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < d_.size(); ++i)
      if (!(d_[i] == o.d_[i])) return false;
    return true;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transposed() const {
    Mat m(c_, r_, d_.front());
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out;
    out.reserve(r_);
    for (int i = 0; i < r_; ++i) {
      T acc = zero_like(v.front());
      for (int j = 0; j < c_; ++j) acc += (*this)(i, j) * v[j];
      out.push_back(std::move(acc));
    }
    return out;
  }

  template <class F>
  auto map(F&& f) const -> Mat<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    Mat<U> m(r_, c_, f(d_.front()));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> d_;
};

template <class T>
Mat<T> twist(const Mat<T>& m, long n) {
  return m.map([n](const T& x) { return twist(x, n); });
}

// Kronecker product in the row-major lexicographic basis.
template <class T>
Mat<T> kronecker(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> m(a.rows() * b.rows(), a.cols() * b.cols(), zero_like(a(0, 0)));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return m;
}

}  // namespace dgl
