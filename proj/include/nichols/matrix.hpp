#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nichols/cyclotomic.hpp"

namespace nichols {

using RootVec = std::vector<int64_t>;

// Dense row-major matrix.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols, const T& fill = T()) : r_(rows), c_(cols), d_(rows * cols, fill) {}

  static Mat identity(size_t n) {
    Mat m(n, n, T(0));
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  T& operator()(size_t i, size_t j) { return d_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }

  Mat transpose() const {
    Mat t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat p(a.r_, b.c_, T(0));
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        if (a(i, k) == 0) continue;
        for (size_t j = 0; j < b.c_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

  friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_; }

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<T> d_;
};

using IntMat = Mat<Integer>;
using RatMat = Mat<Rational>;
using SmallMat = Mat<int64_t>;

}  // namespace nichols
