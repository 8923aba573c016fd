#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "gentle/field.hpp"

namespace gentle {

// Dense exact linear algebra over a field F. The matrices coming out of
// projective presentations of string modules are tiny (a few dozen rows at
// most), so plain Gauss elimination is all we need.

template <typename F>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, F(0)) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.c_ == b.r_);
    Mat r(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const F& v = a(i, k);
        if (is_zero(v)) continue;
        for (std::size_t j = 0; j < b.c_; ++j) r(i, j) += v * b(k, j);
      }
    return r;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    assert(a.r_ == b.r_ && a.c_ == b.c_);
    Mat r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    assert(a.r_ == b.r_ && a.c_ == b.c_);
    Mat r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
  }

  Mat scaled(const F& s) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
  }

  Mat transpose() const {
    Mat t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

 private:
  std::size_t r_, c_;
  std::vector<F> a_;
};

// Row echelon reduction in place; returns pivot column indices.
template <typename F>
std::vector<std::size_t> rref(Mat<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(sel, j));
    F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      F f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename F>
std::size_t rank(Mat<F> m) {
  return rref(m).size();
}

// Basis of the right kernel, one column vector per basis element.
template <typename F>
Mat<F> kernel_basis(Mat<F> m) {
  std::size_t n = m.cols();
  std::vector<std::size_t> piv = rref(m);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  std::size_t k = n - piv.size();
  Mat<F> ker(n, k);
  std::size_t idx = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    ker(free, idx) = F(1);
    for (std::size_t pr = 0; pr < piv.size(); ++pr) ker(piv[pr], idx) = -m(pr, free);
    ++idx;
  }
  return ker;
}

// Solve m x = b for one particular solution; `ok` reports consistency.
template <typename F>
std::vector<F> solve(Mat<F> m, std::vector<F> b, bool& ok) {
  assert(m.rows() == b.size());
  Mat<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> piv = rref(aug);
  ok = true;
  std::vector<F> x(m.cols(), F(0));
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == m.cols()) { ok = false; return x; }
    x[piv[r]] = aug(r, m.cols());
  }
  return x;
}

}  // namespace gentle
