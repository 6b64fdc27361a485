#pragma once

#include <cstddef>
#include <vector>

#include "rbs/errors.hpp"
#include "rbs/scalar.hpp"

namespace rbs {

template <class K>
using Vec = std::vector<K>;

template <class K>
bool is_zero_vec(const Vec<K>& v) {
  for (const K& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class K>
Vec<K> add_vec(Vec<K> a, const Vec<K>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class K>
Vec<K> sub_vec(Vec<K> a, const Vec<K>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class K>
Vec<K> scale_vec(Vec<K> a, const K& c) {
  for (K& x : a) x *= c;
  return a;
}

// Dense row-major matrix over an exact scalar.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec<K> col(std::size_t j) const {
    Vec<K> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Vec<K> row(std::size_t i) const {
    return Vec<K>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const { return is_zero_vec(e_); }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    require_same_shape(a, b);
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    require_same_shape(a, b);
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] -= b.e_[i];
    return a;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (K& x : r.e_) x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw input_error("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (rbs::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Matrix operator*(const K& c, Matrix a) {
    for (K& x : a.e_) x *= c;
    return a;
  }

  Vec<K> apply(const Vec<K>& v) const {
    if (v.size() != cols_) throw input_error("matrix-vector shape mismatch");
    Vec<K> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!rbs::is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (!(a.e_[i] == b.e_[i])) return false;
    return true;
  }

  // Kronecker product with pair index (i, j) flattened as i*cols(b)+j.
  static Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (rbs::is_zero(a(i, j))) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
      }
    return r;
  }

 private:
  static void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw input_error("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> e_;
};

}  // namespace rbs
