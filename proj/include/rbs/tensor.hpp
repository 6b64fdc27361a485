#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rbs/errors.hpp"
#include "rbs/scalar.hpp"

namespace rbs {

// Hard cap on dense tensor size; larger requests are refused.
inline constexpr std::size_t kMaxTensorEntries = 10'000'000;

// Dense tensor with lexicographic (row-major) flat layout: the last axis
// varies fastest.
template <class K>
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
    std::size_t n = 1;
    for (std::size_t d : shape_) {
      if (d == 0) throw input_error("tensor axis of extent zero");
      if (n > kMaxTensorEntries / d) throw input_error("tensor exceeds entry cap");
      n *= d;
    }
    strides_.assign(shape_.size(), 1);
    for (std::size_t a = shape_.size(); a-- > 1;) strides_[a - 1] = strides_[a] * shape_[a];
    e_.assign(n, K());
  }

  Tensor(std::initializer_list<std::size_t> shape)
      : Tensor(std::vector<std::size_t>(shape)) {}

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t order() const { return shape_.size(); }
  std::size_t size() const { return e_.size(); }

  std::size_t flat(const std::vector<std::size_t>& idx) const {
    std::size_t f = 0;
    for (std::size_t a = 0; a < shape_.size(); ++a) f += idx[a] * strides_[a];
    return f;
  }

  K& at(const std::vector<std::size_t>& idx) { return e_[flat(idx)]; }
  const K& at(const std::vector<std::size_t>& idx) const { return e_[flat(idx)]; }

  K& operator[](std::size_t f) { return e_[f]; }
  const K& operator[](std::size_t f) const { return e_[f]; }

  void unflatten(std::size_t f, std::vector<std::size_t>& idx) const {
    idx.resize(shape_.size());
    for (std::size_t a = 0; a < shape_.size(); ++a) {
      idx[a] = f / strides_[a];
      f %= strides_[a];
    }
  }

  bool is_zero() const {
    for (const K& x : e_)
      if (!rbs::is_zero(x)) return false;
    return true;
  }

  template <class F>
  void for_each_nonzero(F&& fn) const {
    std::vector<std::size_t> idx;
    for (std::size_t f = 0; f < e_.size(); ++f) {
      if (rbs::is_zero(e_[f])) continue;
      unflatten(f, idx);
      fn(idx, e_[f]);
    }
  }

  friend Tensor operator+(Tensor a, const Tensor& b) {
    if (a.shape_ != b.shape_) throw input_error("tensor shape mismatch");
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
    return a;
  }

  friend Tensor operator-(Tensor a, const Tensor& b) {
    if (a.shape_ != b.shape_) throw input_error("tensor shape mismatch");
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] -= b.e_[i];
    return a;
  }

  friend Tensor operator*(const K& c, Tensor a) {
    for (K& x : a.e_) x *= c;
    return a;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    if (a.shape_ != b.shape_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (!(a.e_[i] == b.e_[i])) return false;
    return true;
  }

 private:
  std::vector<std::size_t> shape_;
  std::vector<std::size_t> strides_;
  std::vector<K> e_;
};

}  // namespace rbs
