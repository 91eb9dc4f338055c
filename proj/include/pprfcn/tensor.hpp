#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pprfcn/errors.hpp"

namespace pprfcn {

/// Dense row-major float32 tensor. The canonical layouts in this library are
/// H x W x C for feature/score maps and N x K for score matrices.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape, float fill = 0.0f);
  static Tensor from_data(std::vector<int> shape, std::vector<float> data);

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int extent(int axis) const;
  std::int64_t numel() const { return static_cast<std::int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  std::span<float> values() { return data_; }
  std::span<const float> values() const { return data_; }
  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }

  float& operator[](std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }
  float operator[](std::int64_t i) const { return data_[static_cast<std::size_t>(i)]; }

  // 2-d accessor (rows x cols).
  float& at(int r, int c) { return data_[static_cast<std::size_t>(r) * shape_[1] + c]; }
  float at(int r, int c) const { return data_[static_cast<std::size_t>(r) * shape_[1] + c]; }

  // 3-d accessor (h, w, c) for the H x W x C layout.
  float& at(int h, int w, int c) {
    return data_[(static_cast<std::size_t>(h) * shape_[1] + w) * shape_[2] + c];
  }
  float at(int h, int w, int c) const {
    return data_[(static_cast<std::size_t>(h) * shape_[1] + w) * shape_[2] + c];
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;
  void fill(float v);

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

 private:
  std::vector<int> shape_;
  std::vector<float> data_;
};

/// Trainable tensor: value plus accumulated gradient and SGD momentum buffer,
/// all the same shape.
struct ParamTensor {
  Tensor value;
  Tensor grad;
  Tensor momentum;

  ParamTensor() = default;
  explicit ParamTensor(Tensor v)
      : value(std::move(v)), grad(Tensor(value.shape())), momentum(Tensor(value.shape())) {}

  void zero_grad() { grad.fill(0.0f); }
};

}  // namespace pprfcn
