#include "pprfcn/tensor.hpp"

#include <cmath>
#include <string>

namespace pprfcn {

namespace {

std::int64_t checked_numel(const std::vector<int>& shape) {
  std::int64_t n = 1;
  for (int e : shape) {
    if (e <= 0) throw DimensionError("tensor extents must be positive");
    n *= e;
  }
  return n;
}

}  // namespace

Tensor::Tensor(std::vector<int> shape, float fill) : shape_(std::move(shape)) {
  data_.assign(static_cast<std::size_t>(checked_numel(shape_)), fill);
}

Tensor Tensor::from_data(std::vector<int> shape, std::vector<float> data) {
  if (checked_numel(shape) != static_cast<std::int64_t>(data.size())) {
    throw DimensionError("tensor data length does not match shape product");
  }
  Tensor t;
  t.shape_ = std::move(shape);
  t.data_ = std::move(data);
  return t;
}

int Tensor::extent(int axis) const {
  if (axis < 0 || axis >= rank()) {
    throw DimensionError("axis " + std::to_string(axis) + " out of range for rank " +
                         std::to_string(rank()));
  }
  return shape_[static_cast<std::size_t>(axis)];
}

bool Tensor::all_finite() const {
  for (float v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void Tensor::fill(float v) { data_.assign(data_.size(), v); }

}  // namespace pprfcn
