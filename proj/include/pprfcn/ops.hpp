#pragma once

#include <functional>
#include <span>

#include "pprfcn/tensor.hpp"

namespace pprfcn {

/// Per-pixel linear map: out[h,w,k] = sum_d features[h,w,d] * weights[d,k] + bias[k].
/// Equivalent to an (H*W) x D by D x K matrix product.
Tensor conv1x1(const Tensor& features, const Tensor& weights, const Tensor& bias);

/// Backward pass of conv1x1. Accumulates (+=) into weights.grad and bias.grad.
/// Returns the gradient w.r.t. features, or an empty tensor when
/// `need_feature_grad` is false (the feature map is not trainable here, so
/// callers on the training path skip that half of the work).
Tensor conv1x1_backward(const Tensor& upstream, const Tensor& features, ParamTensor& weights,
                        ParamTensor& bias, bool need_feature_grad = true);

/// Numerically stable softmax along `axis` (max subtraction before exp).
Tensor softmax(const Tensor& values, int axis);

/// Gradient of softmax: dx = y * (dy - sum(dy * y)) along `axis`,
/// where y = softmax(x, axis).
Tensor softmax_backward(const Tensor& softmax_out, const Tensor& upstream, int axis);

/// SGD with momentum: buffer <- momentum * buffer + grad; value <- value - lr * buffer.
/// Gradients are zeroed afterwards.
void sgd_momentum_step(std::span<ParamTensor* const> params, float lr, float momentum);

struct GradCheckResult {
  float max_abs_error = 0.0f;  // max |analytic - numeric|
  float max_rel_error = 0.0f;  // max |analytic - numeric| / max(|analytic|, |numeric|)
  // true iff |a - n| <= max(atol, rtol * max(|a|, |n|)) for every element
  bool passed = true;
};

/// Central-difference check of the analytic gradient stored in `param.grad`
/// against the scalar loss `f` (which must read `param.value`). The parameter
/// value is restored on exit. Throws NumericError if `f` is non-finite.
GradCheckResult finite_difference_check(const std::function<double()>& f, ParamTensor& param,
                                        float epsilon, float atol = 1e-3f, float rtol = 1e-2f);

}  // namespace pprfcn
