#include "pprfcn/ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace pprfcn {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw DimensionError(msg);
}

}  // namespace

Tensor conv1x1(const Tensor& features, const Tensor& weights, const Tensor& bias) {
  require(features.rank() == 3, "conv1x1: features must be H x W x D");
  require(weights.rank() == 2, "conv1x1: weights must be D x K");
  require(bias.rank() == 1, "conv1x1: bias must be K");
  const int h = features.extent(0), w = features.extent(1), d = features.extent(2);
  const int k = weights.extent(1);
  require(weights.extent(0) == d, "conv1x1: weights first extent must equal feature depth");
  require(bias.extent(0) == k, "conv1x1: bias extent must equal weights second extent");

  Tensor out({h, w, k});
  const float* f = features.data();
  const float* wp = weights.data();
  const float* bp = bias.data();
  float* op = out.data();
  const std::int64_t pixels = static_cast<std::int64_t>(h) * w;
  std::vector<double> acc(static_cast<std::size_t>(k));
  for (std::int64_t p = 0; p < pixels; ++p) {
    for (int c = 0; c < k; ++c) acc[c] = bp[c];
    const float* fp = f + p * d;
    for (int dd = 0; dd < d; ++dd) {
      const double fv = fp[dd];
      const float* wrow = wp + static_cast<std::int64_t>(dd) * k;
      for (int c = 0; c < k; ++c) acc[c] += fv * wrow[c];
    }
    float* orow = op + p * k;
    for (int c = 0; c < k; ++c) orow[c] = static_cast<float>(acc[c]);
  }
  return out;
}

Tensor conv1x1_backward(const Tensor& upstream, const Tensor& features, ParamTensor& weights,
                        ParamTensor& bias, bool need_feature_grad) {
  require(upstream.rank() == 3, "conv1x1_backward: upstream must be H x W x K");
  const int h = features.extent(0), w = features.extent(1), d = features.extent(2);
  const int k = weights.value.extent(1);
  require(upstream.extent(0) == h && upstream.extent(1) == w && upstream.extent(2) == k,
          "conv1x1_backward: upstream shape inconsistent with forward");
  require(weights.value.extent(0) == d, "conv1x1_backward: weight shape inconsistent");
  require(bias.value.extent(0) == k, "conv1x1_backward: bias shape inconsistent");

  const std::int64_t pixels = static_cast<std::int64_t>(h) * w;
  const float* f = features.data();
  const float* up = upstream.data();

  std::vector<double> gw(static_cast<std::size_t>(d) * k, 0.0);
  std::vector<double> gb(static_cast<std::size_t>(k), 0.0);
  for (std::int64_t p = 0; p < pixels; ++p) {
    const float* urow = up + p * k;
    const float* frow = f + p * d;
    for (int c = 0; c < k; ++c) gb[c] += urow[c];
    for (int dd = 0; dd < d; ++dd) {
      const double fv = frow[dd];
      double* grow = gw.data() + static_cast<std::int64_t>(dd) * k;
      for (int c = 0; c < k; ++c) grow[c] += fv * urow[c];
    }
  }
  for (std::int64_t i = 0; i < weights.grad.numel(); ++i) {
    weights.grad[i] += static_cast<float>(gw[static_cast<std::size_t>(i)]);
  }
  for (int c = 0; c < k; ++c) bias.grad[c] += static_cast<float>(gb[static_cast<std::size_t>(c)]);

  if (!need_feature_grad) return Tensor();
  Tensor gf({h, w, d});
  float* gfp = gf.data();
  const float* wp = weights.value.data();
  for (std::int64_t p = 0; p < pixels; ++p) {
    const float* urow = up + p * k;
    float* grow = gfp + p * d;
    for (int dd = 0; dd < d; ++dd) {
      const float* wrow = wp + static_cast<std::int64_t>(dd) * k;
      double s = 0.0;
      for (int c = 0; c < k; ++c) s += static_cast<double>(urow[c]) * wrow[c];
      grow[dd] = static_cast<float>(s);
    }
  }
  return gf;
}

namespace {

// Decomposes a tensor into (outer, axis_len, inner) so that lines along `axis`
// are walked with stride `inner`.
struct AxisView {
  std::int64_t outer, len, inner;
};

AxisView axis_view(const Tensor& t, int axis) {
  if (axis < 0 || axis >= t.rank()) throw DomainError("softmax: axis out of range");
  AxisView v{1, t.extent(axis), 1};
  for (int i = 0; i < axis; ++i) v.outer *= t.extent(i);
  for (int i = axis + 1; i < t.rank(); ++i) v.inner *= t.extent(i);
  if (v.len <= 0) throw DomainError("softmax: empty axis");
  return v;
}

}  // namespace

Tensor softmax(const Tensor& values, int axis) {
  const AxisView v = axis_view(values, axis);
  Tensor out(values.shape());
  const float* in = values.data();
  float* op = out.data();
  for (std::int64_t o = 0; o < v.outer; ++o) {
    for (std::int64_t i = 0; i < v.inner; ++i) {
      const std::int64_t base = o * v.len * v.inner + i;
      float m = in[base];
      for (std::int64_t j = 1; j < v.len; ++j) m = std::max(m, in[base + j * v.inner]);
      double sum = 0.0;
      for (std::int64_t j = 0; j < v.len; ++j) {
        const float e = std::exp(in[base + j * v.inner] - m);
        op[base + j * v.inner] = e;
        sum += e;
      }
      const double inv = 1.0 / sum;
      for (std::int64_t j = 0; j < v.len; ++j) {
        op[base + j * v.inner] = static_cast<float>(op[base + j * v.inner] * inv);
      }
    }
  }
  return out;
}

Tensor softmax_backward(const Tensor& softmax_out, const Tensor& upstream, int axis) {
  if (!softmax_out.same_shape(upstream)) {
    throw DimensionError("softmax_backward: shape mismatch");
  }
  const AxisView v = axis_view(softmax_out, axis);
  Tensor grad(softmax_out.shape());
  const float* y = softmax_out.data();
  const float* dy = upstream.data();
  float* dx = grad.data();
  for (std::int64_t o = 0; o < v.outer; ++o) {
    for (std::int64_t i = 0; i < v.inner; ++i) {
      const std::int64_t base = o * v.len * v.inner + i;
      double dot = 0.0;
      for (std::int64_t j = 0; j < v.len; ++j) {
        const std::int64_t idx = base + j * v.inner;
        dot += static_cast<double>(dy[idx]) * y[idx];
      }
      for (std::int64_t j = 0; j < v.len; ++j) {
        const std::int64_t idx = base + j * v.inner;
        dx[idx] = static_cast<float>(y[idx] * (dy[idx] - dot));
      }
    }
  }
  return grad;
}

void sgd_momentum_step(std::span<ParamTensor* const> params, float lr, float momentum) {
  if (!(lr > 0.0f)) throw DomainError("sgd_momentum_step: lr must be positive");
  if (momentum < 0.0f || momentum >= 1.0f) {
    throw DomainError("sgd_momentum_step: momentum must be in [0, 1)");
  }
  for (ParamTensor* p : params) {
    const std::int64_t n = p->value.numel();
    for (std::int64_t i = 0; i < n; ++i) {
      p->momentum[i] = momentum * p->momentum[i] + p->grad[i];
      p->value[i] -= lr * p->momentum[i];
    }
    p->zero_grad();
  }
}

GradCheckResult finite_difference_check(const std::function<double()>& f, ParamTensor& param,
                                        float epsilon, float atol, float rtol) {
  if (!(epsilon > 0.0f)) throw DomainError("finite_difference_check: epsilon must be positive");
  GradCheckResult res;
  const std::int64_t n = param.value.numel();
  for (std::int64_t i = 0; i < n; ++i) {
    const float saved = param.value[i];
    param.value[i] = saved + epsilon;
    const double fp = f();
    param.value[i] = saved - epsilon;
    const double fm = f();
    param.value[i] = saved;
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      throw NumericError("finite_difference_check: loss is non-finite");
    }
    const double numeric = (fp - fm) / (2.0 * static_cast<double>(epsilon));
    const double analytic = param.grad[i];
    const double abs_err = std::abs(analytic - numeric);
    const double scale = std::max(std::abs(analytic), std::abs(numeric));
    res.max_abs_error = std::max(res.max_abs_error, static_cast<float>(abs_err));
    if (scale > 0.0) {
      res.max_rel_error = std::max(res.max_rel_error, static_cast<float>(abs_err / scale));
    }
    if (abs_err > std::max(static_cast<double>(atol), static_cast<double>(rtol) * scale)) {
      res.passed = false;
    }
  }
  return res;
}

}  // namespace pprfcn
