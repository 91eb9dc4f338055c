#include "pprfcn/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace pprfcn {

std::int64_t intersection_area(const Box& a, const Box& b) {
  const int ix = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
  const int iy = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  if (ix <= 0 || iy <= 0) return 0;
  return static_cast<std::int64_t>(ix) * iy;
}

float iou(const Box& a, const Box& b) {
  const std::int64_t inter = intersection_area(a, b);
  if (inter == 0) return 0.0f;
  const std::int64_t uni = a.area() + b.area() - inter;
  return static_cast<float>(static_cast<double>(inter) / static_cast<double>(uni));
}

Box union_box(const Box& a, const Box& b) {
  return Box(std::min(a.x1, b.x1), std::min(a.y1, b.y1), std::max(a.x2, b.x2),
             std::max(a.y2, b.y2));
}

std::optional<GridCell> grid_assign(const Box& box, int k, int x, int y) {
  if (k < 1) throw DomainError("grid_assign: k must be >= 1");
  if (!box.contains(x, y)) return std::nullopt;
  const int col = std::min(k - 1, static_cast<int>((static_cast<std::int64_t>(x - box.x1) * k) /
                                                   box.width()));
  const int row = std::min(k - 1, static_cast<int>((static_cast<std::int64_t>(y - box.y1) * k) /
                                                   box.height()));
  return GridCell{row, col};
}

PixelSpan cell_span(int origin, int extent, int k, int idx) {
  // Inverse of the floor-based assignment: index j covers
  // [ceil(j * extent / k), ceil((j+1) * extent / k)).
  const auto ceil_div = [](std::int64_t a, std::int64_t b) {
    return static_cast<int>((a + b - 1) / b);
  };
  const int lo = ceil_div(static_cast<std::int64_t>(idx) * extent, k);
  const int hi = ceil_div(static_cast<std::int64_t>(idx + 1) * extent, k);
  return PixelSpan{origin + lo, origin + hi};
}

std::vector<int> nms(std::span<const Box> boxes, std::span<const float> scores,
                     float iou_threshold) {
  if (boxes.size() != scores.size()) {
    throw DimensionError("nms: boxes and scores length mismatch");
  }
  std::vector<int> order(boxes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  std::vector<int> kept;
  for (int idx : order) {
    bool suppressed = false;
    for (int kp : kept) {
      if (iou(boxes[idx], boxes[kp]) > iou_threshold) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) kept.push_back(idx);
  }
  return kept;
}

}  // namespace pprfcn
