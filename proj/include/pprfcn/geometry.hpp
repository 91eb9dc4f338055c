#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "pprfcn/errors.hpp"

namespace pprfcn {

/// Axis-aligned region in feature-map pixel coordinates.
/// Half-open integer intervals: pixels [x1, x2) x [y1, y2).
struct Box {
  int x1, y1, x2, y2;

  Box(int x1_, int y1_, int x2_, int y2_) : x1(x1_), y1(y1_), x2(x2_), y2(y2_) {
    if (x1 >= x2 || y1 >= y2) throw DomainError("degenerate box");
  }

  int width() const { return x2 - x1; }
  int height() const { return y2 - y1; }
  std::int64_t area() const { return static_cast<std::int64_t>(width()) * height(); }
  bool contains(int x, int y) const { return x >= x1 && x < x2 && y >= y1 && y < y2; }

  friend bool operator==(const Box& a, const Box& b) = default;
};

std::int64_t intersection_area(const Box& a, const Box& b);
float iou(const Box& a, const Box& b);

/// Smallest box covering both inputs.
Box union_box(const Box& a, const Box& b);

struct GridCell {
  int row, col;
  friend bool operator==(const GridCell& a, const GridCell& b) = default;
};

/// Cell of the k x k grid over `box` that pixel (x, y) belongs to, or nullopt
/// for pixels outside the box. col = min(k-1, floor((x - x1) * k / width)),
/// row analogously.
std::optional<GridCell> grid_assign(const Box& box, int k, int x, int y);

/// Half-open pixel range [lo, hi) of grid index `idx` along an interval of
/// `extent` pixels starting at `origin`. May be empty for boxes with fewer
/// than k pixels per side.
struct PixelSpan {
  int lo, hi;
  int size() const { return hi - lo; }
  bool empty() const { return hi <= lo; }
};
PixelSpan cell_span(int origin, int extent, int k, int idx);

/// Greedy non-maximum suppression, descending score, ties broken by lower
/// index. Suppresses candidates with IoU > threshold against a kept box.
/// Returns kept indices in descending score order.
std::vector<int> nms(std::span<const Box> boxes, std::span<const float> scores,
                     float iou_threshold);

}  // namespace pprfcn
