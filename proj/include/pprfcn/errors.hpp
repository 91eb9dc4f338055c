#pragma once

#include <stdexcept>

namespace pprfcn {

// Shape or extent disagreement between tensors/matrices.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain (empty softmax axis,
// box off the feature map, degenerate box, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// API misuse, e.g. a subject-role map passed where an object-role map is required.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed file: bad magic, truncation, dangling manifest reference.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Impossible run configuration (e.g. objects larger than the canvas).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite value where a finite one is required.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pprfcn
