#pragma once

#include <filesystem>

#include "pprfcn/tensor.hpp"

namespace pprfcn {

// Binary tensor file: magic "PPRT", u32 little-endian rank, rank u32 extents,
// then raw little-endian float32 values, row-major.
void save_tensor(const Tensor& t, const std::filesystem::path& path);
Tensor load_tensor(const std::filesystem::path& path);

}  // namespace pprfcn
