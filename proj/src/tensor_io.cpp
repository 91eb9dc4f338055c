#include "pprfcn/tensor_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace pprfcn {

namespace {

constexpr char kMagic[4] = {'P', 'P', 'R', 'T'};
constexpr std::uint32_t kMaxRank = 16;

[[noreturn]] void fail(const std::filesystem::path& path, const char* what) {
  throw FormatError(std::string(what) + ": " + path.string());
}

}  // namespace

void save_tensor(const Tensor& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open tensor file for writing");
  out.write(kMagic, 4);
  const std::uint32_t rank = static_cast<std::uint32_t>(t.rank());
  out.write(reinterpret_cast<const char*>(&rank), sizeof(rank));
  for (int i = 0; i < t.rank(); ++i) {
    const std::uint32_t e = static_cast<std::uint32_t>(t.extent(i));
    out.write(reinterpret_cast<const char*>(&e), sizeof(e));
  }
  out.write(reinterpret_cast<const char*>(t.data()),
            static_cast<std::streamsize>(t.numel() * sizeof(float)));
  if (!out) fail(path, "short write on tensor file");
}

Tensor load_tensor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open tensor file");
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    fail(path, "bad tensor magic");
  }
  std::uint32_t rank = 0;
  if (!in.read(reinterpret_cast<char*>(&rank), sizeof(rank)) || rank == 0 || rank > kMaxRank) {
    fail(path, "bad tensor rank");
  }
  std::vector<int> shape(rank);
  std::int64_t numel = 1;
  for (std::uint32_t i = 0; i < rank; ++i) {
    std::uint32_t e = 0;
    if (!in.read(reinterpret_cast<char*>(&e), sizeof(e)) || e == 0) {
      fail(path, "bad tensor extent");
    }
    shape[i] = static_cast<int>(e);
    numel *= e;
  }
  std::vector<float> data(static_cast<std::size_t>(numel));
  if (!in.read(reinterpret_cast<char*>(data.data()),
               static_cast<std::streamsize>(data.size() * sizeof(float)))) {
    fail(path, "truncated tensor file");
  }
  // A well-formed file ends exactly at the data.
  char extra;
  if (in.read(&extra, 1)) fail(path, "trailing bytes in tensor file");
  return Tensor::from_data(std::move(shape), std::move(data));
}

}  // namespace pprfcn
