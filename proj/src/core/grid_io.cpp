#include "stencilforge/core/grid_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace stencilforge::core {

static_assert(std::endian::native == std::endian::little,
              "STGR I/O writes native byte order and expects a little-endian host");

namespace {

constexpr char kMagic[4] = {'S', 'T', 'G', 'R'};
constexpr std::uint8_t kVersion = 1;
constexpr std::uint8_t kDtypeF32 = 0;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw std::runtime_error(path.string() + ": " + what);
}

}  // namespace

void grid_write(const Grid& grid, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open for writing");
  out.write(kMagic, 4);
  const std::uint8_t header[4] = {kVersion, static_cast<std::uint8_t>(grid.dims),
                                  kDtypeF32, 0};
  out.write(reinterpret_cast<const char*>(header), 4);
  for (int a = 0; a < grid.dims; ++a) {
    const std::uint64_t e = static_cast<std::uint64_t>(grid.extents[a]);
    out.write(reinterpret_cast<const char*>(&e), sizeof(e));
  }
  out.write(reinterpret_cast<const char*>(grid.data.data()),
            static_cast<std::streamsize>(grid.data.size() * sizeof(float)));
  if (!out) fail(path, "write failed");
}

Grid grid_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open for reading");

  char magic[4] = {};
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) fail(path, "bad magic (expected STGR)");

  std::uint8_t header[4] = {};
  in.read(reinterpret_cast<char*>(header), 4);
  if (!in) fail(path, "truncated header");
  if (header[0] != kVersion) {
    fail(path, "unsupported version " + std::to_string(header[0]));
  }
  const int dims = header[1];
  if (dims != 2 && dims != 3) {
    fail(path, "unsupported dims " + std::to_string(dims));
  }
  if (header[2] != kDtypeF32) {
    fail(path, "unsupported dtype " + std::to_string(header[2]));
  }
  if (header[3] != 0) {
    fail(path, "nonzero reserved byte");
  }

  Extents extents{1, 1, 1};
  for (int a = 0; a < dims; ++a) {
    std::uint64_t e = 0;
    in.read(reinterpret_cast<char*>(&e), sizeof(e));
    if (!in) fail(path, "truncated extents");
    if (e == 0) fail(path, "zero extent in dimension " + std::to_string(a));
    extents[a] = static_cast<std::int64_t>(e);
  }

  Grid grid(dims, extents);
  in.read(reinterpret_cast<char*>(grid.data.data()),
          static_cast<std::streamsize>(grid.data.size() * sizeof(float)));
  if (in.gcount() != static_cast<std::streamsize>(grid.data.size() * sizeof(float))) {
    fail(path, "truncated payload");
  }
  return grid;
}

}  // namespace stencilforge::core
