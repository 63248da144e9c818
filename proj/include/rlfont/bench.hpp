#pragma once

#include "rlfont/rle.hpp"
#include "rlfont/segmentation.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace rlfont {

/// Row ink counts of a raster, the decompressed-domain route to P(i).
Profile raster_vpp(const Bitmap& bitmap);

struct BenchResult {
  std::uint32_t width = 0;
  std::size_t height = 0;
  std::size_t iterations = 0;
  double compressed_ms = 0.0;  ///< mean per iteration, VPP from runs
  double raster_ms = 0.0;      ///< mean per iteration, decode + row sums
  std::uint64_t runs_visited = 0;  ///< one compressed pass
  std::size_t total_pairs = 0;
  std::size_t raster_bytes = 0;      ///< packed 1 bit per pixel
  std::size_t compressed_bytes = 0;  ///< RLD file size
  bool profiles_match = false;

  double compression_ratio() const noexcept {
    return compressed_bytes == 0 ? 0.0 : static_cast<double>(raster_bytes) / compressed_bytes;
  }
  double speedup() const noexcept { return compressed_ms <= 0.0 ? 0.0 : raster_ms / compressed_ms; }
};

/// Times both VPP routes over `iterations` runs each (at least 1).
BenchResult run_vpp_benchmark(const CompressedImage& image, std::size_t iterations);

std::string format_bench(const BenchResult& result);

}  // namespace rlfont
