#include "rlfont/bench.hpp"

#include "rlfont/docio.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace rlfont {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

Profile raster_vpp(const Bitmap& bitmap) {
  return bitmap.pixels().cast<std::int64_t>().rowwise().sum();
}

BenchResult run_vpp_benchmark(const CompressedImage& image, std::size_t iterations) {
  iterations = std::max<std::size_t>(iterations, 1);
  BenchResult result;
  result.width = image.width();
  result.height = image.height();
  result.iterations = iterations;
  result.total_pairs = image.total_pairs();
  result.raster_bytes = (static_cast<std::size_t>(image.width()) + 7) / 8 * image.height();
  result.compressed_bytes = format_rldoc(image).size();

  VppStats stats;
  const Profile reference = vpp(image, &stats);
  result.runs_visited = stats.runs_visited;

  // Checksums keep the optimizer from discarding the timed work.
  std::int64_t sink = 0;
  auto start = Clock::now();
  for (std::size_t i = 0; i < iterations; ++i) {
    sink += vpp(image).sum();
  }
  result.compressed_ms = elapsed_ms(start) / static_cast<double>(iterations);

  Profile raster;
  start = Clock::now();
  for (std::size_t i = 0; i < iterations; ++i) {
    raster = raster_vpp(decode(image));
    sink -= raster.sum();
  }
  result.raster_ms = elapsed_ms(start) / static_cast<double>(iterations);

  result.profiles_match = sink == 0 && raster == reference;
  return result;
}

std::string format_bench(const BenchResult& r) {
  char line[128];
  std::ostringstream out;
  out << "# rlfont v1 bench\n";
  out << "metric\tvalue\n";
  out << "width\t" << r.width << "\nheight\t" << r.height << "\niterations\t" << r.iterations << '\n';
  std::snprintf(line, sizeof line, "compressed_vpp_ms\t%.4f\nraster_vpp_ms\t%.4f\nspeedup\t%.2f\n",
                r.compressed_ms, r.raster_ms, r.speedup());
  out << line;
  out << "runs_visited\t" << r.runs_visited << "\ntotal_pairs\t" << r.total_pairs << '\n';
  out << "raster_bytes\t" << r.raster_bytes << "\ncompressed_bytes\t" << r.compressed_bytes << '\n';
  std::snprintf(line, sizeof line, "compression_ratio\t%.2f\n", r.compression_ratio());
  out << line;
  out << "profiles_match\t" << (r.profiles_match ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace rlfont
