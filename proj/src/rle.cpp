#include "rlfont/rle.hpp"

#include "rlfont/error.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace rlfont {

namespace {

void check_side(Eigen::Index side, const char* name) {
  if (side <= 0 || static_cast<std::uint64_t>(side) > kMaxDimension) {
    throw DimensionError(std::string("bitmap ") + name + " must be in [1, 2^31-1], got " +
                         std::to_string(side));
  }
}

}  // namespace

Bitmap::Bitmap(Eigen::Index width, Eigen::Index height) {
  check_side(width, "width");
  check_side(height, "height");
  pixels_ = Grid::Zero(height, width);
}

Bitmap::Bitmap(Grid pixels) : pixels_(std::move(pixels)) {
  check_side(pixels_.cols(), "width");
  check_side(pixels_.rows(), "height");
  if ((pixels_.array() > 1).any()) {
    throw DimensionError("bitmap pixels must be 0 or 1");
  }
}

void validate_row(const RunRow& row, std::uint32_t width, std::size_t row_number) {
  if (row.empty()) {
    throw CorruptRowError(row_number, "row has no run pairs");
  }
  std::uint64_t sum = 0;
  for (const RunPair& pair : row) {
    sum += static_cast<std::uint64_t>(pair.white) + pair.black;
  }
  if (sum != width) {
    throw CorruptRowError(row_number, "runs sum to " + std::to_string(sum) + ", expected width " +
                                          std::to_string(width));
  }
}

CompressedImage::CompressedImage(std::uint32_t width, std::vector<RunRow> rows)
    : width_(width), rows_(std::move(rows)) {
  if (width_ == 0 || width_ > kMaxDimension) {
    throw DimensionError("compressed image width must be in [1, 2^31-1]");
  }
  if (rows_.empty() || rows_.size() > kMaxDimension) {
    throw DimensionError("compressed image must have between 1 and 2^31-1 rows");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    validate_row(rows_[i], width_, i + 1);
  }
}

std::size_t CompressedImage::total_pairs() const noexcept {
  std::size_t total = 0;
  for (const RunRow& row : rows_) {
    total += row.size();
  }
  return total;
}

std::size_t CompressedImage::max_pairs() const noexcept {
  std::size_t widest = 0;
  for (const RunRow& row : rows_) {
    widest = std::max(widest, row.size());
  }
  return widest;
}

std::vector<RunRow> CompressedImage::padded_rows() const {
  const std::size_t widest = max_pairs();
  std::vector<RunRow> padded = rows_;
  for (RunRow& row : padded) {
    row.resize(widest, RunPair{0, 0});
  }
  return padded;
}

RunRow encode_row(const Bitmap& bitmap, Eigen::Index row) {
  RunRow runs;
  const Eigen::Index width = bitmap.width();
  Eigen::Index col = 0;
  while (col < width) {
    RunPair pair;
    while (col < width && bitmap(row, col) == 0) {
      ++pair.white;
      ++col;
    }
    while (col < width && bitmap(row, col) != 0) {
      ++pair.black;
      ++col;
    }
    runs.push_back(pair);
  }
  return runs;
}

CompressedImage encode(const Bitmap& bitmap) {
  std::vector<RunRow> rows;
  rows.reserve(static_cast<std::size_t>(bitmap.height()));
  for (Eigen::Index r = 0; r < bitmap.height(); ++r) {
    rows.push_back(encode_row(bitmap, r));
  }
  return CompressedImage(static_cast<std::uint32_t>(bitmap.width()), std::move(rows));
}

Bitmap decode(const CompressedImage& image) {
  Bitmap bitmap(static_cast<Eigen::Index>(image.width()), static_cast<Eigen::Index>(image.height()));
  for (std::size_t r = 0; r < image.height(); ++r) {
    const RunRow& row = image.row(r);
    validate_row(row, image.width(), r + 1);
    Eigen::Index col = 0;
    for (const RunPair& pair : row) {
      col += pair.white;
      bitmap.pixels().row(static_cast<Eigen::Index>(r)).segment(col, pair.black).setOnes();
      col += pair.black;
    }
  }
  return bitmap;
}

CompressedImage extract_rows(const CompressedImage& image, std::size_t first, std::size_t last) {
  if (first < 1 || first > last || last > image.height()) {
    throw BoundsError("row range " + std::to_string(first) + ".." + std::to_string(last) +
                      " outside 1.." + std::to_string(image.height()));
  }
  std::vector<RunRow> rows(image.rows().begin() + static_cast<std::ptrdiff_t>(first - 1),
                           image.rows().begin() + static_cast<std::ptrdiff_t>(last));
  return CompressedImage(image.width(), std::move(rows));
}

}  // namespace rlfont
