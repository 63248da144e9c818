#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rlfont {

using RunLength = std::uint32_t;

/// One white run followed by one black run. Every compressed row is a
/// sequence of these, starting with a (possibly empty) white run.
struct RunPair {
  RunLength white = 0;
  RunLength black = 0;

  friend bool operator==(const RunPair&, const RunPair&) = default;
};

using RunRow = std::vector<RunPair>;

/// Binary raster, 1 = ink. Used as the oracle representation; the analysis
/// pipeline itself never decompresses.
class Bitmap {
 public:
  using Grid = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  /// All-white bitmap. Throws DimensionError on a non-positive side.
  Bitmap(Eigen::Index width, Eigen::Index height);

  /// Takes ownership of a grid whose entries must be 0 or 1.
  explicit Bitmap(Grid pixels);

  Eigen::Index width() const noexcept { return pixels_.cols(); }
  Eigen::Index height() const noexcept { return pixels_.rows(); }

  /// 0-based access.
  std::uint8_t operator()(Eigen::Index row, Eigen::Index col) const { return pixels_(row, col); }
  std::uint8_t& operator()(Eigen::Index row, Eigen::Index col) { return pixels_(row, col); }

  const Grid& pixels() const noexcept { return pixels_; }
  Grid& pixels() noexcept { return pixels_; }

  friend bool operator==(const Bitmap& lhs, const Bitmap& rhs) {
    return lhs.pixels_.rows() == rhs.pixels_.rows() && lhs.pixels_.cols() == rhs.pixels_.cols() &&
           lhs.pixels_ == rhs.pixels_;
  }

 private:
  Grid pixels_;
};

/// A page or text line as rows of alternating white/black run pairs.
///
/// Invariants, checked at construction:
///   - width > 0 and at least one row
///   - every row is nonempty and its runs sum to width
/// Rows may hold different numbers of pairs; a row ending on white carries
/// a trailing zero black run.
class CompressedImage {
 public:
  CompressedImage(std::uint32_t width, std::vector<RunRow> rows);

  std::uint32_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return rows_.size(); }

  const std::vector<RunRow>& rows() const noexcept { return rows_; }
  /// 0-based access.
  const RunRow& row(std::size_t index) const { return rows_[index]; }

  std::size_t total_pairs() const noexcept;
  std::size_t max_pairs() const noexcept;

  /// Fixed-shape view: every row padded with (0,0) pairs up to max_pairs().
  std::vector<RunRow> padded_rows() const;

  friend bool operator==(const CompressedImage&, const CompressedImage&) = default;

 private:
  std::uint32_t width_;
  std::vector<RunRow> rows_;
};

/// Largest side length accepted anywhere in the library.
inline constexpr std::uint64_t kMaxDimension = 2147483647ULL;

/// Checks the row-sum invariant of a single row; throws CorruptRowError
/// naming `row_number` (1-based).
void validate_row(const RunRow& row, std::uint32_t width, std::size_t row_number);

/// Encodes one bitmap row. The result starts with a white run and ends
/// with a black run, which is zero when the row ends on white.
RunRow encode_row(const Bitmap& bitmap, Eigen::Index row);

CompressedImage encode(const Bitmap& bitmap);

Bitmap decode(const CompressedImage& image);

/// Rows first..last (1-based, inclusive) as a new image of the same width.
CompressedImage extract_rows(const CompressedImage& image, std::size_t first, std::size_t last);

}  // namespace rlfont
