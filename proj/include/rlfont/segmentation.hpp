#pragma once

#include "rlfont/rle.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rlfont {

/// Ink pixels per row, P(i). Entry 0 holds row 1.
using Profile = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

struct VppStats {
  std::uint64_t runs_visited = 0;
};

/// Vertical projection profile summed straight from the black runs; each
/// run pair is visited once. When `stats` is given the visits are counted.
Profile vpp(const CompressedImage& image, VppStats* stats = nullptr);

/// 1-based inclusive row range of one text line.
struct LineBounds {
  std::size_t first_row = 0;
  std::size_t last_row = 0;

  std::size_t height() const noexcept { return last_row - first_row + 1; }

  friend bool operator==(const LineBounds&, const LineBounds&) = default;
};

struct Segmentation {
  std::vector<LineBounds> lines;
  /// Inked row runs shorter than the minimum height.
  std::size_t discarded = 0;
};

/// Maximal runs of rows with P(i) > 0, top to bottom, keeping those at
/// least `min_height` rows tall.
Segmentation segment_lines(const Profile& profile, std::size_t min_height = 3);

/// The compressed data of one text line. Throws BoundsError when the
/// bounds fall outside the page.
CompressedImage extract_line(const CompressedImage& page, const LineBounds& bounds);

}  // namespace rlfont
