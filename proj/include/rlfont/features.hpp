#pragma once

#include "rlfont/rle.hpp"
#include "rlfont/segmentation.hpp"

#include <cstddef>
#include <cstdint>

namespace rlfont {

/// P'(i) = P(i+1) - P(i) for i = 1..m'-1. Throws DimensionError when the
/// profile has fewer than two rows.
Profile differential_profile(const Profile& profile);

/// 1-based rows of the strongest rise (m1) and strongest fall (m2).
struct Peaks {
  std::size_t m1 = 0;
  std::size_t m2 = 0;

  friend bool operator==(const Peaks&, const Peaks&) = default;
};

/// m1 = first argmax, m2 = last argmin, which gives the widest base band
/// on ties. Throws PeakError when there is no positive maximum, no negative
/// minimum, or the fall does not come after the rise.
Peaks find_peaks(const Profile& differential);

/// Horizontal extent of the uncompressed line, recovered from runs alone:
///
///   r = sum over row 1 of (w + b) - (min_i w(i,1) + max_i w(i,last))
///
/// where w(i,last) is the white run of the final pair of row i.
std::int64_t text_extent(const CompressedImage& line);

/// Compressed length: twice the pair count of the widest row.
std::int64_t compressed_length(const CompressedImage& line) noexcept;

struct LineFeatures {
  std::int64_t h = 0;  ///< line height m'
  std::int64_t b = 0;  ///< base height m2 - m1
  std::int64_t a = 0;  ///< ascender height m2
  std::int64_t d = 0;  ///< descender height m' - m1
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::int64_t l = 0;  ///< compressed length
  std::int64_t r = 0;  ///< uncompressed text extent
  double R = 0.0;      ///< l / r

  friend bool operator==(const LineFeatures&, const LineFeatures&) = default;
};

/// Heights come from the peaks of the differential profile of the line
/// closed by one blank row below it, so a line whose base band runs to its
/// last row (no descenders) still has a falling edge at m2 = m'.
/// Throws PeakError or ExtentError.
LineFeatures extract_features(const CompressedImage& line);

/// Same, from a precomputed profile; `r` and `l` are taken as given.
LineFeatures features_from_profile(const Profile& profile, std::int64_t r, std::int64_t l);

struct DensityReport {
  double line_density = 0.0;
  double base_density = 0.0;
  double ascender_density = 0.0;
  double descender_density = 0.0;
  double mhd = 0.0;  ///< percent
};

/// Mean of the first and last profile rows as a percentage of r.
double mhd(const Profile& profile, std::int64_t r);

DensityReport densities(const Profile& profile, const LineFeatures& features);
DensityReport densities(const CompressedImage& line, const LineFeatures& features);

}  // namespace rlfont
