#include "rlfont/segmentation.hpp"

namespace rlfont {

Profile vpp(const CompressedImage& image, VppStats* stats) {
  Profile profile(static_cast<Eigen::Index>(image.height()));
  std::uint64_t visited = 0;
  for (std::size_t r = 0; r < image.height(); ++r) {
    std::int64_t ink = 0;
    for (const RunPair& pair : image.row(r)) {
      ink += pair.black;
    }
    visited += image.row(r).size();
    profile(static_cast<Eigen::Index>(r)) = ink;
  }
  if (stats != nullptr) {
    stats->runs_visited += visited;
  }
  return profile;
}

Segmentation segment_lines(const Profile& profile, std::size_t min_height) {
  Segmentation result;
  const auto rows = static_cast<std::size_t>(profile.size());
  std::size_t i = 0;
  while (i < rows) {
    if (profile(static_cast<Eigen::Index>(i)) <= 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < rows && profile(static_cast<Eigen::Index>(i)) > 0) {
      ++i;
    }
    if (i - start >= min_height) {
      result.lines.push_back({start + 1, i});
    } else {
      ++result.discarded;
    }
  }
  return result;
}

CompressedImage extract_line(const CompressedImage& page, const LineBounds& bounds) {
  return extract_rows(page, bounds.first_row, bounds.last_row);
}

}  // namespace rlfont
