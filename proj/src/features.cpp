#include "rlfont/features.hpp"

#include "rlfont/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace rlfont {

Profile differential_profile(const Profile& profile) {
  const Eigen::Index n = profile.size();
  if (n < 2) {
    throw DimensionError("degenerate line: differential profile needs at least 2 rows, got " +
                         std::to_string(n));
  }
  return profile.tail(n - 1) - profile.head(n - 1);
}

Peaks find_peaks(const Profile& differential) {
  if (differential.size() == 0) {
    throw PeakError("empty differential profile");
  }
  Eigen::Index rise = 0;
  Eigen::Index fall = 0;
  for (Eigen::Index i = 1; i < differential.size(); ++i) {
    if (differential(i) > differential(rise)) {
      rise = i;
    }
    if (differential(i) <= differential(fall)) {
      fall = i;
    }
  }
  if (differential(rise) <= 0) {
    throw PeakError("no base band: differential profile has no positive maximum");
  }
  if (differential(fall) >= 0) {
    throw PeakError("no base band: differential profile has no negative minimum");
  }
  const Peaks peaks{static_cast<std::size_t>(rise) + 1, static_cast<std::size_t>(fall) + 1};
  if (peaks.m2 <= peaks.m1) {
    throw PeakError("inverted peaks: m1 = " + std::to_string(peaks.m1) +
                    ", m2 = " + std::to_string(peaks.m2));
  }
  return peaks;
}

std::int64_t text_extent(const CompressedImage& line) {
  std::int64_t row_sum = 0;
  for (const RunPair& pair : line.row(0)) {
    row_sum += static_cast<std::int64_t>(pair.white) + pair.black;
  }
  std::int64_t min_leading = std::numeric_limits<std::int64_t>::max();
  std::int64_t max_trailing = 0;
  for (const RunRow& row : line.rows()) {
    min_leading = std::min<std::int64_t>(min_leading, row.front().white);
    max_trailing = std::max<std::int64_t>(max_trailing, row.back().white);
  }
  return row_sum - (min_leading + max_trailing);
}

std::int64_t compressed_length(const CompressedImage& line) noexcept {
  return 2 * static_cast<std::int64_t>(line.max_pairs());
}

LineFeatures features_from_profile(const Profile& profile, std::int64_t r, std::int64_t l) {
  const Eigen::Index rows = profile.size();
  Profile closed(rows + 1);
  closed << profile, 0;
  const Peaks peaks = find_peaks(differential_profile(closed));
  if (r <= 0) {
    throw ExtentError("text extent r = " + std::to_string(r) + " is not positive");
  }

  LineFeatures f;
  f.h = rows;
  f.m1 = peaks.m1;
  f.m2 = peaks.m2;
  f.b = static_cast<std::int64_t>(peaks.m2 - peaks.m1);
  f.a = static_cast<std::int64_t>(peaks.m2);
  f.d = f.h - static_cast<std::int64_t>(peaks.m1);
  f.l = l;
  f.r = r;
  f.R = static_cast<double>(l) / static_cast<double>(r);
  return f;
}

LineFeatures extract_features(const CompressedImage& line) {
  return features_from_profile(vpp(line), text_extent(line), compressed_length(line));
}

double mhd(const Profile& profile, std::int64_t r) {
  if (r <= 0) {
    throw ExtentError("text extent r = " + std::to_string(r) + " is not positive");
  }
  const std::int64_t ends = profile(0) + profile(profile.size() - 1);
  return 100.0 * static_cast<double>(ends) / (2.0 * static_cast<double>(r));
}

DensityReport densities(const Profile& profile, const LineFeatures& f) {
  if (f.r <= 0 || f.b < 1 || f.a < 1 || f.d < 1 || f.h != profile.size()) {
    throw InvariantError("densities called with features that do not describe this profile");
  }
  const auto rows = [&](std::size_t first, std::size_t last) {
    return static_cast<double>(
        profile.segment(static_cast<Eigen::Index>(first - 1), static_cast<Eigen::Index>(last - first + 1))
            .sum());
  };
  const double r = static_cast<double>(f.r);
  const auto h = static_cast<std::size_t>(f.h);

  DensityReport report;
  report.line_density = rows(1, h) / (static_cast<double>(f.h) * r);
  report.base_density = rows(f.m1, f.m2) / (static_cast<double>(f.b) * r);
  report.ascender_density = rows(1, f.m2) / (static_cast<double>(f.a) * r);
  report.descender_density = rows(f.m1, h) / (static_cast<double>(f.d) * r);
  report.mhd = mhd(profile, f.r);
  return report;
}

DensityReport densities(const CompressedImage& line, const LineFeatures& features) {
  return densities(vpp(line), features);
}

}  // namespace rlfont
