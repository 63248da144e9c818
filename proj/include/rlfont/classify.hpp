#pragma once

#include <optional>
#include <string_view>

namespace rlfont {

/// Mixed-case line taxonomy used to pick the size model.
enum class LineClassLabel {
  AscenderAndDescenderRich,
  AscenderRich,
  UpperCase,
};

std::string_view to_string(LineClassLabel label) noexcept;
std::optional<LineClassLabel> parse_line_class(std::string_view name) noexcept;

/// Band edges in percent. A value equal to an edge belongs to the upper band.
struct MhdThresholds {
  double low = 7.0;
  double high = 25.0;
};

struct LineClass {
  LineClassLabel label = LineClassLabel::AscenderAndDescenderRich;
  double mhd = 0.0;
};

/// mhd < low: both ascenders and descenders; low <= mhd < high: ascender
/// rich; mhd >= high: upper case. Throws std::invalid_argument on NaN or
/// on thresholds with low > high.
LineClass classify_line(double mhd, const MhdThresholds& thresholds = {});

}  // namespace rlfont
