#include "rlfont/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace rlfont {

std::string_view to_string(LineClassLabel label) noexcept {
  switch (label) {
    case LineClassLabel::AscenderAndDescenderRich:
      return "ascender_and_descender_rich";
    case LineClassLabel::AscenderRich:
      return "ascender_rich";
    case LineClassLabel::UpperCase:
      return "upper_case";
  }
  return "unknown";
}

std::optional<LineClassLabel> parse_line_class(std::string_view name) noexcept {
  for (auto label : {LineClassLabel::AscenderAndDescenderRich, LineClassLabel::AscenderRich,
                     LineClassLabel::UpperCase}) {
    if (name == to_string(label)) {
      return label;
    }
  }
  return std::nullopt;
}

LineClass classify_line(double mhd, const MhdThresholds& thresholds) {
  if (std::isnan(mhd)) {
    throw std::invalid_argument("MHD is NaN");
  }
  if (!(thresholds.low <= thresholds.high)) {
    throw std::invalid_argument("MHD thresholds must satisfy low <= high");
  }
  LineClass result{LineClassLabel::AscenderAndDescenderRich, mhd};
  if (mhd >= thresholds.high) {
    result.label = LineClassLabel::UpperCase;
  } else if (mhd >= thresholds.low) {
    result.label = LineClassLabel::AscenderRich;
  }
  return result;
}

}  // namespace rlfont
