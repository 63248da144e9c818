#pragma once

#include <array>

namespace rlfont {

/// Closed pixel interval observed for one feature across training lines.
struct FeatureRange {
  double lo;
  double hi;

  constexpr double midpoint() const noexcept { return (lo + hi) / 2.0; }
};

/// Line geometry measured on 300 dpi Arial training pages, one row per
/// standard point size.
struct TrainingRow {
  int font_size;
  FeatureRange height;
  FeatureRange base;
  FeatureRange ascender;
  FeatureRange descender;
};

inline constexpr std::array<TrainingRow, 7> kArialTrainingRows{{
    {8, {32, 33}, {19, 20}, {26, 27}, {26, 27}},
    {10, {42, 42}, {22, 23}, {32, 33}, {32, 33}},
    {12, {48, 49}, {29, 30}, {38, 39}, {38, 39}},
    {14, {57, 58}, {32, 33}, {44, 45}, {44, 45}},
    {16, {60, 61}, {35, 36}, {48, 49}, {48, 49}},
    {18, {69, 71}, {41, 42}, {54, 55}, {57, 58}},
    {20, {79, 80}, {48, 48}, {63, 64}, {63, 64}},
}};

}  // namespace rlfont
