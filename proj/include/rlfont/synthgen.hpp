#pragma once

#include "rlfont/classify.hpp"
#include "rlfont/rle.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace rlfont {

/// Pixel heights of one font size. The descender height is not stored
/// independently: with a = m2, b = m2 - m1 and d = h - m1 it is fixed at
/// h - a + b.
struct LineGeometry {
  int height = 0;
  int base = 0;
  int ascender = 0;

  int descender() const noexcept { return height - ascender + base; }
};

/// Font size (points) -> line geometry (pixels).
class GeometryTable {
 public:
  /// Rounded-half-up midpoints of the Arial training measurements.
  static GeometryTable standard();

  /// Linear interpolation (and extrapolation) of the training midpoints,
  /// rounded half up, for arbitrary integer sizes.
  static GeometryTable interpolated(std::span<const int> sizes);

  /// Throws LayoutError when the row violates 1 <= b < a < h, or when
  /// heights would stop strictly increasing with size.
  void add(int font_size, const LineGeometry& geometry);

  bool contains(int font_size) const { return rows_.contains(font_size); }
  const LineGeometry& at(int font_size) const;
  std::vector<int> sizes() const;

 private:
  std::map<int, LineGeometry> rows_;
};

/// Stroke width grows with size so long lines hold fewer runs at larger sizes.
int stroke_width(int font_size) noexcept;

struct LineSpec {
  int font_size = 12;
  LineClassLabel line_class = LineClassLabel::AscenderAndDescenderRich;
  double fill_fraction = 1.0;
};

struct PageLayout {
  int width = 2375;
  int height = 3200;
  int margin_left = 150;
  int margin_right = 150;
  int margin_top = 150;
  int margin_bottom = 150;
  int gap = 24;
};

struct TruthLine {
  std::size_t first_row = 0;  // 1-based, inclusive
  std::size_t last_row = 0;
  int font_size = 0;
  LineClassLabel line_class = LineClassLabel::AscenderAndDescenderRich;
  std::int64_t text_extent = 0;

  friend bool operator==(const TruthLine&, const TruthLine&) = default;
};

using GroundTruth = std::vector<TruthLine>;

struct SyntheticPage {
  Bitmap bitmap;
  GroundTruth truth;
};

/// Renders one text line per spec, top to bottom, separated by `layout.gap`
/// blank rows. Each line is built from block glyphs so that its measured
/// height, base band and ascender row reproduce `geometry` exactly:
///
///   rows [1, a-b]     ascender bars (always one at the right end)
///   rows [a-b+1, a]   base band: strokes grouped into words
///   rows [a+1, h]     descender bars (both-rich lines only)
///
/// Ascender-rich and upper-case lines stop at row a. Deterministic in
/// (specs, layout, seed). Throws LayoutError when the lines do not fit.
SyntheticPage generate_page(std::span<const LineSpec> specs, const PageLayout& layout,
                            std::uint64_t seed,
                            const GeometryTable& geometry = GeometryTable::standard());

/// `size=<s> class=<c> fill=<f>` per line; `fill` defaults to 1.
std::vector<LineSpec> parse_line_specs(std::string_view text);
std::vector<LineSpec> read_line_specs(const std::filesystem::path& path);

/// `line <k>: rows=<first>..<last> size=<s> class=<c> r=<r>` per line,
/// preceded by a `# rlfont v1` header.
std::string format_truth(const GroundTruth& truth);
GroundTruth parse_truth(std::string_view text);
GroundTruth read_truth(const std::filesystem::path& path);
void write_truth(const GroundTruth& truth, const std::filesystem::path& path);

}  // namespace rlfont
