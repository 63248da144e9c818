#include "rlfont/synthgen.hpp"

#include "rlfont/docio.hpp"
#include "rlfont/error.hpp"
#include "rlfont/training_table.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <sstream>

namespace rlfont {

using detail::for_each_line;
using detail::key_values;
using detail::parse_number;

namespace {

int round_half_up(double value) { return static_cast<int>(std::floor(value + 0.5)); }

/// Linear through the two training rows bracketing `size` (or the two
/// nearest ones when extrapolating).
double interpolate(int size, FeatureRange TrainingRow::*range) {
  const auto& rows = kArialTrainingRows;
  std::size_t hi = 1;
  while (hi + 1 < rows.size() && rows[hi].font_size < size) {
    ++hi;
  }
  const TrainingRow& left = rows[hi - 1];
  const TrainingRow& right = rows[hi];
  const double y0 = (left.*range).midpoint();
  const double y1 = (right.*range).midpoint();
  const double t = static_cast<double>(size - left.font_size) / (right.font_size - left.font_size);
  return y0 + t * (y1 - y0);
}

/// Bounded draws straight from mt19937_64 output so pages are identical
/// across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  int between(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  bool percent(int chance) { return between(0, 99) < chance; }

 private:
  std::mt19937_64 engine_;
};

struct Span {
  Eigen::Index start;
  Eigen::Index width;

  Eigen::Index end() const { return start + width - 1; }
};

/// Lays glyph blocks left to right from `x0` so the last one ends exactly
/// on `x_end`. Blocks are at least `min_width` wide.
std::vector<Span> lay_out_blocks(Draw& draw, Eigen::Index x0, Eigen::Index x_end, int min_width,
                                 int max_width, int gap_lo, int gap_hi, int space_lo,
                                 int space_hi) {
  std::vector<Span> blocks;
  Eigen::Index pos = x0;
  int left_in_word = draw.between(3, 7);
  while (pos <= x_end - min_width + 1) {
    const Eigen::Index width = draw.between(min_width, max_width);
    blocks.push_back({pos, width});
    pos += width;
    if (--left_in_word == 0) {
      pos += draw.between(space_lo, space_hi);
      left_in_word = draw.between(3, 7);
    } else {
      pos += draw.between(gap_lo, gap_hi);
    }
  }
  if (!blocks.empty()) {
    blocks.back().width = x_end - blocks.back().start + 1;
  }
  return blocks;
}

void paint(Bitmap& page, Eigen::Index row, const Span& span) {
  page.pixels().row(row).segment(span.start, span.width).setOnes();
}

void render_mixed_case(Bitmap& page, Draw& draw, Eigen::Index top, Eigen::Index x0,
                       Eigen::Index x_end, int font_size, const LineGeometry& g,
                       bool with_descenders) {
  const int k = stroke_width(font_size);
  const int gap_lo = font_size / 2;
  const int gap_hi = gap_lo + font_size / 4;
  const std::vector<Span> strokes =
      lay_out_blocks(draw, x0, x_end, k, 2 * k, gap_lo, gap_hi, font_size, 2 * font_size);
  const std::size_t n = strokes.size();
  if (n < 3) {
    throw LayoutError("line of size " + std::to_string(font_size) + " is too short to hold 3 strokes");
  }

  // The first stroke never carries a bar, keeping the base band strictly
  // denser than the ascender zone; the last always carries both so every
  // row of the line reaches x_end.
  std::vector<Span> ascenders{{x_end - k + 1, k}};
  std::vector<Span> descenders;
  if (with_descenders) {
    descenders.push_back({x_end - k + 1, k});
  }
  const std::size_t descender_cap = std::max<std::size_t>(1, n / 3);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (draw.percent(20)) {
      ascenders.push_back({strokes[i].start, k});
    }
    if (with_descenders && descenders.size() < descender_cap && draw.percent(10)) {
      descenders.push_back({strokes[i].start, k});
    }
  }

  const int x_height_top = g.ascender - g.base;  // rows before the base band
  const int rows = with_descenders ? g.height : g.ascender;
  for (int r = 0; r < rows; ++r) {
    const Eigen::Index y = top + r;
    const auto& spans = r < x_height_top ? ascenders : (r < g.ascender ? strokes : descenders);
    for (const Span& s : spans) {
      paint(page, y, s);
    }
  }
}

void render_upper_case(Bitmap& page, Draw& draw, Eigen::Index top, Eigen::Index x0,
                       Eigen::Index x_end, int font_size, const LineGeometry& g) {
  const int k = stroke_width(font_size);
  const std::vector<Span> glyphs =
      lay_out_blocks(draw, x0, x_end, 2 * k + 1, 4 * k, k, 2 * k, font_size, 2 * font_size);
  if (glyphs.size() < 3) {
    throw LayoutError("line of size " + std::to_string(font_size) + " is too short to hold 3 glyphs");
  }
  // Box glyphs: solid cap and foot bars k rows thick, two stems between.
  for (int r = 0; r < g.ascender; ++r) {
    const Eigen::Index y = top + r;
    const bool bar_row = r < k || r >= g.ascender - k;
    for (const Span& glyph : glyphs) {
      if (bar_row) {
        paint(page, y, glyph);
      } else {
        paint(page, y, {glyph.start, k});
        paint(page, y, {glyph.end() - k + 1, k});
      }
    }
  }
}

void check_layout(const PageLayout& layout) {
  if (layout.width <= 0 || layout.height <= 0) {
    throw LayoutError("page dimensions must be positive");
  }
  if (layout.margin_left < 0 || layout.margin_right < 0 || layout.margin_top < 0 ||
      layout.margin_bottom < 0) {
    throw LayoutError("margins must be non-negative");
  }
  if (layout.margin_left + layout.margin_right >= layout.width) {
    throw LayoutError("horizontal margins leave no text area");
  }
  if (layout.gap < 1) {
    throw LayoutError("line gap must be at least 1 row");
  }
}

LineClassLabel parse_class_field(const std::string& text, std::size_t line_number) {
  const auto label = parse_line_class(text);
  if (!label) {
    throw ParseError(ParseError::Unit::Line, line_number, "unknown line class '" + text + "'");
  }
  return *label;
}

}  // namespace

int stroke_width(int font_size) noexcept {
  return std::max(2, round_half_up(font_size / 5.0));
}

GeometryTable GeometryTable::standard() {
  GeometryTable table;
  for (const TrainingRow& row : kArialTrainingRows) {
    table.add(row.font_size, {round_half_up(row.height.midpoint()), round_half_up(row.base.midpoint()),
                              round_half_up(row.ascender.midpoint())});
  }
  return table;
}

GeometryTable GeometryTable::interpolated(std::span<const int> sizes) {
  std::vector<int> sorted(sizes.begin(), sizes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  GeometryTable table;
  for (int size : sorted) {
    table.add(size, {round_half_up(interpolate(size, &TrainingRow::height)),
                     round_half_up(interpolate(size, &TrainingRow::base)),
                     round_half_up(interpolate(size, &TrainingRow::ascender))});
  }
  return table;
}

void GeometryTable::add(int font_size, const LineGeometry& g) {
  const std::string where = "geometry for size " + std::to_string(font_size);
  if (font_size <= 0) {
    throw LayoutError(where + ": size must be positive");
  }
  if (!(1 <= g.base && g.base < g.ascender && g.ascender < g.height)) {
    throw LayoutError(where + ": requires 1 <= base < ascender < height");
  }
  auto next = rows_.upper_bound(font_size);
  if (next != rows_.end() && next->second.height <= g.height) {
    throw LayoutError(where + ": height must increase strictly with size");
  }
  auto prev = rows_.lower_bound(font_size);
  if (prev != rows_.begin() && std::prev(prev)->second.height >= g.height) {
    throw LayoutError(where + ": height must increase strictly with size");
  }
  rows_[font_size] = g;
}

const LineGeometry& GeometryTable::at(int font_size) const {
  const auto it = rows_.find(font_size);
  if (it == rows_.end()) {
    throw LayoutError("no geometry for font size " + std::to_string(font_size));
  }
  return it->second;
}

std::vector<int> GeometryTable::sizes() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& [size, g] : rows_) {
    out.push_back(size);
  }
  return out;
}

SyntheticPage generate_page(std::span<const LineSpec> specs, const PageLayout& layout,
                            std::uint64_t seed, const GeometryTable& geometry) {
  check_layout(layout);
  SyntheticPage page{Bitmap(layout.width, layout.height), {}};
  Draw draw(seed);
  const int text_width = layout.width - layout.margin_left - layout.margin_right;
  Eigen::Index top = layout.margin_top;

  for (std::size_t i = 0; i < specs.size(); ++i) {
    const LineSpec& spec = specs[i];
    if (!(spec.fill_fraction > 0.0 && spec.fill_fraction <= 1.0)) {
      throw LayoutError("line " + std::to_string(i + 1) + ": fill fraction must be in (0, 1]");
    }
    const LineGeometry& g = geometry.at(spec.font_size);
    const int rows =
        spec.line_class == LineClassLabel::AscenderAndDescenderRich ? g.height : g.ascender;
    if (top + rows > layout.height - layout.margin_bottom) {
      throw LayoutError("line " + std::to_string(i + 1) + " overflows the page height");
    }
    const int extent = std::max(1, round_half_up(spec.fill_fraction * text_width));
    const Eigen::Index x0 = layout.margin_left;
    const Eigen::Index x_end = x0 + extent - 1;

    switch (spec.line_class) {
      case LineClassLabel::AscenderAndDescenderRich:
        render_mixed_case(page.bitmap, draw, top, x0, x_end, spec.font_size, g, true);
        break;
      case LineClassLabel::AscenderRich:
        render_mixed_case(page.bitmap, draw, top, x0, x_end, spec.font_size, g, false);
        break;
      case LineClassLabel::UpperCase:
        render_upper_case(page.bitmap, draw, top, x0, x_end, spec.font_size, g);
        break;
    }

    page.truth.push_back({static_cast<std::size_t>(top) + 1, static_cast<std::size_t>(top + rows),
                          spec.font_size, spec.line_class, extent});
    top += rows + layout.gap;
  }
  return page;
}

std::vector<LineSpec> parse_line_specs(std::string_view text) {
  std::vector<LineSpec> specs;
  for_each_line(text, [&](std::string_view line, std::size_t n) {
    LineSpec spec;
    bool have_size = false;
    bool have_class = false;
    for (const auto& [key, value] : key_values(line, n)) {
      if (key == "size") {
        spec.font_size = parse_number<int>(value, n, "size");
        have_size = true;
      } else if (key == "class") {
        spec.line_class = parse_class_field(value, n);
        have_class = true;
      } else if (key == "fill") {
        spec.fill_fraction = parse_number<double>(value, n, "fill");
      } else {
        throw ParseError(ParseError::Unit::Line, n, "unknown key '" + key + "'");
      }
    }
    if (!have_size || !have_class) {
      throw ParseError(ParseError::Unit::Line, n, "size= and class= are required");
    }
    specs.push_back(spec);
  });
  return specs;
}

std::vector<LineSpec> read_line_specs(const std::filesystem::path& path) {
  return parse_line_specs(read_file(path));
}

std::string format_truth(const GroundTruth& truth) {
  std::ostringstream out;
  out << "# rlfont v1\n";
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const TruthLine& t = truth[i];
    out << "line " << i + 1 << ": rows=" << t.first_row << ".." << t.last_row
        << " size=" << t.font_size << " class=" << to_string(t.line_class) << " r=" << t.text_extent
        << "\n";
  }
  return out.str();
}

GroundTruth parse_truth(std::string_view text) {
  GroundTruth truth;
  for_each_line(text, [&](std::string_view line, std::size_t n) {
    const auto colon = line.find(':');
    if (line.substr(0, 5) != "line " || colon == std::string_view::npos) {
      throw ParseError(ParseError::Unit::Line, n, "expected 'line <k>: ...'");
    }
    TruthLine t;
    bool have_rows = false;
    bool have_size = false;
    bool have_class = false;
    for (const auto& [key, value] : key_values(line.substr(colon + 1), n)) {
      if (key == "rows") {
        const auto dots = value.find("..");
        if (dots == std::string::npos) {
          throw ParseError(ParseError::Unit::Line, n, "rows must be <first>..<last>");
        }
        t.first_row = parse_number<std::size_t>(value.substr(0, dots), n, "first row");
        t.last_row = parse_number<std::size_t>(value.substr(dots + 2), n, "last row");
        if (t.first_row < 1 || t.first_row > t.last_row) {
          throw ParseError(ParseError::Unit::Line, n, "row range must satisfy 1 <= first <= last");
        }
        have_rows = true;
      } else if (key == "size") {
        t.font_size = parse_number<int>(value, n, "size");
        have_size = true;
      } else if (key == "class") {
        t.line_class = parse_class_field(value, n);
        have_class = true;
      } else if (key == "r") {
        t.text_extent = parse_number<std::int64_t>(value, n, "r");
      } else {
        throw ParseError(ParseError::Unit::Line, n, "unknown key '" + key + "'");
      }
    }
    if (!have_rows || !have_size || !have_class) {
      throw ParseError(ParseError::Unit::Line, n, "rows=, size= and class= are required");
    }
    if (!truth.empty() && truth.back().last_row >= t.first_row) {
      throw ParseError(ParseError::Unit::Line, n, "row ranges must be disjoint and ordered");
    }
    truth.push_back(t);
  });
  return truth;
}

GroundTruth read_truth(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_truth(text);
  } catch (const ParseError& e) {
    throw ParseError(e.unit(), e.position(), path.string() + ": " + e.detail());
  }
}

void write_truth(const GroundTruth& truth, const std::filesystem::path& path) {
  write_file(path, format_truth(truth));
}

}  // namespace rlfont
