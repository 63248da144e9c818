#include "oracle/raster_oracle.hpp"
#include "rlfont/error.hpp"
#include "rlfont/features.hpp"
#include "rlfont/segmentation.hpp"
#include "rlfont/synthgen.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace rlfont {
namespace {

using Label = LineClassLabel;

TEST(Geometry, StandardRows) {
  const GeometryTable t = GeometryTable::standard();
  EXPECT_EQ(t.sizes(), (std::vector<int>{8, 10, 12, 14, 16, 18, 20}));
  const int expected[7][3] = {{33, 20, 27}, {42, 23, 33}, {49, 30, 39}, {58, 33, 45},
                              {61, 36, 49}, {70, 42, 55}, {80, 48, 64}};
  for (int i = 0; i < 7; ++i) {
    const LineGeometry& g = t.at(8 + 2 * i);
    EXPECT_EQ(g.height, expected[i][0]);
    EXPECT_EQ(g.base, expected[i][1]);
    EXPECT_EQ(g.ascender, expected[i][2]);
    EXPECT_EQ(g.descender(), g.height - g.ascender + g.base);
  }
}

TEST(Geometry, InterpolatedMatchesStandardAtStandardSizes) {
  const std::vector<int> sizes{8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20};
  const GeometryTable t = GeometryTable::interpolated(sizes);
  const GeometryTable s = GeometryTable::standard();
  for (int size : s.sizes()) {
    EXPECT_EQ(t.at(size).height, s.at(size).height) << size;
  }
  // Halfway between 12 (48.5) and 14 (57.5) -> 53.
  EXPECT_EQ(t.at(13).height, 53);
}

TEST(Geometry, InvalidRowsRejected) {
  GeometryTable t;
  EXPECT_THROW(t.add(8, {10, 0, 5}), LayoutError);
  EXPECT_THROW(t.add(8, {10, 6, 5}), LayoutError);
  EXPECT_THROW(t.add(8, {10, 4, 10}), LayoutError);
  t.add(8, {30, 10, 20});
  EXPECT_THROW(t.add(10, {30, 10, 20}), LayoutError);
  EXPECT_THROW(t.at(12), LayoutError);
}

LineFeatures measure_single(const LineSpec& spec, std::uint64_t seed) {
  const std::vector<LineSpec> specs{spec};
  const SyntheticPage page = generate_page(specs, PageLayout{}, seed);
  const CompressedImage image = encode(page.bitmap);
  const TruthLine& t = page.truth.at(0);
  return extract_features(extract_line(image, {t.first_row, t.last_row}));
}

TEST(Generate, MeasuredHeightsReproduceGeometry) {
  const GeometryTable table = GeometryTable::standard();
  for (int size : table.sizes()) {
    const LineGeometry& g = table.at(size);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const LineFeatures both = measure_single({size, Label::AscenderAndDescenderRich, 1.0}, seed);
      EXPECT_EQ(both.h, g.height) << size;
      EXPECT_EQ(both.b, g.base) << size;
      EXPECT_EQ(both.a, g.ascender) << size;
      EXPECT_EQ(both.d, g.descender()) << size;

      const LineFeatures asc = measure_single({size, Label::AscenderRich, 0.6}, seed);
      EXPECT_EQ(asc.h, g.ascender) << size;
      EXPECT_EQ(asc.b, g.base) << size;
      EXPECT_EQ(asc.a, g.ascender) << size;
      // No descenders: the descender height collapses onto the base band.
      EXPECT_EQ(asc.d, asc.b) << size;
    }
  }
}

TEST(Generate, TruthBoundsMatchSegmentation) {
  const std::vector<LineSpec> specs{{8, Label::AscenderAndDescenderRich, 1.0},
                                    {14, Label::AscenderRich, 0.5},
                                    {20, Label::UpperCase, 0.3}};
  const SyntheticPage page = generate_page(specs, PageLayout{}, 9);
  const Segmentation seg = segment_lines(vpp(encode(page.bitmap)));
  ASSERT_EQ(seg.lines.size(), 3u);
  EXPECT_EQ(seg.discarded, 0u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(seg.lines[i], (LineBounds{page.truth[i].first_row, page.truth[i].last_row}));
    EXPECT_EQ(page.truth[i].font_size, specs[i].font_size);
    EXPECT_EQ(page.truth[i].line_class, specs[i].line_class);
  }
  EXPECT_EQ(page.truth[0].first_row, 151u);
  EXPECT_EQ(page.truth[1].first_row, page.truth[0].last_row + 25);
}

TEST(Generate, TruthExtentMatchesRecoveredExtent) {
  const std::vector<LineSpec> specs{{10, Label::AscenderAndDescenderRich, 0.7},
                                    {16, Label::UpperCase, 0.4}};
  const SyntheticPage page = generate_page(specs, PageLayout{}, 21);
  const CompressedImage image = encode(page.bitmap);
  for (const TruthLine& t : page.truth) {
    EXPECT_EQ(text_extent(extract_line(image, {t.first_row, t.last_row})), t.text_extent);
  }
}

TEST(Generate, DeterministicInSeed) {
  const std::vector<LineSpec> specs{{12, Label::AscenderRich, 0.8}, {8, Label::UpperCase, 1.0}};
  const SyntheticPage a = generate_page(specs, PageLayout{}, 5);
  const SyntheticPage b = generate_page(specs, PageLayout{}, 5);
  const SyntheticPage c = generate_page(specs, PageLayout{}, 6);
  EXPECT_EQ(a.bitmap, b.bitmap);
  EXPECT_EQ(a.truth, b.truth);
  EXPECT_FALSE(a.bitmap == c.bitmap);
}

TEST(Generate, EmptySpecListGivesBlankPage) {
  const SyntheticPage page = generate_page({}, PageLayout{}, 1);
  EXPECT_TRUE(page.truth.empty());
  EXPECT_EQ(page.bitmap.pixels().cast<int>().sum(), 0);
  EXPECT_EQ(page.bitmap.width(), 2375);
  EXPECT_EQ(page.bitmap.height(), 3200);
}

TEST(Generate, LayoutErrors) {
  std::vector<LineSpec> overflow(60, LineSpec{20, Label::AscenderAndDescenderRich, 1.0});
  EXPECT_THROW(generate_page(overflow, PageLayout{}, 1), LayoutError);

  const std::vector<LineSpec> one{{20, Label::AscenderAndDescenderRich, 1.0}};
  PageLayout narrow;
  narrow.width = 320;
  EXPECT_THROW(generate_page(one, narrow, 1), LayoutError);

  const std::vector<LineSpec> bad_fill{{12, Label::AscenderRich, 0.0}};
  EXPECT_THROW(generate_page(bad_fill, PageLayout{}, 1), LayoutError);

  PageLayout no_gap;
  no_gap.gap = 0;
  EXPECT_THROW(generate_page(one, no_gap, 1), LayoutError);
}

TEST(Generate, FullLineCompressedLengthFallsWithSize) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::vector<LineSpec> specs;
    for (int size : GeometryTable::standard().sizes()) {
      specs.push_back({size, Label::AscenderAndDescenderRich, 1.0});
    }
    const SyntheticPage page = generate_page(specs, PageLayout{}, seed);
    const CompressedImage image = encode(page.bitmap);
    std::int64_t previous = 0;
    for (const TruthLine& t : page.truth) {
      const std::int64_t l = compressed_length(extract_line(image, {t.first_row, t.last_row}));
      if (previous > 0) {
        EXPECT_LE(l, previous) << "seed " << seed << " size " << t.font_size;
      }
      previous = l;
    }
  }
}

TEST(Generate, LengthRatioStableAcrossFill) {
  for (int size : {8, 14, 20}) {
    const double full = measure_single({size, Label::AscenderAndDescenderRich, 1.0}, 3).R;
    for (double fill : {0.3, 0.5, 0.8}) {
      const double R = measure_single({size, Label::AscenderAndDescenderRich, fill}, 3).R;
      EXPECT_NEAR(R, full, 0.15 * full) << size << " fill " << fill;
    }
  }
}

TEST(Generate, LinesMatchRasterOracle) {
  const std::vector<LineSpec> specs{{18, Label::AscenderAndDescenderRich, 0.9},
                                    {10, Label::AscenderRich, 0.4}};
  const SyntheticPage page = generate_page(specs, PageLayout{}, 77);
  const CompressedImage image = encode(page.bitmap);
  for (const TruthLine& t : page.truth) {
    const LineFeatures f = extract_features(extract_line(image, {t.first_row, t.last_row}));
    const auto o = oracle::features(oracle::slice_rows(page.bitmap, t.first_row, t.last_row));
    ASSERT_TRUE(o.has_value());
    EXPECT_EQ(f.h, o->h);
    EXPECT_EQ(f.b, o->b);
    EXPECT_EQ(f.l, o->l);
    EXPECT_EQ(f.r, o->r);
  }
}

TEST(SpecFile, ParsesKeysAndDefaults) {
  const auto specs = parse_line_specs(
      "# a comment\n"
      "size=12 class=ascender_rich fill=0.5\n"
      "\n"
      "size=20 class=upper_case\n");
  ASSERT_EQ(specs.size(), 2u);
  EXPECT_EQ(specs[0].font_size, 12);
  EXPECT_EQ(specs[0].line_class, Label::AscenderRich);
  EXPECT_DOUBLE_EQ(specs[0].fill_fraction, 0.5);
  EXPECT_DOUBLE_EQ(specs[1].fill_fraction, 1.0);
}

TEST(SpecFile, ErrorsCarryLineNumbers) {
  try {
    parse_line_specs("size=12 class=ascender_rich\nsize=8 class=cursive\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.unit(), ParseError::Unit::Line);
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_line_specs("class=upper_case\n"), ParseError);
  EXPECT_THROW(parse_line_specs("size=twelve class=upper_case\n"), ParseError);
}

TEST(TruthFile, RoundTrip) {
  const GroundTruth truth{{151, 183, 8, Label::AscenderAndDescenderRich, 2000},
                          {208, 246, 12, Label::AscenderRich, 1040}};
  const std::string text = format_truth(truth);
  EXPECT_EQ(text.rfind("# rlfont v1\n", 0), 0u);
  EXPECT_EQ(parse_truth(text), truth);
}

TEST(TruthFile, RejectsOverlapAndBadRanges) {
  EXPECT_THROW(parse_truth("line 1: rows=10..5 size=8 class=upper_case r=3\n"), ParseError);
  EXPECT_THROW(parse_truth("line 1: rows=1..5 size=8 class=upper_case r=3\n"
                           "line 2: rows=5..9 size=8 class=upper_case r=3\n"),
               ParseError);
  EXPECT_THROW(parse_truth("line 1: rows=1..5 class=upper_case\n"), ParseError);
}

}  // namespace
}  // namespace rlfont
