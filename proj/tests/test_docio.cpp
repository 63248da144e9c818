#include "oracle/raster_oracle.hpp"
#include "rlfont/docio.hpp"
#include "rlfont/error.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

namespace rlfont {
namespace {

namespace fs = std::filesystem;

const fs::path kData = RLFONT_TEST_DATA;

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("rlfont_docio_" + name);
}

TEST(Pbm, PlainCheckerboardWithComment) {
  const Bitmap b = read_pbm(kData / "checker_p1.pbm");
  ASSERT_EQ(b.width(), 2);
  ASSERT_EQ(b.height(), 2);
  EXPECT_EQ(b(0, 0), 1);
  EXPECT_EQ(b(0, 1), 0);
  EXPECT_EQ(b(1, 0), 0);
  EXPECT_EQ(b(1, 1), 1);
}

TEST(Pbm, RawRowsArePaddedToWholeBytes) {
  const Bitmap b = read_pbm(kData / "w10_p4.pbm");
  ASSERT_EQ(b.width(), 10);
  EXPECT_EQ(b(0, 0), 1);
  EXPECT_EQ(b(0, 9), 1);
  EXPECT_EQ(b.pixels().row(0).cast<int>().sum(), 2);
  EXPECT_EQ(b.pixels().row(1).cast<int>().sum(), 8);
  EXPECT_EQ(b(1, 0), 0);
  EXPECT_EQ(b(1, 9), 0);
}

TEST(Pbm, PaddingBitsIgnored) {
  EXPECT_EQ(read_pbm(kData / "w10_p4_padding_set.pbm"), read_pbm(kData / "w10_p4.pbm"));
}

TEST(Pbm, CanonicalFileRoundTripsByteForByte) {
  const std::string golden = read_file(kData / "w10_p4.pbm");
  EXPECT_EQ(format_pbm(parse_pbm(golden)), golden);
  // A non-canonical file is normalized to the canonical bytes.
  EXPECT_EQ(format_pbm(read_pbm(kData / "w10_p4_padding_set.pbm")), golden);
}

TEST(Pbm, SingleBlackPixelIsOneByte) {
  Bitmap b(1, 1);
  b(0, 0) = 1;
  EXPECT_EQ(format_pbm(b), std::string("P4\n1 1\n\x80", 8));
}

TEST(Pbm, AllWhitePageHasNoBitsSet) {
  const std::string bytes = format_pbm(Bitmap(13, 4));
  const std::string header = "P4\n13 4\n";
  ASSERT_EQ(bytes.size(), header.size() + 8);
  EXPECT_EQ(bytes.substr(header.size()), std::string(8, '\0'));
}

TEST(Pbm, RandomBitmapsRoundTripThroughFiles) {
  std::mt19937_64 rng(8);
  const fs::path path = temp_path("random.pbm");
  for (int w : {1, 7, 8, 9, 33}) {
    const Bitmap b = oracle::random_bitmap(rng, w, 5);
    write_pbm(b, path);
    EXPECT_EQ(read_pbm(path), b);
  }
  fs::remove(path);
}

TEST(Pbm, BadMagicRejectedAtByteZero) {
  try {
    parse_pbm("P5\n1 1\n\0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.unit(), ParseError::Unit::Byte);
    EXPECT_EQ(e.position(), 0u);
  }
}

TEST(Pbm, TruncatedPayloadReportsOffset) {
  try {
    read_pbm(kData / "truncated_p4.pbm");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 11u);
    EXPECT_NE(std::string(e.what()).find("truncated"), std::string::npos);
  }
}

TEST(Pbm, PlainPayloadWithBadDigit) {
  try {
    parse_pbm("P1\n2 1\n1 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 9u);
  }
}

TEST(Pbm, DimensionOverflowRejected) {
  EXPECT_THROW(parse_pbm("P4\n99999999999 1\n"), ParseError);
  EXPECT_THROW(parse_pbm("P4\n2147483647 2147483647\n"), ParseError);
  EXPECT_THROW(parse_pbm("P1\n0 1\n"), ParseError);
}

TEST(Rld, GoldenSingleRowLayout) {
  const CompressedImage image(8, {RunRow{{2, 4}, {2, 0}}});
  const std::string bytes = format_rldoc(image);
  EXPECT_EQ(bytes.size(), 32u);
  EXPECT_EQ(bytes, read_file(kData / "line8.rld"));
  EXPECT_EQ(read_rldoc(kData / "line8.rld"), image);
}

TEST(Rld, RandomImagesRoundTrip) {
  std::mt19937_64 rng(100);
  const fs::path path = temp_path("random.rld");
  for (int trial = 0; trial < 100; ++trial) {
    const CompressedImage image =
        encode(oracle::random_bitmap(rng, 1 + trial % 50, 1 + trial % 7, 0.01 * trial));
    write_rldoc(image, path);
    EXPECT_EQ(read_rldoc(path), image);
  }
  fs::remove(path);
}

TEST(Rld, EmptyFileIsMagicError) {
  try {
    parse_rldoc("");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 0u);
    EXPECT_NE(std::string(e.what()).find("magic"), std::string::npos);
  }
}

TEST(Rld, RowSumViolationNamesRowAndOffset) {
  try {
    read_rldoc(kData / "corrupt_rowsum.rld");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 32u);
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos);
  }
}

TEST(Rld, TrailingBytesRejected) {
  try {
    read_rldoc(kData / "trailing_bytes.rld");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 24u);
  }
}

TEST(Rld, TruncatedRowRejected) {
  std::string bytes = read_file(kData / "line8.rld");
  bytes.pop_back();
  EXPECT_THROW(parse_rldoc(bytes), ParseError);
}

TEST(Documents, DispatchOnExtension) {
  EXPECT_EQ(read_document(kData / "line8.rld").width(), 8u);
  EXPECT_EQ(read_document(kData / "checker_p1.pbm").height(), 2u);
  EXPECT_THROW(read_document(kData / "missing.tif"), IoError);
}

TEST(Documents, MissingFileIsIoError) {
  EXPECT_THROW(read_rldoc(kData / "does_not_exist.rld"), IoError);
}

}  // namespace
}  // namespace rlfont
