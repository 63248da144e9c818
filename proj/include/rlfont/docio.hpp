#pragma once

#include "rlfont/rle.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rlfont {

/// Netpbm bitmap, plain (P1) or raw (P4). 1 = black, as in the file.
Bitmap parse_pbm(std::string_view bytes);
Bitmap read_pbm(const std::filesystem::path& path);

/// Canonical P4: "P4\n<w> <h>\n" then rows packed MSB-first, padded to a byte.
std::string format_pbm(const Bitmap& bitmap);
void write_pbm(const Bitmap& bitmap, const std::filesystem::path& path);

/// RLD1 layout, all integers 32-bit little-endian:
///
///   "RLD1" width height
///   per row: pair_count, then pair_count x (white, black)
///
/// The parser rejects short reads, trailing bytes and rows whose runs do
/// not sum to the width.
CompressedImage parse_rldoc(std::string_view bytes);
CompressedImage read_rldoc(const std::filesystem::path& path);

std::string format_rldoc(const CompressedImage& image);
void write_rldoc(const CompressedImage& image, const std::filesystem::path& path);

/// Whole-file helpers shared by the text formats.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Loads either format by extension (.pbm or .rld) and returns it compressed.
CompressedImage read_document(const std::filesystem::path& path);

}  // namespace rlfont
