#include "rlfont/docio.hpp"

#include "rlfont/error.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <utility>

namespace rlfont {

namespace {

using Unit = ParseError::Unit;

bool is_pbm_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

/// Cursor over a Netpbm header: whitespace and '#' comments are skipped
/// between tokens.
class PbmCursor {
 public:
  explicit PbmCursor(std::string_view bytes) : bytes_(bytes) {}

  std::size_t offset() const noexcept { return pos_; }
  bool at_end() const noexcept { return pos_ >= bytes_.size(); }
  char peek() const { return bytes_[pos_]; }
  char take() { return bytes_[pos_++]; }

  void skip_space_and_comments() {
    while (!at_end()) {
      if (is_pbm_space(peek())) {
        ++pos_;
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n' && peek() != '\r') {
          ++pos_;
        }
      } else {
        break;
      }
    }
  }

  std::uint64_t read_dimension(const char* name) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(Unit::Byte, start, std::string("expected ") + name);
    }
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(take() - '0');
      if (value > kMaxDimension) {
        throw ParseError(Unit::Byte, start, std::string(name) + " overflows 2^31-1");
      }
    }
    if (value == 0) {
      throw ParseError(Unit::Byte, start, std::string(name) + " must be positive");
    }
    return value;
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

class LeReader {
 public:
  LeReader(std::string_view bytes, std::size_t start) : bytes_(bytes), pos_(start) {}

  std::size_t offset() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

  std::uint32_t u32(const char* what) {
    if (remaining() < 4) {
      throw ParseError(Unit::Byte, pos_, std::string("truncated ") + what);
    }
    std::uint32_t value = 0;
    for (int i = 0; i < 4; ++i) {
      value |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    }
    pos_ += 4;
    return value;
  }

 private:
  std::string_view bytes_;
  std::size_t pos_;
};

void put_u32(std::string& out, std::uint32_t value) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xFFu));
  }
}

}  // namespace

Bitmap parse_pbm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '1' && bytes[1] != '4')) {
    throw ParseError(Unit::Byte, 0, "bad magic, expected P1 or P4");
  }
  const bool plain = bytes[1] == '1';
  PbmCursor cursor(bytes.substr(2));
  const std::uint64_t width = cursor.read_dimension("width");
  const std::uint64_t height = cursor.read_dimension("height");
  if (width * height > static_cast<std::uint64_t>(std::numeric_limits<std::ptrdiff_t>::max()) / 2) {
    throw ParseError(Unit::Byte, 2, "dimension overflow");
  }

  if (plain) {
    // Every pixel takes at least one byte; reject before allocating.
    if (bytes.size() - (cursor.offset() + 2) < width * height) {
      throw ParseError(Unit::Byte, bytes.size(), "truncated payload");
    }
    Bitmap bitmap(static_cast<Eigen::Index>(width), static_cast<Eigen::Index>(height));
    for (std::uint64_t r = 0; r < height; ++r) {
      for (std::uint64_t c = 0; c < width; ++c) {
        cursor.skip_space_and_comments();
        if (cursor.at_end()) {
          throw ParseError(Unit::Byte, cursor.offset() + 2, "truncated payload");
        }
        const std::size_t at = cursor.offset() + 2;
        const char digit = cursor.take();
        if (digit != '0' && digit != '1') {
          throw ParseError(Unit::Byte, at, "expected '0' or '1'");
        }
        bitmap(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            static_cast<std::uint8_t>(digit - '0');
      }
    }
    return bitmap;
  }

  // Exactly one whitespace byte separates the header from the raster.
  if (cursor.at_end() || !is_pbm_space(cursor.peek())) {
    throw ParseError(Unit::Byte, cursor.offset() + 2, "missing whitespace after header");
  }
  cursor.take();
  const std::size_t data_start = cursor.offset() + 2;
  const std::uint64_t row_bytes = (width + 7) / 8;
  const std::uint64_t need = row_bytes * height;
  if (bytes.size() - data_start < need) {
    throw ParseError(Unit::Byte, bytes.size(),
                     "truncated payload: need " + std::to_string(need) + " raster bytes, have " +
                         std::to_string(bytes.size() - data_start));
  }
  Bitmap bitmap(static_cast<Eigen::Index>(width), static_cast<Eigen::Index>(height));
  for (std::uint64_t r = 0; r < height; ++r) {
    const std::size_t row_start = data_start + r * row_bytes;
    for (std::uint64_t c = 0; c < width; ++c) {
      const auto byte = static_cast<unsigned char>(bytes[row_start + c / 8]);
      bitmap(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          static_cast<std::uint8_t>((byte >> (7 - c % 8)) & 1u);
    }
  }
  return bitmap;
}

std::string format_pbm(const Bitmap& bitmap) {
  const auto width = static_cast<std::size_t>(bitmap.width());
  const auto height = static_cast<std::size_t>(bitmap.height());
  std::string out = "P4\n" + std::to_string(width) + " " + std::to_string(height) + "\n";
  const std::size_t row_bytes = (width + 7) / 8;
  const std::size_t header = out.size();
  out.resize(header + row_bytes * height, '\0');
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (bitmap(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) != 0) {
        auto& byte = out[header + r * row_bytes + c / 8];
        byte = static_cast<char>(static_cast<unsigned char>(byte) | (0x80u >> (c % 8)));
      }
    }
  }
  return out;
}

CompressedImage parse_rldoc(std::string_view bytes) {
  if (bytes.size() < 4 || bytes.substr(0, 4) != "RLD1") {
    throw ParseError(Unit::Byte, 0, "bad magic, expected RLD1");
  }
  LeReader reader(bytes, 4);
  const std::uint32_t width = reader.u32("width");
  const std::uint32_t height = reader.u32("height");
  if (width == 0 || width > kMaxDimension) {
    throw ParseError(Unit::Byte, 4, "width must be in [1, 2^31-1]");
  }
  if (height == 0 || height > kMaxDimension) {
    throw ParseError(Unit::Byte, 8, "height must be in [1, 2^31-1]");
  }

  std::vector<RunRow> rows;
  rows.reserve(std::min<std::size_t>(height, bytes.size() / 12 + 1));
  for (std::uint32_t r = 0; r < height; ++r) {
    const std::size_t row_offset = reader.offset();
    const std::uint32_t count = reader.u32("pair count");
    if (count == 0) {
      throw ParseError(Unit::Byte, row_offset, "row " + std::to_string(r + 1) + " has no pairs");
    }
    if (static_cast<std::uint64_t>(count) * 8 > reader.remaining()) {
      throw ParseError(Unit::Byte, reader.offset(),
                       "truncated row " + std::to_string(r + 1));
    }
    RunRow row(count);
    for (RunPair& pair : row) {
      pair.white = reader.u32("white run");
      pair.black = reader.u32("black run");
    }
    try {
      validate_row(row, width, r + 1);
    } catch (const CorruptRowError& e) {
      throw ParseError(Unit::Byte, row_offset, e.what());
    }
    rows.push_back(std::move(row));
  }
  if (reader.remaining() != 0) {
    throw ParseError(Unit::Byte, reader.offset(),
                     std::to_string(reader.remaining()) + " trailing bytes");
  }
  return CompressedImage(width, std::move(rows));
}

std::string format_rldoc(const CompressedImage& image) {
  std::string out = "RLD1";
  out.reserve(12 + 4 * image.height() + 8 * image.total_pairs());
  put_u32(out, image.width());
  put_u32(out, static_cast<std::uint32_t>(image.height()));
  for (const RunRow& row : image.rows()) {
    put_u32(out, static_cast<std::uint32_t>(row.size()));
    for (const RunPair& pair : row) {
      put_u32(out, pair.white);
      put_u32(out, pair.black);
    }
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("read failed: " + path.string());
  }
  return contents;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

namespace {

template <typename Parse>
auto parse_file(const std::filesystem::path& path, Parse parse) {
  const std::string bytes = read_file(path);
  try {
    return parse(bytes);
  } catch (const ParseError& e) {
    throw ParseError(e.unit(), e.position(), path.string() + ": " + e.detail());
  }
}

}  // namespace

Bitmap read_pbm(const std::filesystem::path& path) {
  return parse_file(path, [](std::string_view b) { return parse_pbm(b); });
}

void write_pbm(const Bitmap& bitmap, const std::filesystem::path& path) {
  write_file(path, format_pbm(bitmap));
}

CompressedImage read_rldoc(const std::filesystem::path& path) {
  return parse_file(path, [](std::string_view b) { return parse_rldoc(b); });
}

void write_rldoc(const CompressedImage& image, const std::filesystem::path& path) {
  write_file(path, format_rldoc(image));
}

CompressedImage read_document(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".pbm") {
    return encode(read_pbm(path));
  }
  if (ext == ".rld") {
    return read_rldoc(path);
  }
  throw IoError("unsupported extension '" + ext + "' (expected .pbm or .rld): " + path.string());
}

}  // namespace rlfont
