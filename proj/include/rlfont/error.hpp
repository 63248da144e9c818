#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rlfont {

/// Base class for every recoverable input error raised by the library.
/// The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal invariant broken; the CLI maps this to exit code 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A compressed row whose runs do not sum to the image width.
class CorruptRowError : public Error {
 public:
  CorruptRowError(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}

  /// 1-based row index.
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Malformed file contents. `position` is a byte offset for binary formats
/// and a 1-based line number for text formats.
class ParseError : public Error {
 public:
  enum class Unit { Byte, Line };

  ParseError(Unit unit, std::uint64_t position, const std::string& what)
      : Error((unit == Unit::Byte ? "byte " : "line ") + std::to_string(position) + ": " +
              what),
        unit_(unit),
        position_(position),
        detail_(what) {}

  Unit unit() const noexcept { return unit_; }
  std::uint64_t position() const noexcept { return position_; }
  /// Message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Unit unit_;
  std::uint64_t position_;
  std::string detail_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class LayoutError : public Error {
 public:
  using Error::Error;
};

/// The differential profile has no usable base band.
class PeakError : public Error {
 public:
  using Error::Error;
};

/// The recovered text extent came out non-positive.
class ExtentError : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

class AlignmentError : public Error {
 public:
  using Error::Error;
};

}  // namespace rlfont
