#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexaug {

/// Raised when input bytes cannot be decoded under the declared encoding.
class DecodingError : public std::runtime_error {
 public:
  DecodingError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Malformed line in one of the TSV / segmentation file formats. Lines are 1-based.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateSurface : public FormatError {
 public:
  DuplicateSurface(std::size_t line, const std::string& surface)
      : FormatError(line, "duplicate surface '" + surface + "'"), surface_(surface) {}

  const std::string& surface() const noexcept { return surface_; }

 private:
  std::string surface_;
};

/// Hypothesis and gold segmentations are over different character sequences.
class MismatchedText : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key + ": " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace lexaug
