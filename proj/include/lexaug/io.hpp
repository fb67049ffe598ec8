#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexaug::io {

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Splits on every occurrence of `sep`; an empty input yields one empty field.
std::vector<std::string_view> split(std::string_view text, std::string_view sep);

/// Lines without their terminators; a trailing newline does not produce an extra empty line.
std::vector<std::string_view> lines(std::string_view text);

std::optional<std::uint64_t> parse_uint(std::string_view s);
std::optional<std::int64_t> parse_int(std::string_view s);
std::optional<double> parse_double(std::string_view s);

}  // namespace lexaug::io
