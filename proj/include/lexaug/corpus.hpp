#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexaug {

// Block-based classes:
//   Ideograph    CJK Unified Ideographs and Extension A
//   Punctuation  CJK Symbols and Punctuation, Halfwidth/Fullwidth Forms, ASCII punctuation
//   AsciiMarkup  remaining printable ASCII (letters, digits, space)
//   Other        everything else, including control characters
enum class CharClass { Ideograph, Punctuation, AsciiMarkup, Other };

CharClass classify_char(char32_t cp) noexcept;
std::string_view to_string(CharClass cls) noexcept;

struct Char {
  char32_t code = 0;
  CharClass cls = CharClass::Other;

  friend bool operator==(const Char&, const Char&) = default;
};

struct CharStream {
  std::vector<Char> chars;
  std::string source_id;

  std::size_t size() const noexcept { return chars.size(); }
  bool empty() const noexcept { return chars.empty(); }
  std::u32string text() const;
};

CharStream make_stream(std::u32string_view text, std::string source_id = {});

/// Decodes raw bytes. "utf-8" is decoded in-process; any other label is handed to iconv.
CharStream load_corpus(std::string_view bytes, std::string_view encoding = "utf-8",
                       std::string source_id = {});

/// Inverse of load_corpus: byte-identical for anything load_corpus accepted.
std::string save_corpus(const CharStream& stream, std::string_view encoding = "utf-8");

/// Reads a file, or every regular file of a directory in lexicographic path order.
CharStream read_corpus(const std::filesystem::path& path, std::string_view encoding = "utf-8");

CharStream concat(std::span<const CharStream> shards, std::string source_id = {});

/// A delimiter-free span of a stream. `offset` locates it in the stream.
struct Sentence {
  std::size_t index = 0;
  std::size_t offset = 0;
  std::u32string text;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct DelimiterSet {
  std::u32string chars;

  /// 。！？； newline (LF and CR) and ASCII . ! ?
  static DelimiterSet defaults();
  bool contains(char32_t cp) const noexcept;
};

std::vector<Sentence> split_sentences(const CharStream& stream,
                                      const DelimiterSet& delimiters = DelimiterSet::defaults());

/// True when every character of `text` is an ideograph.
bool all_ideographs(std::u32string_view text) noexcept;

}  // namespace lexaug
