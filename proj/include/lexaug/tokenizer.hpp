#pragma once

#include <array>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexaug/corpus.hpp"
#include "lexaug/length_class.hpp"
#include "lexaug/lexicon.hpp"

namespace lexaug {

struct Token {
  std::u32string surface;
  std::size_t start = 0;
  std::size_t end = 0;
  bool known = false;  // dictionary hit, as opposed to single-character fallback

  friend bool operator==(const Token&, const Token&) = default;
};

struct Segmentation {
  std::vector<Token> tokens;
  std::size_t sentence_index = 0;

  std::u32string text() const;
  /// Interior boundary offsets (between characters), ascending.
  std::vector<std::size_t> boundaries() const;

  friend bool operator==(const Segmentation&, const Segmentation&) = default;
};

enum class Strategy {
  ShortestPath,  // fewest tokens, then highest category sum, then longest leftmost token
  Greedy,        // forward longest match
};

struct TokenizerOptions {
  Strategy strategy = Strategy::ShortestPath;
  std::size_t max_match = 10;
};

Segmentation tokenize(std::u32string_view text, const Lexicon& dict, const TokenizerOptions& options = {},
                      std::size_t sentence_index = 0);

inline Segmentation tokenize(const Sentence& sentence, const Lexicon& dict, const TokenizerOptions& options = {}) {
  return tokenize(sentence.text, dict, options, sentence.index);
}

/// Per-sentence tokenization split across `threads` workers; output order follows input order.
std::vector<Segmentation> tokenize_corpus(std::span<const Sentence> sentences, const Lexicon& dict,
                                          const TokenizerOptions& options = {}, unsigned threads = 1);

std::size_t total_tokens(std::span<const Segmentation> segs) noexcept;

/// Unique multi-character token surfaces per length class.
using TokenTypes = std::array<std::set<std::u32string>, 6>;

TokenTypes token_types(std::span<const Segmentation> segs);

/// One sentence per line; `mark_unknown` appends '*' to fallback tokens.
std::string format_segmentation(const Segmentation& seg, std::string_view separator, bool mark_unknown);

/// Inverse of format_segmentation. With `strip_marks`, a trailing '*' after a non-empty token
/// is removed and the token is flagged unknown. Empty tokens are a FormatError.
Segmentation parse_segmentation(std::string_view line, std::string_view separator, bool strip_marks,
                                std::size_t sentence_index = 0, std::size_t line_number = 0);

std::vector<Segmentation> parse_segmentation_file(std::string_view text, std::string_view separator,
                                                  bool strip_marks);

}  // namespace lexaug
