#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "lexaug/corpus.hpp"
#include "lexaug/extraction.hpp"
#include "lexaug/lexicon.hpp"
#include "lexaug/tokenizer.hpp"

namespace lexaug {

/// Every tunable of the pipeline. Text form is one `key = value` per line, `#` starts a
/// comment, string values may be double-quoted with \n \r \t \\ \" escapes.
struct Config {
  int window = kDefaultWindow;
  double k0 = 1.0;
  double U0 = 10.0;
  double k1 = 1.0;
  double T = 0.75;
  std::uint64_t min_bigram_freq = 8;
  std::uint64_t min_ngram_freq = 8;
  std::uint64_t min_candidate_freq = 11;
  bool mutual_strength = true;
  bool prune_subsumed = true;
  double subsume_ratio = 0.9;
  std::u32string stoplist{kDefaultStoplist};
  std::u32string delimiters = DelimiterSet::defaults().chars;
  Strategy tokenizer_strategy = Strategy::ShortestPath;
  std::size_t max_match = 10;
  std::uint64_t seed = 1;
  std::string encoding = "utf-8";
  std::string separator = "/";
  bool mark_unknown = false;
  std::size_t words_per_sentence = 12;
  unsigned threads = 1;

  /// Sets one key from its text form. Throws ConfigError naming the key.
  void set(std::string_view key, std::string_view value);
  /// Throws ConfigError naming the first invalid key.
  void validate() const;

  ExtractionParams extraction_params() const;
  TokenizerOptions tokenizer_options() const;
  DelimiterSet delimiter_set() const { return {delimiters}; }

  /// Canonical serialization, parseable by parse_config.
  std::string to_string() const;
};

Config parse_config(std::string_view text);
Config load_config(const std::filesystem::path& path);

}  // namespace lexaug
