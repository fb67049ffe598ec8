#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexaug/corpus.hpp"
#include "lexaug/length_class.hpp"

namespace lexaug {

inline constexpr int kDefaultWindow = 5;

struct UnigramTable {
  std::map<char32_t, std::uint64_t> counts;
  std::uint64_t total = 0;

  std::uint64_t count(char32_t c) const;
  void merge(const UnigramTable& other);

  friend bool operator==(const UnigramTable&, const UnigramTable&) = default;
};

UnigramTable count_unigrams(std::span<const Sentence> sentences);

/// Co-occurrence histogram of an ordered character pair. Slot layout for window w:
/// distances -w..-1 occupy slots 0..w-1, distances +1..+w occupy slots w..2w-1.
struct PositionalBigram {
  char32_t first = 0;
  char32_t second = 0;
  int window = kDefaultWindow;
  std::uint64_t freq = 0;
  std::vector<std::uint64_t> hist;

  std::uint64_t at(int distance) const { return hist[slot(distance, window)]; }

  static constexpr std::size_t slot(int distance, int window) noexcept {
    return distance < 0 ? static_cast<std::size_t>(distance + window)
                        : static_cast<std::size_t>(distance + window - 1);
  }
  static constexpr int distance_at(std::size_t slot, int window) noexcept {
    const int s = static_cast<int>(slot);
    return s < window ? s - window : s - window + 1;
  }

  friend bool operator==(const PositionalBigram&, const PositionalBigram&) = default;
};

/// Counts every ordered pair (w1, w2) at each distance 1 <= |d| <= window inside a sentence.
/// Output is sorted by (first, second).
std::vector<PositionalBigram> count_positional_bigrams(std::span<const Sentence> sentences,
                                                       int window = kDefaultWindow);

/// Sums two sorted count tables from disjoint shards of one corpus.
std::vector<PositionalBigram> merge_bigram_counts(std::span<const PositionalBigram> a,
                                                  std::span<const PositionalBigram> b);

struct SignificanceParams {
  double k0 = 1.0;   // strength floor
  double U0 = 10.0;  // spread floor
  double k1 = 1.0;   // peak height in standard deviations
  std::uint64_t min_bigram_freq = 8;
};

struct BigramStats {
  double strength = 0.0;
  double spread = 0.0;
  std::vector<int> peaks;
};

struct SignificantBigram {
  PositionalBigram bigram;
  BigramStats stats;
};

/// Keeps pairs that are strong collocates of their first character and sit at rigid distances.
///
/// Strength is the z-score of freq among all partners of `first` that clear min_bigram_freq
/// (population standard deviation; a zero deviation gives strength 0 and the pair is rejected).
/// Spread is the variance of the histogram over its 2w slots. A peak is a distance whose count
/// reaches freq/(2w) + k1*sqrt(spread). A pair is kept iff strength >= k0, spread >= U0 and it
/// has at least one peak. Input must be sorted by (first, second), as produced by counting.
std::vector<SignificantBigram> filter_significant_bigrams(std::span<const PositionalBigram> bigrams,
                                                          const SignificanceParams& params);

/// Keeps pairs whose mirror (second, first) is also significant, i.e. each character is a
/// strong collocate of the other. Peaks of a mirror are the negated peaks, so only strength differs.
std::vector<SignificantBigram> keep_mutual(std::span<const SignificantBigram> significant);

enum class Stage { AdjacentBigram, Expanded };

std::string_view to_string(Stage stage) noexcept;

struct Anchor {
  char32_t first = 0;
  char32_t second = 0;
  int distance = 0;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

struct NGramCandidate {
  std::u32string surface;
  std::uint64_t freq = 0;
  Stage stage = Stage::AdjacentBigram;
  std::optional<Anchor> anchor;  // Expanded only

  friend bool operator==(const NGramCandidate&, const NGramCandidate&) = default;
};

/// One candidate w1.w2 per significant pair peaking at d = +1, freq = hist[+1].
/// Pairs containing a non-ideograph are dropped.
std::vector<NGramCandidate> extract_adjacent_bigrams(std::span<const SignificantBigram> significant);

struct ExpansionParams {
  double dominance = 0.75;  // T
  std::uint64_t min_freq = 8;
  std::size_t max_length = 10;
};

/// Concordance expansion around every (pair, peak distance) of the significant set.
std::vector<NGramCandidate> expand_ngrams(std::span<const Sentence> sentences,
                                          std::span<const SignificantBigram> significant,
                                          const ExpansionParams& params);

/// Overlapping occurrences of `needle` inside single sentences.
std::uint64_t count_occurrences(std::span<const Sentence> sentences, std::u32string_view needle);

/// One entry per surface; the highest frequency wins, ties keep the first seen.
std::vector<NGramCandidate> dedup_by_surface(std::span<const NGramCandidate> candidates);

/// Drops a candidate when a longer candidate contains it and occurs at least ratio * its freq.
std::vector<NGramCandidate> prune_subsumed(std::span<const NGramCandidate> candidates, double ratio);

/// Canonical order: (length, -freq, surface).
void sort_candidates(std::vector<NGramCandidate>& candidates);

struct NGramBuckets {
  std::array<std::vector<NGramCandidate>, 6> buckets;

  const std::vector<NGramCandidate>& operator[](LengthClass c) const { return buckets[index_of(c)]; }
  std::vector<NGramCandidate>& operator[](LengthClass c) { return buckets[index_of(c)]; }
  std::size_t total() const noexcept;
};

NGramBuckets partition_by_length(std::span<const NGramCandidate> candidates);

struct ExtractionParams {
  int window = kDefaultWindow;
  SignificanceParams significance;
  ExpansionParams expansion;
  bool mutual = true;
  bool prune_subsumed = true;
  double subsume_ratio = 0.9;
};

struct ExtractionResult {
  UnigramTable unigrams;
  std::size_t bigram_count = 0;
  std::vector<SignificantBigram> significant;  // after the optional mutual filter
  std::vector<NGramCandidate> candidates;      // canonical order
  NGramBuckets buckets;
};

/// Full two-stage pipeline: counting, significance, adjacency, expansion, dedup, pruning.
ExtractionResult run_extraction(std::span<const Sentence> sentences, const ExtractionParams& params);

/// Candidate list TSV: surface, length, freq, stage, anchor-pair, anchor-distance.
std::string format_candidates(std::span<const NGramCandidate> candidates);
std::vector<NGramCandidate> parse_candidates(std::string_view text);

}  // namespace lexaug
