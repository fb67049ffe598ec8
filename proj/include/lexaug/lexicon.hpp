#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexaug/extraction.hpp"

namespace lexaug {

inline constexpr int kMinCategory = 1;
inline constexpr int kMaxCategory = 5;

enum class Source { Original, Extracted };

std::string_view to_string(Source source) noexcept;

struct LexEntry {
  std::u32string surface;
  int freq_cat = kMinCategory;
  Source source = Source::Original;

  friend bool operator==(const LexEntry&, const LexEntry&) = default;
};

class Lexicon {
 public:
  using Map = std::map<std::u32string, LexEntry, std::less<>>;

  /// False (and no change) if the surface is already present.
  /// Throws std::invalid_argument on an empty surface or out-of-range category.
  bool insert(LexEntry entry);

  const LexEntry* find(std::u32string_view surface) const;
  bool contains(std::u32string_view surface) const { return find(surface) != nullptr; }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }

  /// Longest surface in characters, 0 when empty.
  std::size_t max_length() const noexcept { return max_length_; }

  friend bool operator==(const Lexicon& a, const Lexicon& b) { return a.entries_ == b.entries_; }

 private:
  friend struct LexiconEditor;
  Map entries_;
  std::size_t max_length_ = 0;
};

/// Equal-mass quintiles over log(raw frequency) of a candidate distribution.
class FrequencyScale {
 public:
  /// Throws std::invalid_argument on an empty distribution or a zero frequency.
  static FrequencyScale fit(std::span<const std::uint64_t> raw_freqs);

  /// Values at or below the observed minimum map to 1, at or above the maximum to 5,
  /// otherwise 1 + the number of quintile boundaries strictly below log(raw).
  int category(std::uint64_t raw) const;

  /// log-frequency boundaries at the 20/40/60/80% quantiles (linear interpolation).
  const std::array<double, 4>& boundaries() const noexcept { return boundaries_; }

 private:
  std::uint64_t min_ = 0;
  std::uint64_t max_ = 0;
  std::array<double, 4> boundaries_{};
};

int scale_frequency(std::uint64_t raw_freq, const FrequencyScale& scale);

/// Stoplist characters are high-frequency function characters that should not open or close a word.
inline constexpr std::u32string_view kDefaultStoplist = U"的是了在";

/// Drops candidates below min_freq and those beginning or ending with a stoplist character.
std::vector<NGramCandidate> filter_candidates(std::span<const NGramCandidate> candidates,
                                              std::uint64_t min_freq, std::u32string_view stoplist);

/// Scales each candidate's raw frequency against the distribution of the set itself.
std::vector<LexEntry> scale_candidates(std::span<const NGramCandidate> candidates);

struct AugmentReport {
  std::size_t old_size = 0;
  std::size_t additions = 0;   // unique surfaces offered
  std::size_t new_count = 0;   // surfaces not previously present
  std::size_t collisions = 0;  // surfaces already present
  std::size_t new_size = 0;

  /// Relative growth in percent.
  double growth_percent() const noexcept;
  /// Stable key=value lines.
  std::string to_key_values() const;
};

struct Augmented {
  Lexicon lexicon;
  AugmentReport report;
};

/// Merges scaled second-stage entries and first-stage bigrams (entering at category 1).
/// Colliding surfaces keep the higher category and their original source.
Augmented augment(const Lexicon& dict, std::span<const LexEntry> stage2,
                  std::span<const NGramCandidate> stage1_bigrams);

/// Dictionary TSV: surface<TAB>freq_cat<TAB>source, sorted by surface.
/// A two-column row (no source) is read as an original entry.
Lexicon parse_lexicon(std::string_view text);
std::string format_lexicon(const Lexicon& lexicon);

Lexicon load_lexicon(const std::filesystem::path& path);
void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path);

}  // namespace lexaug
