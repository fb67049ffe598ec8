#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lexaug/corpus.hpp"
#include "lexaug/tokenizer.hpp"

namespace lexaug {

/// mt19937_64 with portable bounded-integer and real draws (the standard distributions
/// are implementation-defined, which would break cross-platform reproducibility).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n). Requires n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

struct WeightedWord {
  std::u32string surface;
  double weight = 1.0;
};

struct SyntheticOptions {
  std::size_t length = 0;              // stop once the stream holds at least this many characters
  std::size_t words_per_sentence = 12;
  char32_t delimiter = U'。';
  std::uint64_t seed = 0;
};

struct SyntheticCorpus {
  CharStream stream;
  std::vector<Segmentation> gold;   // one per sentence, matching split_sentences(stream)
  std::vector<std::uint64_t> word_counts;  // occurrences of each lexicon entry
};

/// Samples words i.i.d. by weight and concatenates them, inserting the delimiter after every
/// `words_per_sentence` words. Throws std::invalid_argument on an empty lexicon or a
/// non-positive weight.
SyntheticCorpus generate_synthetic_corpus(std::span<const WeightedWord> lexicon, const SyntheticOptions& options);

struct PlantedLexiconOptions {
  std::size_t words = 200;
  std::size_t min_length = 2;
  std::size_t max_length = 6;
  double zipf_exponent = 1.0;
  std::uint64_t seed = 0;
};

/// Words over distinct CJK Unified Ideographs (no character is shared between words),
/// uniform lengths, weight 1 / rank^s.
std::vector<WeightedWord> make_planted_lexicon(const PlantedLexiconOptions& options);

}  // namespace lexaug
