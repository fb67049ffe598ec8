#include "lexaug/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lexaug {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

SyntheticCorpus generate_synthetic_corpus(std::span<const WeightedWord> lexicon, const SyntheticOptions& options) {
  if (lexicon.empty()) throw std::invalid_argument("empty synthetic lexicon");
  std::vector<double> cumulative;
  cumulative.reserve(lexicon.size());
  double sum = 0.0;
  for (const auto& w : lexicon) {
    if (!(w.weight > 0.0) || !std::isfinite(w.weight)) throw std::invalid_argument("weights must be positive");
    if (w.surface.empty()) throw std::invalid_argument("empty word in synthetic lexicon");
    sum += w.weight;
    cumulative.push_back(sum);
  }
  const std::size_t per_sentence = std::max<std::size_t>(1, options.words_per_sentence);

  Rng rng(options.seed);
  SyntheticCorpus out;
  out.word_counts.assign(lexicon.size(), 0);
  std::u32string text;
  Segmentation current;
  auto close_sentence = [&] {
    current.sentence_index = out.gold.size();
    out.gold.push_back(std::move(current));
    current = {};
  };

  std::size_t offset_in_sentence = 0;
  while (text.size() < options.length) {
    const double target = rng.unit() * sum;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), lexicon.size() - 1);
    const auto& word = lexicon[k].surface;
    ++out.word_counts[k];
    text += word;
    current.tokens.push_back({word, offset_in_sentence, offset_in_sentence + word.size(), true});
    offset_in_sentence += word.size();
    if (current.tokens.size() == per_sentence) {
      text.push_back(options.delimiter);
      close_sentence();
      offset_in_sentence = 0;
    }
  }
  if (!current.tokens.empty()) close_sentence();

  out.stream = make_stream(text, "synthetic");
  return out;
}

std::vector<WeightedWord> make_planted_lexicon(const PlantedLexiconOptions& options) {
  constexpr char32_t kFirst = 0x4E00;
  constexpr char32_t kLast = 0x9FA5;
  if (options.min_length < 1 || options.min_length > options.max_length) {
    throw std::invalid_argument("invalid word length range");
  }
  const std::size_t pool_size = kLast - kFirst + 1;
  if (options.words * options.max_length > pool_size) throw std::invalid_argument("not enough distinct characters");

  Rng rng(options.seed);
  std::vector<std::size_t> lengths(options.words);
  std::size_t needed = 0;
  for (auto& len : lengths) {
    len = options.min_length + rng.below(options.max_length - options.min_length + 1);
    needed += len;
  }

  // partial Fisher-Yates over the ideograph range
  std::vector<char32_t> pool(pool_size);
  std::iota(pool.begin(), pool.end(), kFirst);
  for (std::size_t i = 0; i < needed; ++i) {
    const auto j = i + rng.below(pool_size - i);
    std::swap(pool[i], pool[j]);
  }

  std::vector<WeightedWord> out;
  out.reserve(options.words);
  std::size_t next = 0;
  for (std::size_t rank = 0; rank < options.words; ++rank) {
    std::u32string surface(pool.begin() + static_cast<std::ptrdiff_t>(next),
                           pool.begin() + static_cast<std::ptrdiff_t>(next + lengths[rank]));
    next += lengths[rank];
    out.push_back({std::move(surface), 1.0 / std::pow(static_cast<double>(rank + 1), options.zipf_exponent)});
  }
  return out;
}

}  // namespace lexaug
