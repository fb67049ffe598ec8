#include "lexaug/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace lexaug {

namespace {

constexpr std::uint64_t pair_key(char32_t a, char32_t b) noexcept {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

bool pair_less(const PositionalBigram& a, const PositionalBigram& b) noexcept {
  return pair_key(a.first, a.second) < pair_key(b.first, b.second);
}

using Wide = __int128;

}  // namespace

std::uint64_t UnigramTable::count(char32_t c) const {
  auto it = counts.find(c);
  return it == counts.end() ? 0 : it->second;
}

void UnigramTable::merge(const UnigramTable& other) {
  for (const auto& [c, n] : other.counts) counts[c] += n;
  total += other.total;
}

UnigramTable count_unigrams(std::span<const Sentence> sentences) {
  UnigramTable table;
  for (const auto& s : sentences) {
    for (char32_t c : s.text) ++table.counts[c];
    table.total += s.text.size();
  }
  return table;
}

std::vector<PositionalBigram> count_positional_bigrams(std::span<const Sentence> sentences, int window) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  const std::size_t slots = 2 * static_cast<std::size_t>(window);

  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::pair<char32_t, char32_t>> pairs;
  std::vector<std::uint64_t> pool;

  auto bump = [&](char32_t a, char32_t b, int d) {
    auto [it, inserted] = index.try_emplace(pair_key(a, b), pairs.size());
    if (inserted) {
      pairs.emplace_back(a, b);
      pool.resize(pool.size() + slots, 0);
    }
    ++pool[it->second * slots + PositionalBigram::slot(d, window)];
  };

  for (const auto& s : sentences) {
    const auto& t = s.text;
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (int d = 1; d <= window && i + static_cast<std::size_t>(d) < t.size(); ++d) {
        const char32_t a = t[i];
        const char32_t b = t[i + static_cast<std::size_t>(d)];
        bump(a, b, d);
        bump(b, a, -d);
      }
    }
  }

  std::vector<PositionalBigram> out(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto& bg = out[k];
    bg.first = pairs[k].first;
    bg.second = pairs[k].second;
    bg.window = window;
    bg.hist.assign(pool.begin() + static_cast<std::ptrdiff_t>(k * slots),
                   pool.begin() + static_cast<std::ptrdiff_t>((k + 1) * slots));
    for (auto h : bg.hist) bg.freq += h;
  }
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

std::vector<PositionalBigram> merge_bigram_counts(std::span<const PositionalBigram> a,
                                                  std::span<const PositionalBigram> b) {
  std::vector<PositionalBigram> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && pair_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || pair_less(b[j], a[i])) {
      out.push_back(b[j++]);
    } else {
      if (a[i].window != b[j].window) throw std::invalid_argument("merging tables with different windows");
      PositionalBigram sum = a[i++];
      const auto& other = b[j++];
      for (std::size_t k = 0; k < sum.hist.size(); ++k) sum.hist[k] += other.hist[k];
      sum.freq += other.freq;
      out.push_back(std::move(sum));
    }
  }
  return out;
}

std::vector<SignificantBigram> filter_significant_bigrams(std::span<const PositionalBigram> bigrams,
                                                          const SignificanceParams& params) {
  std::vector<SignificantBigram> out;
  std::size_t begin = 0;
  while (begin < bigrams.size()) {
    std::size_t end = begin;
    while (end < bigrams.size() && bigrams[end].first == bigrams[begin].first) ++end;

    // partner statistics for this first character, over pairs above the frequency floor
    Wide m = 0, s1 = 0, s2 = 0;
    for (std::size_t k = begin; k < end; ++k) {
      const Wide f = bigrams[k].freq;
      if (bigrams[k].freq < params.min_bigram_freq) continue;
      ++m;
      s1 += f;
      s2 += f * f;
    }
    const Wide dispersion = m * s2 - s1 * s1;  // m^2 * variance

    for (std::size_t k = begin; k < end; ++k) {
      const auto& bg = bigrams[k];
      if (bg.freq < params.min_bigram_freq || dispersion <= 0) continue;

      const double strength =
          static_cast<double>(m * static_cast<Wide>(bg.freq) - s1) / std::sqrt(static_cast<double>(dispersion));
      if (!(strength >= params.k0)) continue;

      const Wide n = static_cast<Wide>(bg.hist.size());
      Wide sq = 0;
      for (auto h : bg.hist) sq += static_cast<Wide>(h) * h;
      const Wide spread_scaled = n * sq - static_cast<Wide>(bg.freq) * bg.freq;  // n^2 * spread
      const double spread = static_cast<double>(spread_scaled) / static_cast<double>(n * n);
      if (!(spread >= params.U0)) continue;

      const double threshold = params.k1 * std::sqrt(static_cast<double>(spread_scaled));
      BigramStats stats{strength, spread, {}};
      for (std::size_t slot = 0; slot < bg.hist.size(); ++slot) {
        const Wide excess = n * static_cast<Wide>(bg.hist[slot]) - static_cast<Wide>(bg.freq);
        if (static_cast<double>(excess) >= threshold) {
          stats.peaks.push_back(PositionalBigram::distance_at(slot, bg.window));
        }
      }
      if (!stats.peaks.empty()) out.push_back({bg, std::move(stats)});
    }
    begin = end;
  }
  return out;
}

std::vector<SignificantBigram> keep_mutual(std::span<const SignificantBigram> significant) {
  std::unordered_set<std::uint64_t> present;
  for (const auto& s : significant) present.insert(pair_key(s.bigram.first, s.bigram.second));
  std::vector<SignificantBigram> out;
  for (const auto& s : significant) {
    if (present.contains(pair_key(s.bigram.second, s.bigram.first))) out.push_back(s);
  }
  return out;
}

std::string_view to_string(Stage stage) noexcept {
  return stage == Stage::AdjacentBigram ? "adjacent" : "expanded";
}

std::vector<NGramCandidate> extract_adjacent_bigrams(std::span<const SignificantBigram> significant) {
  std::vector<NGramCandidate> out;
  for (const auto& s : significant) {
    const auto& peaks = s.stats.peaks;
    if (std::find(peaks.begin(), peaks.end(), 1) == peaks.end()) continue;
    std::u32string surface{s.bigram.first, s.bigram.second};
    if (!all_ideographs(surface)) continue;
    out.push_back({std::move(surface), s.bigram.at(1), Stage::AdjacentBigram, std::nullopt});
  }
  return out;
}

std::vector<NGramCandidate> dedup_by_surface(std::span<const NGramCandidate> candidates) {
  std::vector<NGramCandidate> out;
  std::unordered_map<std::u32string, std::size_t> seen;
  for (const auto& c : candidates) {
    auto [it, inserted] = seen.try_emplace(c.surface, out.size());
    if (inserted) {
      out.push_back(c);
    } else if (c.freq > out[it->second].freq) {
      out[it->second] = c;
    }
  }
  return out;
}

std::vector<NGramCandidate> prune_subsumed(std::span<const NGramCandidate> candidates, double ratio) {
  std::unordered_map<std::u32string, std::uint64_t> freq;
  for (const auto& c : candidates) {
    auto& f = freq[c.surface];
    f = std::max(f, c.freq);
  }
  std::unordered_set<std::u32string> subsumed;
  for (const auto& c : candidates) {
    const auto& s = c.surface;
    for (std::size_t len = 2; len < s.size(); ++len) {
      for (std::size_t pos = 0; pos + len <= s.size(); ++pos) {
        auto sub = s.substr(pos, len);
        auto it = freq.find(sub);
        if (it != freq.end() && static_cast<double>(c.freq) >= ratio * static_cast<double>(it->second)) {
          subsumed.insert(std::move(sub));
        }
      }
    }
  }
  std::vector<NGramCandidate> out;
  for (const auto& c : candidates) {
    if (!subsumed.contains(c.surface)) out.push_back(c);
  }
  return out;
}

void sort_candidates(std::vector<NGramCandidate>& candidates) {
  std::sort(candidates.begin(), candidates.end(), [](const NGramCandidate& a, const NGramCandidate& b) {
    if (a.surface.size() != b.surface.size()) return a.surface.size() < b.surface.size();
    if (a.freq != b.freq) return a.freq > b.freq;
    return a.surface < b.surface;
  });
}

std::size_t NGramBuckets::total() const noexcept {
  std::size_t n = 0;
  for (const auto& b : buckets) n += b.size();
  return n;
}

NGramBuckets partition_by_length(std::span<const NGramCandidate> candidates) {
  NGramBuckets out;
  for (auto& c : dedup_by_surface(candidates)) {
    if (c.surface.size() < 2) continue;
    out[length_class(c.surface.size())].push_back(std::move(c));
  }
  return out;
}

ExtractionResult run_extraction(std::span<const Sentence> sentences, const ExtractionParams& params) {
  ExtractionResult result;
  result.unigrams = count_unigrams(sentences);
  const auto bigrams = count_positional_bigrams(sentences, params.window);
  result.bigram_count = bigrams.size();

  result.significant = filter_significant_bigrams(bigrams, params.significance);
  if (params.mutual) result.significant = keep_mutual(result.significant);

  auto candidates = extract_adjacent_bigrams(result.significant);
  auto expanded = expand_ngrams(sentences, result.significant, params.expansion);
  candidates.insert(candidates.end(), std::make_move_iterator(expanded.begin()),
                    std::make_move_iterator(expanded.end()));
  candidates = dedup_by_surface(candidates);
  if (params.prune_subsumed) candidates = prune_subsumed(candidates, params.subsume_ratio);
  sort_candidates(candidates);

  result.buckets = partition_by_length(candidates);
  result.candidates = std::move(candidates);
  return result;
}

}  // namespace lexaug
