#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "lexaug/extraction.hpp"

namespace lexaug {

namespace {

struct Position {
  std::uint32_t sentence;
  std::uint32_t offset;
};

class PositionIndex {
 public:
  explicit PositionIndex(std::span<const Sentence> sentences) : sentences_(sentences) {
    for (std::size_t s = 0; s < sentences.size(); ++s) {
      const auto& text = sentences[s].text;
      for (std::size_t i = 0; i < text.size(); ++i) {
        positions_[text[i]].push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(i)});
      }
    }
  }

  std::span<const Position> of(char32_t c) const {
    auto it = positions_.find(c);
    if (it == positions_.end()) return {};
    return it->second;
  }

  /// Character at offset `delta` from `p`, or 0 outside the sentence.
  char32_t at(Position p, int delta) const {
    const auto& text = sentences_[p.sentence].text;
    const auto j = static_cast<std::int64_t>(p.offset) + delta;
    if (j < 0 || j >= static_cast<std::int64_t>(text.size())) return 0;
    return text[static_cast<std::size_t>(j)];
  }

  std::uint64_t occurrences(std::u32string_view needle) const {
    if (needle.empty()) return 0;
    std::uint64_t n = 0;
    for (const auto& p : of(needle.front())) {
      const auto& text = sentences_[p.sentence].text;
      if (p.offset + needle.size() <= text.size() &&
          std::u32string_view(text).substr(p.offset, needle.size()) == needle) {
        ++n;
      }
    }
    return n;
  }

 private:
  std::span<const Sentence> sentences_;
  std::unordered_map<char32_t, std::vector<Position>> positions_;
};

// Most frequent character at one concordance column; ties go to the smaller code point.
std::pair<char32_t, std::size_t> column_mode(std::vector<char32_t>& column) {
  std::sort(column.begin(), column.end());
  char32_t best = 0;
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < column.size();) {
    std::size_t j = i;
    while (j < column.size() && column[j] == column[i]) ++j;
    if (column[i] != 0 && j - i > best_count) {
      best = column[i];
      best_count = j - i;
    }
    i = j;
  }
  return {best, best_count};
}

}  // namespace

std::uint64_t count_occurrences(std::span<const Sentence> sentences, std::u32string_view needle) {
  if (needle.empty()) return 0;
  std::uint64_t n = 0;
  for (const auto& s : sentences) {
    std::u32string_view text(s.text);
    for (auto pos = text.find(needle); pos != std::u32string_view::npos; pos = text.find(needle, pos + 1)) ++n;
  }
  return n;
}

std::vector<NGramCandidate> expand_ngrams(std::span<const Sentence> sentences,
                                          std::span<const SignificantBigram> significant,
                                          const ExpansionParams& params) {
  const PositionIndex index(sentences);

  std::vector<NGramCandidate> found;
  std::unordered_map<std::u32string, std::size_t> seen;
  std::vector<Position> instances;
  std::vector<char32_t> column;

  for (const auto& sig : significant) {
    const auto& bg = sig.bigram;
    const int window = bg.window;
    for (int d : sig.stats.peaks) {
      instances.clear();
      for (const auto& p : index.of(bg.first)) {
        if (index.at(p, d) == bg.second) instances.push_back(p);
      }
      if (instances.empty()) continue;
      const double needed = params.dominance * static_cast<double>(instances.size());

      // dominant character per relative position -window..+window (0 = none)
      std::vector<char32_t> kept(2 * static_cast<std::size_t>(window) + 1, 0);
      for (int rel = -window; rel <= window; ++rel) {
        column.clear();
        for (const auto& p : instances) column.push_back(index.at(p, rel));
        const auto [c, count] = column_mode(column);
        if (c != 0 && static_cast<double>(count) >= needed) kept[static_cast<std::size_t>(rel + window)] = c;
      }
      auto is_kept = [&](int rel) {
        return rel >= -window && rel <= window && kept[static_cast<std::size_t>(rel + window)] != 0;
      };

      int lo = std::min(0, d), hi = std::max(0, d);
      bool contiguous = true;
      for (int rel = lo; rel <= hi; ++rel) contiguous = contiguous && is_kept(rel);
      if (!contiguous) continue;
      while (is_kept(lo - 1)) --lo;
      while (is_kept(hi + 1)) ++hi;

      const auto length = static_cast<std::size_t>(hi - lo + 1);
      if (length < 3 || length > params.max_length) continue;
      std::u32string surface;
      for (int rel = lo; rel <= hi; ++rel) surface.push_back(kept[static_cast<std::size_t>(rel + window)]);
      if (!all_ideographs(surface)) continue;

      if (seen.try_emplace(surface, found.size()).second) {
        found.push_back({std::move(surface), 0, Stage::Expanded, Anchor{bg.first, bg.second, d}});
      }
    }
  }

  std::vector<NGramCandidate> out;
  for (auto& c : found) {
    c.freq = index.occurrences(c.surface);
    if (c.freq >= params.min_freq) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace lexaug
