#include "lexaug/tokenizer.hpp"

#include <algorithm>
#include <thread>

#include "lexaug/errors.hpp"
#include "lexaug/io.hpp"
#include "lexaug/utf8.hpp"

namespace lexaug {

namespace {

struct PathCost {
  std::size_t tokens = 0;
  long score = 0;
};

Token make_token(std::u32string_view text, std::size_t start, std::size_t len, const LexEntry* entry) {
  return {std::u32string(text.substr(start, len)), start, start + len, entry != nullptr};
}

Segmentation shortest_path(std::u32string_view text, const Lexicon& dict, std::size_t max_match) {
  const std::size_t n = text.size();
  std::vector<PathCost> best(n + 1);
  std::vector<std::size_t> step(n + 1, 0);

  for (std::size_t i = n; i-- > 0;) {
    const std::size_t limit = std::min(max_match, n - i);
    bool have = false;
    for (std::size_t len = 1; len <= limit; ++len) {
      const LexEntry* entry = dict.find(text.substr(i, len));
      if (len > 1 && entry == nullptr) continue;
      const PathCost cost{1 + best[i + len].tokens, (entry ? entry->freq_cat : 0) + best[i + len].score};
      // len ascends, so accepting ties prefers the longer leftmost token
      const bool better = !have || cost.tokens < best[i].tokens ||
                          (cost.tokens == best[i].tokens && cost.score >= best[i].score);
      if (better) {
        best[i] = cost;
        step[i] = len;
        have = true;
      }
    }
  }

  Segmentation seg;
  for (std::size_t i = 0; i < n; i += step[i]) {
    seg.tokens.push_back(make_token(text, i, step[i], dict.find(text.substr(i, step[i]))));
  }
  return seg;
}

Segmentation greedy(std::u32string_view text, const Lexicon& dict, std::size_t max_match) {
  Segmentation seg;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t take = 1;
    for (std::size_t len = std::min(max_match, text.size() - i); len > 1; --len) {
      if (dict.contains(text.substr(i, len))) {
        take = len;
        break;
      }
    }
    seg.tokens.push_back(make_token(text, i, take, dict.find(text.substr(i, take))));
    i += take;
  }
  return seg;
}

}  // namespace

std::u32string Segmentation::text() const {
  std::u32string out;
  for (const auto& t : tokens) out += t.surface;
  return out;
}

std::vector<std::size_t> Segmentation::boundaries() const {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  for (std::size_t k = 0; k + 1 < tokens.size(); ++k) {
    pos += tokens[k].surface.size();
    out.push_back(pos);
  }
  return out;
}

Segmentation tokenize(std::u32string_view text, const Lexicon& dict, const TokenizerOptions& options,
                      std::size_t sentence_index) {
  const std::size_t max_match = std::max<std::size_t>(1, options.max_match);
  Segmentation seg = options.strategy == Strategy::Greedy ? greedy(text, dict, max_match)
                                                          : shortest_path(text, dict, max_match);
  seg.sentence_index = sentence_index;
  return seg;
}

std::vector<Segmentation> tokenize_corpus(std::span<const Sentence> sentences, const Lexicon& dict,
                                          const TokenizerOptions& options, unsigned threads) {
  std::vector<Segmentation> out(sentences.size());
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, sentences.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < sentences.size(); ++i) out[i] = tokenize(sentences[i], dict, options);
    return out;
  }
  const std::size_t chunk = (sentences.size() + workers - 1) / workers;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(sentences.size(), begin + chunk);
      pool.emplace_back([&, begin, end] {
        for (std::size_t i = begin; i < end; ++i) out[i] = tokenize(sentences[i], dict, options);
      });
    }
  }
  return out;
}

std::size_t total_tokens(std::span<const Segmentation> segs) noexcept {
  std::size_t n = 0;
  for (const auto& s : segs) n += s.tokens.size();
  return n;
}

TokenTypes token_types(std::span<const Segmentation> segs) {
  TokenTypes out;
  for (const auto& s : segs) {
    for (const auto& t : s.tokens) {
      if (t.surface.size() >= 2) out[index_of(length_class(t.surface.size()))].insert(t.surface);
    }
  }
  return out;
}

std::string format_segmentation(const Segmentation& seg, std::string_view separator, bool mark_unknown) {
  std::string out;
  for (std::size_t k = 0; k < seg.tokens.size(); ++k) {
    if (k > 0) out += separator;
    out += utf8::encode(seg.tokens[k].surface);
    if (mark_unknown && !seg.tokens[k].known) out += '*';
  }
  return out;
}

Segmentation parse_segmentation(std::string_view line, std::string_view separator, bool strip_marks,
                                std::size_t sentence_index, std::size_t line_number) {
  Segmentation seg;
  seg.sentence_index = sentence_index;
  if (line.empty()) return seg;
  std::size_t pos = 0;
  for (auto field : io::split(line, separator)) {
    bool known = true;
    if (strip_marks && field.size() >= 2 && field.back() == '*') {
      field.remove_suffix(1);
      known = false;
    }
    std::u32string surface;
    try {
      surface = utf8::decode(field);
    } catch (const DecodingError& e) {
      throw FormatError(line_number, e.what());
    }
    if (surface.empty()) throw FormatError(line_number, "empty token");
    const std::size_t len = surface.size();
    seg.tokens.push_back({std::move(surface), pos, pos + len, known});
    pos += len;
  }
  return seg;
}

std::vector<Segmentation> parse_segmentation_file(std::string_view text, std::string_view separator,
                                                  bool strip_marks) {
  std::vector<Segmentation> out;
  const auto rows = io::lines(text);
  out.reserve(rows.size());
  for (std::size_t n = 0; n < rows.size(); ++n) {
    out.push_back(parse_segmentation(rows[n], separator, strip_marks, n, n + 1));
  }
  return out;
}

}  // namespace lexaug
