#include "lexaug/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lexaug/errors.hpp"
#include "lexaug/io.hpp"
#include "lexaug/utf8.hpp"

namespace lexaug {

struct LexiconEditor {
  static void raise_to(Lexicon& lex, std::u32string_view surface, int cat) {
    auto it = lex.entries_.find(surface);
    it->second.freq_cat = std::max(it->second.freq_cat, cat);
  }
};

std::string_view to_string(Source source) noexcept {
  return source == Source::Original ? "original" : "extracted";
}

bool Lexicon::insert(LexEntry entry) {
  if (entry.surface.empty()) throw std::invalid_argument("empty surface");
  if (entry.freq_cat < kMinCategory || entry.freq_cat > kMaxCategory) {
    throw std::invalid_argument("frequency category out of range");
  }
  const std::size_t len = entry.surface.size();
  auto key = entry.surface;
  const bool inserted = entries_.try_emplace(std::move(key), std::move(entry)).second;
  if (inserted) max_length_ = std::max(max_length_, len);
  return inserted;
}

const LexEntry* Lexicon::find(std::u32string_view surface) const {
  auto it = entries_.find(surface);
  return it == entries_.end() ? nullptr : &it->second;
}

FrequencyScale FrequencyScale::fit(std::span<const std::uint64_t> raw_freqs) {
  if (raw_freqs.empty()) throw std::invalid_argument("empty frequency distribution");
  std::vector<double> logs;
  logs.reserve(raw_freqs.size());
  for (auto f : raw_freqs) {
    if (f == 0) throw std::invalid_argument("zero frequency in distribution");
    logs.push_back(std::log(static_cast<double>(f)));
  }
  std::sort(logs.begin(), logs.end());

  FrequencyScale scale;
  scale.min_ = *std::min_element(raw_freqs.begin(), raw_freqs.end());
  scale.max_ = *std::max_element(raw_freqs.begin(), raw_freqs.end());
  const double last = static_cast<double>(logs.size() - 1);
  for (int k = 1; k <= 4; ++k) {
    const double pos = last * k / 5.0;
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, logs.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    scale.boundaries_[static_cast<std::size_t>(k - 1)] = logs[lo] + frac * (logs[hi] - logs[lo]);
  }
  return scale;
}

int FrequencyScale::category(std::uint64_t raw) const {
  if (raw <= min_) return kMinCategory;
  if (raw >= max_) return kMaxCategory;
  const double x = std::log(static_cast<double>(raw));
  int cat = kMinCategory;
  for (double b : boundaries_) {
    if (x > b) ++cat;
  }
  return cat;
}

int scale_frequency(std::uint64_t raw_freq, const FrequencyScale& scale) { return scale.category(raw_freq); }

std::vector<NGramCandidate> filter_candidates(std::span<const NGramCandidate> candidates,
                                              std::uint64_t min_freq, std::u32string_view stoplist) {
  auto stopped = [&](char32_t c) { return stoplist.find(c) != std::u32string_view::npos; };
  std::vector<NGramCandidate> out;
  for (const auto& c : candidates) {
    if (c.freq < min_freq || c.surface.empty()) continue;
    if (stopped(c.surface.front()) || stopped(c.surface.back())) continue;
    out.push_back(c);
  }
  return out;
}

std::vector<LexEntry> scale_candidates(std::span<const NGramCandidate> candidates) {
  if (candidates.empty()) return {};
  std::vector<std::uint64_t> freqs;
  freqs.reserve(candidates.size());
  for (const auto& c : candidates) freqs.push_back(c.freq);
  const auto scale = FrequencyScale::fit(freqs);
  std::vector<LexEntry> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) out.push_back({c.surface, scale.category(c.freq), Source::Extracted});
  return out;
}

double AugmentReport::growth_percent() const noexcept {
  if (old_size == 0) return 0.0;
  return 100.0 * static_cast<double>(new_size - old_size) / static_cast<double>(old_size);
}

std::string AugmentReport::to_key_values() const {
  std::ostringstream out;
  out << "old_size=" << old_size << '\n'
      << "additions=" << additions << '\n'
      << "new=" << new_count << '\n'
      << "collisions=" << collisions << '\n'
      << "new_size=" << new_size << '\n';
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "growth_pct=" << growth_percent() << '\n';
  return out.str();
}

Augmented augment(const Lexicon& dict, std::span<const LexEntry> stage2,
                  std::span<const NGramCandidate> stage1_bigrams) {
  // best category per offered surface
  std::map<std::u32string, int> offered;
  for (const auto& e : stage2) {
    auto& cat = offered[e.surface];
    cat = std::max(cat, e.freq_cat);
  }
  for (const auto& c : stage1_bigrams) {
    auto& cat = offered[c.surface];
    cat = std::max(cat, kMinCategory);
  }

  Augmented out{dict, {}};
  out.report.old_size = dict.size();
  out.report.additions = offered.size();
  for (const auto& [surface, cat] : offered) {
    if (out.lexicon.contains(surface)) {
      ++out.report.collisions;
      LexiconEditor::raise_to(out.lexicon, surface, cat);
    } else {
      out.lexicon.insert({surface, cat, Source::Extracted});
      ++out.report.new_count;
    }
  }
  out.report.new_size = out.lexicon.size();
  return out;
}

Lexicon parse_lexicon(std::string_view text) {
  Lexicon lex;
  const auto rows = io::lines(text);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const std::size_t line = n + 1;
    if (rows[n].empty()) continue;
    const auto fields = io::split(rows[n], "\t");
    if (fields.size() != 2 && fields.size() != 3) throw FormatError(line, "expected 2 or 3 tab-separated fields");

    LexEntry entry;
    try {
      entry.surface = utf8::decode(fields[0]);
    } catch (const DecodingError& e) {
      throw FormatError(line, e.what());
    }
    if (entry.surface.empty()) throw FormatError(line, "empty surface");
    const auto cat = io::parse_int(fields[1]);
    if (!cat || *cat < kMinCategory || *cat > kMaxCategory) {
      throw FormatError(line, "freq_cat must be an integer in 1..5");
    }
    entry.freq_cat = static_cast<int>(*cat);
    if (fields.size() == 3) {
      if (fields[2] == "original") {
        entry.source = Source::Original;
      } else if (fields[2] == "extracted") {
        entry.source = Source::Extracted;
      } else {
        throw FormatError(line, "unknown source '" + std::string(fields[2]) + "'");
      }
    }
    const std::string surface(fields[0]);
    if (!lex.insert(std::move(entry))) throw DuplicateSurface(line, surface);
  }
  return lex;
}

std::string format_lexicon(const Lexicon& lexicon) {
  std::string out;
  for (const auto& [surface, entry] : lexicon) {
    out += utf8::encode(surface);
    out += '\t';
    out += std::to_string(entry.freq_cat);
    out += '\t';
    out += to_string(entry.source);
    out += '\n';
  }
  return out;
}

Lexicon load_lexicon(const std::filesystem::path& path) { return parse_lexicon(io::read_file(path)); }

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
  io::write_file_atomic(path, format_lexicon(lexicon));
}

}  // namespace lexaug
