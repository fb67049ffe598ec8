#include "lexaug/eval.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>

#include "lexaug/errors.hpp"
#include "lexaug/io.hpp"
#include "lexaug/synthetic.hpp"
#include "lexaug/utf8.hpp"

namespace lexaug {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Correct: return "correct";
    case Verdict::Wrong: return "wrong";
    case Verdict::Unsure: return "unsure";
    case Verdict::Punctuation: return "punctuation";
  }
  return "wrong";
}

namespace {

template <typename Keep>
JudgmentStats collect(std::span<const Judgment> judgments, std::string_view evaluator, Keep keep) {
  JudgmentStats stats;
  std::set<std::u32string> seen;
  for (const auto& j : judgments) {
    if (j.evaluator != evaluator || !keep(j)) continue;
    if (!seen.insert(j.surface).second) {
      throw std::invalid_argument("evaluator " + j.evaluator + " judged '" + utf8::encode(j.surface) + "' twice");
    }
    ++stats.total;
    switch (j.verdict) {
      case Verdict::Correct: ++stats.correct; break;
      case Verdict::Wrong: ++stats.wrong; break;
      case Verdict::Unsure: ++stats.unsure; break;
      case Verdict::Punctuation: ++stats.punct; break;
    }
  }
  return stats;
}

}  // namespace

JudgmentStats judge_stats(std::span<const Judgment> judgments, std::string_view evaluator) {
  return collect(judgments, evaluator, [](const Judgment&) { return true; });
}

JudgmentStats judge_stats(std::span<const Judgment> judgments, std::string_view evaluator, LengthClass cls) {
  return collect(judgments, evaluator, [cls](const Judgment& j) {
    return j.surface.size() >= 2 && length_class(j.surface.size()) == cls;
  });
}

std::vector<std::string> evaluators(std::span<const Judgment> judgments) {
  std::vector<std::string> out;
  for (const auto& j : judgments) {
    if (std::find(out.begin(), out.end(), j.evaluator) == out.end()) out.push_back(j.evaluator);
  }
  return out;
}

std::vector<Judgment> parse_judgments(std::string_view text) {
  std::vector<Judgment> out;
  std::set<std::pair<std::string, std::u32string>> seen;
  const auto rows = io::lines(text);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const std::size_t line = n + 1;
    if (rows[n].empty()) continue;
    const auto fields = io::split(rows[n], "\t");
    if (fields.size() != 3) throw FormatError(line, "expected 3 tab-separated fields");
    Judgment j;
    try {
      j.surface = utf8::decode(fields[0]);
    } catch (const DecodingError& e) {
      throw FormatError(line, e.what());
    }
    if (j.surface.empty()) throw FormatError(line, "empty surface");

    std::string verdict;
    for (char c : fields[1]) verdict.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (verdict == "correct") {
      j.verdict = Verdict::Correct;
    } else if (verdict == "wrong") {
      j.verdict = Verdict::Wrong;
    } else if (verdict == "unsure") {
      j.verdict = Verdict::Unsure;
    } else if (verdict == "punctuation") {
      j.verdict = Verdict::Punctuation;
    } else {
      throw FormatError(line, "unknown verdict '" + std::string(fields[1]) + "'");
    }
    j.evaluator = std::string(fields[2]);
    if (j.evaluator.empty()) throw FormatError(line, "empty evaluator");
    if (!seen.emplace(j.evaluator, j.surface).second) {
      throw FormatError(line, "second verdict for the same surface and evaluator");
    }
    out.push_back(std::move(j));
  }
  return out;
}

std::string format_judgments(std::span<const Judgment> judgments) {
  std::string out;
  for (const auto& j : judgments) {
    out += utf8::encode(j.surface);
    out += '\t';
    out += to_string(j.verdict);
    out += '\t';
    out += j.evaluator;
    out += '\n';
  }
  return out;
}

PRARow& PRARow::operator+=(const PRARow& o) noexcept {
  token_types += o.token_types;
  candidates += o.candidates;
  in_text += o.in_text;
  augmented += o.augmented;
  return *this;
}

PRAReport pra_report(const NGramBuckets& candidates, const TokenTypes& reference, const Lexicon& dict,
                     std::span<const Judgment> judgments) {
  std::map<std::u32string, std::pair<std::uint64_t, std::uint64_t>> votes;  // correct, total
  for (const auto& j : judgments) {
    auto& v = votes[j.surface];
    if (j.verdict == Verdict::Correct) ++v.first;
    ++v.second;
  }
  auto human_correct = [&](const std::u32string& s) {
    auto it = votes.find(s);
    return it != votes.end() && 2 * it->second.first > it->second.second;
  };

  PRAReport report;
  for (auto cls : kLengthClasses) {
    auto& row = report.rows[index_of(cls)];
    const auto& ref = reference[index_of(cls)];
    row.token_types = ref.size();
    std::set<std::u32string> unique;
    for (const auto& c : candidates[cls]) unique.insert(c.surface);
    row.candidates = unique.size();
    for (const auto& s : unique) {
      if (ref.contains(s)) {
        ++row.in_text;
      } else if (human_correct(s) && !dict.contains(s)) {
        ++row.augmented;
      }
    }
    report.total += row;
  }
  return report;
}

SegEvalReport& SegEvalReport::operator+=(const SegEvalReport& o) noexcept {
  tokens += o.tokens;
  false_joins += o.false_joins;
  false_breaks += o.false_breaks;
  unattributed += o.unattributed;
  return *this;
}

SegEvalReport score_segmentation(const Segmentation& hyp, const Segmentation& gold) {
  if (hyp.text() != gold.text()) {
    throw MismatchedText("sentence " + std::to_string(gold.sentence_index) + ": hypothesis '" +
                         utf8::encode(hyp.text()) + "' does not match gold '" + utf8::encode(gold.text()) + "'");
  }
  const auto h = hyp.boundaries();
  const auto g = gold.boundaries();
  std::vector<std::size_t> diff;
  SegEvalReport r;
  r.tokens = hyp.tokens.size();
  std::set_difference(h.begin(), h.end(), g.begin(), g.end(), std::back_inserter(diff));
  r.false_breaks = diff.size();
  diff.clear();
  std::set_difference(g.begin(), g.end(), h.begin(), h.end(), std::back_inserter(diff));
  r.false_joins = diff.size();
  return r;
}

SegEvalReport score_segmentations(std::span<const Segmentation> hyp, std::span<const Segmentation> gold) {
  if (hyp.size() != gold.size()) {
    throw MismatchedText("hypothesis has " + std::to_string(hyp.size()) + " sentences, gold has " +
                         std::to_string(gold.size()));
  }
  SegEvalReport total;
  for (std::size_t i = 0; i < hyp.size(); ++i) total += score_segmentation(hyp[i], gold[i]);
  return total;
}

double error_reduction(double baseline_rate, double augmented_rate) noexcept {
  if (baseline_rate == 0.0) return 0.0;
  return (baseline_rate - augmented_rate) / baseline_rate;
}

double error_reduction(const SegEvalReport& baseline, const SegEvalReport& augmented) noexcept {
  return error_reduction(baseline.error_rate().value(), augmented.error_rate().value());
}

std::vector<Sentence> sample_test_set(std::span<const Sentence> sentences, std::size_t n, std::uint64_t seed) {
  if (n == 0) return {};
  if (sentences.empty()) throw std::invalid_argument("cannot sample from an empty corpus");
  Rng rng(seed);
  std::vector<Sentence> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(sentences[rng.below(sentences.size())]);
  return out;
}

}  // namespace lexaug
