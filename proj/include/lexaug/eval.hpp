#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexaug/corpus.hpp"
#include "lexaug/extraction.hpp"
#include "lexaug/lexicon.hpp"
#include "lexaug/tokenizer.hpp"

namespace lexaug {

/// A count ratio. An empty denominator is reported as 0 with defined() == false.
struct Ratio {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;

  bool defined() const noexcept { return denominator != 0; }
  double value() const noexcept {
    return defined() ? static_cast<double>(numerator) / static_cast<double>(denominator) : 0.0;
  }
  double percent() const noexcept { return 100.0 * value(); }
};

// ---------------------------------------------------------------------------
// Human judgments

enum class Verdict { Correct, Wrong, Unsure, Punctuation };

std::string_view to_string(Verdict v) noexcept;

struct Judgment {
  std::u32string surface;
  Verdict verdict = Verdict::Wrong;
  std::string evaluator;
};

struct JudgmentStats {
  std::uint64_t total = 0;
  std::uint64_t correct = 0;
  std::uint64_t wrong = 0;
  std::uint64_t unsure = 0;
  std::uint64_t punct = 0;

  /// correct / total (the convention of the n-gram precision table)
  Ratio precision_incl() const noexcept { return {correct, total}; }
  /// correct / (total - punct) (the convention of the bigram precision table)
  Ratio precision_excl() const noexcept { return {correct, total - punct}; }

  bool consistent() const noexcept { return total == correct + wrong + unsure + punct; }

  /// From printed table counts; `total` is taken as given even when the categories disagree.
  static JudgmentStats from_counts(std::uint64_t total, std::uint64_t correct, std::uint64_t wrong,
                                   std::uint64_t unsure, std::uint64_t punct) noexcept {
    return {total, correct, wrong, unsure, punct};
  }
};

/// Stats over one evaluator's verdicts. Throws std::invalid_argument if that evaluator
/// judged the same surface twice.
JudgmentStats judge_stats(std::span<const Judgment> judgments, std::string_view evaluator);

/// Same, restricted to surfaces of one length class.
JudgmentStats judge_stats(std::span<const Judgment> judgments, std::string_view evaluator, LengthClass cls);

/// Distinct evaluator labels in first-seen order.
std::vector<std::string> evaluators(std::span<const Judgment> judgments);

/// Judgment TSV: surface<TAB>verdict<TAB>evaluator.
std::vector<Judgment> parse_judgments(std::string_view text);
std::string format_judgments(std::span<const Judgment> judgments);

// ---------------------------------------------------------------------------
// Precision / recall / augmentation against a tokenized reference

struct PRARow {
  std::uint64_t token_types = 0;
  std::uint64_t candidates = 0;
  std::uint64_t in_text = 0;    // candidates that are reference token types
  std::uint64_t augmented = 0;  // judged correct, absent from both dictionary and reference

  /// (in_text + augmented) / candidates
  Ratio precision() const noexcept { return {in_text + augmented, candidates}; }
  /// in_text / token_types
  Ratio recall() const noexcept { return {in_text, token_types}; }
  /// augmented / token_types
  Ratio augmentation() const noexcept { return {augmented, token_types}; }

  PRARow& operator+=(const PRARow& o) noexcept;
};

struct PRAReport {
  std::array<PRARow, 6> rows;
  PRARow total;

  const PRARow& operator[](LengthClass c) const { return rows[index_of(c)]; }
};

/// A candidate counts as human-correct when a strict majority of its verdicts are Correct.
PRAReport pra_report(const NGramBuckets& candidates, const TokenTypes& reference, const Lexicon& dict,
                     std::span<const Judgment> judgments);

// ---------------------------------------------------------------------------
// Segmentation scoring

struct SegEvalReport {
  std::uint64_t tokens = 0;
  std::uint64_t false_joins = 0;   // gold boundary missing from the hypothesis
  std::uint64_t false_breaks = 0;  // hypothesis boundary absent from gold
  std::uint64_t unattributed = 0;  // errors known only as a total (printed tables)

  std::uint64_t errors() const noexcept { return false_joins + false_breaks + unattributed; }
  Ratio error_rate() const noexcept { return {errors(), tokens}; }
  double accuracy() const noexcept { return 1.0 - error_rate().value(); }

  static SegEvalReport from_totals(std::uint64_t tokens, std::uint64_t errors) noexcept {
    return {tokens, 0, 0, errors};
  }

  SegEvalReport& operator+=(const SegEvalReport& o) noexcept;
};

/// Boundary-set comparison. Throws MismatchedText when the underlying characters differ.
SegEvalReport score_segmentation(const Segmentation& hyp, const Segmentation& gold);

/// Sums per-sentence reports; both lists must have equal length.
SegEvalReport score_segmentations(std::span<const Segmentation> hyp, std::span<const Segmentation> gold);

/// (baseline - augmented) / baseline, on error rates. 0 when the baseline rate is 0.
double error_reduction(double baseline_rate, double augmented_rate) noexcept;
double error_reduction(const SegEvalReport& baseline, const SegEvalReport& augmented) noexcept;

// ---------------------------------------------------------------------------
// Sampling

/// Name of the generator recorded in report metadata.
inline constexpr std::string_view kRngName = "mt19937_64";

/// Uniform sampling with replacement, reproducible from `seed`.
/// Throws std::invalid_argument when n > 0 and the corpus is empty.
std::vector<Sentence> sample_test_set(std::span<const Sentence> sentences, std::size_t n, std::uint64_t seed);

}  // namespace lexaug
