// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "invariants.hpp"
#include "lexaug/config.hpp"
#include "lexaug/eval.hpp"
#include "lexaug/extraction.hpp"
#include "lexaug/lexicon.hpp"
#include "lexaug/synthetic.hpp"
#include "lexaug/tokenizer.hpp"
#include "oracles.hpp"
#include "published_tables.hpp"

using namespace lexaug;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

// 1 -------------------------------------------------------------------------

Result table_arithmetic() {
  Result v;
  std::size_t rows = 0;
  std::vector<std::string> misses;
  std::vector<std::string> readings;
  auto miss = [&](const std::string& what) {
    misses.push_back(what);
    v.pass = false;
  };

  for (const auto& row : tables::kBigramJudgments) {
    ++rows;
    const auto correct = tables::kBigramTotal - row.wrong - row.unsure - row.punct;
    const auto s = JudgmentStats::from_counts(tables::kBigramTotal, correct, row.wrong, row.unsure, row.punct);
    if (!tables::matches(s.precision_excl().percent(), row.precision, row.decimals)) {
      miss("bigram " + std::string(row.evaluator));
    }
  }

  for (const auto& row : tables::kNgramJudgments) {
    ++rows;
    const auto total = tables::kNgramListSizes[row.length_index];
    const auto printed = JudgmentStats::from_counts(total, row.correct, row.wrong, row.unsure, row.punct);
    const auto derived =
        JudgmentStats::from_counts(total, total - row.wrong - row.unsure - row.punct, row.wrong, row.unsure, row.punct);
    const std::string name =
        std::string(row.evaluator) + (row.length_index < 4 ? std::to_string(row.length_index + 3) : "m");
    if (tables::matches(printed.precision_incl().percent(), row.precision, row.decimals)) {
      if (!printed.consistent()) readings.push_back(name + ":printed-correct");
    } else if (tables::matches(derived.precision_incl().percent(), row.precision, row.decimals)) {
      readings.push_back(name + ":total-minus-others");
    } else {
      miss("n-gram " + name);
    }
  }

  auto seg_row = [&](const std::string& name, std::uint64_t tokens, std::uint64_t errors, int rate, int acc) {
    ++rows;
    const auto r = SegEvalReport::from_totals(tokens, errors);
    if (!tables::matches(r.error_rate().percent(), rate, 0) || !tables::matches(100.0 * r.accuracy(), acc, 0)) {
      miss(name);
    }
  };
  for (const auto& row : tables::kTestSet1) {
    seg_row("set1 " + std::string(row.evaluator), row.base_tokens, row.base_errors, row.base_rate, row.base_accuracy);
    seg_row("set1 " + std::string(row.evaluator) + "+", row.aug_tokens, row.aug_errors, row.aug_rate, row.aug_accuracy);
  }
  for (const auto& row : tables::kTestSet2) {
    seg_row("set2 " + std::string(row.evaluator), row.base_tokens, row.base_errors, row.base_rate, row.base_accuracy);
    seg_row("set2 " + std::string(row.evaluator) + "+", row.aug_tokens, row.aug_errors, row.aug_rate, row.aug_accuracy);
  }
  seg_row("average baseline", tables::kAverageBaseline.tokens, tables::kAverageBaseline.errors,
          tables::kAverageBaseline.rate, tables::kAverageBaseline.accuracy);
  seg_row("average augmented", tables::kAverageAugmented.tokens, tables::kAverageAugmented.errors,
          tables::kAverageAugmented.rate, tables::kAverageAugmented.accuracy);

  // the averages themselves derive from the per-evaluator rows
  double base = 0, aug = 0;
  for (const auto* set : {&tables::kTestSet1, &tables::kTestSet2}) {
    double b = 0, a = 0;
    for (const auto& row : *set) {
      b += static_cast<double>(row.base_errors);
      a += static_cast<double>(row.aug_errors);
    }
    base += b / static_cast<double>(set->size());
    aug += a / static_cast<double>(set->size());
  }
  if (std::llround(base) != static_cast<long long>(tables::kAverageBaseline.errors) ||
      std::llround(aug) != static_cast<long long>(tables::kAverageAugmented.errors)) {
    miss("average errors");
  }

  std::ostringstream d;
  d << rows << " rows";
  if (!readings.empty()) {
    d << "; rows whose categories do not sum to the list size:";
    for (const auto& r : readings) d << ' ' << r;
  }
  for (const auto& m : misses) d << "; MISMATCH " << m;
  v.detail = d.str();
  return v;
}

// 2 -------------------------------------------------------------------------

Result error_reduction_check() {
  const double got = 100.0 * error_reduction(0.24, 0.16);
  char buf[96];
  std::snprintf(buf, sizeof buf, "error_reduction(0.24, 0.16) = %.2f%%, printed %.0f%%", got,
                tables::kErrorReductionPercent);
  return {std::fabs(got - tables::kErrorReductionPercent) <= 0.5, buf};
}

// 3 -------------------------------------------------------------------------

Result augmentation_accounting() {
  Lexicon dict;
  auto surface = [](std::size_t k, char32_t lead) {
    return std::u32string{static_cast<char32_t>(lead + k / 20000), static_cast<char32_t>(0x4E00 + k % 20000)};
  };
  for (std::size_t k = 0; k < tables::kDictionarySize; ++k) dict.insert({surface(k, 0x4E00), 3, Source::Original});
  std::vector<LexEntry> additions;
  for (std::size_t k = 0; k < tables::kDictionaryAdditions; ++k) {
    additions.push_back({surface(k, 0x9000), 2, Source::Extracted});
  }
  const auto r = augment(dict, additions, {}).report;
  const double growth = std::round(r.growth_percent() * 10) / 10;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu + %zu -> %zu entries (%zu collisions), +%.1f%%", r.old_size, r.new_count,
                r.new_size, r.collisions, growth);
  const bool ok = r.old_size == tables::kDictionarySize && r.new_count == tables::kDictionaryAdditions &&
                  r.new_size == tables::kAugmentedSize && r.collisions == 0 && growth == tables::kGrowthPercent;
  return {ok, buf};
}

// 4 -------------------------------------------------------------------------

Result stage1_oracle() {
  std::mt19937_64 rng(2024);
  const auto letters = oracle::alphabet(20);
  // the default thresholds first, then looser ones so that plenty of pairs survive on tiny corpora
  struct Thresholds {
    std::int64_t k0, U0, k1;
    std::uint64_t min_freq;
  };
  const std::vector<Thresholds> settings{{1, 10, 1, 8}, {1, 1, 1, 2}, {0, 0, 1, 1}, {1, 2, 2, 4}};
  std::size_t corpora = 0, pairs = 0, significant = 0, adjacent = 0, mismatches = 0;
  for (; corpora < 100; ++corpora) {
    // skewed letter frequencies give the partner statistics some spread
    std::u32string text;
    const std::size_t length = 1 + rng() % 500;
    std::geometric_distribution<std::size_t> pick(0.15);
    for (std::size_t i = 0; i < length; ++i) {
      text.push_back(rng() % 25 == 0 ? U'。' : letters[std::min<std::size_t>(pick(rng), letters.size() - 1)]);
    }
    const auto sentences = oracle::sentences_of(text);
    const auto counted = count_positional_bigrams(sentences);
    const auto reference = oracle::positional_counts(sentences, kDefaultWindow);
    pairs += counted.size();
    if (oracle::flatten(counted) != reference) ++mismatches;

    for (const auto& t : settings) {
      const SignificanceParams params{double(t.k0), double(t.U0), double(t.k1), t.min_freq};
      const auto sig = filter_significant_bigrams(counted, params);
      const auto expect = oracle::significant(reference, kDefaultWindow, t.k0, t.U0, t.k1, t.min_freq);
      std::map<std::pair<char32_t, char32_t>, oracle::SigResult> got;
      for (const auto& s : sig) got[{s.bigram.first, s.bigram.second}] = {s.stats.peaks};
      if (got != expect) ++mismatches;
      significant += sig.size();

      std::set<std::u32string> adj_expect;
      for (const auto& [pair, r] : expect) {
        if (std::find(r.peaks.begin(), r.peaks.end(), 1) != r.peaks.end()) adj_expect.insert({pair.first, pair.second});
      }
      std::set<std::u32string> adj_got;
      for (const auto& c : extract_adjacent_bigrams(sig)) {
        adj_got.insert(c.surface);
        if (c.freq != reference.at({c.surface[0], c.surface[1], 1})) ++mismatches;
      }
      if (adj_got != adj_expect) ++mismatches;
      adjacent += adj_got.size();
    }
  }
  std::ostringstream d;
  d << corpora << " corpora, " << pairs << " counted pairs, " << significant << " significant and " << adjacent
    << " adjacent results compared over " << settings.size() << " threshold settings, " << mismatches
    << " mismatches";
  return {mismatches == 0 && significant > 0, d.str()};
}

// 5 -------------------------------------------------------------------------

Result tokenizer_optimality() {
  std::mt19937_64 rng(77);
  const auto letters = oracle::alphabet(5);
  std::size_t mismatches = 0, multi = 0;
  for (int round = 0; round < 200; ++round) {
    const auto dict = oracle::random_lexicon(rng, letters, 30, 4);
    const auto text = oracle::random_text(rng, letters, 1 + rng() % 12);
    const auto got = tokenize(text, dict);
    if (oracle::surfaces(got) != oracle::exhaustive_tokenize(text, dict)) ++mismatches;
    for (const auto& t : got.tokens) multi += t.surface.size() > 1;
  }
  std::ostringstream d;
  d << "200 sentences (<= 12 chars, 30-entry dictionaries), " << multi << " multi-character tokens, " << mismatches
    << " mismatches against exhaustive search";
  return {mismatches == 0, d.str()};
}

// 6 and 7 share one synthetic setup -------------------------------------------

struct Synthetic {
  std::vector<WeightedWord> planted;
  SyntheticCorpus corpus;
  std::vector<Sentence> sentences;
  ExtractionResult extraction;
};

const Synthetic& synthetic() {
  static const Synthetic s = [] {
    Synthetic out;
    out.planted = make_planted_lexicon({200, 2, 6, 1.0, 1});
    out.corpus = generate_synthetic_corpus(out.planted, {500000, 12, U'。', 1});
    out.sentences = split_sentences(out.corpus.stream);
    out.extraction = run_extraction(out.sentences, {});
    return out;
  }();
  return s;
}

Result synthetic_recovery() {
  const auto& s = synthetic();
  std::set<std::u32string> planted, candidates;
  for (const auto& w : s.planted) planted.insert(w.surface);
  for (const auto& c : s.extraction.candidates) candidates.insert(c.surface);

  std::size_t eligible = 0, found = 0;
  for (std::size_t k = 0; k < s.planted.size(); ++k) {
    if (s.corpus.word_counts[k] < 11) continue;
    ++eligible;
    found += candidates.contains(s.planted[k].surface);
  }
  std::size_t correct = 0;
  for (const auto& c : candidates) correct += planted.contains(c);

  const double recall = eligible ? static_cast<double>(found) / static_cast<double>(eligible) : 0.0;
  const double precision =
      candidates.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(candidates.size());
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%zu chars, recovered %zu/%zu planted words with freq >= 11 (%.1f%%), "
                "precision %zu/%zu (%.1f%%)",
                s.corpus.stream.size(), found, eligible, 100 * recall, correct, candidates.size(), 100 * precision);
  return {eligible > 0 && recall >= 0.80 && precision >= 0.60, buf};
}

Result tokenization_improvement() {
  const auto& s = synthetic();

  // impoverished dictionary: every adjacent character pair inside a planted word
  Lexicon fragments;
  for (const auto& w : s.planted) {
    for (std::size_t i = 0; i + 2 <= w.surface.size(); ++i) {
      fragments.insert({w.surface.substr(i, 2), 3, Source::Original});
    }
  }

  // augment exactly as the augment command does
  std::vector<NGramCandidate> stage1, stage2;
  for (const auto& c : s.extraction.candidates) (c.stage == Stage::AdjacentBigram ? stage1 : stage2).push_back(c);
  const Config defaults;
  const auto entries = scale_candidates(filter_candidates(stage2, defaults.min_candidate_freq, defaults.stoplist));
  const auto augmented = augment(fragments, entries, filter_candidates(stage1, 1, defaults.stoplist));

  // held-out text: a fresh corpus from the same lexicon, 300 sentences drawn with replacement
  const auto held = generate_synthetic_corpus(s.planted, {100000, 12, U'。', 99});
  const auto held_sentences = split_sentences(held.stream);
  const auto sample = sample_test_set(held_sentences, 300, 7);
  std::vector<Segmentation> gold;
  for (const auto& sent : sample) {
    Segmentation g = held.gold[sent.index];
    gold.push_back(std::move(g));
  }

  const auto base = score_segmentations(tokenize_corpus(sample, fragments), gold);
  const auto aug = score_segmentations(tokenize_corpus(sample, augmented.lexicon), gold);
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "300 held-out sentences: fragments-only %llu errors / %llu tokens (accuracy %.1f%%), "
                "augmented (+%zu entries) %llu errors / %llu tokens (accuracy %.1f%%), error reduction %.1f%%",
                static_cast<unsigned long long>(base.errors()), static_cast<unsigned long long>(base.tokens),
                100 * base.accuracy(), augmented.report.new_count, static_cast<unsigned long long>(aug.errors()),
                static_cast<unsigned long long>(aug.tokens), 100 * aug.accuracy(), 100 * error_reduction(base, aug));
  return {aug.errors() < base.errors(), buf};
}

// 8 -------------------------------------------------------------------------

Result invariant_suites() {
  const std::vector<std::pair<std::string, invariants::Outcome>> suites{
      {"losslessness", invariants::segmentation_losslessness(2000, 11)},
      {"hist-sum", invariants::histogram_sums(1000, 12)},
      {"augmentation", invariants::augmentation(1000, 13)},
      {"shard-merge", invariants::shard_merge(1000, 14)},
  };
  Result v;
  std::ostringstream d;
  for (const auto& [name, o] : suites) {
    d << (d.tellp() > 0 ? ", " : "") << name << ' ' << o.cases << " cases/" << o.failures << " failures";
    if (!o.ok() || o.cases < 1000) {
      v.pass = false;
      d << " (" << o.first << ')';
    }
  }
  v.detail = d.str();
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"table arithmetic reproduction", table_arithmetic},
      {"error reduction", error_reduction_check},
      {"augmentation accounting", augmentation_accounting},
      {"stage-1 oracle equivalence", stage1_oracle},
      {"tokenizer optimality", tokenizer_optimality},
      {"synthetic end-to-end recovery", synthetic_recovery},
      {"tokenization improvement direction", tokenization_improvement},
      {"invariant suites", invariant_suites},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Result v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu (%s): %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                v.detail.c_str(), secs);
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
