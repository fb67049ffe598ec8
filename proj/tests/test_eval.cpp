#include "test_util.hpp"

#include <cmath>
#include <random>

#include "lexaug/errors.hpp"
#include "lexaug/eval.hpp"
#include "oracles.hpp"
#include "published_tables.hpp"

using namespace lexaug;

namespace {

Segmentation seg_of(std::initializer_list<std::u32string> tokens) {
  Segmentation s;
  std::size_t pos = 0;
  for (const auto& t : tokens) {
    s.tokens.push_back({t, pos, pos + t.size(), true});
    pos += t.size();
  }
  return s;
}

}  // namespace

TEST_CASE("judge_stats over judgment records") {
  std::vector<Judgment> js{{U"立法", Verdict::Correct, "A"},     {U"法局", Verdict::Wrong, "A"},
                           {U"，的", Verdict::Punctuation, "A"}, {U"議員", Verdict::Unsure, "A"},
                           {U"立法", Verdict::Correct, "B"},     {U"立法局", Verdict::Correct, "A"}};
  const auto a = judge_stats(js, "A");
  CHECK(a.total == 5);
  CHECK(a.correct == 2);
  CHECK(a.punct == 1);
  CHECK(a.consistent());
  CHECK(a.precision_incl().value() == doctest::Approx(2.0 / 5));
  CHECK(a.precision_excl().value() == doctest::Approx(2.0 / 4));

  const auto a2 = judge_stats(js, "A", LengthClass::Two);
  CHECK(a2.total == 4);
  CHECK(judge_stats(js, "A", LengthClass::Three).total == 1);
  CHECK(evaluators(js) == std::vector<std::string>{"A", "B"});

  std::vector<Judgment> all_correct{{U"甲乙", Verdict::Correct, "X"}, {U"丙丁", Verdict::Correct, "X"}};
  const auto x = judge_stats(all_correct, "X");
  CHECK(x.precision_incl().percent() == doctest::Approx(100.0));
  CHECK(x.precision_excl().percent() == doctest::Approx(100.0));

  js.push_back({U"立法", Verdict::Wrong, "A"});
  CHECK_THROWS_AS(judge_stats(js, "A"), std::invalid_argument);
  CHECK_FALSE(judge_stats({}, "A").precision_incl().defined());
}

TEST_CASE("bigram judgment table: precision excludes punctuation") {
  for (const auto& row : tables::kBigramJudgments) {
    const auto correct = tables::kBigramTotal - row.wrong - row.unsure - row.punct;
    const auto s = JudgmentStats::from_counts(tables::kBigramTotal, correct, row.wrong, row.unsure, row.punct);
    CHECK_MESSAGE(tables::matches(s.precision_excl().percent(), row.precision, row.decimals), row.evaluator);
    // the other convention does not reproduce the table
    CHECK_FALSE(tables::matches(s.precision_incl().percent(), row.precision, row.decimals));
  }
  const auto a = JudgmentStats::from_counts(1695, 1695 - 339 - 53 - 111, 339, 53, 111);
  CHECK(a.precision_excl().percent() == doctest::Approx(100.0 * 1192 / 1584));  // 75.25, printed 75.2
}

TEST_CASE("n-gram judgment table: precision over the whole list") {
  for (const auto& row : tables::kNgramJudgments) {
    const auto total = tables::kNgramListSizes[row.length_index];
    const auto printed = JudgmentStats::from_counts(total, row.correct, row.wrong, row.unsure, row.punct);
    const auto derived =
        JudgmentStats::from_counts(total, total - row.wrong - row.unsure - row.punct, row.wrong, row.unsure, row.punct);
    const bool ok = tables::matches(printed.precision_incl().percent(), row.precision, row.decimals) ||
                    tables::matches(derived.precision_incl().percent(), row.precision, row.decimals);
    CHECK_MESSAGE(ok, row.evaluator << " n=" << row.length_index + 3);
  }
  const auto a3 = JudgmentStats::from_counts(344, 81, 205, 33, 25);
  CHECK(std::round(a3.precision_incl().percent() * 10) / 10 == doctest::Approx(23.5));
}

TEST_CASE("precision/recall/augmentation table arithmetic") {
  for (const auto& row : tables::kPra) {
    PRARow r{row.token_types, row.candidates, row.recall_n, row.augmentation_n};
    CHECK(r.in_text + r.augmented == row.precision_n);
    CHECK(tables::matches(r.precision().percent(), row.precision, 1));
    CHECK(tables::matches(r.augmentation().percent(), row.augmentation, 1));
  }
  // recall of the first rows
  CHECK(tables::matches(PRARow{6475, 1201, 662, 190}.recall().percent(), 10.2, 1));
  CHECK(tables::matches(PRARow{721, 344, 10, 105}.recall().percent(), 1.4, 1));

  PRARow total;
  for (const auto& row : tables::kPra) {
    total += PRARow{row.token_types, row.candidates, row.recall_n, row.augmentation_n};
  }
  CHECK(total.token_types == tables::kPraTotal.token_types);
  CHECK(total.candidates == tables::kPraTotal.candidates);
  CHECK(total.augmented == tables::kPraTotal.augmentation_n);
  CHECK(total.in_text + total.augmented == tables::kPraTotal.precision_n);
  CHECK(tables::matches(total.precision().percent(), tables::kPraTotal.precision, 1));
  CHECK(tables::matches(total.augmentation().percent(), tables::kPraTotal.augmentation, 2));
}

TEST_CASE("pra_report") {
  NGramBuckets buckets;
  buckets[LengthClass::Two] = {{U"立法", 20, Stage::AdjacentBigram, {}}, {U"謹此", 12, Stage::AdjacentBigram, {}},
                               {U"法局", 9, Stage::AdjacentBigram, {}}, {U"中英", 9, Stage::AdjacentBigram, {}}};
  TokenTypes ref;
  ref[index_of(LengthClass::Two)] = {U"立法", U"議員", U"政府"};
  Lexicon dict;
  dict.insert({U"中英", 2, Source::Original});
  std::vector<Judgment> js{{U"謹此", Verdict::Correct, "A"}, {U"謹此", Verdict::Correct, "B"},
                           {U"法局", Verdict::Wrong, "A"},   {U"中英", Verdict::Correct, "A"}};
  const auto r = pra_report(buckets, ref, dict, js);
  const auto& two = r[LengthClass::Two];
  CHECK(two.token_types == 3);
  CHECK(two.candidates == 4);
  CHECK(two.in_text == 1);
  CHECK(two.augmented == 1);
  CHECK(two.precision().value() == doctest::Approx(0.5));
  CHECK(r.total.candidates == 4);
  CHECK(two.in_text <= std::min(two.candidates, two.token_types));

  // a split vote is not a majority
  js = {{U"謹此", Verdict::Correct, "A"}, {U"謹此", Verdict::Wrong, "B"}};
  CHECK(pra_report(buckets, ref, dict, js)[LengthClass::Two].augmented == 0);

  const auto empty = pra_report({}, ref, dict, {});
  CHECK_FALSE(empty.total.precision().defined());
  CHECK(empty.total.recall().value() == 0.0);

  NGramBuckets exact;
  exact[LengthClass::Two] = {{U"立法", 1, Stage::AdjacentBigram, {}}, {U"議員", 1, Stage::AdjacentBigram, {}},
                             {U"政府", 1, Stage::AdjacentBigram, {}}};
  const auto id = pra_report(exact, ref, dict, {});
  CHECK(id.total.precision().value() == 1.0);
  CHECK(id.total.recall().value() == 1.0);
  CHECK(id.total.augmented == 0);
}

TEST_CASE("score_segmentation") {
  const auto gold = seg_of({U"立法局"});
  CHECK(score_segmentation(gold, gold).errors() == 0);
  CHECK(score_segmentation(gold, gold).accuracy() == 1.0);

  const auto hyp = seg_of({U"立法", U"局"});
  const auto r = score_segmentation(hyp, gold);
  CHECK(r.false_breaks == 1);
  CHECK(r.false_joins == 0);
  CHECK(r.tokens == 2);
  const auto swapped = score_segmentation(gold, hyp);
  CHECK(swapped.false_joins == 1);
  CHECK(swapped.false_breaks == 0);

  CHECK_THROWS_AS(score_segmentation(seg_of({U"立法"}), gold), MismatchedText);
  std::vector<Segmentation> one{gold};
  CHECK_THROWS_AS(score_segmentations(one, {}), MismatchedText);
}

TEST_CASE("segmentation tables reproduce from printed totals") {
  auto check_row = [](std::uint64_t tokens, std::uint64_t errors, int rate, int accuracy) {
    const auto r = SegEvalReport::from_totals(tokens, errors);
    CHECK(tables::matches(r.error_rate().percent(), rate, 0));
    CHECK(tables::matches(100.0 * r.accuracy(), accuracy, 0));
  };
  for (const auto* set : {&tables::kTestSet1, &tables::kTestSet2}) {
    for (const auto& row : *set) {
      check_row(row.base_tokens, row.base_errors, row.base_rate, row.base_accuracy);
      check_row(row.aug_tokens, row.aug_errors, row.aug_rate, row.aug_accuracy);
    }
  }
  // the averages are per-test-set evaluator means, summed over both test sets
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
  CHECK(std::llround(base) == tables::kAverageBaseline.errors);
  CHECK(std::llround(aug) == tables::kAverageAugmented.errors);
  CHECK(tables::kTestSet1[0].base_tokens + tables::kTestSet2[0].base_tokens == tables::kAverageBaseline.tokens);
  CHECK(tables::kTestSet1[0].aug_tokens + tables::kTestSet2[0].aug_tokens == tables::kAverageAugmented.tokens);
  check_row(7277, 1749, 24, 76);
  check_row(6783, 1061, 16, 84);
}

TEST_CASE("error_reduction") {
  CHECK(100.0 * error_reduction(0.24, 0.16) == doctest::Approx(33.333).epsilon(1e-4));
  CHECK(error_reduction(0.2, 0.2) == 0.0);
  CHECK(error_reduction(0.2, 0.0) == 1.0);
  CHECK(error_reduction(0.0, 0.1) == 0.0);
  const auto base = SegEvalReport::from_totals(7277, 1749);
  const auto aug = SegEvalReport::from_totals(6783, 1061);
  // the published 33% comes from the rounded rates; the unrounded ones give 34.9%
  const double b = 1749.0 / 7277, a = 1061.0 / 6783;
  CHECK(100.0 * error_reduction(base, aug) == doctest::Approx(100.0 * (b - a) / b));
  CHECK(std::fabs(100.0 * error_reduction(0.24, 0.16) - tables::kErrorReductionPercent) <= 0.5);
}

TEST_CASE("judgment TSV") {
  const auto js = parse_judgments("立法\tcorrect\tA\n法局\tWRONG\tA\n\n，的\tpunctuation\tB\n");
  REQUIRE(js.size() == 3);
  CHECK(js[1].verdict == Verdict::Wrong);
  CHECK(parse_judgments(format_judgments(js)).size() == 3);
  CHECK(format_judgments(js).find("wrong") != std::string::npos);
  CHECK_THROWS_AS(parse_judgments("立法\tmaybe\tA\n"), FormatError);
  CHECK_THROWS_AS(parse_judgments("立法\tcorrect\n"), FormatError);
  CHECK_THROWS_AS(parse_judgments("立法\tcorrect\tA\n立法\twrong\tA\n"), FormatError);
}

TEST_CASE("sample_test_set") {
  const auto sentences = oracle::sentences_of(U"甲。乙。丙。丁。");
  CHECK(sample_test_set(sentences, 0, 1).empty());
  const auto a = sample_test_set(sentences, 300, 42);
  CHECK(a.size() == 300);
  CHECK(sample_test_set(sentences, 300, 42) == a);
  CHECK(sample_test_set(sentences, 300, 43) != a);
  std::set<std::u32string> seen;
  for (const auto& s : a) seen.insert(s.text);
  CHECK(seen.size() == 4);  // with replacement: 300 draws from 4 cover everything
  CHECK_THROWS_AS(sample_test_set({}, 1, 1), std::invalid_argument);
}
