#include "test_util.hpp"

#include <random>

#include "invariants.hpp"
#include "lexaug/eval.hpp"
#include "oracles.hpp"

using namespace lexaug;

TEST_CASE("segmentations are lossless") {
  const auto o = invariants::segmentation_losslessness(2000, 1);
  CHECK(o.cases == 2000);
  CHECK_MESSAGE(o.ok(), o.first);
}

TEST_CASE("histograms sum to pair frequency") {
  const auto o = invariants::histogram_sums(1000, 2);
  CHECK_MESSAGE(o.ok(), o.first);
}

TEST_CASE("augmentation is monotone and idempotent") {
  const auto o = invariants::augmentation(1000, 3);
  CHECK_MESSAGE(o.ok(), o.first);
}

TEST_CASE("shard merge equals whole-corpus counting") {
  const auto o = invariants::shard_merge(1000, 4);
  CHECK_MESSAGE(o.ok(), o.first);
}

TEST_CASE("boundary scoring: identity and swap symmetry") {
  std::mt19937_64 rng(5);
  const auto letters = oracle::alphabet(4);
  for (int round = 0; round < 1000; ++round) {
    const auto text = oracle::random_text(rng, letters, 1 + rng() % 20);
    const auto a = tokenize(text, oracle::random_lexicon(rng, letters, 10, 4));
    const auto b = tokenize(text, oracle::random_lexicon(rng, letters, 10, 4));
    REQUIRE(score_segmentation(a, a).errors() == 0);
    const auto ab = score_segmentation(a, b);
    const auto ba = score_segmentation(b, a);
    REQUIRE(ab.false_joins == ba.false_breaks);
    REQUIRE(ab.false_breaks == ba.false_joins);
  }
}

TEST_CASE("adding entries never increases the optimal token count") {
  std::mt19937_64 rng(6);
  const auto letters = oracle::alphabet(4);
  for (int round = 0; round < 1000; ++round) {
    const auto dict = oracle::random_lexicon(rng, letters, rng() % 15, 4);
    const auto extra = oracle::random_lexicon(rng, letters, 1 + rng() % 15, 5);
    std::vector<LexEntry> stage2;
    for (const auto& [s, e] : extra) stage2.push_back(e);
    const auto bigger = augment(dict, stage2, {}).lexicon;
    const auto text = oracle::random_text(rng, letters, rng() % 25);
    REQUIRE(tokenize(text, bigger).tokens.size() <= tokenize(text, dict).tokens.size());
  }
}

TEST_CASE("judgment categories sum to total; precisions agree without punctuation") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 1000; ++round) {
    std::vector<Judgment> js;
    const std::size_t n = rng() % 30;
    for (std::size_t k = 0; k < n; ++k) {
      js.push_back({std::u32string{static_cast<char32_t>(0x4E00 + k), U'乙'}, static_cast<Verdict>(rng() % 4), "A"});
    }
    const auto s = judge_stats(js, "A");
    REQUIRE(s.consistent());
    REQUIRE(s.total == n);
    if (s.punct == 0) REQUIRE(s.precision_incl().value() == s.precision_excl().value());
  }
}
