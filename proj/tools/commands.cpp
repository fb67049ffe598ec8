#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "lexaug/config.hpp"
#include "lexaug/corpus.hpp"
#include "lexaug/errors.hpp"
#include "lexaug/eval.hpp"
#include "lexaug/extraction.hpp"
#include "lexaug/io.hpp"
#include "lexaug/lexicon.hpp"
#include "lexaug/synthetic.hpp"
#include "lexaug/tokenizer.hpp"
#include "lexaug/utf8.hpp"

namespace lexaug::cli {

namespace {

namespace fs = std::filesystem;

std::string pct(const Ratio& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", r.percent());
  return r.defined() ? buf : std::string("n/a");
}

std::string fixed(double v, int digits = 4) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void header(std::ostream& out, std::string_view command, const Config& config) {
  out << "# lexaug " << command << '\n';
  std::istringstream lines(config.to_string());
  for (std::string line; std::getline(lines, line);) out << "# config " << line << '\n';
}

void key_value(std::ostream& out, std::string_view key, const auto& value) { out << key << '=' << value << '\n'; }

void ratio_kv(std::ostream& out, const std::string& key, const Ratio& r) {
  key_value(out, key, fixed(r.value()));
  if (!r.defined()) key_value(out, key + "_undefined", "true");
}

struct Globals {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> encoding;
  std::optional<std::string> separator;
  std::optional<unsigned> threads;
};

Config resolve_config(const Globals& g) {
  Config config = g.config_path.empty() ? Config{} : load_config(g.config_path);
  for (const auto& kv : g.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError(kv, "override must be key=value");
    config.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (g.seed) config.seed = *g.seed;
  if (g.encoding) config.encoding = *g.encoding;
  if (g.separator) config.separator = *g.separator;
  if (g.threads) config.threads = *g.threads;
  config.validate();
  return config;
}

std::vector<Sentence> load_sentences(const fs::path& path, const Config& config) {
  return split_sentences(read_corpus(path, config.encoding), config.delimiter_set());
}

std::vector<NGramCandidate> load_candidates(const fs::path& path) { return parse_candidates(io::read_file(path)); }

// ---------------------------------------------------------------------------

struct ExtractArgs {
  std::string corpus, output;
};

void cmd_extract(const ExtractArgs& a, const Config& config, std::ostream& out) {
  const auto sentences = load_sentences(a.corpus, config);
  const auto result = run_extraction(sentences, config.extraction_params());
  io::write_file_atomic(a.output, format_candidates(result.candidates));

  header(out, "extract", config);
  key_value(out, "sentences", sentences.size());
  key_value(out, "characters", result.unigrams.total);
  key_value(out, "unique_characters", result.unigrams.counts.size());
  key_value(out, "bigrams", result.bigram_count);
  key_value(out, "significant_bigrams", result.significant.size());
  key_value(out, "candidates", result.candidates.size());
  for (auto cls : kLengthClasses) {
    key_value(out, "candidates_" + std::string(label(cls)), result.buckets[cls].size());
  }
}

struct AugmentArgs {
  std::string dict, candidates, output;
};

void cmd_augment(const AugmentArgs& a, const Config& config, std::ostream& out) {
  const auto dict = load_lexicon(a.dict);
  const auto candidates = load_candidates(a.candidates);

  std::vector<NGramCandidate> stage1, stage2;
  for (const auto& c : candidates) (c.stage == Stage::AdjacentBigram ? stage1 : stage2).push_back(c);
  const auto stage2_kept = filter_candidates(stage2, config.min_candidate_freq, config.stoplist);
  const auto stage1_kept = filter_candidates(stage1, 1, config.stoplist);
  const auto entries = scale_candidates(stage2_kept);
  const auto result = augment(dict, entries, stage1_kept);
  save_lexicon(result.lexicon, a.output);

  header(out, "augment", config);
  const auto& r = result.report;
  out << "# " << r.old_size << " entries + " << r.new_count << " new (" << r.collisions
      << " already present) = " << r.new_size << " entries, +" << fixed(r.growth_percent(), 1) << "%\n";
  key_value(out, "stage1_bigrams", stage1.size());
  key_value(out, "stage1_kept", stage1_kept.size());
  key_value(out, "stage2_candidates", stage2.size());
  key_value(out, "stage2_kept", stage2_kept.size());
  out << r.to_key_values();
}

struct TokenizeArgs {
  std::string text, dict, output;
  bool mark_unknown = false;
};

void cmd_tokenize(const TokenizeArgs& a, const Config& config, std::ostream& out) {
  const auto sentences = load_sentences(a.text, config);
  const auto dict = load_lexicon(a.dict);
  const auto segs = tokenize_corpus(sentences, dict, config.tokenizer_options(), config.threads);
  std::string text;
  const bool mark = a.mark_unknown || config.mark_unknown;
  for (const auto& s : segs) {
    text += format_segmentation(s, config.separator, mark);
    text += '\n';
  }
  io::write_file_atomic(a.output, text);

  header(out, "tokenize", config);
  key_value(out, "sentences", segs.size());
  key_value(out, "tokens", total_tokens(segs));
  std::size_t unknown = 0;
  for (const auto& s : segs) {
    for (const auto& t : s.tokens) unknown += t.known ? 0 : 1;
  }
  key_value(out, "unknown_tokens", unknown);
}

struct JudgmentArgs {
  std::string file;
};

void cmd_eval_judgments(const JudgmentArgs& a, const Config& config, std::ostream& out) {
  const auto judgments = parse_judgments(io::read_file(a.file));
  header(out, "evaluate judgments", config);

  auto row = [&](const std::string& key, const JudgmentStats& s) {
    key_value(out, key + ".total", s.total);
    key_value(out, key + ".correct", s.correct);
    key_value(out, key + ".wrong", s.wrong);
    key_value(out, key + ".unsure", s.unsure);
    key_value(out, key + ".punctuation", s.punct);
    ratio_kv(out, key + ".precision_incl", s.precision_incl());
    ratio_kv(out, key + ".precision_excl", s.precision_excl());
  };

  std::ostringstream table;
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %-3s %7s %7s %7s %7s %7s %10s %10s\n", "evaluator", "n", "total",
                "correct", "wrong", "unsure", "punct", "prec_incl", "prec_excl");
  table << line;
  auto table_row = [&](const std::string& who, std::string_view n, const JudgmentStats& s) {
    std::snprintf(line, sizeof line, "%-10s %-3s %7llu %7llu %7llu %7llu %7llu %10s %10s\n", who.c_str(),
                  std::string(n).c_str(), static_cast<unsigned long long>(s.total),
                  static_cast<unsigned long long>(s.correct), static_cast<unsigned long long>(s.wrong),
                  static_cast<unsigned long long>(s.unsure), static_cast<unsigned long long>(s.punct),
                  pct(s.precision_incl()).c_str(), pct(s.precision_excl()).c_str());
    table << line;
  };

  for (const auto& who : evaluators(judgments)) {
    const auto all = judge_stats(judgments, who);
    row("evaluator." + who, all);
    table_row(who, "all", all);
    for (auto cls : kLengthClasses) {
      const auto s = judge_stats(judgments, who, cls);
      if (s.total == 0) continue;
      row("evaluator." + who + ".n" + std::string(label(cls)), s);
      table_row(who, label(cls), s);
    }
  }
  out << "# precision_excl excludes punctuation entries from the denominator (bigram table convention);\n"
      << "# precision_incl divides by all entries (n-gram table convention).\n";
  out << table.str();
}

struct PraArgs {
  std::string candidates, reference, dict, judgments;
};

void cmd_eval_pra(const PraArgs& a, const Config& config, std::ostream& out) {
  const auto buckets = partition_by_length(load_candidates(a.candidates));
  const auto reference = token_types(parse_segmentation_file(io::read_file(a.reference), config.separator, true));
  const auto dict = load_lexicon(a.dict);
  std::vector<Judgment> judgments;
  if (!a.judgments.empty()) judgments = parse_judgments(io::read_file(a.judgments));
  const auto report = pra_report(buckets, reference, dict, judgments);

  header(out, "evaluate pra", config);
  std::ostringstream table;
  char line[200];
  std::snprintf(line, sizeof line, "%-6s %11s %10s %18s %18s %18s\n", "n", "token_types", "candidates", "precision",
                "recall", "augmentation");
  table << line;
  auto emit = [&](const std::string& name, const PRARow& r) {
    const std::string key = "n" + name;
    key_value(out, key + ".token_types", r.token_types);
    key_value(out, key + ".candidates", r.candidates);
    key_value(out, key + ".in_text", r.in_text);
    key_value(out, key + ".augmented", r.augmented);
    ratio_kv(out, key + ".precision", r.precision());
    ratio_kv(out, key + ".recall", r.recall());
    ratio_kv(out, key + ".augmentation", r.augmentation());
    auto cell = [](std::uint64_t n, const Ratio& q) { return std::to_string(n) + " (" + pct(q) + ")"; };
    std::snprintf(line, sizeof line, "%-6s %11llu %10llu %18s %18s %18s\n", name.c_str(),
                  static_cast<unsigned long long>(r.token_types), static_cast<unsigned long long>(r.candidates),
                  cell(r.in_text + r.augmented, r.precision()).c_str(), cell(r.in_text, r.recall()).c_str(),
                  cell(r.augmented, r.augmentation()).c_str());
    table << line;
  };
  for (auto cls : kLengthClasses) emit(std::string(label(cls)), report[cls]);
  emit("total", report.total);
  out << table.str();
}

struct SegArgs {
  std::string hyp, gold, baseline;
};

void seg_block(std::ostream& out, const std::string& prefix, const SegEvalReport& r) {
  key_value(out, prefix + "tokens", r.tokens);
  key_value(out, prefix + "false_joins", r.false_joins);
  key_value(out, prefix + "false_breaks", r.false_breaks);
  key_value(out, prefix + "errors", r.errors());
  ratio_kv(out, prefix + "error_rate", r.error_rate());
  key_value(out, prefix + "accuracy", fixed(r.accuracy()));
}

void cmd_eval_segmentation(const SegArgs& a, const Config& config, std::ostream& out) {
  auto read = [&](const std::string& path) {
    return parse_segmentation_file(io::read_file(path), config.separator, true);
  };
  const auto gold = read(a.gold);
  const auto hyp = score_segmentations(read(a.hyp), gold);

  header(out, "evaluate segmentation", config);
  if (a.baseline.empty()) {
    seg_block(out, "", hyp);
    return;
  }
  const auto base = score_segmentations(read(a.baseline), gold);
  seg_block(out, "baseline.", base);
  seg_block(out, "augmented.", hyp);
  key_value(out, "error_reduction", fixed(error_reduction(base, hyp)));

  char line[160];
  std::snprintf(line, sizeof line, "%-10s %8s %8s %10s %9s\n", "run", "tokens", "errors", "error_rate", "accuracy");
  out << line;
  for (const auto& [name, r] : {std::pair{"baseline", base}, std::pair{"augmented", hyp}}) {
    std::snprintf(line, sizeof line, "%-10s %8llu %8llu %10s %8.1f%%\n", name,
                  static_cast<unsigned long long>(r.tokens), static_cast<unsigned long long>(r.errors()),
                  pct(r.error_rate()).c_str(), 100.0 * r.accuracy());
    out << line;
  }
}

struct SynthArgs {
  std::string output, gold, lexicon;
  std::size_t length = 500000;
  std::size_t words = 200;
  std::size_t min_len = 2;
  std::size_t max_len = 6;
  double zipf = 1.0;
  std::optional<std::uint64_t> lexicon_seed;
};

void cmd_synth(const SynthArgs& a, const Config& config, std::ostream& out) {
  PlantedLexiconOptions lex_opts{a.words, a.min_len, a.max_len, a.zipf, a.lexicon_seed.value_or(config.seed)};
  const auto planted = make_planted_lexicon(lex_opts);
  SyntheticOptions opts;
  opts.length = a.length;
  opts.words_per_sentence = config.words_per_sentence;
  opts.delimiter = config.delimiters.front();
  opts.seed = config.seed;
  const auto corpus = generate_synthetic_corpus(planted, opts);

  io::write_file_atomic(a.output, save_corpus(corpus.stream, config.encoding));
  if (!a.gold.empty()) {
    std::string text;
    for (const auto& s : corpus.gold) text += format_segmentation(s, config.separator, false) + '\n';
    io::write_file_atomic(a.gold, text);
  }
  if (!a.lexicon.empty()) {
    std::string text;
    for (std::size_t k = 0; k < planted.size(); ++k) {
      text += utf8::encode(planted[k].surface) + '\t' + fixed(planted[k].weight, 6) + '\t' +
              std::to_string(corpus.word_counts[k]) + '\n';
    }
    io::write_file_atomic(a.lexicon, text);
  }

  header(out, "synth", config);
  key_value(out, "rng", kRngName);
  key_value(out, "characters", corpus.stream.size());
  key_value(out, "sentences", corpus.gold.size());
  key_value(out, "planted_words", planted.size());
}

struct StatsArgs {
  std::string corpus;
  std::size_t top = 20;
};

void cmd_stats(const StatsArgs& a, const Config& config, std::ostream& out) {
  const auto stream = read_corpus(a.corpus, config.encoding);
  const auto sentences = split_sentences(stream, config.delimiter_set());
  const auto unigrams = count_unigrams(sentences);
  std::map<CharClass, std::size_t> classes;
  for (const auto& c : stream.chars) ++classes[c.cls];

  header(out, "stats", config);
  key_value(out, "characters", stream.size());
  for (auto cls : {CharClass::Ideograph, CharClass::Punctuation, CharClass::AsciiMarkup, CharClass::Other}) {
    key_value(out, "class." + std::string(to_string(cls)), classes[cls]);
  }
  key_value(out, "sentences", sentences.size());
  key_value(out, "sentence_characters", unigrams.total);
  key_value(out, "unique_characters", unigrams.counts.size());

  std::vector<std::pair<std::uint64_t, char32_t>> ranked;
  for (const auto& [c, n] : unigrams.counts) ranked.emplace_back(n, c);
  std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  for (std::size_t k = 0; k < std::min(a.top, ranked.size()); ++k) {
    out << "top." << (k + 1) << '=' << utf8::encode(ranked[k].second) << '\t' << ranked[k].first << '\n';
  }
}

struct SampleArgs {
  std::string corpus, output;
  std::size_t n = 300;
};

void cmd_sample(const SampleArgs& a, const Config& config, std::ostream& out) {
  const auto sentences = load_sentences(a.corpus, config);
  const auto sample = sample_test_set(sentences, a.n, config.seed);
  std::string text;
  for (const auto& s : sample) text += utf8::encode(s.text) + '\n';
  io::write_file_atomic(a.output, text);

  header(out, "sample", config);
  key_value(out, "rng", kRngName);
  key_value(out, "population", sentences.size());
  key_value(out, "sampled", sample.size());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statistical word extraction and dictionary augmentation for unsegmented text", "lexaug"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config_path, "key = value configuration file");
  app.add_option("--set", g.overrides, "override one config key (key=value), repeatable");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--encoding", g.encoding, "input encoding label (default utf-8)");
  app.add_option("--separator", g.separator, "token separator in segmented files");
  app.add_option("--threads", g.threads, "worker threads for tokenization");

  ExtractArgs extract;
  auto* ex = app.add_subcommand("extract", "extract candidate words from a corpus");
  ex->add_option("corpus", extract.corpus, "corpus file or directory")->required();
  ex->add_option("-o,--output", extract.output, "candidate list TSV")->required();

  AugmentArgs aug;
  auto* au = app.add_subcommand("augment", "merge extracted candidates into a dictionary");
  au->add_option("--dict", aug.dict, "dictionary TSV")->required();
  au->add_option("--candidates", aug.candidates, "candidate list TSV")->required();
  au->add_option("-o,--output", aug.output, "augmented dictionary TSV")->required();

  TokenizeArgs tok;
  auto* tk = app.add_subcommand("tokenize", "segment text with a dictionary");
  tk->add_option("text", tok.text, "text file or directory")->required();
  tk->add_option("--dict", tok.dict, "dictionary TSV")->required();
  tk->add_option("-o,--output", tok.output, "segmented output")->required();
  tk->add_flag("--mark-unknown", tok.mark_unknown, "append * to fallback tokens");

  auto* ev = app.add_subcommand("evaluate", "evaluation reports");
  ev->require_subcommand(1);
  JudgmentArgs judg;
  auto* ej = ev->add_subcommand("judgments", "precision from human judgments");
  ej->add_option("file", judg.file, "judgment TSV")->required();
  PraArgs pra;
  auto* ep = ev->add_subcommand("pra", "precision/recall/augmentation against a tokenized reference");
  ep->add_option("--candidates", pra.candidates, "candidate list TSV")->required();
  ep->add_option("--reference", pra.reference, "segmented reference text")->required();
  ep->add_option("--dict", pra.dict, "dictionary TSV")->required();
  ep->add_option("--judgments", pra.judgments, "judgment TSV");
  SegArgs seg;
  auto* es = ev->add_subcommand("segmentation", "false joins and false breaks against gold");
  es->add_option("--hyp", seg.hyp, "hypothesis segmentation")->required();
  es->add_option("--gold", seg.gold, "gold segmentation")->required();
  es->add_option("--baseline", seg.baseline, "baseline segmentation for error reduction");

  SynthArgs syn;
  auto* sy = app.add_subcommand("synth", "generate a synthetic corpus from a planted lexicon");
  sy->add_option("-o,--output", syn.output, "corpus text")->required();
  sy->add_option("--gold", syn.gold, "gold segmentation output");
  sy->add_option("--lexicon", syn.lexicon, "planted lexicon output (surface, weight, count)");
  sy->add_option("--length", syn.length, "characters");
  sy->add_option("--words", syn.words, "planted lexicon size");
  sy->add_option("--min-len", syn.min_len, "shortest word");
  sy->add_option("--max-len", syn.max_len, "longest word");
  sy->add_option("--zipf", syn.zipf, "Zipf exponent");
  sy->add_option("--lexicon-seed", syn.lexicon_seed, "seed for the planted lexicon (default: --seed)");

  StatsArgs st;
  auto* sa = app.add_subcommand("stats", "corpus character statistics");
  sa->add_option("corpus", st.corpus, "corpus file or directory")->required();
  sa->add_option("--top", st.top, "most frequent characters to list");

  SampleArgs smp;
  auto* sm = app.add_subcommand("sample", "draw sentences with replacement");
  sm->add_option("corpus", smp.corpus, "corpus file or directory")->required();
  sm->add_option("-n", smp.n, "sentences to draw");
  sm->add_option("-o,--output", smp.output, "one sentence per line")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Config config = resolve_config(g);
    if (ex->parsed()) cmd_extract(extract, config, out);
    else if (au->parsed()) cmd_augment(aug, config, out);
    else if (tk->parsed()) cmd_tokenize(tok, config, out);
    else if (ej->parsed()) cmd_eval_judgments(judg, config, out);
    else if (ep->parsed()) cmd_eval_pra(pra, config, out);
    else if (es->parsed()) cmd_eval_segmentation(seg, config, out);
    else if (sy->parsed()) cmd_synth(syn, config, out);
    else if (sa->parsed()) cmd_stats(st, config, out);
    else if (sm->parsed()) cmd_sample(smp, config, out);
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kInputFormat;
  } catch (const DecodingError& e) {
    err << "decoding error: " << e.what() << '\n';
    return kInputFormat;
  } catch (const MismatchedText& e) {
    err << "mismatched text: " << e.what() << '\n';
    return kInputFormat;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace lexaug::cli
