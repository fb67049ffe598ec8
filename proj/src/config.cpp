#include "lexaug/config.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "lexaug/errors.hpp"
#include "lexaug/io.hpp"
#include "lexaug/utf8.hpp"

namespace lexaug {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string unquote(std::string_view key, std::string_view raw) {
  if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"') return std::string(raw);
  std::string out;
  for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
    if (raw[i] != '\\') {
      out.push_back(raw[i]);
      continue;
    }
    if (i + 2 >= raw.size()) throw ConfigError(std::string(key), "dangling escape");
    switch (raw[++i]) {
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 't': out.push_back('\t'); break;
      case '\\': out.push_back('\\'); break;
      case '"': out.push_back('"'); break;
      default: throw ConfigError(std::string(key), "unknown escape");
    }
  }
  return out;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      default: out.push_back(c);
    }
  }
  return out + "\"";
}

std::string number(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

[[noreturn]] void bad(std::string_view key, const std::string& what) { throw ConfigError(std::string(key), what); }

std::uint64_t as_uint(std::string_view key, std::string_view v) {
  auto r = io::parse_uint(v);
  if (!r) bad(key, "expected a non-negative integer, got '" + std::string(v) + "'");
  return *r;
}

double as_double(std::string_view key, std::string_view v) {
  auto r = io::parse_double(v);
  if (!r) bad(key, "expected a finite number, got '" + std::string(v) + "'");
  return *r;
}

bool as_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  bad(key, "expected true or false, got '" + std::string(v) + "'");
}

std::u32string as_chars(std::string_view key, const std::string& v) {
  try {
    return utf8::decode(v);
  } catch (const DecodingError& e) {
    bad(key, e.what());
  }
}

}  // namespace

void Config::set(std::string_view key, std::string_view raw) {
  const std::string value = unquote(key, trim(raw));
  if (key == "window") {
    const auto v = as_uint(key, value);
    if (v > 64) bad(key, "window too large");
    window = static_cast<int>(v);
  } else if (key == "k0") {
    k0 = as_double(key, value);
  } else if (key == "U0") {
    U0 = as_double(key, value);
  } else if (key == "k1") {
    k1 = as_double(key, value);
  } else if (key == "T") {
    T = as_double(key, value);
  } else if (key == "min_bigram_freq") {
    min_bigram_freq = as_uint(key, value);
  } else if (key == "min_ngram_freq") {
    min_ngram_freq = as_uint(key, value);
  } else if (key == "min_candidate_freq") {
    min_candidate_freq = as_uint(key, value);
  } else if (key == "mutual_strength") {
    mutual_strength = as_bool(key, value);
  } else if (key == "prune_subsumed") {
    prune_subsumed = as_bool(key, value);
  } else if (key == "subsume_ratio") {
    subsume_ratio = as_double(key, value);
  } else if (key == "stoplist") {
    stoplist = as_chars(key, value);
  } else if (key == "delimiters") {
    delimiters = as_chars(key, value);
  } else if (key == "tokenizer_strategy") {
    if (value == "shortest_path" || value == "dp") {
      tokenizer_strategy = Strategy::ShortestPath;
    } else if (value == "greedy") {
      tokenizer_strategy = Strategy::Greedy;
    } else {
      bad(key, "expected shortest_path or greedy, got '" + value + "'");
    }
  } else if (key == "max_match") {
    max_match = as_uint(key, value);
  } else if (key == "seed") {
    seed = as_uint(key, value);
  } else if (key == "encoding") {
    encoding = value;
  } else if (key == "separator") {
    separator = value;
  } else if (key == "mark_unknown") {
    mark_unknown = as_bool(key, value);
  } else if (key == "words_per_sentence") {
    words_per_sentence = as_uint(key, value);
  } else if (key == "threads") {
    const auto v = as_uint(key, value);
    if (v > 1024) bad(key, "too many threads");
    threads = static_cast<unsigned>(v);
  } else {
    bad(key, "unknown key");
  }
}

void Config::validate() const {
  if (window < 1) bad("window", "must be >= 1");
  if (T <= 0.0 || T > 1.0) bad("T", "must lie in (0, 1]");
  if (min_bigram_freq < 1) bad("min_bigram_freq", "must be >= 1");
  if (min_ngram_freq < 1) bad("min_ngram_freq", "must be >= 1");
  if (min_candidate_freq < 1) bad("min_candidate_freq", "must be >= 1");
  if (!(subsume_ratio > 0.0)) bad("subsume_ratio", "must be > 0");
  if (delimiters.empty()) bad("delimiters", "must not be empty");
  if (max_match < 1) bad("max_match", "must be >= 1");
  if (encoding.empty()) bad("encoding", "must not be empty");
  if (separator.empty()) bad("separator", "must not be empty");
  if (words_per_sentence < 1) bad("words_per_sentence", "must be >= 1");
  if (threads < 1) bad("threads", "must be >= 1");
}

ExtractionParams Config::extraction_params() const {
  ExtractionParams p;
  p.window = window;
  p.significance = {k0, U0, k1, min_bigram_freq};
  p.expansion = {T, min_ngram_freq, 2 * static_cast<std::size_t>(window)};
  p.mutual = mutual_strength;
  p.prune_subsumed = prune_subsumed;
  p.subsume_ratio = subsume_ratio;
  return p;
}

TokenizerOptions Config::tokenizer_options() const { return {tokenizer_strategy, max_match}; }

std::string Config::to_string() const {
  std::string out;
  auto line = [&](std::string_view key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  line("window", std::to_string(window));
  line("k0", number(k0));
  line("U0", number(U0));
  line("k1", number(k1));
  line("T", number(T));
  line("min_bigram_freq", std::to_string(min_bigram_freq));
  line("min_ngram_freq", std::to_string(min_ngram_freq));
  line("min_candidate_freq", std::to_string(min_candidate_freq));
  line("mutual_strength", flag(mutual_strength));
  line("prune_subsumed", flag(prune_subsumed));
  line("subsume_ratio", number(subsume_ratio));
  line("stoplist", quote(utf8::encode(stoplist)));
  line("delimiters", quote(utf8::encode(delimiters)));
  line("tokenizer_strategy", tokenizer_strategy == Strategy::Greedy ? "greedy" : "shortest_path");
  line("max_match", std::to_string(max_match));
  line("seed", std::to_string(seed));
  line("encoding", quote(encoding));
  line("separator", quote(separator));
  line("mark_unknown", flag(mark_unknown));
  line("words_per_sentence", std::to_string(words_per_sentence));
  line("threads", std::to_string(threads));
  return out;
}

Config parse_config(std::string_view text) {
  Config config;
  std::set<std::string, std::less<>> seen;
  for (auto raw : io::lines(text)) {
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) bad(std::string(line), "expected key = value");
    const auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (!value.empty() && value.front() != '"') {
      if (auto hash = value.find('#'); hash != std::string_view::npos) value = trim(value.substr(0, hash));
    }
    if (!seen.insert(std::string(key)).second) bad(key, "duplicate key");
    config.set(key, value);
  }
  config.validate();
  return config;
}

Config load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = io::read_file(path);
  } catch (const std::exception& e) {
    throw ConfigError("config", e.what());
  }
  return parse_config(text);
}

}  // namespace lexaug
