#include <string>

#include "lexaug/errors.hpp"
#include "lexaug/extraction.hpp"
#include "lexaug/io.hpp"
#include "lexaug/utf8.hpp"

namespace lexaug {

std::string format_candidates(std::span<const NGramCandidate> candidates) {
  std::string out;
  for (const auto& c : candidates) {
    out += utf8::encode(c.surface);
    out += '\t' + std::to_string(c.surface.size());
    out += '\t' + std::to_string(c.freq);
    out += '\t';
    out += to_string(c.stage);
    if (c.anchor) {
      out += '\t';
      utf8::append(out, c.anchor->first);
      utf8::append(out, c.anchor->second);
      out += '\t' + std::to_string(c.anchor->distance);
    } else {
      out += "\t-\t-";
    }
    out += '\n';
  }
  return out;
}

std::vector<NGramCandidate> parse_candidates(std::string_view text) {
  std::vector<NGramCandidate> out;
  const auto rows = io::lines(text);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const std::size_t line = n + 1;
    if (rows[n].empty()) continue;
    const auto fields = io::split(rows[n], "\t");
    if (fields.size() != 6) throw FormatError(line, "expected 6 tab-separated fields");

    NGramCandidate c;
    try {
      c.surface = utf8::decode(fields[0]);
    } catch (const DecodingError& e) {
      throw FormatError(line, e.what());
    }
    if (c.surface.size() < 2) throw FormatError(line, "surface shorter than 2 characters");
    const auto length = io::parse_uint(fields[1]);
    if (!length || *length != c.surface.size()) throw FormatError(line, "length does not match surface");
    const auto freq = io::parse_uint(fields[2]);
    if (!freq || *freq < 1) throw FormatError(line, "freq must be a positive integer");
    c.freq = *freq;

    if (fields[3] == "adjacent") {
      c.stage = Stage::AdjacentBigram;
      if (fields[4] != "-" || fields[5] != "-") throw FormatError(line, "adjacent bigram carries an anchor");
    } else if (fields[3] == "expanded") {
      c.stage = Stage::Expanded;
      std::u32string pair;
      try {
        pair = utf8::decode(fields[4]);
      } catch (const DecodingError& e) {
        throw FormatError(line, e.what());
      }
      const auto distance = io::parse_int(fields[5]);
      if (pair.size() != 2 || !distance || *distance == 0) throw FormatError(line, "malformed anchor");
      c.anchor = Anchor{pair[0], pair[1], static_cast<int>(*distance)};
    } else {
      throw FormatError(line, "unknown stage '" + std::string(fields[3]) + "'");
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace lexaug
