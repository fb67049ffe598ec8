#include "lexaug/corpus.hpp"

#include <iconv.h>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "lexaug/errors.hpp"
#include "lexaug/utf8.hpp"

namespace lexaug {

namespace {

bool is_ascii_punct(char32_t cp) {
  return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) || (cp >= 0x5B && cp <= 0x60) ||
         (cp >= 0x7B && cp <= 0x7E);
}

bool is_utf8_label(std::string_view encoding) {
  std::string lower;
  for (char c : encoding) {
    if (c != '-' && c != '_') lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return lower.empty() || lower == "utf8";
}

class Iconv {
 public:
  Iconv(const std::string& to, const std::string& from) : handle_(iconv_open(to.c_str(), from.c_str())) {
    if (handle_ == reinterpret_cast<iconv_t>(-1)) {
      throw DecodingError(0, "unsupported encoding conversion " + from + " -> " + to);
    }
  }
  Iconv(const Iconv&) = delete;
  Iconv& operator=(const Iconv&) = delete;
  ~Iconv() { iconv_close(handle_); }

  // Converts the whole input; on failure reports the input offset reached.
  std::string run(std::string_view input) {
    std::string out;
    std::vector<char> buffer(4096);
    char* in = const_cast<char*>(input.data());
    std::size_t in_left = input.size();
    while (true) {
      char* dst = buffer.data();
      std::size_t out_left = buffer.size();
      const std::size_t rc = iconv(handle_, in_left > 0 ? &in : nullptr, &in_left, &dst, &out_left);
      out.append(buffer.data(), buffer.size() - out_left);
      if (rc != static_cast<std::size_t>(-1)) {
        if (in_left == 0) {
          // flush shift state
          dst = buffer.data();
          out_left = buffer.size();
          iconv(handle_, nullptr, nullptr, &dst, &out_left);
          out.append(buffer.data(), buffer.size() - out_left);
          return out;
        }
        continue;
      }
      if (errno == E2BIG) continue;
      const auto offset = static_cast<std::size_t>(in - input.data());
      if (errno == EINVAL) throw DecodingError(offset, "truncated multibyte sequence");
      throw DecodingError(offset, "invalid multibyte sequence");
    }
  }

 private:
  iconv_t handle_;
};

}  // namespace

CharClass classify_char(char32_t cp) noexcept {
  if ((cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF)) return CharClass::Ideograph;
  if ((cp >= 0x3000 && cp <= 0x303F) || (cp >= 0xFF00 && cp <= 0xFFEF) || is_ascii_punct(cp)) {
    return CharClass::Punctuation;
  }
  if (cp >= 0x20 && cp <= 0x7E) return CharClass::AsciiMarkup;
  return CharClass::Other;
}

std::string_view to_string(CharClass cls) noexcept {
  switch (cls) {
    case CharClass::Ideograph: return "ideograph";
    case CharClass::Punctuation: return "punctuation";
    case CharClass::AsciiMarkup: return "ascii";
    case CharClass::Other: return "other";
  }
  return "other";
}

std::u32string CharStream::text() const {
  std::u32string out;
  out.reserve(chars.size());
  for (const auto& c : chars) out.push_back(c.code);
  return out;
}

CharStream make_stream(std::u32string_view text, std::string source_id) {
  CharStream stream;
  stream.source_id = std::move(source_id);
  stream.chars.reserve(text.size());
  for (char32_t cp : text) stream.chars.push_back({cp, classify_char(cp)});
  return stream;
}

CharStream load_corpus(std::string_view bytes, std::string_view encoding, std::string source_id) {
  if (is_utf8_label(encoding)) return make_stream(utf8::decode(bytes), std::move(source_id));

  const std::string raw = Iconv("UTF-32LE", std::string(encoding)).run(bytes);
  std::u32string text;
  text.reserve(raw.size() / 4);
  for (std::size_t i = 0; i + 3 < raw.size(); i += 4) {
    const auto* p = reinterpret_cast<const unsigned char*>(raw.data() + i);
    text.push_back(static_cast<char32_t>(p[0]) | (static_cast<char32_t>(p[1]) << 8) |
                   (static_cast<char32_t>(p[2]) << 16) | (static_cast<char32_t>(p[3]) << 24));
  }
  return make_stream(text, std::move(source_id));
}

std::string save_corpus(const CharStream& stream, std::string_view encoding) {
  const std::u32string text = stream.text();
  if (is_utf8_label(encoding)) return utf8::encode(text);

  std::string raw;
  raw.reserve(text.size() * 4);
  for (char32_t cp : text) {
    for (int shift = 0; shift < 32; shift += 8) raw.push_back(static_cast<char>((cp >> shift) & 0xFF));
  }
  return Iconv(std::string(encoding), "UTF-32LE").run(raw);
}

CharStream read_corpus(const std::filesystem::path& path, std::string_view encoding) {
  namespace fs = std::filesystem;
  auto read_one = [&](const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_corpus(buf.str(), encoding, file.string());
  };

  if (!fs::is_directory(path)) return read_one(path);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(path)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CharStream> shards;
  shards.reserve(files.size());
  for (const auto& f : files) shards.push_back(read_one(f));
  return concat(shards, path.string());
}

CharStream concat(std::span<const CharStream> shards, std::string source_id) {
  CharStream out;
  out.source_id = std::move(source_id);
  std::size_t total = 0;
  for (const auto& s : shards) total += s.size();
  out.chars.reserve(total);
  for (const auto& s : shards) out.chars.insert(out.chars.end(), s.chars.begin(), s.chars.end());
  return out;
}

DelimiterSet DelimiterSet::defaults() { return {U"。！？；\n\r.!?"}; }

bool DelimiterSet::contains(char32_t cp) const noexcept {
  return chars.find(cp) != std::u32string::npos;
}

std::vector<Sentence> split_sentences(const CharStream& stream, const DelimiterSet& delimiters) {
  std::vector<Sentence> out;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    if (end > start) {
      Sentence s;
      s.index = out.size();
      s.offset = start;
      s.text.reserve(end - start);
      for (std::size_t i = start; i < end; ++i) s.text.push_back(stream.chars[i].code);
      out.push_back(std::move(s));
    }
  };
  for (std::size_t i = 0; i < stream.size(); ++i) {
    if (delimiters.contains(stream.chars[i].code)) {
      flush(i);
      start = i + 1;
    }
  }
  flush(stream.size());
  return out;
}

bool all_ideographs(std::u32string_view text) noexcept {
  return std::all_of(text.begin(), text.end(),
                     [](char32_t cp) { return classify_char(cp) == CharClass::Ideograph; });
}

}  // namespace lexaug
