#pragma once

#include <string>
#include <string_view>

namespace lexaug::utf8 {

/// Strict decoder: rejects overlong forms, surrogates and code points above U+10FFFF.
/// Throws DecodingError carrying the offset of the offending byte.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

inline std::string encode(char32_t cp) {
  std::string out;
  append(out, cp);
  return out;
}

}  // namespace lexaug::utf8
