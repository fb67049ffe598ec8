#include "test_util.hpp"

#include <random>

#include "lexaug/errors.hpp"
#include "lexaug/io.hpp"
#include "lexaug/utf8.hpp"

using namespace lexaug;

TEST_CASE("decode and encode ideographs") {
  const std::string bytes = "立法局";
  CHECK(utf8::decode(bytes) == U"立法局");
  CHECK(utf8::encode(U"立法局") == bytes);
  CHECK(utf8::decode("") == U"");
  CHECK(utf8::encode(U'\U0001F600') == "\xF0\x9F\x98\x80");
}

TEST_CASE("invalid sequences report the byte offset") {
  auto offset_of = [](const std::string& bytes) -> std::size_t {
    try {
      utf8::decode(bytes);
    } catch (const DecodingError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  CHECK(offset_of("ab\xFF") == 2);                // bad lead byte
  CHECK(offset_of("a\xE7\xAB") == 1);             // truncated
  CHECK(offset_of("\xE7\xAB" "A") == 2);          // bad continuation
  CHECK(offset_of("x\xC0\x80") == 1);             // overlong NUL
  CHECK(offset_of("\xED\xA0\x80") == 0);          // surrogate
  CHECK(offset_of("\xF4\x90\x80\x80") == 0);      // above U+10FFFF
  CHECK(offset_of("ok") == std::string::npos);
}

TEST_CASE("round trip of random scalar values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> cp(0, 0x10FFFF);
  for (int round = 0; round < 200; ++round) {
    std::u32string text;
    for (int i = 0; i < 50; ++i) {
      char32_t c = cp(rng);
      if (c >= 0xD800 && c <= 0xDFFF) c = 0x4E00;
      text.push_back(c);
    }
    REQUIRE(utf8::decode(utf8::encode(text)) == text);
  }
}

TEST_CASE("io helpers") {
  CHECK(io::split("a\tb\t", "\t").size() == 3);
  CHECK(io::split("", "\t").size() == 1);
  const auto ls = io::lines("x\r\ny\n");
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "x");
  CHECK(ls[1] == "y");
  CHECK(io::lines("").empty());
  CHECK(io::parse_uint("12") == 12u);
  CHECK_FALSE(io::parse_uint("-1"));
  CHECK_FALSE(io::parse_uint("1x"));
  CHECK(io::parse_int("-4") == -4);
  CHECK(io::parse_double("0.75") == doctest::Approx(0.75));
  CHECK_FALSE(io::parse_double("nan"));
  CHECK_FALSE(io::parse_double(""));
}
