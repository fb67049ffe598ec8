#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace lexaug {

/// Length buckets used for candidate lists and reference token types: 2..6 and "m" (> 6).
enum class LengthClass { Two, Three, Four, Five, Six, Long };

inline constexpr std::array<LengthClass, 6> kLengthClasses = {
    LengthClass::Two, LengthClass::Three, LengthClass::Four,
    LengthClass::Five, LengthClass::Six, LengthClass::Long};

/// Requires n >= 2.
constexpr LengthClass length_class(std::size_t n) noexcept {
  return n > 6 ? LengthClass::Long : static_cast<LengthClass>(n - 2);
}

constexpr std::size_t index_of(LengthClass c) noexcept { return static_cast<std::size_t>(c); }

constexpr std::string_view label(LengthClass c) noexcept {
  constexpr std::array<std::string_view, 6> names = {"2", "3", "4", "5", "6", "m"};
  return names[index_of(c)];
}

}  // namespace lexaug
