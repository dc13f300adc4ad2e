#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace hilbert {

using Digit = std::uint8_t;

/// Base-k digits, most significant first.
struct DigitString {
  unsigned base = 10;
  std::vector<Digit> digits;

  std::size_t size() const noexcept { return digits.size(); }
  friend bool operator==(const DigitString&, const DigitString&) = default;
};

/// Canonical representation: no leading zeros, and zero is the single digit 0.
DigitString to_base(std::uint64_t n, unsigned base);

/// Throws Error on overflow or out-of-range digits.
std::uint64_t from_base(std::span<const Digit> digits, unsigned base);
inline std::uint64_t from_base(const DigitString& s) { return from_base(s.digits, s.base); }

/// Number of digits of the canonical base-k form (1 for zero).
unsigned digit_length(std::uint64_t n, unsigned base) noexcept;

/// Prepends zeros until the string has `length` digits.
DigitString pad_to(DigitString s, std::size_t length);

/// Parses a raw digit string such as "2103"; throws ParseError.
DigitString parse_digits(std::string_view text, unsigned base);

}  // namespace hilbert
