#include "hilbert/digits.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hilbert/error.hpp"

namespace hilbert {

DigitString to_base(std::uint64_t n, unsigned base) {
  if (base < 2) throw Error("base must be at least 2");
  DigitString s{base, {}};
  do {
    s.digits.push_back(static_cast<Digit>(n % base));
    n /= base;
  } while (n != 0);
  std::reverse(s.digits.begin(), s.digits.end());
  return s;
}

std::uint64_t from_base(std::span<const Digit> digits, unsigned base) {
  if (base < 2) throw Error("base must be at least 2");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 0;
  for (Digit d : digits) {
    if (d >= base) throw Error("digit " + std::to_string(d) + " out of range for base " +
                               std::to_string(base));
    if (n > (kMax - d) / base) throw Error("digit string overflows 64 bits");
    n = n * base + d;
  }
  return n;
}

unsigned digit_length(std::uint64_t n, unsigned base) noexcept {
  unsigned len = 1;
  while (n >= base) {
    n /= base;
    ++len;
  }
  return len;
}

DigitString pad_to(DigitString s, std::size_t length) {
  if (s.digits.size() < length)
    s.digits.insert(s.digits.begin(), length - s.digits.size(), Digit{0});
  return s;
}

DigitString parse_digits(std::string_view text, unsigned base) {
  if (text.empty()) throw ParseError(0, "empty digit string");
  DigitString s{base, {}};
  for (char c : text) {
    if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') >= base)
      throw ParseError(0, std::string("invalid base-") + std::to_string(base) +
                              " digit '" + c + "'");
    s.digits.push_back(static_cast<Digit>(c - '0'));
  }
  return s;
}

}  // namespace hilbert
