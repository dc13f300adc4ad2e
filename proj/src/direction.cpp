#include "hilbert/direction.hpp"

#include "hilbert/error.hpp"

namespace hilbert {

Direction direction_from_char(char c) {
  switch (c) {
    case 'U': return Direction::U;
    case 'R': return Direction::R;
    case 'D': return Direction::D;
    case 'L': return Direction::L;
    default:
      throw ParseError(0, std::string("not a direction letter: '") + c + "'");
  }
}

bool direction_from_step(Step s, Direction& out) noexcept {
  for (int c = 0; c < 4; ++c) {
    if (step_of(direction_from_coding(c)) == s) {
      out = direction_from_coding(c);
      return true;
    }
  }
  return false;
}

DirectionWord apply_coding(Coding c, std::span<const Direction> word) {
  DirectionWord out;
  out.reserve(word.size());
  for (Direction d : word) out.push_back(apply_coding(c, d));
  return out;
}

std::string to_string(std::span<const Direction> word) {
  std::string s;
  s.reserve(word.size());
  for (Direction d : word) s.push_back(to_char(d));
  return s;
}

DirectionWord parse_word(std::string_view text) {
  DirectionWord out;
  out.reserve(text.size());
  for (char c : text) out.push_back(direction_from_char(c));
  return out;
}

}  // namespace hilbert
