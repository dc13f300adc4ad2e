#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hilbert {

/// A unit move of the curve. The enumerator value is the numeric coding.
enum class Direction : std::uint8_t { U = 0, R = 1, D = 2, L = 3 };

using DirectionWord = std::vector<Direction>;

/// Letterwise maps used by the generation recurrence.
enum class Coding {
  Diagonal,  // flip about the main diagonal: U<->R, D<->L
  HalfTurn,  // 180 degree rotation: U<->D, R<->L
};

constexpr int coding_of(Direction d) noexcept { return static_cast<int>(d); }

constexpr Direction direction_from_coding(int c) noexcept {
  return static_cast<Direction>(c & 3);
}

constexpr char to_char(Direction d) noexcept {
  constexpr std::array<char, 4> letters{'U', 'R', 'D', 'L'};
  return letters[coding_of(d)];
}

/// Throws ParseError for anything other than U, R, D, L.
Direction direction_from_char(char c);

struct Step {
  int dx;
  int dy;
  friend constexpr bool operator==(const Step&, const Step&) = default;
};

constexpr Step step_of(Direction d) noexcept {
  switch (d) {
    case Direction::U: return {0, 1};
    case Direction::R: return {1, 0};
    case Direction::D: return {0, -1};
    case Direction::L: return {-1, 0};
  }
  return {0, 0};
}

/// Inverse of step_of; false when `s` is not a unit step.
bool direction_from_step(Step s, Direction& out) noexcept;

constexpr Direction apply_coding(Coding c, Direction d) noexcept {
  // Diagonal swaps 0<->1 and 2<->3; HalfTurn swaps 0<->2 and 1<->3.
  const int code = coding_of(d);
  return direction_from_coding(c == Coding::Diagonal ? code ^ 1 : code ^ 2);
}

DirectionWord apply_coding(Coding c, std::span<const Direction> word);

std::string to_string(std::span<const Direction> word);
DirectionWord parse_word(std::string_view text);

}  // namespace hilbert
