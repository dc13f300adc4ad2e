#pragma once

// Ground-truth construction of the curve: generations A_n by the recurrence,
// prefixes of the infinite word HC and the lattice walk they describe.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "hilbert/direction.hpp"

namespace hilbert {

/// Caps how large a generation may be materialised.
struct Budget {
  int max_generation = 12;

  /// Default budget, overridden by the HILBERT_BUDGET environment variable.
  static Budget from_env();
};

struct LatticePoint {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// |A_n| = 4^n - 1.
constexpr std::uint64_t generation_length(int n) noexcept {
  return (std::uint64_t{1} << (2 * n)) - 1;
}

/// Smallest n with 4^n - 1 >= len.
int generation_covering(std::uint64_t len) noexcept;

/// A_n. Throws BudgetError when n exceeds the budget.
DirectionWord generate_generation(int n, const Budget& budget = {});

/// First `len` letters of HC.
DirectionWord hc_prefix(std::uint64_t len, const Budget& budget = {});

/// Points visited when following `word` from `start`; |word| + 1 entries.
/// Throws NegativeCoordinateError if a step leaves the quadrant.
std::vector<LatticePoint> walk(std::span<const Direction> word,
                               LatticePoint start = {});

/// CSV dump "n,x,y" with a header row.
void write_walk_csv(std::ostream& out, std::span<const LatticePoint> points);

}  // namespace hilbert
