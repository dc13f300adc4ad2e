#pragma once

// Automata reading (n, x, y) in lockstep: n in base 4, x and y in base 2,
// all padded to a common length with leading zeros.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "hilbert/curve.hpp"
#include "hilbert/dfao.hpp"

namespace hilbert {

struct TripleDigit {
  Digit i = 0;  // base-4 digit of n
  Digit j = 0;  // bit of x
  Digit k = 0;  // bit of y

  constexpr unsigned index() const noexcept { return i * 4u + j * 2u + k; }
  static constexpr TripleDigit from_index(unsigned idx) noexcept {
    return {static_cast<Digit>(idx / 4), static_cast<Digit>((idx / 2) % 2),
            static_cast<Digit>(idx % 2)};
  }
  friend constexpr bool operator==(const TripleDigit&, const TripleDigit&) = default;
};

inline constexpr unsigned kTripleCount = 16;

/// Deterministic automaton over TripleDigit; absent transitions go to an
/// implicit non-accepting dead state.
class SyncAutomaton {
 public:
  SyncAutomaton(std::size_t state_count, StateId initial, std::vector<StateId> accepting);

  std::size_t state_count() const noexcept { return accepting_.size(); }
  StateId initial() const noexcept { return initial_; }
  bool is_accepting(StateId q) const { return accepting_.at(q); }
  std::vector<StateId> accepting_states() const;

  std::optional<StateId> next(StateId q, TripleDigit t) const;
  /// Throws Error if a different transition is already present.
  void set(StateId q, TripleDigit t, StateId to);
  std::size_t transition_count() const;

  friend bool operator==(const SyncAutomaton&, const SyncAutomaton&) = default;

 private:
  StateId initial_;
  std::vector<bool> accepting_;
  std::vector<std::optional<StateId>> delta_;  // [q * 16 + triple index]
};

/// The 10-state machine relating n to the curve coordinates (x_n, y_n).
SyncAutomaton hilbert_sync();

/// Common padded length: max(len_4(n), len_2(x), len_2(y)).
unsigned sync_length(std::uint64_t n, std::uint64_t x, std::uint64_t y) noexcept;

bool accepts(const SyncAutomaton& m, std::uint64_t n, std::uint64_t x, std::uint64_t y);

/// The unique (x, y) accepted together with n, found by a layered search
/// over the len_4(n) digit positions that fixes the n-digit and branches on
/// the two bits. Throws NoAcceptingPathError / MultipleAcceptingPathsError.
LatticePoint sync_coords(const SyncAutomaton& m, std::uint64_t n);

/// The unique n accepted together with (x, y); branches on the base-4 digit.
std::uint64_t sync_locate(const SyncAutomaton& m, std::uint64_t x, std::uint64_t y);

/// Text form: header "sync bases=4,2,2 states=<n> initial=<q> accepting=<q,q,...>",
/// then one "q [i,j,k] -> q'" line per transition. The writer orders
/// transitions by (q, i, j, k).
void write_sync(std::ostream& out, const SyncAutomaton& m);
SyncAutomaton read_sync(std::istream& in);

}  // namespace hilbert
