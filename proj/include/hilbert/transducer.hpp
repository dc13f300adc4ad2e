#pragma once

// Nondeterministic letter-to-word transducers over base-k digits.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hilbert/dfao.hpp"
#include "hilbert/digits.hpp"

namespace hilbert {

struct TransducerMove {
  StateId from;
  Digit input;
  std::vector<Digit> output;
  StateId to;
};

struct Transducer {
  unsigned base = 4;
  std::size_t state_count = 1;
  StateId initial = 0;
  std::vector<bool> final;  // indexed by state
  std::vector<TransducerMove> moves;

  bool is_final(StateId q) const { return q < final.size() && final[q]; }
};

/// Maps (n)_k to (n+1)_k. Three states: start, copy and carry. Leaving the
/// start or copy state on a digit d < k-1 may emit d+1 and enter the carry
/// state, which rewrites every remaining k-1 as 0 and is the only final
/// state. The start state also emits "1 0" for a leading k-1, so canonical
/// strings of all (k-1)s get their extra digit.
Transducer increment_transducer(unsigned base);

/// One final state copying every digit.
Transducer identity_transducer(unsigned base);

/// Outputs of every accepting path on `input`, one entry per path.
std::vector<std::vector<Digit>> transduce_all(const Transducer& t, std::span<const Digit> input);

/// Unique output on `input`, or nullopt when no path accepts.
/// Throws NonFunctionalTransducerError when more than one path accepts.
std::optional<std::vector<Digit>> transduce(const Transducer& t, std::span<const Digit> input);

/// Checks every input of length <= max_length has at most one accepting
/// path. Throws NonFunctionalTransducerError naming the first offending input.
void check_functional(const Transducer& t, std::size_t max_length = 6);

}  // namespace hilbert
