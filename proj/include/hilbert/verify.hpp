#pragma once

// Bounded, exhaustive replays of the curve's defining identities and of the
// synchronized-automaton properties, plus cross-checks between the four
// representations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/curve.hpp"
#include "hilbert/dfao.hpp"
#include "hilbert/linrep.hpp"
#include "hilbert/sync.hpp"

namespace hilbert {

struct VerifyReport {
  std::string name;
  std::uint64_t bound = 0;
  bool passed = true;
  std::optional<std::vector<std::uint64_t>> witness;  // present iff !passed
};

/// "name=<text> bound=<int> passed=<bool> witness=<(a,b,...)|none>"
std::string format_report(const VerifyReport& r);

/// The machines under test. Defaults are the built-in Hilbert machines;
/// the CLI substitutes files for fault injection.
struct VerifyInputs {
  Dfao dfao = hilbert_dfao();
  SyncAutomaton sync = hilbert_sync();
  LinearRepQ linrep = hilbert_linrep();
  Budget budget{};
};

/// For x = 4^n, n = 0..max_gen, checks on the DFAO's letters:
///   eq1  HC[0] = U
///   eq2  HC[x+t] = tD(HC[t])    for t < x
///   eq3  HC[2x+t] = tD(HC[t])   for t+1 < x
///   eq4  HC[3x-1] = L (n odd), D (n even)
///   eq5  HC[3x+t] = tH(HC[t])   for t+1 < x
///   eq6  HC[x-1] = R (n odd), U (n even)
/// Witnesses are (n, t) or (n). Throws BudgetError if max_gen + 1 exceeds
/// the budget.
std::vector<VerifyReport> verify_identities(int max_gen, const Dfao& dfao = hilbert_dfao(),
                                            const Budget& budget = {});

/// fn1, fn2, origin, padding, check_up/right/down/left, allhit, hitonce and
/// roundtrip over n < 4^t and x, y < 2^t. Requires t <= 8.
std::vector<VerifyReport> verify_sync_suite(unsigned t, const SyncAutomaton& sync = hilbert_sync(),
                                            const Dfao& dfao = hilbert_dfao());

/// For n < 4^bound_exp: oracle walk, linear representation and synchronized
/// lookup agree on (x_n, y_n); the DFAO agrees with the oracle letters; the
/// pipeline's minimized step representation agrees with the published one;
/// and its semigroup automaton is isomorphic to the DFAO. Requires bound_exp <= 7.
std::vector<VerifyReport> verify_cross(unsigned bound_exp, const VerifyInputs& in = {});

struct SuiteBounds {
  int gen_bound = 6;
  unsigned digit_bound = 6;
  unsigned cross_bound = 6;
};

/// Runs the three suites concurrently; reports sorted by name.
std::vector<VerifyReport> verify_all(const SuiteBounds& bounds, const VerifyInputs& in = {});

bool all_passed(const std::vector<VerifyReport>& reports);

}  // namespace hilbert
