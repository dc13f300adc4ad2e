#pragma once

// Deterministic finite automata with output, reading base-k digits
// most significant first.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "hilbert/digits.hpp"
#include "hilbert/direction.hpp"
#include "hilbert/error.hpp"

namespace hilbert {

using StateId = std::size_t;

template <typename Output>
class BasicDfao {
 public:
  BasicDfao() = default;

  /// `transitions` is row-major: transitions[q * base + d].
  BasicDfao(unsigned base, StateId initial, std::vector<StateId> transitions,
            std::vector<Output> outputs)
      : base_(base), initial_(initial), delta_(std::move(transitions)),
        tau_(std::move(outputs)) {
    if (base_ < 2) throw Error("dfao base must be at least 2");
    if (delta_.size() != tau_.size() * base_)
      throw Error("dfao transition table is not total over states x digits");
    if (tau_.empty() || initial_ >= tau_.size()) throw Error("dfao initial state out of range");
    for (StateId q : delta_)
      if (q >= tau_.size()) throw Error("dfao transition target out of range");
  }

  unsigned base() const noexcept { return base_; }
  std::size_t state_count() const noexcept { return tau_.size(); }
  StateId initial() const noexcept { return initial_; }

  StateId next(StateId q, Digit d) const { return delta_.at(q * base_ + d); }
  const Output& output(StateId q) const { return tau_.at(q); }

  StateId run(std::span<const Digit> digits) const {
    StateId q = initial_;
    for (Digit d : digits) q = next(q, d);
    return q;
  }

  const Output& operator()(std::span<const Digit> digits) const { return output(run(digits)); }

  friend bool operator==(const BasicDfao&, const BasicDfao&) = default;

 private:
  unsigned base_ = 2;
  StateId initial_ = 0;
  std::vector<StateId> delta_;
  std::vector<Output> tau_;
};

using Dfao = BasicDfao<Direction>;

/// The 8-state base-4 machine whose outputs spell HC.
Dfao hilbert_dfao();

template <typename Output>
const Output& eval_dfao(const BasicDfao<Output>& m, std::uint64_t n) {
  return m.output(m.run(to_base(n, m.base()).digits));
}

/// Maps each state reachable in `a` to its counterpart in `b`.
using Relabeling = std::map<StateId, StateId>;

/// Isomorphism test on the reachable, output-respecting parts. Both machines
/// are renumbered breadth-first from the initial state (digits in increasing
/// order); they are equal iff the renumbered machines coincide.
template <typename Output>
std::optional<Relabeling> dfao_equal(const BasicDfao<Output>& a, const BasicDfao<Output>& b) {
  if (a.base() != b.base()) return std::nullopt;
  auto bfs_order = [](const BasicDfao<Output>& m) {
    std::vector<std::optional<std::size_t>> index(m.state_count());
    std::vector<StateId> order{m.initial()};
    index[m.initial()] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (unsigned d = 0; d < m.base(); ++d) {
        const StateId t = m.next(order[head], static_cast<Digit>(d));
        if (!index[t]) {
          index[t] = order.size();
          order.push_back(t);
        }
      }
    return std::pair{order, index};
  };
  const auto [order_a, index_a] = bfs_order(a);
  const auto [order_b, index_b] = bfs_order(b);
  if (order_a.size() != order_b.size()) return std::nullopt;

  Relabeling witness;
  for (std::size_t i = 0; i < order_a.size(); ++i) {
    const StateId qa = order_a[i];
    const StateId qb = order_b[i];
    if (!(a.output(qa) == b.output(qb))) return std::nullopt;
    for (unsigned d = 0; d < a.base(); ++d) {
      const auto da = static_cast<Digit>(d);
      if (*index_a[a.next(qa, da)] != *index_b[b.next(qb, da)]) return std::nullopt;
    }
    witness.emplace(qa, qb);
  }
  return witness;
}

/// Text form:
///   dfao base=4 states=8 initial=0
///   state <id> output=<U|R|D|L>
///   <from> <digit> -> <to>
/// Lines are order-insensitive; '#' starts a comment. The writer emits the
/// canonical order (header, states by id, transitions by (from, digit)).
void write_dfao(std::ostream& out, const Dfao& m);
Dfao read_dfao(std::istream& in);

}  // namespace hilbert
