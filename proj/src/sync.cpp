#include "hilbert/sync.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hilbert/error.hpp"
#include "text_util.hpp"

namespace hilbert {

SyncAutomaton::SyncAutomaton(std::size_t state_count, StateId initial,
                             std::vector<StateId> accepting)
    : initial_(initial), accepting_(state_count, false),
      delta_(state_count * kTripleCount) {
  if (state_count == 0 || initial >= state_count)
    throw Error("sync automaton initial state out of range");
  for (StateId q : accepting) {
    if (q >= state_count) throw Error("sync automaton accepting state out of range");
    accepting_[q] = true;
  }
}

std::vector<StateId> SyncAutomaton::accepting_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < accepting_.size(); ++q)
    if (accepting_[q]) out.push_back(q);
  return out;
}

std::optional<StateId> SyncAutomaton::next(StateId q, TripleDigit t) const {
  return delta_.at(q * kTripleCount + t.index());
}

void SyncAutomaton::set(StateId q, TripleDigit t, StateId to) {
  if (q >= state_count() || to >= state_count()) throw Error("sync transition state out of range");
  if (t.i > 3 || t.j > 1 || t.k > 1) throw Error("sync transition digit out of range");
  auto& slot = delta_[q * kTripleCount + t.index()];
  if (slot && *slot != to) throw Error("conflicting sync transition");
  slot = to;
}

std::size_t SyncAutomaton::transition_count() const {
  return static_cast<std::size_t>(
      std::count_if(delta_.begin(), delta_.end(), [](const auto& s) { return s.has_value(); }));
}

SyncAutomaton hilbert_sync() {
  struct Row {
    StateId from;
    Digit i, j, k;
    StateId to;
  };
  // clang-format off
  static constexpr std::array<Row, 44> kTable{{
      {0, 0,0,0, 0}, {0, 1,0,1, 3}, {0, 1,1,0, 1}, {0, 2,1,1, 5}, {0, 3,0,1, 4}, {0, 3,1,0, 2},
      {1, 0,0,0, 3}, {1, 1,1,0, 6}, {1, 2,1,1, 6}, {1, 3,0,1, 7},
      {2, 0,1,1, 4}, {2, 1,0,1, 8}, {2, 2,0,0, 8}, {2, 3,1,0, 9},
      {3, 0,0,0, 1}, {3, 1,0,1, 9}, {3, 2,1,1, 9}, {3, 3,1,0, 8},
      {4, 0,1,1, 2}, {4, 1,1,0, 7}, {4, 2,0,0, 7}, {4, 3,0,1, 6},
      {5, 0,0,0, 5}, {5, 1,0,1, 9}, {5, 1,1,0, 6}, {5, 2,1,1, 0}, {5, 3,0,1, 7}, {5, 3,1,0, 8},
      {6, 0,0,0, 9}, {6, 1,1,0, 1}, {6, 2,1,1, 1}, {6, 3,0,1, 4},
      {7, 0,1,1, 8}, {7, 1,1,0, 4}, {7, 2,0,0, 4}, {7, 3,0,1, 1},
      {8, 0,1,1, 7}, {8, 1,0,1, 2}, {8, 2,0,0, 2}, {8, 3,1,0, 3},
      {9, 0,0,0, 6}, {9, 1,0,1, 3}, {9, 2,1,1, 3}, {9, 3,1,0, 2},
  }};
  // clang-format on
  SyncAutomaton m(10, 0, {0, 2, 3, 5, 6, 7});
  for (const Row& r : kTable) m.set(r.from, {r.i, r.j, r.k}, r.to);
  return m;
}

unsigned sync_length(std::uint64_t n, std::uint64_t x, std::uint64_t y) noexcept {
  return std::max({digit_length(n, 4), digit_length(x, 2), digit_length(y, 2)});
}

bool accepts(const SyncAutomaton& m, std::uint64_t n, std::uint64_t x, std::uint64_t y) {
  const unsigned t = sync_length(n, x, y);
  StateId q = m.initial();
  for (unsigned p = t; p-- > 0;) {
    const TripleDigit td{static_cast<Digit>((n >> (2 * p)) & 3), static_cast<Digit>((x >> p) & 1),
                         static_cast<Digit>((y >> p) & 1)};
    const auto nq = m.next(q, td);
    if (!nq) return false;
    q = *nq;
  }
  return m.is_accepting(q);
}

namespace {

// Layered search over t positions. `choices(p)` lists the triples allowed at
// position p (msd first). Path counts saturate at 2; a state reached by
// exactly one path keeps its unique predecessor for backtracking.
template <typename Choices>
std::vector<TripleDigit> unique_accepting_path(const SyncAutomaton& m, unsigned t,
                                               Choices choices, const std::string& what) {
  struct Cell {
    unsigned count = 0;
    StateId prev = 0;
    TripleDigit via{};
  };
  const std::size_t s = m.state_count();
  std::vector<std::vector<Cell>> layers(t + 1, std::vector<Cell>(s));
  layers[0][m.initial()].count = 1;
  for (unsigned p = 0; p < t; ++p) {
    for (StateId q = 0; q < s; ++q) {
      const Cell& c = layers[p][q];
      if (c.count == 0) continue;
      for (const TripleDigit& td : choices(p)) {
        const auto nq = m.next(q, td);
        if (!nq) continue;
        Cell& n = layers[p + 1][*nq];
        n.count = std::min(2u, n.count + c.count);
        n.prev = q;
        n.via = td;
      }
    }
  }
  unsigned total = 0;
  StateId end = 0;
  for (StateId q = 0; q < s; ++q)
    if (m.is_accepting(q) && layers[t][q].count > 0) {
      total += layers[t][q].count;
      end = q;
    }
  if (total == 0) throw NoAcceptingPathError("no accepting path for " + what);
  if (total > 1) throw MultipleAcceptingPathsError("several accepting paths for " + what);

  std::vector<TripleDigit> path(t);
  StateId q = end;
  for (unsigned p = t; p > 0; --p) {
    path[p - 1] = layers[p][q].via;
    q = layers[p][q].prev;
  }
  return path;
}

}  // namespace

LatticePoint sync_coords(const SyncAutomaton& m, std::uint64_t n) {
  const unsigned t = digit_length(n, 4);
  auto choices = [&](unsigned p) {
    const auto i = static_cast<Digit>((n >> (2 * (t - 1 - p))) & 3);
    return std::array<TripleDigit, 4>{{{i, 0, 0}, {i, 0, 1}, {i, 1, 0}, {i, 1, 1}}};
  };
  const auto path = unique_accepting_path(m, t, choices, "n=" + std::to_string(n));
  LatticePoint pt;
  for (const auto& td : path) {
    pt.x = pt.x * 2 + td.j;
    pt.y = pt.y * 2 + td.k;
  }
  return pt;
}

std::uint64_t sync_locate(const SyncAutomaton& m, std::uint64_t x, std::uint64_t y) {
  const unsigned t = std::max(digit_length(x, 2), digit_length(y, 2));
  if (t > 32) throw Error("coordinates too large to locate within 64-bit n");
  auto choices = [&](unsigned p) {
    const unsigned shift = t - 1 - p;
    const auto j = static_cast<Digit>((x >> shift) & 1);
    const auto k = static_cast<Digit>((y >> shift) & 1);
    return std::array<TripleDigit, 4>{{{0, j, k}, {1, j, k}, {2, j, k}, {3, j, k}}};
  };
  const auto path = unique_accepting_path(
      m, t, choices, "(x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")");
  std::uint64_t n = 0;
  for (const auto& td : path) n = n * 4 + td.i;
  return n;
}

void write_sync(std::ostream& out, const SyncAutomaton& m) {
  out << "sync bases=4,2,2 states=" << m.state_count() << " initial=" << m.initial()
      << " accepting=";
  const auto acc = m.accepting_states();
  for (std::size_t i = 0; i < acc.size(); ++i) out << (i ? "," : "") << acc[i];
  out << '\n';
  for (StateId q = 0; q < m.state_count(); ++q)
    for (unsigned idx = 0; idx < kTripleCount; ++idx) {
      const auto td = TripleDigit::from_index(idx);
      if (const auto to = m.next(q, td))
        out << q << " [" << int(td.i) << ',' << int(td.j) << ',' << int(td.k) << "] -> " << *to
            << '\n';
    }
}

SyncAutomaton read_sync(std::istream& in) {
  const auto lines = detail::read_lines(in);
  if (lines.empty()) throw ParseError(0, "empty sync file");
  const auto& head = lines.front();
  if (head.tokens.size() != 5 || head.tokens[0] != "sync")
    throw ParseError(head.number,
                     "expected 'sync bases=4,2,2 states=<n> initial=<q> accepting=<list>'");
  if (detail::key_value(head.tokens[1], "bases", head.number) != "4,2,2")
    throw ParseError(head.number, "only bases=4,2,2 is supported");
  const auto states = detail::parse_uint(
      detail::key_value(head.tokens[2], "states", head.number), head.number, "states");
  const auto initial = detail::parse_uint(
      detail::key_value(head.tokens[3], "initial", head.number), head.number, "initial");
  if (states == 0 || states > (1u << 20)) throw ParseError(head.number, "bad state count");
  if (initial >= states) throw ParseError(head.number, "initial state out of range");
  std::vector<StateId> accepting;
  const auto acc_text = detail::key_value(head.tokens[4], "accepting", head.number);
  for (auto part : detail::split(acc_text, ',')) {
    if (part.empty()) continue;
    const auto q = detail::parse_uint(part, head.number, "accepting state");
    if (q >= states) throw ParseError(head.number, "accepting state out of range");
    accepting.push_back(q);
  }

  SyncAutomaton m(states, initial, accepting);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const auto& t = line.tokens;
    if (t.size() != 4 || t[2] != "->" || t[1].size() < 2 || t[1].front() != '[' ||
        t[1].back() != ']')
      throw ParseError(line.number, "expected 'q [i,j,k] -> q2'");
    const auto from = detail::parse_uint(t[0], line.number, "source state");
    const auto to = detail::parse_uint(t[3], line.number, "target state");
    const auto parts = detail::split(std::string_view(t[1]).substr(1, t[1].size() - 2), ',');
    if (parts.size() != 3) throw ParseError(line.number, "triple must have three components");
    const auto i = detail::parse_uint(parts[0], line.number, "base-4 digit");
    const auto j = detail::parse_uint(parts[1], line.number, "x bit");
    const auto k = detail::parse_uint(parts[2], line.number, "y bit");
    if (i > 3 || j > 1 || k > 1)
      throw ParseError(line.number, "digit out of range in triple " + t[1]);
    if (from >= states || to >= states) throw ParseError(line.number, "state id out of range");
    try {
      m.set(from, {static_cast<Digit>(i), static_cast<Digit>(j), static_cast<Digit>(k)}, to);
    } catch (const Error& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return m;
}

}  // namespace hilbert
