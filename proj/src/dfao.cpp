#include "hilbert/dfao.hpp"

#include <string>

#include "text_util.hpp"

namespace hilbert {

Dfao hilbert_dfao() {
  // clang-format off
  std::vector<StateId> delta{
      0, 1, 2, 3,
      1, 0, 4, 5,
      1, 0, 4, 6,
      7, 6, 5, 0,
      0, 1, 2, 7,
      6, 7, 3, 1,
      6, 7, 3, 2,
      7, 6, 5, 4,
  };
  // clang-format on
  using enum Direction;
  std::vector<Direction> tau{U, R, D, R, L, U, L, D};
  return Dfao(4, 0, std::move(delta), std::move(tau));
}

void write_dfao(std::ostream& out, const Dfao& m) {
  out << "dfao base=" << m.base() << " states=" << m.state_count()
      << " initial=" << m.initial() << '\n';
  for (StateId q = 0; q < m.state_count(); ++q)
    out << "state " << q << " output=" << to_char(m.output(q)) << '\n';
  for (StateId q = 0; q < m.state_count(); ++q)
    for (unsigned d = 0; d < m.base(); ++d)
      out << q << ' ' << d << " -> " << m.next(q, static_cast<Digit>(d)) << '\n';
}

Dfao read_dfao(std::istream& in) {
  const auto lines = detail::read_lines(in);
  if (lines.empty()) throw ParseError(0, "empty dfao file");

  const auto& head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[0] != "dfao")
    throw ParseError(head.number, "expected 'dfao base=<k> states=<n> initial=<q>'");
  const auto base = detail::parse_uint(detail::key_value(head.tokens[1], "base", head.number),
                                       head.number, "base");
  const auto states = detail::parse_uint(
      detail::key_value(head.tokens[2], "states", head.number), head.number, "states");
  const auto initial = detail::parse_uint(
      detail::key_value(head.tokens[3], "initial", head.number), head.number, "initial");
  if (base < 2 || base > 10) throw ParseError(head.number, "base must be in 2..10");
  if (states == 0 || states > (1u << 20)) throw ParseError(head.number, "bad state count");
  if (initial >= states) throw ParseError(head.number, "initial state out of range");

  std::vector<std::optional<StateId>> delta(states * base);
  std::vector<std::optional<Direction>> tau(states);

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& t = line.tokens;
    if (t[0] == "state") {
      if (t.size() != 3) throw ParseError(line.number, "expected 'state <id> output=<dir>'");
      const auto q = detail::parse_uint(t[1], line.number, "state id");
      if (q >= states) throw ParseError(line.number, "state id out of range");
      const auto out = detail::key_value(t[2], "output", line.number);
      if (out.size() != 1) throw ParseError(line.number, "output must be one of U,R,D,L");
      try {
        tau[q] = direction_from_char(out[0]);
      } catch (const ParseError& e) {
        throw ParseError(line.number, e.what());
      }
      continue;
    }
    if (t.size() != 4 || t[2] != "->")
      throw ParseError(line.number, "expected '<from> <digit> -> <to>'");
    const auto from = detail::parse_uint(t[0], line.number, "source state");
    const auto digit = detail::parse_uint(t[1], line.number, "digit");
    const auto to = detail::parse_uint(t[3], line.number, "target state");
    if (from >= states || to >= states) throw ParseError(line.number, "state id out of range");
    if (digit >= base)
      throw ParseError(line.number, "digit " + std::to_string(digit) + " out of range for base " +
                                        std::to_string(base));
    auto& slot = delta[from * base + digit];
    if (slot && *slot != to) throw ParseError(line.number, "conflicting transition");
    slot = to;
  }

  std::vector<StateId> d;
  std::vector<Direction> o;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (!delta[i])
      throw ParseError(0, "missing transition from state " + std::to_string(i / base) +
                              " on digit " + std::to_string(i % base));
    d.push_back(*delta[i]);
  }
  for (std::size_t q = 0; q < tau.size(); ++q) {
    if (!tau[q]) throw ParseError(0, "missing output for state " + std::to_string(q));
    o.push_back(*tau[q]);
  }
  return Dfao(static_cast<unsigned>(base), initial, std::move(d), std::move(o));
}

}  // namespace hilbert
