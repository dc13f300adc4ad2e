#include "hilbert/transducer.hpp"

#include <string>

#include "hilbert/error.hpp"

namespace hilbert {

namespace {

std::string digits_text(std::span<const Digit> ds) {
  std::string s;
  for (Digit d : ds) s.push_back(static_cast<char>('0' + d));
  return s.empty() ? "<empty>" : s;
}

}  // namespace

Transducer increment_transducer(unsigned base) {
  if (base < 2) throw Error("base must be at least 2");
  constexpr StateId kStart = 0, kCopy = 1, kCarry = 2;
  const auto top = static_cast<Digit>(base - 1);

  Transducer t{base, 3, kStart, {false, false, true}, {}};
  for (unsigned u = 0; u < base; ++u) {
    const auto d = static_cast<Digit>(u);
    for (StateId from : {kStart, kCopy}) {
      t.moves.push_back({from, d, {d}, kCopy});
      if (d < top) t.moves.push_back({from, d, {static_cast<Digit>(d + 1)}, kCarry});
    }
  }
  t.moves.push_back({kStart, top, {1, 0}, kCarry});
  t.moves.push_back({kCarry, top, {0}, kCarry});
  return t;
}

Transducer identity_transducer(unsigned base) {
  Transducer t{base, 1, 0, {true}, {}};
  for (unsigned u = 0; u < base; ++u) {
    const auto d = static_cast<Digit>(u);
    t.moves.push_back({0, d, {d}, 0});
  }
  return t;
}

std::vector<std::vector<Digit>> transduce_all(const Transducer& t,
                                              std::span<const Digit> input) {
  struct Config {
    StateId state;
    std::vector<Digit> out;
  };
  std::vector<Config> live{{t.initial, {}}};
  for (Digit d : input) {
    std::vector<Config> next;
    for (const auto& c : live)
      for (const auto& m : t.moves)
        if (m.from == c.state && m.input == d) {
          Config n{m.to, c.out};
          n.out.insert(n.out.end(), m.output.begin(), m.output.end());
          next.push_back(std::move(n));
        }
    live = std::move(next);
    if (live.empty()) break;
  }
  std::vector<std::vector<Digit>> outs;
  for (auto& c : live)
    if (t.is_final(c.state)) outs.push_back(std::move(c.out));
  return outs;
}

std::optional<std::vector<Digit>> transduce(const Transducer& t, std::span<const Digit> input) {
  auto outs = transduce_all(t, input);
  if (outs.empty()) return std::nullopt;
  if (outs.size() > 1)
    throw NonFunctionalTransducerError("input " + digits_text(input) + " has " +
                                       std::to_string(outs.size()) + " accepting paths");
  return std::move(outs.front());
}

void check_functional(const Transducer& t, std::size_t max_length) {
  for (const auto& m : t.moves)
    if (m.from >= t.state_count || m.to >= t.state_count || m.input >= t.base)
      throw NonFunctionalTransducerError("transducer move out of range");

  std::vector<Digit> input;
  // Odometer over all words of each length.
  for (std::size_t len = 0; len <= max_length; ++len) {
    input.assign(len, 0);
    for (;;) {
      (void)transduce(t, input);
      std::size_t i = len;
      while (i > 0 && input[i - 1] == t.base - 1) input[--i] = 0;
      if (i == 0) break;
      ++input[i - 1];
    }
  }
}

}  // namespace hilbert
