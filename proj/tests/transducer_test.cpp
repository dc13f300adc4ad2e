#include <gtest/gtest.h>

#include <functional>

#include "hilbert/digits.hpp"
#include "hilbert/error.hpp"
#include "hilbert/transducer.hpp"

namespace hilbert {
namespace {

// Independent path enumeration: depth-first over the move list.
std::vector<std::vector<Digit>> accepting_outputs(const Transducer& t,
                                                  const std::vector<Digit>& input) {
  std::vector<std::vector<Digit>> outs;
  std::vector<Digit> acc;
  std::function<void(StateId, std::size_t)> dfs = [&](StateId q, std::size_t pos) {
    if (pos == input.size()) {
      if (t.final.at(q)) outs.push_back(acc);
      return;
    }
    for (const auto& m : t.moves) {
      if (m.from != q || m.input != input[pos]) continue;
      const std::size_t mark = acc.size();
      acc.insert(acc.end(), m.output.begin(), m.output.end());
      dfs(m.to, pos + 1);
      acc.resize(mark);
    }
  };
  dfs(t.initial, 0);
  return outs;
}

TEST(IncrementTransducer, Examples) {
  const Transducer t = increment_transducer(4);
  EXPECT_EQ(transduce(t, std::vector<Digit>{0, 1, 2}), (std::vector<Digit>{0, 1, 3}));
  EXPECT_EQ(transduce(t, std::vector<Digit>{0, 3, 3}), (std::vector<Digit>{1, 0, 0}));
  EXPECT_EQ(transduce(t, std::vector<Digit>{3, 3}), (std::vector<Digit>{1, 0, 0}));
  EXPECT_EQ(transduce(t, std::vector<Digit>{0}), (std::vector<Digit>{1}));
  EXPECT_FALSE(transduce(t, std::vector<Digit>{}));
}

// Every word of length <= 6 has exactly one accepting path, whose output is
// the successor: same length unless the input is all 3s.
TEST(IncrementTransducer, ExhaustiveSemantics) {
  const Transducer t = increment_transducer(4);
  for (std::size_t len = 1; len <= 6; ++len) {
    std::uint64_t limit = 1;
    for (std::size_t i = 0; i < len; ++i) limit *= 4;
    for (std::uint64_t n = 0; n < limit; ++n) {
      const DigitString in = pad_to(to_base(n, 4), len);
      const auto outs = accepting_outputs(t, in.digits);
      ASSERT_EQ(outs.size(), 1u) << "n=" << n << " len=" << len;
      EXPECT_EQ(from_base(outs[0], 4), n + 1);
      EXPECT_EQ(outs[0].size(), n + 1 < limit ? len : len + 1);
      EXPECT_EQ(transduce(t, in.digits), outs[0]);
    }
  }
}

TEST(IncrementTransducer, OtherBases) {
  for (unsigned base : {2u, 3u, 10u}) {
    const Transducer t = increment_transducer(base);
    EXPECT_NO_THROW(check_functional(t, 4));
    for (std::uint64_t n = 0; n < 200; ++n)
      EXPECT_EQ(from_base(*transduce(t, to_base(n, base).digits), base), n + 1);
  }
}

TEST(Transducer, IdentityCopies) {
  const Transducer t = identity_transducer(4);
  const std::vector<Digit> w{3, 0, 2, 1};
  EXPECT_EQ(transduce(t, w), w);
  EXPECT_EQ(transduce(t, std::vector<Digit>{}), std::vector<Digit>{});
}

TEST(Transducer, NonFunctionalIsRejected) {
  Transducer t{2, 1, 0, {true}, {}};
  t.moves.push_back({0, 0, {0}, 0});
  t.moves.push_back({0, 0, {1}, 0});
  t.moves.push_back({0, 1, {1}, 0});
  EXPECT_THROW(check_functional(t), NonFunctionalTransducerError);
  EXPECT_THROW(transduce(t, std::vector<Digit>{0}), NonFunctionalTransducerError);
  EXPECT_EQ(transduce_all(t, std::vector<Digit>{0, 1}).size(), 2u);
}

TEST(Transducer, AmbiguousIsRejected) {
  // Two paths, same output: still rejected since the block construction
  // would count it twice.
  Transducer t{2, 2, 0, {true, true}, {}};
  t.moves.push_back({0, 1, {1}, 0});
  t.moves.push_back({0, 1, {1}, 1});
  EXPECT_THROW(check_functional(t, 2), NonFunctionalTransducerError);
}

}  // namespace
}  // namespace hilbert
