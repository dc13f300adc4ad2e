#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "hilbert/curve.hpp"
#include "hilbert/error.hpp"
#include "hilbert/sync.hpp"
#include "oracles.hpp"

namespace hilbert {
namespace {

TEST(TripleDigit, IndexRoundTrip) {
  for (unsigned idx = 0; idx < kTripleCount; ++idx)
    EXPECT_EQ(TripleDigit::from_index(idx).index(), idx);
}

TEST(HilbertSync, Table) {
  const SyncAutomaton m = hilbert_sync();
  EXPECT_EQ(m.state_count(), 10u);
  EXPECT_EQ(m.initial(), 0u);
  EXPECT_EQ(m.transition_count(), 44u);
  EXPECT_EQ(m.accepting_states(), (std::vector<StateId>{0, 2, 3, 5, 6, 7}));
  EXPECT_EQ(m.next(0, {0, 0, 0}), StateId{0});
  EXPECT_EQ(m.next(0, {2, 1, 1}), StateId{5});
  EXPECT_EQ(m.next(5, {2, 1, 1}), StateId{0});
  EXPECT_EQ(m.next(9, {3, 1, 0}), StateId{2});
  EXPECT_FALSE(m.next(1, {0, 1, 1}));
  EXPECT_FALSE(m.next(0, {0, 1, 1}));
}

TEST(HilbertSync, SetRejectsConflicts) {
  SyncAutomaton m = hilbert_sync();
  EXPECT_NO_THROW(m.set(0, {0, 0, 0}, 0));
  EXPECT_THROW(m.set(0, {0, 0, 0}, 1), Error);
}

TEST(HilbertSync, Accepts) {
  const SyncAutomaton m = hilbert_sync();
  EXPECT_TRUE(accepts(m, 9, 3, 2));
  EXPECT_TRUE(accepts(m, 0, 0, 0));
  EXPECT_FALSE(accepts(m, 1, 1, 0));
  EXPECT_TRUE(accepts(m, 1, 0, 1));
  EXPECT_EQ(sync_length(9, 3, 2), 2u);
  EXPECT_EQ(sync_length(0, 0, 0), 1u);
  EXPECT_EQ(sync_length(1, 4, 0), 3u);
}

TEST(HilbertSync, Lookups) {
  const SyncAutomaton m = hilbert_sync();
  EXPECT_EQ(sync_coords(m, 13), (LatticePoint{1, 2}));
  EXPECT_EQ(sync_coords(m, 0), (LatticePoint{0, 0}));
  EXPECT_EQ(sync_coords(m, 10), (LatticePoint{3, 3}));
  EXPECT_EQ(sync_locate(m, 0, 0), 0u);
  EXPECT_EQ(sync_locate(m, 3, 2), 9u);
  EXPECT_EQ(sync_locate(m, 2, 3), 11u);
}

TEST(HilbertSync, AgreesWithWalk) {
  const SyncAutomaton m = hilbert_sync();
  const auto pts = walk(hc_prefix(4096));
  for (std::uint64_t n = 0; n < 4096; ++n) {
    ASSERT_EQ(sync_coords(m, n), pts[n]) << n;
    ASSERT_EQ(sync_locate(m, pts[n].x, pts[n].y), n) << n;
  }
}

TEST(HilbertSync, RandomRoundTripAgainstBitOracle) {
  const SyncAutomaton m = hilbert_sync();
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t n = testing::uniform(0, std::uint64_t{1} << 62);
    const auto [x, y] = testing::d2xy(n);
    ASSERT_EQ(sync_coords(m, n), (LatticePoint{x, y})) << n;
    ASSERT_EQ(sync_locate(m, x, y), n) << n;
  }
}

// Extra leading [0,0,0] triples never change acceptance.
TEST(HilbertSync, PaddingProperty) {
  const SyncAutomaton m = hilbert_sync();
  auto run = [&](std::uint64_t n, std::uint64_t x, std::uint64_t y, unsigned len) {
    std::optional<StateId> q = m.initial();
    for (unsigned pos = len; pos-- > 0 && q;)
      q = m.next(*q, {static_cast<Digit>((n >> (2 * pos)) & 3), static_cast<Digit>((x >> pos) & 1),
                      static_cast<Digit>((y >> pos) & 1)});
    return q && m.is_accepting(*q);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t n = testing::uniform(0, 4096);
    const std::uint64_t x = testing::uniform(0, 64);
    const std::uint64_t y = testing::uniform(0, 64);
    const unsigned len = sync_length(n, x, y);
    const unsigned extra = static_cast<unsigned>(testing::uniform(1, 5));
    ASSERT_EQ(run(n, x, y, len), run(n, x, y, len + extra));
    ASSERT_EQ(run(n, x, y, len), accepts(m, n, x, y));
  }
}

TEST(HilbertSync, AcceptedTriplesAreExactlyTheCurve) {
  const SyncAutomaton m = hilbert_sync();
  const auto pts = walk(hc_prefix(255));
  std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> on;
  for (std::uint64_t n = 0; n < 256; ++n) on.emplace(n, pts[n].x, pts[n].y);
  for (std::uint64_t n = 0; n < 256; ++n)
    for (std::uint64_t x = 0; x < 16; ++x)
      for (std::uint64_t y = 0; y < 16; ++y)
        ASSERT_EQ(accepts(m, n, x, y), on.count({n, x, y}) == 1) << n << ' ' << x << ' ' << y;
}

TEST(HilbertSync, CorruptedMachinesRaise) {
  SyncAutomaton none(10, 0, {});
  EXPECT_THROW(sync_coords(none, 5), NoAcceptingPathError);
  EXPECT_THROW(sync_locate(none, 1, 1), NoAcceptingPathError);

  SyncAutomaton twice = hilbert_sync();
  twice.set(0, {0, 1, 0}, 0);
  EXPECT_THROW(sync_coords(twice, 0), MultipleAcceptingPathsError);
  SyncAutomaton twice_n = hilbert_sync();
  twice_n.set(0, {1, 0, 0}, 0);
  EXPECT_THROW(sync_locate(twice_n, 0, 0), MultipleAcceptingPathsError);
}

TEST(SyncText, RoundTrip) {
  std::ostringstream first;
  write_sync(first, hilbert_sync());
  EXPECT_EQ(first.str().rfind("sync bases=4,2,2 states=10 initial=0 accepting=0,2,3,5,6,7\n", 0), 0u);
  std::istringstream in(first.str());
  const SyncAutomaton back = read_sync(in);
  EXPECT_EQ(back, hilbert_sync());
  std::ostringstream second;
  write_sync(second, back);
  EXPECT_EQ(first.str(), second.str());
}

TEST(SyncText, Errors) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_sync(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  const std::string header = "sync bases=4,2,2 states=2 initial=0 accepting=1\n";
  EXPECT_EQ(line_of(header + "0 [0,0,0] -> 1\n0 [4,0,0] -> 1\n"), 3u);
  EXPECT_EQ(line_of(header + "0 [0,2,0] -> 1\n"), 2u);
  EXPECT_EQ(line_of(header + "# c\n0 [0,0,0] -> 7\n"), 3u);
  EXPECT_EQ(line_of(header + "0 [0,0,0] -> 1\n0 [0,0,0] -> 0\n"), 3u);
  EXPECT_EQ(line_of("sync bases=4,2,2 states=2 initial=5 accepting=1\n"), 1u);
  std::istringstream ok(header + "0 [1,0,1] -> 1  # tail\n");
  EXPECT_TRUE(accepts(read_sync(ok), 1, 0, 1));
}

}  // namespace
}  // namespace hilbert
