#include <gtest/gtest.h>

#include <sstream>

#include "hilbert/curve.hpp"
#include "hilbert/error.hpp"
#include "hilbert/linrep.hpp"
#include "oracles.hpp"

namespace hilbert {
namespace {

ColVectorQ pair(long long x, long long y) {
  ColVectorQ v(2);
  v << Rational(x), Rational(y);
  return v;
}

// Random small-integer representation, for structural properties.
LinearRepQ random_rep(Index out, Index rank, unsigned base = 4) {
  auto entry = [] { return Rational(static_cast<long long>(testing::uniform(0, 4)) - 2); };
  LinearRepQ r{base, MatrixQ(out, rank), {}, ColVectorQ(rank)};
  r.v = r.v.unaryExpr([&](const Rational&) { return entry(); });
  r.w = r.w.unaryExpr([&](const Rational&) { return entry(); });
  for (unsigned d = 0; d < base; ++d)
    r.gamma.push_back(MatrixQ(rank, rank).unaryExpr([&](const Rational&) { return entry(); }));
  return r;
}

TEST(Rational, Arithmetic) {
  const Rational a(Rational::Integer(1), Rational::Integer(3));
  const Rational b(Rational::Integer(-2), Rational::Integer(4));
  EXPECT_EQ((a + b).str(), "-1/6");
  EXPECT_EQ((a * b).str(), "-1/6");
  EXPECT_EQ((a / b).str(), "-2/3");
  EXPECT_EQ((a - a).str(), "0");
  EXPECT_EQ(Rational::parse("6/-4").str(), "-3/2");
  EXPECT_TRUE(Rational(2) > a);
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(a / Rational(0), Error);
  EXPECT_EQ(Rational(-7).to_int64(), -7);
  EXPECT_THROW(a.to_int64(), Error);
}

TEST(HilbertLinrep, PublishedEntries) {
  const LinearRepQ r = hilbert_linrep();
  EXPECT_EQ(r.out_dim(), 2);
  EXPECT_EQ(r.rank(), 5);
  EXPECT_EQ(r.v.row(0), (RowVectorQ(5) << 0, 0, 0, 1, 0).finished());
  EXPECT_EQ(r.gamma[0].row(0), (RowVectorQ(5) << 0, 0, 0, 0, -4).finished());
  EXPECT_EQ(r.w, (ColVectorQ(5) << 1, 0, 0, 0, 0).finished());
  EXPECT_TRUE(is_padding_invariant(r));
}

TEST(HilbertLinrep, TableValues) {
  const LinearRepQ r = hilbert_linrep();
  EXPECT_EQ(eval_linrep(r, 0), pair(0, 0));
  EXPECT_EQ(eval_linrep(r, 5), pair(3, 0));
  EXPECT_EQ(eval_linrep(r, 9), pair(3, 2));
  EXPECT_EQ(eval_linrep(r, 15), pair(0, 3));
}

TEST(HilbertLinrep, ExhaustiveAgainstWalk) {
  const LinearRepQ r = hilbert_linrep();
  const auto pts = walk(hc_prefix(4096));
  for (std::uint64_t n = 0; n < 4096; ++n)
    ASSERT_EQ(eval_linrep(r, n), pair(pts[n].x, pts[n].y)) << "n=" << n;
}

TEST(HilbertLinrep, LargeIndicesAgainstBitOracle) {
  const LinearRepQ r = hilbert_linrep();
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t n = testing::uniform(0, std::uint64_t{1} << 60);
    const auto [x, y] = testing::d2xy(n);
    ASSERT_EQ(eval_linrep(r, n), pair(x, y)) << "n=" << n;
  }
}

TEST(HilbertLinrep, IntegerScalarCast) {
  const auto r = hilbert_linrep().cast<long long>();
  const ColVector<long long> p = eval_linrep(r, 9);
  EXPECT_EQ(p(0), 3);
  EXPECT_EQ(p(1), 2);
}

TEST(TransduceRep, SuccessorHasRankFifteen) {
  const LinearRepQ s = hilbert_successor_rep();
  EXPECT_EQ(s.rank(), 15);
  EXPECT_EQ(eval_linrep(s, 8), pair(3, 2));  // point 9
  const LinearRepQ r = hilbert_linrep();
  for (std::uint64_t n = 0; n + 1 < 1024; ++n)
    ASSERT_EQ(eval_linrep(s, n), eval_linrep(r, n + 1)) << "n=" << n;
}

TEST(TransduceRep, BlockLayout) {
  const LinearRepQ r = hilbert_linrep();
  const LinearRepQ s = transduce_rep(r, increment_transducer(4));
  EXPECT_EQ(s.v.leftCols(5), r.v);
  EXPECT_TRUE(s.v.rightCols(10).isZero());
  EXPECT_TRUE(s.w.head(10).isZero());
  EXPECT_EQ(s.w.tail(5), r.w);
  // start --3/"10"--> carry plus start --3/"3"--> copy
  EXPECT_EQ(s.gamma[3].block(0, 10, 5, 5), r.gamma[1] * r.gamma[0]);
  EXPECT_EQ(s.gamma[3].block(0, 5, 5, 5), r.gamma[3]);
}

TEST(TransduceRep, IdentityTransducerPreservesValues) {
  for (int trial = 0; trial < 5; ++trial) {
    const LinearRepQ r = random_rep(2, 3);
    const LinearRepQ t = transduce_rep(r, identity_transducer(4));
    EXPECT_EQ(t, r);
    for (std::uint64_t n = 0; n < 1024; ++n) ASSERT_EQ(eval_linrep(t, n), eval_linrep(r, n));
  }
}

TEST(TransduceRep, RejectsNonFunctional) {
  Transducer t{4, 1, 0, {true}, {}};
  for (Digit d = 0; d < 4; ++d) t.moves.push_back({0, d, {d}, 0});
  t.moves.push_back({0, 1, {2}, 0});
  EXPECT_THROW(transduce_rep(hilbert_linrep(), t), NonFunctionalTransducerError);
}

TEST(DifferenceRep, RankTwentyAndFirstStep) {
  const LinearRepQ d = hilbert_difference_rep();
  EXPECT_EQ(d.rank(), 20);
  EXPECT_EQ(eval_linrep(d, 0), pair(0, 1));
  const auto pts = walk(hc_prefix(1025));
  for (std::uint64_t n = 0; n < 1024; ++n) {
    const long long dx = static_cast<long long>(pts[n + 1].x) - static_cast<long long>(pts[n].x);
    const long long dy = static_cast<long long>(pts[n + 1].y) - static_cast<long long>(pts[n].y);
    ASSERT_EQ(eval_linrep(d, n), pair(dx, dy)) << n;
  }
}

TEST(DifferenceRep, SelfDifferenceIsZero) {
  const LinearRepQ r = random_rep(2, 4);
  const LinearRepQ d = difference_rep(r, r);
  EXPECT_EQ(d.rank(), 8);
  for (std::uint64_t n = 0; n < 256; ++n) ASSERT_TRUE(eval_linrep(d, n).isZero());
}

TEST(PadLeadingZero, SuccessorNeedsItOnlyForTheEmptyWord) {
  const LinearRepQ s = hilbert_successor_rep();
  EXPECT_FALSE(is_padding_invariant(s));
  const LinearRepQ p = pad_leading_zero(s);
  EXPECT_TRUE(eval(s, std::vector<Digit>{}).isZero());
  EXPECT_EQ(eval(p, std::vector<Digit>{}), pair(0, 1));
  for (std::uint64_t n = 0; n < 1024; ++n) ASSERT_EQ(eval_linrep(p, n), eval_linrep(s, n));
}

TEST(MinimizeRep, DifferenceReducesToRankThree) {
  const LinearRepQ d = hilbert_difference_rep();
  const LinearRepQ m = minimize_rep(d);
  EXPECT_EQ(m.rank(), 3);
  EXPECT_TRUE(is_padding_invariant(m));
  const LinearRepQ published = hilbert_step_rep();
  for (std::uint64_t n = 0; n < 4096; ++n)
    ASSERT_EQ(eval_linrep(m, n), eval_linrep(published, n)) << n;
  for (std::uint64_t n = 0; n < 1024; ++n) ASSERT_EQ(eval_linrep(m, n), eval_linrep(d, n)) << n;
}

TEST(MinimizeRep, WithoutPaddingTheEmptyWordCostsARank) {
  const LinearRepQ unpadded = difference_rep(hilbert_successor_rep(), hilbert_linrep());
  EXPECT_EQ(minimize_rep(unpadded).rank(), 4);
}

TEST(MinimizeRep, PublishedIsAlreadyMinimal) {
  EXPECT_EQ(minimize_rep(hilbert_step_rep()).rank(), 3);
  EXPECT_EQ(minimize_rep(hilbert_linrep()).rank(), 5);
}

TEST(MinimizeRep, ZeroSequenceHasRankZero) {
  LinearRepQ z{4, MatrixQ::Zero(2, 4), {}, ColVectorQ::Ones(4)};
  for (int d = 0; d < 4; ++d) z.gamma.push_back(MatrixQ::Identity(4, 4));
  EXPECT_EQ(minimize_rep(z).rank(), 0);
  EXPECT_TRUE(eval_linrep(minimize_rep(z), 77).isZero());
}

TEST(MinimizeRep, PreservesValuesOfRandomReps) {
  for (int trial = 0; trial < 10; ++trial) {
    const LinearRepQ a = random_rep(2, 3);
    const LinearRepQ b = random_rep(2, 2);
    // a + a - b has rank at most 5 but is built with rank 8.
    const LinearRepQ big = difference_rep(difference_rep(a, b), difference_rep(b, a));
    const LinearRepQ m = minimize_rep(big);
    EXPECT_LE(m.rank(), 5);
    EXPECT_EQ(minimize_rep(m).rank(), m.rank());
    for (std::uint64_t n = 0; n < 300; ++n) ASSERT_EQ(eval_linrep(m, n), eval_linrep(big, n));
  }
}

TEST(SemigroupTrick, RecoversTheDfao) {
  const auto sg = semigroup_trick(hilbert_minimized_step_rep());
  EXPECT_EQ(sg.state_count(), 8u);
  const Dfao derived = direction_outputs(sg);
  EXPECT_TRUE(dfao_equal(derived, hilbert_dfao()));
  EXPECT_TRUE(dfao_equal(direction_outputs(semigroup_trick(hilbert_step_rep())), hilbert_dfao()));
}

TEST(SemigroupTrick, ZeroRepresentationHasOneState) {
  LinearRepQ z{4, MatrixQ::Zero(2, 0), {}, ColVectorQ::Zero(0)};
  for (int d = 0; d < 4; ++d) z.gamma.push_back(MatrixQ::Zero(0, 0));
  EXPECT_EQ(semigroup_trick(z).state_count(), 1u);
  EXPECT_THROW(direction_outputs(semigroup_trick(z)), Error);
}

TEST(SemigroupTrick, UnboundedSequenceHitsBudget) {
  // The coordinates themselves grow without bound.
  EXPECT_THROW(semigroup_trick(hilbert_linrep(), 64), StateBudgetExceededError);
}

Matrix<Rational> coordinate_prefix(std::uint64_t terms, bool with_y) {
  const auto pts = walk(hc_prefix(terms - 1));
  Matrix<Rational> m(with_y ? 2 : 1, static_cast<Index>(terms));
  for (std::uint64_t n = 0; n < terms; ++n) {
    m(0, static_cast<Index>(n)) = Rational(static_cast<long long>(pts[n].x));
    if (with_y) m(1, static_cast<Index>(n)) = Rational(static_cast<long long>(pts[n].y));
  }
  return m;
}

TEST(GuessLinrep, XCoordinateKernelBasis) {
  const auto g = guess_linrep(coordinate_prefix(4096, false), 4, 2);
  const std::vector<KernelIndex> expect{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 0}};
  EXPECT_EQ(g.basis, expect);
  EXPECT_EQ(g.rep.rank(), 5);
  const auto pts = walk(hc_prefix(1024));
  for (std::uint64_t n = 0; n < 1024; ++n)
    ASSERT_EQ(eval_linrep(g.rep, n)(0), Rational(static_cast<long long>(pts[n].x))) << n;
}

TEST(GuessLinrep, JointCoordinatesReproduceThePublishedRepresentation) {
  const auto g = guess_linrep(coordinate_prefix(4096, true), 4, 2);
  EXPECT_EQ(g.rep, hilbert_linrep());
}

TEST(GuessLinrep, ConstantSequenceIsRankOne) {
  const MatrixQ ones = MatrixQ::Ones(1, 256);
  const auto g = guess_linrep(ones, 4, 2);
  EXPECT_EQ(g.rep.rank(), 1);
  EXPECT_EQ(eval_linrep(g.rep, 12345)(0), Rational(1));
}

TEST(GuessLinrep, InsufficientData) {
  EXPECT_THROW(guess_linrep(coordinate_prefix(200, false), 4, 2), InsufficientDataError);
  // Depth 0 cannot close the kernel of x_n.
  EXPECT_THROW(guess_linrep(coordinate_prefix(4096, false), 4, 0), InsufficientDataError);
}

TEST(LinrepText, RoundTrip) {
  for (const LinearRepQ& r : {hilbert_linrep(), hilbert_step_rep(), hilbert_minimized_step_rep()}) {
    std::ostringstream first;
    write_linrep(first, r);
    std::istringstream in(first.str());
    const LinearRepQ back = read_linrep(in);
    EXPECT_EQ(back, r);
    std::ostringstream second;
    write_linrep(second, back);
    EXPECT_EQ(first.str(), second.str());
  }
}

TEST(LinrepText, RationalEntriesAndErrors) {
  std::istringstream ok(
      "linrep base=2 out=1 rank=1  # halves\n"
      "v\n1/2\ngamma 0\n1\ngamma 1\n-3/4\nw\n2\n");
  const LinearRepQ r = read_linrep(ok);
  EXPECT_EQ(eval_linrep(r, 1)(0).str(), "-3/4");

  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_linrep(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("linrep base=2 out=1 rank=1\nv\n1 2\n"), 3u);
  EXPECT_EQ(line_of("linrep base=2 out=1 rank=1\nv\n1\ngamma 1\n"), 4u);
  EXPECT_EQ(line_of("linrep base=2 out=1 rank=1\nv\nx\n"), 3u);
}

}  // namespace
}  // namespace hilbert
