#include "hilbert/verify.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "hilbert/error.hpp"

namespace hilbert {

namespace {

// First failing witness of a check, or none.
struct Outcome {
  std::optional<std::vector<std::uint64_t>> witness;
  void fail(std::vector<std::uint64_t> w) {
    if (!witness) witness = std::move(w);
  }
  bool failed() const { return witness.has_value(); }
};

VerifyReport report(std::string name, std::uint64_t bound, Outcome o) {
  const bool passed = !o.failed();
  return {std::move(name), bound, passed, std::move(o.witness)};
}

constexpr std::uint64_t pow4(unsigned e) { return std::uint64_t{1} << (2 * e); }

}  // namespace

std::string format_report(const VerifyReport& r) {
  std::ostringstream os;
  os << "name=" << r.name << " bound=" << r.bound << " passed=" << (r.passed ? "true" : "false")
     << " witness=";
  if (!r.witness) {
    os << "none";
  } else {
    os << '(';
    for (std::size_t i = 0; i < r.witness->size(); ++i) os << (i ? "," : "") << (*r.witness)[i];
    os << ')';
  }
  return os.str();
}

std::vector<VerifyReport> verify_identities(int max_gen, const Dfao& dfao, const Budget& budget) {
  if (max_gen < 0) throw Error("identity bound must be non-negative");
  if (max_gen + 1 > budget.max_generation)
    throw BudgetError("identity bound " + std::to_string(max_gen) + " exceeds budget");

  const std::uint64_t len = pow4(static_cast<unsigned>(max_gen) + 1);
  std::vector<Direction> hc(len);
  for (std::uint64_t i = 0; i < len; ++i) hc[i] = eval_dfao(dfao, i);

  Outcome e1, e2, e3, e4, e5, e6;
  if (hc[0] != Direction::U) e1.fail({0});
  for (std::uint64_t n = 0; n <= static_cast<std::uint64_t>(max_gen); ++n) {
    const std::uint64_t x = pow4(static_cast<unsigned>(n));
    const bool odd = n % 2 == 1;
    for (std::uint64_t t = 0; t < x; ++t)
      if (hc[x + t] != apply_coding(Coding::Diagonal, hc[t])) e2.fail({n, t});
    for (std::uint64_t t = 0; t + 1 < x; ++t) {
      if (hc[2 * x + t] != apply_coding(Coding::Diagonal, hc[t])) e3.fail({n, t});
      if (hc[3 * x + t] != apply_coding(Coding::HalfTurn, hc[t])) e5.fail({n, t});
    }
    if (hc[3 * x - 1] != (odd ? Direction::L : Direction::D)) e4.fail({n});
    if (hc[x - 1] != (odd ? Direction::R : Direction::U)) e6.fail({n});
  }
  const auto b = static_cast<std::uint64_t>(max_gen);
  return {report("identity.eq1", b, e1), report("identity.eq2", b, e2),
          report("identity.eq3", b, e3), report("identity.eq4", b, e4),
          report("identity.eq5", b, e5), report("identity.eq6", b, e6)};
}

namespace {

// Dense transition table with -1 for the dead state.
struct DenseSync {
  std::vector<int> next;  // [q * 16 + triple]
  std::vector<bool> accepting;
  int initial;

  explicit DenseSync(const SyncAutomaton& m)
      : next(m.state_count() * kTripleCount, -1),
        accepting(m.state_count()),
        initial(static_cast<int>(m.initial())) {
    for (StateId q = 0; q < m.state_count(); ++q) {
      accepting[q] = m.is_accepting(q);
      for (unsigned i = 0; i < kTripleCount; ++i)
        if (auto to = m.next(q, TripleDigit::from_index(i)))
          next[q * kTripleCount + i] = static_cast<int>(*to);
    }
  }

  std::size_t states() const { return accepting.size(); }

  // Number of accepted tuples when position p offers the triples for which
  // allowed(p, triple) holds. Exact counts (no saturation).
  template <typename Allowed>
  std::uint64_t count(unsigned t, Allowed allowed) const {
    std::vector<std::uint64_t> cur(states(), 0), nxt(states());
    cur[static_cast<std::size_t>(initial)] = 1;
    for (unsigned p = 0; p < t; ++p) {
      std::fill(nxt.begin(), nxt.end(), 0);
      for (std::size_t q = 0; q < states(); ++q) {
        if (cur[q] == 0) continue;
        for (unsigned i = 0; i < kTripleCount; ++i) {
          if (!allowed(p, TripleDigit::from_index(i))) continue;
          const int to = next[q * kTripleCount + i];
          if (to >= 0) nxt[static_cast<std::size_t>(to)] += cur[q];
        }
      }
      std::swap(cur, nxt);
    }
    std::uint64_t total = 0;
    for (std::size_t q = 0; q < states(); ++q)
      if (accepting[q]) total += cur[q];
    return total;
  }
};

}  // namespace

std::vector<VerifyReport> verify_sync_suite(unsigned t, const SyncAutomaton& sync,
                                            const Dfao& dfao) {
  if (t == 0 || t > 8) throw Error("sync suite digit bound must be in 1..8");
  const DenseSync dense(sync);
  const std::uint64_t count_n = pow4(t);
  const std::uint64_t side = std::uint64_t{1} << t;

  // fn1 / fn2: for every n, count accepted (x, y) with x, y < 2^t.
  Outcome fn1, fn2;
  for (std::uint64_t n = 0; n < count_n; ++n) {
    const auto c = dense.count(t, [&](unsigned p, TripleDigit td) {
      return td.i == ((n >> (2 * (t - 1 - p))) & 3);
    });
    if (c == 0) fn1.fail({n});
    if (c > 1) fn2.fail({n});
  }

  // allhit / hitonce: for every (x, y), count accepted n < 4^t.
  Outcome allhit, hitonce;
  for (std::uint64_t x = 0; x < side; ++x)
    for (std::uint64_t y = 0; y < side; ++y) {
      const auto c = dense.count(t, [&](unsigned p, TripleDigit td) {
        const unsigned shift = t - 1 - p;
        return td.j == ((x >> shift) & 1) && td.k == ((y >> shift) & 1);
      });
      if (c == 0) allhit.fail({x, y});
      if (c > 1) hitonce.fail({x, y});
    }

  Outcome origin, padding;
  if (!accepts(sync, 0, 0, 0)) origin.fail({0, 0, 0});
  if (sync.next(sync.initial(), {0, 0, 0}) != sync.initial()) padding.fail({sync.initial()});

  std::vector<std::optional<LatticePoint>> coords(count_n);
  for (std::uint64_t n = 0; n < count_n; ++n) {
    try {
      coords[n] = sync_coords(sync, n);
    } catch (const Error&) {
    }
  }

  // check_<dir>: HC[n] = dir  <=>  step from point n to point n+1 is dir.
  Outcome checks[4];
  for (std::uint64_t n = 0; n + 1 < count_n; ++n) {
    const Direction letter = eval_dfao(dfao, n);
    for (int c = 0; c < 4; ++c) {
      const Direction dir = direction_from_coding(c);
      bool moved = false;
      if (coords[n] && coords[n + 1]) {
        const Step s = step_of(dir);
        moved = coords[n + 1]->x == coords[n]->x + static_cast<std::uint64_t>(s.dx) &&
                coords[n + 1]->y == coords[n]->y + static_cast<std::uint64_t>(s.dy);
      }
      if ((letter == dir) != moved) checks[c].fail({n});
    }
  }

  Outcome roundtrip;
  for (std::uint64_t n = 0; n < count_n && !roundtrip.failed(); ++n) {
    if (!coords[n]) {
      roundtrip.fail({n});
      break;
    }
    try {
      if (sync_locate(sync, coords[n]->x, coords[n]->y) != n) roundtrip.fail({n});
    } catch (const Error&) {
      roundtrip.fail({n});
    }
  }

  return {report("sync.fn1", t, fn1),           report("sync.fn2", t, fn2),
          report("sync.origin", t, origin),     report("sync.padding", t, padding),
          report("sync.check_up", t, checks[0]), report("sync.check_right", t, checks[1]),
          report("sync.check_down", t, checks[2]), report("sync.check_left", t, checks[3]),
          report("sync.allhit", t, allhit),     report("sync.hitonce", t, hitonce),
          report("sync.roundtrip", t, roundtrip)};
}

std::vector<VerifyReport> verify_cross(unsigned bound_exp, const VerifyInputs& in) {
  if (bound_exp > 7) throw Error("cross-check bound must be at most 7");
  const std::uint64_t count = pow4(bound_exp);
  const DirectionWord letters = hc_prefix(count, in.budget);
  const auto points = walk(letters);

  Outcome coords, dfao_letters;
  for (std::uint64_t n = 0; n < count; ++n) {
    const LatticePoint& oracle = points[n];
    const ColVectorQ lr = eval_linrep(in.linrep, n);
    const bool linrep_ok = lr.size() == 2 && lr(0) == Rational(static_cast<long long>(oracle.x)) &&
                           lr(1) == Rational(static_cast<long long>(oracle.y));
    bool sync_ok = false;
    try {
      sync_ok = sync_coords(in.sync, n) == oracle;
    } catch (const Error&) {
    }
    if (!linrep_ok || !sync_ok) coords.fail({n});
    if (eval_dfao(in.dfao, n) != letters[n]) dfao_letters.fail({n});
  }

  Outcome step_rep, semigroup;
  const LinearRepQ minimized = minimize_rep(
      difference_rep(pad_leading_zero(transduce_rep(in.linrep, increment_transducer(4))),
                     in.linrep));
  const LinearRepQ published = hilbert_step_rep();
  for (std::uint64_t n = 0; n < count; ++n)
    if (!(eval_linrep(minimized, n) == eval_linrep(published, n))) {
      step_rep.fail({n});
      break;
    }
  try {
    const Dfao derived = direction_outputs(semigroup_trick(minimized));
    if (!dfao_equal(derived, in.dfao)) semigroup.fail({derived.state_count()});
  } catch (const Error&) {
    semigroup.fail({0});
  }

  return {report("cross.coords", bound_exp, coords),
          report("cross.letters", bound_exp, dfao_letters),
          report("cross.step_rep", bound_exp, step_rep),
          report("cross.semigroup", bound_exp, semigroup)};
}

std::vector<VerifyReport> verify_all(const SuiteBounds& bounds, const VerifyInputs& in) {
  auto identities = std::async(std::launch::async, [&] {
    return verify_identities(bounds.gen_bound, in.dfao, in.budget);
  });
  auto sync = std::async(std::launch::async,
                         [&] { return verify_sync_suite(bounds.digit_bound, in.sync, in.dfao); });
  auto cross = std::async(std::launch::async, [&] { return verify_cross(bounds.cross_bound, in); });

  std::vector<VerifyReport> all;
  for (auto* f : {&identities, &sync, &cross}) {
    auto part = f->get();
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(),
            [](const VerifyReport& a, const VerifyReport& b) { return a.name < b.name; });
  return all;
}

bool all_passed(const std::vector<VerifyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

}  // namespace hilbert
