#include "hilbert/curve.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "hilbert/error.hpp"

namespace hilbert {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("HILBERT_BUDGET")) {
    std::string_view s(env);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0 || value > 31)
      throw BudgetError("HILBERT_BUDGET must be an integer in 0..31, got '" +
                        std::string(s) + "'");
    b.max_generation = value;
  }
  return b;
}

int generation_covering(std::uint64_t len) noexcept {
  int n = 0;
  while (n < 31 && generation_length(n) < len) ++n;
  return n;
}

DirectionWord generate_generation(int n, const Budget& budget) {
  if (n < 0) throw BudgetError("generation index must be non-negative");
  if (n > budget.max_generation)
    throw BudgetError("generation " + std::to_string(n) + " exceeds budget " +
                      std::to_string(budget.max_generation));

  DirectionWord a;
  a.reserve(generation_length(n));
  for (int i = 0; i < n; ++i) {
    // A_{2m+1} = A U tD(A) R tD(A) D tH(A);  A_{2m+2} = A R tD(A) U tD(A) L tH(A)
    const bool odd_target = (i % 2 == 0);
    const DirectionWord diag = apply_coding(Coding::Diagonal, a);
    const DirectionWord turn = apply_coding(Coding::HalfTurn, a);
    const Direction c1 = odd_target ? Direction::U : Direction::R;
    const Direction c2 = odd_target ? Direction::R : Direction::U;
    const Direction c3 = odd_target ? Direction::D : Direction::L;
    a.push_back(c1);
    a.insert(a.end(), diag.begin(), diag.end());
    a.push_back(c2);
    a.insert(a.end(), diag.begin(), diag.end());
    a.push_back(c3);
    a.insert(a.end(), turn.begin(), turn.end());
  }
  return a;
}

DirectionWord hc_prefix(std::uint64_t len, const Budget& budget) {
  const int n = generation_covering(len);
  if (generation_length(n) < len || n > budget.max_generation)
    throw BudgetError("prefix of length " + std::to_string(len) +
                      " needs generation " + std::to_string(n) +
                      ", budget is " + std::to_string(budget.max_generation));
  DirectionWord a = generate_generation(n, budget);
  a.resize(len);
  return a;
}

std::vector<LatticePoint> walk(std::span<const Direction> word, LatticePoint start) {
  std::vector<LatticePoint> points;
  points.reserve(word.size() + 1);
  points.push_back(start);
  LatticePoint p = start;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Step s = step_of(word[i]);
    if ((s.dx < 0 && p.x == 0) || (s.dy < 0 && p.y == 0))
      throw NegativeCoordinateError("step " + std::to_string(i) + " (" +
                                    to_char(word[i]) + ") leaves the quadrant");
    p.x += s.dx;
    p.y += s.dy;
    points.push_back(p);
  }
  return points;
}

void write_walk_csv(std::ostream& out, std::span<const LatticePoint> points) {
  out << "n,x,y\n";
  for (std::size_t i = 0; i < points.size(); ++i)
    out << i << ',' << points[i].x << ',' << points[i].y << '\n';
}

}  // namespace hilbert
