#include "hilbert/bitmap.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "hilbert/error.hpp"

namespace hilbert {

std::size_t Bitmap::on_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

Bitmap render_generation(int g, const SyncAutomaton& m, const Budget& budget) {
  if (g < 1) throw BudgetError("render generation must be at least 1");
  if (g > budget.max_generation || g > 15)
    throw BudgetError("render generation " + std::to_string(g) + " exceeds budget " +
                      std::to_string(budget.max_generation));

  const std::size_t size = render_size(g);
  const std::uint64_t limit = std::uint64_t{1} << (2 * g);  // n, n+1 < 4^g
  // The lattice points are all < 2^g, so locate never leaves the generation.
  auto adjacent = [&](std::uint64_t x0, std::uint64_t y0, std::uint64_t x1, std::uint64_t y1) {
    const std::uint64_t a = sync_locate(m, x0, y0);
    const std::uint64_t b = sync_locate(m, x1, y1);
    return std::max(a, b) < limit && (a + 1 == b || b + 1 == a);
  };

  Bitmap bmp(size, size);
  for (std::size_t y = 0; y < size; ++y) {
    for (std::size_t x = 0; x < size; ++x) {
      const bool xe = x % 2 == 0, ye = y % 2 == 0;
      bool on = false;
      if (xe && ye)
        on = true;
      else if (xe && !ye)
        on = adjacent(x / 2, (y - 1) / 2, x / 2, (y + 1) / 2);
      else if (!xe && ye)
        on = adjacent((x - 1) / 2, y / 2, (x + 1) / 2, y / 2);
      if (on) bmp.set(x, y);
    }
  }
  return bmp;
}

Bitmap render_walk(std::span<const LatticePoint> points, std::size_t size) {
  Bitmap bmp(size, size);
  for (std::size_t i = 0; i < points.size(); ++i) {
    bmp.set(2 * points[i].x, 2 * points[i].y);
    if (i + 1 < points.size())
      bmp.set(points[i].x + points[i + 1].x, points[i].y + points[i + 1].y);
  }
  return bmp;
}

void write_pbm(std::ostream& out, const Bitmap& b) {
  out << "P1\n" << b.width() << ' ' << b.height() << '\n';
  std::string row;
  for (std::size_t r = 0; r < b.height(); ++r) {
    const std::size_t y = b.height() - 1 - r;
    row.clear();
    for (std::size_t x = 0; x < b.width(); ++x) {
      if (x) row.push_back(' ');
      row.push_back(b.at(x, y) ? '1' : '0');
    }
    out << row << '\n';
  }
}

Bitmap read_pbm(std::istream& in) {
  auto next_token = [&in]() {
    std::string tok;
    for (;;) {
      int c = in.peek();
      if (c == EOF) break;
      if (c == '#') {
        std::string skip;
        std::getline(in, skip);
        continue;
      }
      if (std::isspace(c)) {
        in.get();
        if (!tok.empty()) break;
        continue;
      }
      tok.push_back(static_cast<char>(in.get()));
    }
    return tok;
  };
  if (next_token() != "P1") throw ParseError(1, "expected PBM magic 'P1'");
  std::size_t w = 0, h = 0;
  try {
    w = std::stoul(next_token());
    h = std::stoul(next_token());
  } catch (const std::exception&) {
    throw ParseError(2, "malformed PBM size");
  }
  Bitmap b(w, h);
  for (std::size_t r = 0; r < h; ++r)
    for (std::size_t x = 0; x < w; ++x) {
      const std::string t = next_token();
      if (t != "0" && t != "1") throw ParseError(r + 3, "expected 0 or 1 in PBM body");
      b.set(x, h - 1 - r, t == "1");
    }
  return b;
}

}  // namespace hilbert
