#pragma once

// Rendering of a curve generation as a bitmap: lattice point (x, y) lands
// on pixel (2x, 2y) and consecutive points are joined through the pixel
// between them.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "hilbert/curve.hpp"
#include "hilbert/sync.hpp"

namespace hilbert {

class Bitmap {
 public:
  Bitmap() = default;
  Bitmap(std::size_t width, std::size_t height)
      : width_(width), height_(height), bits_(width * height, 0) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }

  /// (x, y) in curve coordinates: y grows upward, (0, 0) is lower-left.
  bool at(std::size_t x, std::size_t y) const { return bits_.at(y * width_ + x) != 0; }
  void set(std::size_t x, std::size_t y, bool on = true) {
    bits_.at(y * width_ + x) = on ? 1 : 0;
  }

  std::size_t on_count() const;

  friend bool operator==(const Bitmap&, const Bitmap&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Side length 2^(g+1) - 1 of a generation-g render.
constexpr std::size_t render_size(int g) noexcept { return (std::size_t{1} << (g + 1)) - 1; }

/// Pixel predicate evaluated with synchronized lookups restricted to n < 4^g:
/// even/even pixels are lattice points; an even/odd (odd/even) pixel is on
/// when the lattice points just below and above it (left and right of it)
/// have consecutive curve indices. Throws BudgetError for g outside 1..budget.
Bitmap render_generation(int g, const SyncAutomaton& m, const Budget& budget = {});
inline Bitmap render_generation(int g, const Budget& budget = {}) {
  return render_generation(g, hilbert_sync(), budget);
}

/// Direct rendering of a walk: doubled points plus the midpoint of every step.
Bitmap render_walk(std::span<const LatticePoint> points, std::size_t size);

/// Plain PBM: "P1", "<w> <h>", then one line per row top-down with
/// space-separated 0/1 digits, '1' meaning on.
void write_pbm(std::ostream& out, const Bitmap& b);

/// Reads whitespace-separated P1 (what write_pbm emits); '#' comments allowed.
Bitmap read_pbm(std::istream& in);

}  // namespace hilbert
