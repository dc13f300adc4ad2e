#pragma once

// Linear representations (v, gamma, w) of k-regular sequences:
//   a(n) = v * gamma(d_1) * ... * gamma(d_t) * w,   (n)_k = d_1 ... d_t.
// Everything here is templated on the scalar; exactness of the reductions
// (minimization, semigroup states) relies on an exact field such as Rational.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hilbert/dfao.hpp"
#include "hilbert/digits.hpp"
#include "hilbert/direction.hpp"
#include "hilbert/error.hpp"
#include "hilbert/rational.hpp"
#include "hilbert/transducer.hpp"

namespace hilbert {

using Eigen::Index;

template <typename Scalar>
struct LinearRep {
  unsigned base = 4;
  Matrix<Scalar> v;                   // out_dim x rank
  std::vector<Matrix<Scalar>> gamma;  // one rank x rank matrix per digit
  ColVector<Scalar> w;                // rank

  Index out_dim() const { return v.rows(); }
  Index rank() const { return w.size(); }

  template <typename Other>
  LinearRep<Other> cast() const {
    LinearRep<Other> r{base, v.template cast<Other>(), {}, w.template cast<Other>()};
    for (const auto& g : gamma) r.gamma.push_back(g.template cast<Other>());
    return r;
  }

  friend bool operator==(const LinearRep& a, const LinearRep& b) {
    auto same = [](const auto& x, const auto& y) {
      return x.rows() == y.rows() && x.cols() == y.cols() && x == y;
    };
    if (a.base != b.base || !same(a.v, b.v) || !same(a.w, b.w) ||
        a.gamma.size() != b.gamma.size())
      return false;
    for (std::size_t i = 0; i < a.gamma.size(); ++i)
      if (!same(a.gamma[i], b.gamma[i])) return false;
    return true;
  }
};

using LinearRepQ = LinearRep<Rational>;

/// Throws Error if the shapes are inconsistent.
template <typename Scalar>
void validate(const LinearRep<Scalar>& r) {
  if (r.base < 2) throw Error("linrep base must be at least 2");
  if (r.gamma.size() != r.base) throw Error("linrep needs one gamma matrix per digit");
  if (r.v.cols() != r.rank()) throw Error("linrep v has wrong column count");
  for (const auto& g : r.gamma)
    if (g.rows() != r.rank() || g.cols() != r.rank())
      throw Error("linrep gamma matrix has wrong shape");
}

/// gamma(word), the identity for the empty word.
template <typename Scalar>
Matrix<Scalar> word_matrix(const LinearRep<Scalar>& r, std::span<const Digit> word) {
  Matrix<Scalar> m = Matrix<Scalar>::Identity(r.rank(), r.rank());
  for (Digit d : word) m = (m * r.gamma.at(d)).eval();
  return m;
}

/// v * gamma(word) * w, multiplied left to right so each step is a
/// (out_dim x rank) by (rank x rank) product.
template <typename Scalar>
ColVector<Scalar> eval(const LinearRep<Scalar>& r, std::span<const Digit> word) {
  Matrix<Scalar> row = r.v;
  for (Digit d : word) row = (row * r.gamma.at(d)).eval();
  return row * r.w;
}

template <typename Scalar>
ColVector<Scalar> eval_linrep(const LinearRep<Scalar>& r, std::uint64_t n) {
  return eval(r, to_base(n, r.base).digits);
}

/// v * gamma(0) == v, i.e. leading zeros never change the value.
template <typename Scalar>
bool is_padding_invariant(const LinearRep<Scalar>& r) {
  return r.rank() == 0 || r.v * r.gamma.at(0) == r.v;
}

/// Same sequence read with one extra leading zero: v <- v * gamma(0).
template <typename Scalar>
LinearRep<Scalar> pad_leading_zero(LinearRep<Scalar> r) {
  r.v = (r.v * r.gamma.at(0)).eval();
  return r;
}

/// Composition with a functional transducer: g(n) = f(T((n)_k)). Block
/// (p, q) of gamma'(a) is the sum of gamma(out) over moves p --a/out--> q;
/// v' carries v in the initial block and w' carries w in every final block.
template <typename Scalar>
LinearRep<Scalar> transduce_rep(const LinearRep<Scalar>& r, const Transducer& t,
                                std::size_t functional_check_length = 6) {
  validate(r);
  if (t.base != r.base) throw Error("transducer and representation bases differ");
  check_functional(t, functional_check_length);

  const Index s = r.rank();
  const Index n = s * static_cast<Index>(t.state_count);
  LinearRep<Scalar> out{r.base, Matrix<Scalar>::Zero(r.out_dim(), n), {},
                        ColVector<Scalar>::Zero(n)};
  out.v.block(0, static_cast<Index>(t.initial) * s, r.out_dim(), s) = r.v;
  for (StateId q = 0; q < t.state_count; ++q)
    if (t.is_final(q)) out.w.segment(static_cast<Index>(q) * s, s) = r.w;

  out.gamma.assign(r.base, Matrix<Scalar>::Zero(n, n));
  for (const auto& m : t.moves) {
    out.gamma[m.input].block(static_cast<Index>(m.from) * s, static_cast<Index>(m.to) * s, s, s) +=
        word_matrix(r, m.output);
  }
  return out;
}

/// Block direct sum realising a(n) - b(n); rank a.rank() + b.rank().
template <typename Scalar>
LinearRep<Scalar> difference_rep(const LinearRep<Scalar>& a, const LinearRep<Scalar>& b) {
  validate(a);
  validate(b);
  if (a.base != b.base || a.out_dim() != b.out_dim())
    throw Error("difference_rep needs matching base and output dimension");
  const Index ra = a.rank(), rb = b.rank(), n = ra + rb;
  LinearRep<Scalar> out{a.base, Matrix<Scalar>(a.out_dim(), n), {}, ColVector<Scalar>(n)};
  out.v << a.v, b.v;
  out.w << a.w, -b.w;
  for (unsigned d = 0; d < a.base; ++d) {
    Matrix<Scalar> g = Matrix<Scalar>::Zero(n, n);
    g.topLeftCorner(ra, ra) = a.gamma[d];
    g.bottomRightCorner(rb, rb) = b.gamma[d];
    out.gamma.push_back(std::move(g));
  }
  return out;
}

namespace detail {

/// Incrementally built span of row vectors with exact Gaussian elimination
/// (first-nonzero pivoting). Inserted vectors form the basis; `coordinates`
/// expresses a vector in that basis.
template <typename Scalar>
class RowSpan {
 public:
  explicit RowSpan(Index ambient) : ambient_(ambient) {}

  std::size_t size() const { return basis_.size(); }
  const std::vector<RowVector<Scalar>>& basis() const { return basis_; }

  /// Adds `u` if it is independent of the current basis.
  bool insert(const RowVector<Scalar>& u) {
    auto [residual, combo] = reduce(u);
    Index pivot = 0;
    while (pivot < ambient_ && residual(pivot) == Scalar(0)) ++pivot;
    if (pivot == ambient_) return false;
    // residual = u - combo * B, so as a combination of the basis it is
    // e_new - combo.
    RowVector<Scalar> t = RowVector<Scalar>::Zero(static_cast<Index>(basis_.size()) + 1);
    t.head(combo.size()) = -combo;
    t(t.size() - 1) = Scalar(1);
    for (auto& old : transforms_) old.conservativeResizeLike(RowVector<Scalar>::Zero(t.size()));
    basis_.push_back(u);
    reduced_.push_back(std::move(residual));
    pivots_.push_back(pivot);
    transforms_.push_back(std::move(t));
    return true;
  }

  /// Coefficients c with u = sum_i c_i * basis_i, or nullopt if u is outside.
  std::optional<RowVector<Scalar>> coordinates(const RowVector<Scalar>& u) const {
    auto [residual, combo] = reduce(u);
    for (Index i = 0; i < residual.size(); ++i)
      if (residual(i) != Scalar(0)) return std::nullopt;
    return combo;
  }

 private:
  std::pair<RowVector<Scalar>, RowVector<Scalar>> reduce(const RowVector<Scalar>& u) const {
    if (u.size() != ambient_) throw Error("RowSpan: vector has wrong length");
    RowVector<Scalar> r = u;
    RowVector<Scalar> combo = RowVector<Scalar>::Zero(static_cast<Index>(basis_.size()));
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
      const Index p = pivots_[i];
      if (r(p) == Scalar(0)) continue;
      const Scalar f = r(p) / reduced_[i](p);
      r -= f * reduced_[i];
      combo += f * transforms_[i].head(combo.size());
    }
    return {std::move(r), std::move(combo)};
  }

  Index ambient_;
  std::vector<RowVector<Scalar>> basis_;
  std::vector<RowVector<Scalar>> reduced_;
  std::vector<Index> pivots_;
  std::vector<RowVector<Scalar>> transforms_;  // reduced_[i] = transforms_[i] * basis
};

template <typename Scalar>
RowVector<Scalar> coordinates_or_throw(const RowSpan<Scalar>& span, const RowVector<Scalar>& u) {
  auto c = span.coordinates(u);
  if (!c) throw Error("internal: vector escaped its reachable span");
  return *c;
}

/// Left reduction: restrict to span{ v_i * gamma(x) }.
template <typename Scalar>
LinearRep<Scalar> reduce_left(const LinearRep<Scalar>& r) {
  RowSpan<Scalar> span(r.rank());
  std::vector<RowVector<Scalar>> queue;
  for (Index i = 0; i < r.out_dim(); ++i) queue.push_back(r.v.row(i));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (!span.insert(queue[head])) continue;
    for (const auto& g : r.gamma) queue.push_back(queue[head] * g);
  }

  const Index m = static_cast<Index>(span.size());
  const auto& basis = span.basis();
  LinearRep<Scalar> out{r.base, Matrix<Scalar>(r.out_dim(), m), {}, ColVector<Scalar>(m)};
  for (Index i = 0; i < r.out_dim(); ++i)
    out.v.row(i) = coordinates_or_throw<Scalar>(span, r.v.row(i));
  for (Index j = 0; j < m; ++j) out.w(j) = basis[j].dot(r.w);
  for (const auto& g : r.gamma) {
    Matrix<Scalar> h(m, m);
    for (Index j = 0; j < m; ++j) h.row(j) = coordinates_or_throw<Scalar>(span, basis[j] * g);
    out.gamma.push_back(std::move(h));
  }
  return out;
}

/// Right reduction: restrict to span{ gamma(x) * w }.
template <typename Scalar>
LinearRep<Scalar> reduce_right(const LinearRep<Scalar>& r) {
  RowSpan<Scalar> span(r.rank());
  std::vector<RowVector<Scalar>> queue{r.w.transpose()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (!span.insert(queue[head])) continue;
    for (const auto& g : r.gamma) queue.push_back((g * queue[head].transpose()).transpose());
  }

  const Index p = static_cast<Index>(span.size());
  const auto& basis = span.basis();
  Matrix<Scalar> c(r.rank(), p);
  for (Index j = 0; j < p; ++j) c.col(j) = basis[j].transpose();

  LinearRep<Scalar> out{r.base, r.v * c, {}, ColVector<Scalar>::Zero(p)};
  if (p > 0) out.w = coordinates_or_throw<Scalar>(span, r.w.transpose()).transpose();
  for (const auto& g : r.gamma) {
    Matrix<Scalar> h(p, p);
    for (Index j = 0; j < p; ++j)
      h.col(j) = coordinates_or_throw<Scalar>(span, (g * c.col(j)).transpose()).transpose();
    out.gamma.push_back(std::move(h));
  }
  return out;
}

}  // namespace detail

/// Equivalent representation of minimal rank: a left reduction onto the
/// reachable row space followed by a right reduction onto the co-reachable
/// column space. Exact when Scalar is an exact field.
template <typename Scalar>
LinearRep<Scalar> minimize_rep(const LinearRep<Scalar>& r) {
  validate(r);
  return detail::reduce_right(detail::reduce_left(r));
}

/// Explores the distinct matrices v * gamma(x) breadth-first (digits in
/// increasing order). States are those matrices, transitions multiply by
/// gamma(a) on the right, and a state's output is M * w. Throws
/// StateBudgetExceededError if more than `state_budget` states appear.
template <typename Scalar>
BasicDfao<ColVector<Scalar>> semigroup_trick(const LinearRep<Scalar>& r,
                                             std::size_t state_budget = 512) {
  validate(r);
  std::vector<Matrix<Scalar>> states{r.v};
  std::vector<StateId> delta;
  for (std::size_t head = 0; head < states.size(); ++head) {
    for (unsigned d = 0; d < r.base; ++d) {
      Matrix<Scalar> next = states[head] * r.gamma[d];
      auto it = std::find(states.begin(), states.end(), next);
      if (it == states.end()) {
        if (states.size() >= state_budget)
          throw StateBudgetExceededError("semigroup exploration exceeded " +
                                         std::to_string(state_budget) + " states");
        states.push_back(std::move(next));
        it = std::prev(states.end());
      }
      delta.push_back(static_cast<StateId>(it - states.begin()));
    }
  }
  std::vector<ColVector<Scalar>> outputs;
  outputs.reserve(states.size());
  for (const auto& m : states) outputs.push_back(m * r.w);
  return BasicDfao<ColVector<Scalar>>(r.base, 0, std::move(delta), std::move(outputs));
}

/// Reads each 2-vector output as a unit step (dx, dy). Throws Error otherwise.
template <typename Scalar>
Dfao direction_outputs(const BasicDfao<ColVector<Scalar>>& m) {
  std::vector<StateId> delta;
  std::vector<Direction> outputs;
  for (StateId q = 0; q < m.state_count(); ++q) {
    for (unsigned d = 0; d < m.base(); ++d) delta.push_back(m.next(q, static_cast<Digit>(d)));
    const auto& o = m.output(q);
    Direction dir{};
    auto small = [](const Scalar& s) { return s == Scalar(0) ? 0 : s == Scalar(1) ? 1 : s == Scalar(-1) ? -1 : 2; };
    if (o.size() != 2 || !direction_from_step({small(o(0)), small(o(1))}, dir))
      throw Error("state " + std::to_string(q) + " output is not a unit step");
    outputs.push_back(dir);
  }
  return Dfao(m.base(), m.initial(), std::move(delta), std::move(outputs));
}

/// Kernel subsequence n -> a(k^e n + i).
struct KernelIndex {
  unsigned e = 0;
  std::uint64_t i = 0;
  friend bool operator==(const KernelIndex&, const KernelIndex&) = default;
};

template <typename Scalar>
struct KernelGuess {
  LinearRep<Scalar> rep;
  std::vector<KernelIndex> basis;  // basis[j] is the sequence behind coordinate j
};

/// Candidate representation from a finite prefix (one column per term,
/// one row per output component). Kernel subsequences are examined level by
/// level (e = 0, 1, ...), smallest i first within a level; only children of
/// basis elements are candidates. A subsequence joins the basis when it is
/// independent of the current basis on the first floor(N / k^(depth+1))
/// terms. The result is not certified.
///
/// Throws InsufficientDataError when N < k^(depth+2) or the kernel is not
/// closed at level depth+1.
template <typename Scalar>
KernelGuess<Scalar> guess_linrep(const Matrix<Scalar>& prefix, unsigned k, unsigned depth) {
  if (k < 2) throw Error("base must be at least 2");
  const auto power = [k](unsigned e) {
    std::uint64_t p = 1;
    for (unsigned i = 0; i < e; ++i) p *= k;
    return p;
  };
  const auto terms = static_cast<std::uint64_t>(prefix.cols());
  if (depth > 24 || terms < power(depth + 2))
    throw InsufficientDataError("need at least " + std::to_string(power(depth + 2)) +
                                " terms for depth " + std::to_string(depth) + ", got " +
                                std::to_string(terms));
  const std::uint64_t window = terms / power(depth + 1);
  const Index out_dim = prefix.rows();

  auto kernel_vector = [&](KernelIndex ki) {
    RowVector<Scalar> r(out_dim * static_cast<Index>(window));
    const std::uint64_t stride = power(ki.e);
    for (Index c = 0; c < out_dim; ++c)
      for (std::uint64_t j = 0; j < window; ++j)
        r(c * static_cast<Index>(window) + static_cast<Index>(j)) =
            prefix(c, static_cast<Index>(j * stride + ki.i));
    return r;
  };

  detail::RowSpan<Scalar> span(out_dim * static_cast<Index>(window));
  std::vector<KernelIndex> basis;
  std::vector<KernelIndex> level{{0, 0}};
  for (unsigned e = 0; !level.empty(); ++e) {
    std::sort(level.begin(), level.end(),
              [](const KernelIndex& a, const KernelIndex& b) { return a.i < b.i; });
    std::vector<KernelIndex> next;
    for (const auto& ki : level) {
      if (!span.insert(kernel_vector(ki))) continue;
      if (e > depth)
        throw InsufficientDataError("kernel subsequence (" + std::to_string(ki.e) + ", " +
                                    std::to_string(ki.i) + ") is independent beyond depth " +
                                    std::to_string(depth));
      basis.push_back(ki);
      for (unsigned b = 0; b < k; ++b) next.push_back({e + 1, b * power(e) + ki.i});
    }
    level = std::move(next);
  }

  const Index r = static_cast<Index>(basis.size());
  KernelGuess<Scalar> out{{k, Matrix<Scalar>(out_dim, r), {}, ColVector<Scalar>::Zero(r)}, basis};
  if (r > 0) out.rep.w(0) = Scalar(1);
  for (Index j = 0; j < r; ++j)
    out.rep.v.col(j) = prefix.col(static_cast<Index>(basis[j].i));
  for (unsigned b = 0; b < k; ++b) {
    Matrix<Scalar> g(r, r);
    for (Index j = 0; j < r; ++j) {
      const KernelIndex child{basis[j].e + 1, b * power(basis[j].e) + basis[j].i};
      g.col(j) = detail::coordinates_or_throw<Scalar>(span, kernel_vector(child)).transpose();
    }
    out.rep.gamma.push_back(std::move(g));
  }
  return out;
}

/// The rank-5 base-4 representation of the coordinates (x_n, y_n).
LinearRepQ hilbert_linrep();

/// The published rank-3 representation of the steps (x_{n+1}-x_n, y_{n+1}-y_n).
LinearRepQ hilbert_step_rep();

/// hilbert_linrep composed with the increment transducer: (x_{n+1}, y_{n+1}), rank 15.
LinearRepQ hilbert_successor_rep();

/// Successor (read with one leading zero) minus hilbert_linrep, rank 20.
LinearRepQ hilbert_difference_rep();

/// minimize_rep(hilbert_difference_rep()), rank 3.
LinearRepQ hilbert_minimized_step_rep();

/// Text form: header "linrep base=<k> out=<d> rank=<r>", then sections
/// "v", "gamma 0" .. "gamma k-1", "w", each followed by one matrix row per
/// line (w is written one entry per line). '#' starts a comment.
void write_linrep(std::ostream& out, const LinearRepQ& r);
LinearRepQ read_linrep(std::istream& in);

}  // namespace hilbert
