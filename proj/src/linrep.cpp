#include "hilbert/linrep.hpp"

#include <initializer_list>
#include <istream>
#include <ostream>

#include "text_util.hpp"

namespace hilbert {

namespace {

MatrixQ integer_matrix(Index rows, Index cols, std::initializer_list<int> entries) {
  MatrixQ m(rows, cols);
  auto it = entries.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Rational(*it++);
  return m;
}

}  // namespace

LinearRepQ hilbert_linrep() {
  LinearRepQ r;
  r.base = 4;
  // clang-format off
  r.v = integer_matrix(2, 5, {0, 0, 0, 1, 0,
                              0, 0, 1, 1, 0});
  r.gamma.push_back(integer_matrix(5, 5, { 0,  0,  0,  0, -4,
                                           1,  0, -1, -1,  4,
                                           0,  0,  1,  0,  0,
                                           0,  0,  0,  1,  0,
                                           0,  1,  1,  1,  1}));
  r.gamma.push_back(integer_matrix(5, 5, { 0,  0,  0,  0, -4,
                                           0,  0,  0, -1,  0,
                                           1, -2, -3, -2,  4,
                                           0,  2,  3,  3,  0,
                                           0,  1,  1,  1,  1}));
  r.gamma.push_back(integer_matrix(5, 5, { 0,  0,  0,  0, -4,
                                           0, -2, -2, -3,  0,
                                           0,  0, -1,  0,  0,
                                           1,  2,  3,  3,  4,
                                           0,  1,  1,  1,  1}));
  r.gamma.push_back(integer_matrix(5, 5, { 0,  0,  0,  0, -4,
                                           1, -3, -2, -2,  1,
                                          -1,  2,  1,  2, -4,
                                           1,  1,  1,  0,  7,
                                           0,  1,  1,  1,  1}));
  // clang-format on
  r.w = integer_matrix(5, 1, {1, 0, 0, 0, 0});
  return r;
}

LinearRepQ hilbert_step_rep() {
  LinearRepQ r;
  r.base = 4;
  // clang-format off
  r.v = integer_matrix(2, 3, {1, 0, 0,
                              0, 1, 0});
  r.gamma.push_back(integer_matrix(3, 3, { 1,  0,  0,
                                           0,  1,  0,
                                           0,  1,  0}));
  r.gamma.push_back(integer_matrix(3, 3, { 0,  1,  0,
                                           1,  0,  0,
                                           1,  0,  0}));
  r.gamma.push_back(integer_matrix(3, 3, { 0,  0,  1,
                                           1, -1,  1,
                                           1, -1,  1}));
  r.gamma.push_back(integer_matrix(3, 3, {-1,  1, -1,
                                           0,  0, -1,
                                           0, -1,  0}));
  // clang-format on
  r.w = integer_matrix(3, 1, {0, 1, 0});
  return r;
}

LinearRepQ hilbert_successor_rep() {
  return transduce_rep(hilbert_linrep(), increment_transducer(4));
}

LinearRepQ hilbert_difference_rep() {
  return difference_rep(pad_leading_zero(hilbert_successor_rep()), hilbert_linrep());
}

LinearRepQ hilbert_minimized_step_rep() { return minimize_rep(hilbert_difference_rep()); }

void write_linrep(std::ostream& out, const LinearRepQ& r) {
  validate(r);
  out << "linrep base=" << r.base << " out=" << r.out_dim() << " rank=" << r.rank() << '\n';
  auto rows = [&out](const MatrixQ& m) {
    for (Index i = 0; i < m.rows(); ++i) {
      for (Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
      out << '\n';
    }
  };
  out << "v\n";
  rows(r.v);
  for (unsigned d = 0; d < r.base; ++d) {
    out << "gamma " << d << '\n';
    rows(r.gamma[d]);
  }
  out << "w\n";
  rows(r.w);
}

LinearRepQ read_linrep(std::istream& in) {
  const auto lines = detail::read_lines(in);
  if (lines.empty()) throw ParseError(0, "empty linrep file");
  const auto& head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[0] != "linrep")
    throw ParseError(head.number, "expected 'linrep base=<k> out=<d> rank=<r>'");
  const auto base = detail::parse_uint(detail::key_value(head.tokens[1], "base", head.number),
                                       head.number, "base");
  const auto out_dim = detail::parse_uint(
      detail::key_value(head.tokens[2], "out", head.number), head.number, "out");
  const auto rank = detail::parse_uint(detail::key_value(head.tokens[3], "rank", head.number),
                                       head.number, "rank");
  if (base < 2 || base > 64) throw ParseError(head.number, "base must be in 2..64");
  if (out_dim > 1024 || rank > 4096) throw ParseError(head.number, "dimensions too large");

  LinearRepQ r;
  r.base = static_cast<unsigned>(base);
  r.gamma.resize(base);

  std::size_t pos = 1;
  auto read_matrix = [&](Index rows, Index cols, const std::string& name) {
    MatrixQ m(rows, cols);
    for (Index i = 0; i < rows; ++i, ++pos) {
      if (pos >= lines.size()) throw ParseError(0, "section '" + name + "' is truncated");
      const auto& line = lines[pos];
      if (static_cast<Index>(line.tokens.size()) != cols)
        throw ParseError(line.number, "section '" + name + "' expects " +
                                          std::to_string(cols) + " entries per row");
      for (Index j = 0; j < cols; ++j) {
        try {
          m(i, j) = Rational::parse(line.tokens[static_cast<std::size_t>(j)]);
        } catch (const ParseError& e) {
          throw ParseError(line.number, e.what());
        }
      }
    }
    return m;
  };
  auto expect_section = [&](const std::vector<std::string>& title) {
    if (pos >= lines.size()) throw ParseError(0, "missing section '" + title.front() + "'");
    if (lines[pos].tokens != title) {
      std::string want;
      for (const auto& t : title) want += (want.empty() ? "" : " ") + t;
      throw ParseError(lines[pos].number, "expected section '" + want + "'");
    }
    ++pos;
  };

  const auto n = static_cast<Index>(rank);
  expect_section({"v"});
  r.v = read_matrix(static_cast<Index>(out_dim), n, "v");
  for (std::uint64_t d = 0; d < base; ++d) {
    expect_section({"gamma", std::to_string(d)});
    r.gamma[d] = read_matrix(n, n, "gamma " + std::to_string(d));
  }
  expect_section({"w"});
  r.w = read_matrix(n, 1, "w");
  if (pos != lines.size()) throw ParseError(lines[pos].number, "unexpected trailing content");
  return r;
}

}  // namespace hilbert
