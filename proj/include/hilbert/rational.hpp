#pragma once

// Exact rational scalar usable inside Eigen dense types.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace hilbert {

/// Normalised fraction num/den with den > 0 and gcd(num, den) = 1.
class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}  // NOLINT: implicit like a numeric literal
  Rational(long n) : num_(n), den_(1) {}  // NOLINT
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT
  explicit Rational(Integer n) : num_(std::move(n)), den_(1) {}
  Rational(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Integer lhs = a.num_ * b.den_;
    const Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  /// Accepts "p", "-p", "p/q"; throws ParseError (line 0) on malformed input.
  static Rational parse(std::string_view text);

  /// Throws Error when the value is not an integer or does not fit.
  std::int64_t to_int64() const;
  explicit operator long long() const { return to_int64(); }

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

}  // namespace hilbert

namespace Eigen {

template <>
struct NumTraits<hilbert::Rational> : GenericNumTraits<hilbert::Rational> {
  using Real = hilbert::Rational;
  using NonInteger = hilbert::Rational;
  using Literal = hilbert::Rational;
  using Nested = hilbert::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace hilbert {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using ColVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using MatrixQ = Matrix<Rational>;
using ColVectorQ = ColVector<Rational>;
using RowVectorQ = RowVector<Rational>;

}  // namespace hilbert
