#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

namespace ktorus {

/// Arbitrary-precision integer (GMP backed, no expression templates so that
/// `auto` and Eigen's generic kernels always see a plain value).
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Thrown by Checked64 arithmetic when a result leaves the int64 range.
/// Callers catch it and redo the computation with BigInt.
struct Overflow : std::overflow_error {
  Overflow() : std::overflow_error("int64 overflow") {}
};

/// int64 with overflow-trapping arithmetic. Used as the machine-word fast path
/// of every exact routine; never silently wraps.
class Checked64 {
 public:
  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT: implicit by intent
  constexpr std::int64_t value() const { return v_; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (b.v_ == -1 && a.v_ == std::numeric_limits<std::int64_t>::min())
      throw Overflow{};
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked64 operator-() const { return Checked64(0) - *this; }
  Checked64 operator+() const { return *this; }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  Checked64& operator*=(Checked64 o) { return *this = *this * o; }
  Checked64& operator/=(Checked64 o) { return *this = *this / o; }

  friend constexpr bool operator==(Checked64, Checked64) = default;
  friend constexpr auto operator<=>(Checked64, Checked64) = default;

  friend std::ostream& operator<<(std::ostream& os, Checked64 x) {
    return os << x.v_;
  }

 private:
  std::int64_t v_ = 0;
};

inline Checked64 abs(Checked64 x) { return x.value() < 0 ? -x : x; }

/// Parses an optionally signed decimal integer. Unlike the BigInt string
/// constructor, leading zeros never switch to octal. Throws
/// std::invalid_argument on anything else.
BigInt parse_bigint(std::string_view text);

// Uniform helpers over the two exact scalar types.

inline bool is_zero(const BigInt& x) { return x.is_zero(); }
inline bool is_zero(Checked64 x) { return x.value() == 0; }
inline int sign(const BigInt& x) { return x.sign(); }
inline int sign(Checked64 x) { return (x.value() > 0) - (x.value() < 0); }
inline BigInt abs_value(const BigInt& x) { return boost::multiprecision::abs(x); }
inline Checked64 abs_value(Checked64 x) { return abs(x); }

inline BigInt to_big(const BigInt& x) { return x; }
inline BigInt to_big(Checked64 x) { return BigInt(x.value()); }

template <class Scalar>
Scalar from_big(const BigInt& x);

template <>
inline BigInt from_big<BigInt>(const BigInt& x) {
  return x;
}

template <>
inline Checked64 from_big<Checked64>(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw Overflow{};
  return Checked64(x.convert_to<std::int64_t>());
}

/// Quotient rounded to the nearest integer, so |a - q*b| <= |b|/2.
template <class Scalar>
Scalar nearest_quotient(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;  // truncates toward zero
  Scalar r = a - q * b;
  if (is_zero(r)) return q;
  Scalar twice = abs_value(r) + abs_value(r);
  if (twice > abs_value(b)) {
    if (sign(r) == sign(b))
      q += Scalar(1);
    else
      q -= Scalar(1);
  }
  return q;
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
template <class Scalar>
std::tuple<Scalar, Scalar, Scalar> extended_gcd(Scalar a, Scalar b) {
  Scalar s0(1), s1(0), t0(0), t1(1);
  while (!is_zero(b)) {
    Scalar q = a / b;
    Scalar r = a - q * b;
    a = b;
    b = r;
    Scalar s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Scalar t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (sign(a) < 0) return {-a, -s0, -t0};
  return {a, s0, t0};
}

template <class Scalar>
Scalar gcd(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (!is_zero(b)) {
    Scalar r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace ktorus

namespace Eigen {
template <>
struct NumTraits<ktorus::Checked64> : GenericNumTraits<ktorus::Checked64> {
  using Real = ktorus::Checked64;
  using NonInteger = double;
  using Literal = ktorus::Checked64;
  using Nested = ktorus::Checked64;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline int digits10() { return 18; }
  static inline ktorus::Checked64 epsilon() { return 0; }
  static inline ktorus::Checked64 dummy_precision() { return 0; }
  static inline ktorus::Checked64 highest() {
    return std::numeric_limits<std::int64_t>::max();
  }
  static inline ktorus::Checked64 lowest() {
    return std::numeric_limits<std::int64_t>::min();
  }
};
}  // namespace Eigen
