#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <variant>

#include "planedec/errors.hpp"

namespace planedec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Arithmetic mode of a whole computation. Every scalar carries its mode
/// and the two never mix: one document, one mode, end to end.
enum class Mode { Exact, Float };

std::string to_string(Mode m);

/// A number in one of the two modes: an exact rational kept in canonical
/// reduced form (positive denominator, gcd 1), or an IEEE double.
///
/// Coordinates, masses, weights and the invariant are all Scalars, so the
/// mode decision is made once at the input boundary and enforced from then
/// on: combining scalars of different modes throws ModeMismatch instead of
/// silently contaminating an exact pipeline with roundoff.
class Scalar {
 public:
  /// Exact zero. A default so containers work; prefer zero(mode).
  Scalar() : v_(Rational(0)) {}

  static Scalar exact(long long num, long long den = 1);
  static Scalar exact(Rational r) { return Scalar(std::move(r)); }
  static Scalar floating(double x) { return Scalar(x); }
  static Scalar zero(Mode m) { return from_int(0, m); }
  static Scalar one(Mode m) { return from_int(1, m); }
  static Scalar from_int(long long n, Mode m);

  Mode mode() const {
    return std::holds_alternative<Rational>(v_) ? Mode::Exact : Mode::Float;
  }
  bool is_exact() const { return mode() == Mode::Exact; }

  /// The underlying rational; throws ModeMismatch on a float scalar.
  const Rational& rational() const;

  /// Narrowing view. Exact on every float scalar, rounded on rationals
  /// whose value a double cannot hold.
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Division by zero throws Error in both modes; no infinities leak out.
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  /// Exact: "p/q", or just "p" when the denominator is one. Float: the
  /// shortest decimal that round-trips to the same double.
  std::string str() const;

  /// Inverse of str() for the given mode. Exact accepts optionally signed
  /// integers and "p/q" fractions; float accepts decimal literals. Anything
  /// else, including a fraction offered to float mode or a decimal point
  /// offered to exact mode, throws ParseError naming the offending text.
  static Scalar parse(const std::string& text, Mode m);

 private:
  explicit Scalar(Rational r) : v_(std::move(r)) {}
  explicit Scalar(double x) : v_(x) {}

  std::variant<Rational, double> v_;
};

}  // namespace planedec
