#include "planedec/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace planedec {
namespace {

[[noreturn]] void mismatch(const char* what) {
  throw ModeMismatch(std::string("mode mismatch: ") + what +
                     " combined an exact value with a floating one");
}

// Dispatch a binary op over two same-mode scalars.
template <class ExactOp, class FloatOp>
Scalar combine(const Scalar& a, const Scalar& b, const char* what, ExactOp ex,
               FloatOp fl) {
  if (a.mode() != b.mode()) mismatch(what);
  if (a.is_exact()) return Scalar::exact(ex(a.rational(), b.rational()));
  return Scalar::floating(fl(a.to_double(), b.to_double()));
}

bool plain_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// Validated by plain_integer; boost's string constructor dislikes '+'.
BigInt parse_big(const std::string& s) {
  if (!s.empty() && s[0] == '+') return BigInt(s.substr(1));
  return BigInt(s);
}

}  // namespace

std::string to_string(Mode m) {
  return m == Mode::Exact ? "exact" : "float";
}

Scalar Scalar::exact(long long num, long long den) {
  if (den == 0) throw Error("exact scalar with zero denominator");
  // boost's two-argument constructor rejects a negative denominator
  // outright, so normalize the sign here.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Scalar(Rational(BigInt(num), BigInt(den)));
}

Scalar Scalar::from_int(long long n, Mode m) {
  if (m == Mode::Exact) return exact(n);
  return floating(static_cast<double>(n));
}

const Rational& Scalar::rational() const {
  if (!is_exact())
    throw ModeMismatch("rational() called on a floating scalar");
  return std::get<Rational>(v_);
}

double Scalar::to_double() const {
  if (is_exact()) return static_cast<double>(std::get<Rational>(v_));
  return std::get<double>(v_);
}

int Scalar::sign() const {
  if (is_exact()) return std::get<Rational>(v_).sign();
  double x = std::get<double>(v_);
  return (x > 0.0) - (x < 0.0);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-std::get<Rational>(v_)));
  return Scalar(-std::get<double>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(
      a, b, "addition", [](const Rational& x, const Rational& y) { return x + y; },
      [](double x, double y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(
      a, b, "subtraction",
      [](const Rational& x, const Rational& y) { return x - y; },
      [](double x, double y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(
      a, b, "multiplication",
      [](const Rational& x, const Rational& y) { return x * y; },
      [](double x, double y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) mismatch("division");
  if (b.is_zero()) throw Error("division by zero");
  if (a.is_exact()) return Scalar::exact(a.rational() / b.rational());
  return Scalar::floating(a.to_double() / b.to_double());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) mismatch("equality");
  if (a.is_exact()) return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) mismatch("ordering");
  if (a.is_exact()) return a.rational() < b.rational();
  return a.to_double() < b.to_double();
}

std::string Scalar::str() const {
  if (is_exact()) {
    const Rational& r = std::get<Rational>(v_);
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
  }
  char buf[64];
  double x = std::get<double>(v_);
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) {
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }
  return std::string(buf, end);
}

Scalar Scalar::parse(const std::string& text, Mode m) {
  if (text.empty()) throw ParseError("empty number");
  if (m == Mode::Exact) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
      if (!plain_integer(text))
        throw ParseError("not an exact number: \"" + text + "\"");
      return exact(Rational(parse_big(text)));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!plain_integer(num) || !plain_integer(den))
      throw ParseError("not an exact number: \"" + text + "\"");
    BigInt n = parse_big(num), d = parse_big(den);
    if (d == 0) throw ParseError("zero denominator: \"" + text + "\"");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return exact(Rational(n, d));
  }
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;  // from_chars rejects '+'
  if (begin == end) throw ParseError("not a decimal number: \"" + text + "\"");
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, x);
  if (ec != std::errc() || ptr != end)
    throw ParseError("not a decimal number: \"" + text + "\"");
  if (!std::isfinite(x))
    throw ParseError("non-finite number: \"" + text + "\"");
  return floating(x);
}

}  // namespace planedec
