#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace ptq::weyl {

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the backing type.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Complex number with exact rational real and imaginary parts. All
/// arithmetic is exact; equality is canonical-form equality.
struct GaussianRational {
  Rational re{};
  Rational im{};

  GaussianRational() = default;
  GaussianRational(int v) : re(v) {}  // NOLINT: implicit by design
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  /// The imaginary unit times an integer factor.
  static GaussianRational i(int factor = 1) { return {Rational(0), Rational(factor)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conjugate() const { return {re, -im}; }

  /// re^2 + im^2, the exact squared modulus.
  Rational squared_modulus() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(GaussianRational a) {
    a.re = -a.re;
    a.im = -a.im;
    return a;
  }

  bool operator==(const GaussianRational&) const = default;
};

/// Compact exact rendering: "2", "-1/48", "i", "-i", "3*i", "1/2-3*i".
std::string to_string(const GaussianRational& v);
std::string to_string(const Rational& v);

/// True when the value prints as a bare non-negative integer (no sign, no
/// slash, no imaginary part); used by the canonical renderer.
bool is_plain_unsigned_integer(const GaussianRational& v);

/// Parses "p/q" or "p" into an exact rational. Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

double to_double(const Rational& v);

}  // namespace ptq::weyl
