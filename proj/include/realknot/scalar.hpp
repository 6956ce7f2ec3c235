#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

namespace realknot {

/// Exact rational. gmp keeps it canonical (reduced, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);
inline int sign(const Rat& r) { return sgn(r); }
double to_double(const Rat& r);
long double to_long_double(const Rat& r);

/// Largest rational of the form n / 2^bits not exceeding sqrt(x), x >= 0.
Rat sqrt_lower(const Rat& x, unsigned bits = 64);
/// True when x is the square of a rational; writes the root into *root.
bool rational_sqrt(const Rat& x, Rat* root);

/// Gaussian rational re + i*im.
struct GaussRat {
  Rat re{0};
  Rat im{0};

  GaussRat() = default;
  GaussRat(const Rat& r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussRat(int r) : re(r) {}         // NOLINT(google-explicit-constructor)
  GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

  GaussRat conj() const { return {re, -im}; }
  Rat norm() const { return re * re + im * im; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o);
  GaussRat operator-() const { return {-re, -im}; }
};

inline GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
inline GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
inline GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
inline GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
inline bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
std::string to_string(const GaussRat& z);
std::ostream& operator<<(std::ostream& os, const GaussRat& z);
std::complex<double> to_complex(const GaussRat& z);

/// Element a + b*sqrt(radicand) of the quadratic field Q(sqrt(radicand)).
/// The radicand is never a rational square once an element with b != 0
/// exists; make_quad() collapses square radicands to plain rationals.
/// A negative radicand gives an imaginary quadratic field.
struct QuadExt {
  Rat a{0};
  Rat b{0};
  Rat radicand{0};

  QuadExt() = default;
  QuadExt(const Rat& value) : a(value) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Rat& a_, const Rat& b_, const Rat& radicand_);

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  bool is_rational() const { return sgn(b) == 0; }
  QuadExt conj() const { return {a, -b, radicand}; }
  Rat field_norm() const { return a * a - b * b * radicand; }
  /// Sign of a real element (radicand > 0 or b == 0).
  int sign() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  QuadExt operator-() const { return {-a, -b, radicand}; }
};

/// a + b*sqrt(r), collapsing to a rational when r is a square.
QuadExt make_quad(const Rat& a, const Rat& b, const Rat& r);

inline QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
inline QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
inline QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
inline QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
bool operator==(const QuadExt& x, const QuadExt& y);
inline bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
std::string to_string(const QuadExt& q);
std::complex<double> to_complex(const QuadExt& q);

}  // namespace realknot
