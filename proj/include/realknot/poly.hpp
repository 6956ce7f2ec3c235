#pragma once

#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "realknot/scalar.hpp"

namespace realknot {

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly(int c);         // NOLINT(google-explicit-constructor)

  static Poly monomial(const Rat& c, int k);
  static Poly x() { return monomial(Rat(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const;
  GaussRat eval(const GaussRat& z) const;
  int sign_at(const Rat& x) const { return sgn(eval(x)); }

  Poly derivative() const;
  Poly monic() const;
  /// Scaled to coprime integer coefficients with positive leading coefficient.
  Poly primitive() const;
  /// p(x + a)
  Poly shift(const Rat& a) const;
  /// p(a x)
  Poly scale(const Rat& a) const;
  /// x^deg p(1/x) with the given formal degree.
  Poly reverse(int formal_degree) const;
  Poly compose(const Poly& q) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& r);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const char* var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

inline Poly operator+(Poly a, const Poly& b) { return a += b; }
inline Poly operator-(Poly a, const Poly& b) { return a -= b; }
inline Poly operator*(Poly a, const Poly& b) { return a *= b; }
inline Poly operator*(Poly a, const Rat& r) { return a *= r; }
inline Poly operator*(const Rat& r, Poly a) { return a *= r; }

struct DivMod {
  Poly quot;
  Poly rem;
};
DivMod divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quot; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }
/// Quotient when b divides a exactly, nullopt otherwise.
std::optional<Poly> exact_quotient(const Poly& a, const Poly& b);

/// Monic gcd (zero only if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
/// Squarefree part, monic.
Poly squarefree(const Poly& p);
/// Yun decomposition: factors[i] has multiplicity i+1 (monic, possibly 1).
std::vector<Poly> squarefree_decomposition(const Poly& p);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
Poly invmod(const Poly& a, const Poly& m);
/// a(x)^k mod m
Poly powmod(const Poly& a, unsigned k, const Poly& m);
/// Resultant of two polynomials with given formal degrees (Sylvester determinant).
Rat resultant(const Poly& a, const Poly& b, int deg_a, int deg_b);
inline Rat resultant(const Poly& a, const Poly& b) { return resultant(a, b, a.degree(), b.degree()); }
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// Refinement cap in precision doublings, from REALKNOT_PRECISION_BUDGET (default 64).
int precision_budget();

/// Sturm sequence of p (remainders scaled to positive content).
std::vector<Poly> sturm_sequence(const Poly& p);
/// Distinct real roots of p in (a, b].
int count_roots(const std::vector<Poly>& sturm, const Rat& a, const Rat& b);
int count_roots(const Poly& p, const Rat& a, const Rat& b);
/// Distinct real roots of p in [a, b].
int count_roots_closed(const Poly& p, const Rat& a, const Rat& b);
int count_real_roots(const Poly& p);
/// Strict upper bound on the absolute value of every complex root.
Rat root_bound(const Poly& p);

/// Isolating interval for a real root of a squarefree polynomial.
/// Either lo == hi (the root is exactly lo) or p(lo) p(hi) < 0 with one root inside.
struct RealRoot {
  Rat lo;
  Rat hi;
  bool exact() const { return lo == hi; }
  Rat mid() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
};

/// Sorted isolating intervals for the distinct real roots of p (p need not be squarefree).
std::vector<RealRoot> isolate_real_roots(const Poly& p);
/// Halve until width <= w; p must be the squarefree polynomial the root was isolated for.
void refine(const Poly& p, RealRoot& r, const Rat& w);
void bisect_once(const Poly& p, RealRoot& r);
/// Exact sign of q at the root of squarefree p isolated by r; refines r as needed.
int sign_at_root(const Poly& p, RealRoot& r, const Poly& q, std::stop_token stop = {});
double approx(const RealRoot& r);

/// Rectangle [x0, x1] x [y0, y1] in the complex plane.
struct Rect {
  Rat x0, x1, y0, y1;
  Rat width() const { return x1 - x0; }
  Rat height() const { return y1 - y0; }
};

/// Number of roots of p inside the rectangle, by winding number.
/// Throws InternalError if a root lies on the boundary.
int count_roots_in_rect(const Poly& p, const Rect& r);
/// True when p vanishes somewhere on the closed segment from a to b.
bool vanishes_on_segment(const Poly& p, const GaussRat& a, const GaussRat& b);
/// Upper half-plane rectangles, one per non-real root pair, each smaller than precision.
std::vector<Rect> isolate_complex_roots(const Poly& p, const Rat& precision);

/// The rational with the smallest denominator in [lo, hi].
Rat simplest_between(const Rat& lo, const Rat& hi);
/// Monic rational quadratic factors x^2 + b x + c with b^2 < 4c, found by
/// reconstructing b and c from isolated complex roots to within 2^-bits.
std::vector<Poly> quadratic_factors(const Poly& p, int bits = 40);

}  // namespace realknot
