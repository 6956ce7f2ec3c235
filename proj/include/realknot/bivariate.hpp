#pragma once

#include <stop_token>
#include <vector>

#include "realknot/poly.hpp"

namespace realknot {

/// Polynomial in (u, v) stored as coefficients of v^j, each a polynomial in u.
struct BiPoly {
  std::vector<Poly> c;

  BiPoly() = default;
  BiPoly(const Poly& p) : c{p} { trim(); }  // NOLINT(google-explicit-constructor)
  explicit BiPoly(std::vector<Poly> coeffs) : c(std::move(coeffs)) { trim(); }
  static BiPoly u() { return BiPoly(Poly::x()); }
  static BiPoly v() { return BiPoly(std::vector<Poly>{Poly(), Poly(1)}); }

  int deg_v() const { return static_cast<int>(c.size()) - 1; }
  int deg_u() const;
  bool is_zero() const { return c.empty(); }
  Poly coeff(int j) const { return j >= 0 && j < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(j)] : Poly(); }

  /// Specialize u, giving a polynomial in v.
  Poly at_u(const Rat& u0) const;
  /// Substitute v = r(u) and reduce modulo m.
  Poly at_v(const Poly& r, const Poly& m) const;
  /// P(u + lambda v, v)
  BiPoly shear(const Rat& lambda) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rat& r);
  void trim();
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(BiPoly a, const Rat& r);

/// Finite common zeros of a polynomial system: {(U(w), V(w)) : D(w) = 0}.
/// D is squarefree; distinct roots of D give distinct solutions.
struct BivariateSolution {
  Poly D;
  Poly U;
  Poly V;
  int count() const { return D.degree() > 0 ? D.degree() : 0; }
};

/// Resultant with respect to v, as a polynomial in u.
Poly resultant_v(const BiPoly& f, const BiPoly& h);

/// Exact solution of a zero-dimensional system. Throws MathError(PositiveDimensional)
/// when the solution set has a curve component.
BivariateSolution solve_bivariate(const std::vector<BiPoly>& system, std::stop_token stop = {});

}  // namespace realknot
