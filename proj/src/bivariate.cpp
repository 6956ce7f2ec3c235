#include "realknot/bivariate.hpp"

#include <algorithm>
#include <random>

#include "realknot/error.hpp"
#include "realknot/linalg.hpp"

namespace realknot {

int BiPoly::deg_u() const {
  int d = -1;
  for (const auto& p : c) d = std::max(d, p.degree());
  return d;
}

void BiPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly BiPoly::at_u(const Rat& u0) const {
  std::vector<Rat> v(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) v[j] = c[j].eval(u0);
  return Poly(std::move(v));
}

Poly BiPoly::at_v(const Poly& r, const Poly& m) const {
  Poly acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * r + *it) % m;
  return acc;
}

BiPoly BiPoly::shear(const Rat& lambda) const {
  if (sgn(lambda) == 0) return *this;
  BiPoly lin(std::vector<Poly>{Poly::x(), Poly(lambda)});
  BiPoly out;
  BiPoly vpow(Poly(1));
  for (const auto& pj : c) {
    BiPoly acc;
    const auto& co = pj.coeffs();
    for (auto it = co.rbegin(); it != co.rend(); ++it) acc = acc * lin + BiPoly(Poly(*it));
    out += acc * vpow;
    vpow = vpow * BiPoly::v();
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size());
  for (std::size_t j = 0; j < o.c.size(); ++j) c[j] += o.c[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size());
  for (std::size_t j = 0; j < o.c.size(); ++j) c[j] -= o.c[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rat& r) {
  for (auto& p : c) p *= r;
  trim();
  return *this;
}

BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
BiPoly operator*(BiPoly a, const Rat& r) { return a *= r; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<Poly> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return BiPoly(std::move(r));
}

namespace {

// Sylvester rows of f (formal degree n) and h (formal degree m) with the given
// row counts; columns are descending powers of v.
Matrix sylvester_rows(const Poly& f, int n, int rows_f, const Poly& h, int m, int rows_h) {
  int cols = std::max(rows_f + n, rows_h + m);
  Matrix s(static_cast<std::size_t>(rows_f + rows_h), static_cast<std::size_t>(cols));
  for (int i = 0; i < rows_f; ++i)
    for (int j = 0; j <= n; ++j) s(static_cast<std::size_t>(i), static_cast<std::size_t>(cols - 1 - (rows_f - 1 - i) - j)) = f.coeff(j);
  for (int i = 0; i < rows_h; ++i)
    for (int j = 0; j <= m; ++j)
      s(static_cast<std::size_t>(rows_f + i), static_cast<std::size_t>(cols - 1 - (rows_h - 1 - i) - j)) = h.coeff(j);
  return s;
}

// Evaluate-and-interpolate a polynomial in u of known degree bound.
template <class F>
Poly interpolate_in_u(int bound, F&& value_at) {
  std::vector<Rat> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    xs.emplace_back(k);
    ys.push_back(value_at(Rat(k)));
  }
  return interpolate(xs, ys);
}

struct FirstSubresultant {
  Poly a;  // coefficient of v
  Poly b;  // constant term
};

FirstSubresultant first_subresultant(const BiPoly& f, const BiPoly& h) {
  int n = f.deg_v(), m = h.deg_v();
  if (n == 1) return {f.coeff(1), f.coeff(0)};
  if (m == 1) return {h.coeff(1), h.coeff(0)};
  ensure(n >= 2 && m >= 2, "first_subresultant: degrees too small");
  int bound = (m - 1) * std::max(f.deg_u(), 0) + (n - 1) * std::max(h.deg_u(), 0);
  // S_1 = sum_j det(first n+m-3 columns | column of v^j) v^j over j = 1, 0
  auto coefficient = [&](int j) {
    return interpolate_in_u(bound, [&](const Rat& u0) {
      Matrix s = sylvester_rows(f.at_u(u0), n, m - 1, h.at_u(u0), m, n - 1);
      std::size_t k = s.rows();
      Matrix sq(k, k);
      std::size_t cols = s.cols();
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c + 1 < k; ++c) sq(i, c) = s(i, c);
        sq(i, k - 1) = s(i, cols - 1 - static_cast<std::size_t>(j));
      }
      return det(sq);
    });
  };
  return {coefficient(1), coefficient(0)};
}

Poly u_content(const std::vector<BiPoly>& sys) {
  Poly g;
  for (const auto& p : sys)
    for (const auto& q : p.c)
      if (!q.is_zero()) g = g.is_zero() ? q.monic() : gcd(g, q);
  return g;
}

}  // namespace

Poly resultant_v(const BiPoly& f, const BiPoly& h) {
  int n = f.deg_v(), m = h.deg_v();
  ensure(n >= 0 && m >= 0, "resultant_v: zero input");
  int bound = m * std::max(f.deg_u(), 0) + n * std::max(h.deg_u(), 0);
  return interpolate_in_u(bound, [&](const Rat& u0) { return resultant(f.at_u(u0), h.at_u(u0), n, m); });
}

BivariateSolution solve_bivariate(const std::vector<BiPoly>& input, std::stop_token stop) {
  std::vector<BiPoly> sys;
  for (const auto& p : input)
    if (!p.is_zero()) sys.push_back(p);
  if (sys.empty()) throw MathError(ErrorKind::PositiveDimensional, "empty system");
  BivariateSolution none{Poly(1), Poly(), Poly()};
  for (const auto& p : sys)
    if (p.deg_v() == 0 && p.c[0].degree() == 0) return none;
  if (u_content(sys).degree() > 0) throw MathError(ErrorKind::PositiveDimensional, "common factor in u");

  bool v_free = std::all_of(sys.begin(), sys.end(), [](const BiPoly& p) { return p.deg_v() == 0; });
  if (v_free) throw MathError(ErrorKind::PositiveDimensional, "system does not involve v");

  static const int kShears[] = {0, 1, -1, 2, -3, 5, -7, 11};
  for (int attempt = 0; attempt < 16; ++attempt) {
    if (stop.stop_requested()) throw MathError(ErrorKind::Cancelled, "bivariate solve cancelled");
    Rat lambda(kShears[attempt % 8]);
    std::vector<BiPoly> q;
    for (const auto& p : sys) q.push_back(p.shear(lambda));

    std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned long long>(attempt));
    std::uniform_int_distribution<int> dist(1, 9);
    auto combo = [&]() {
      BiPoly f;
      for (const auto& p : q) f += p * Rat(dist(rng) * (dist(rng) % 2 ? 1 : -1));
      return f;
    };
    BiPoly f1 = combo(), h1 = combo(), f2 = combo(), h2 = combo();
    if (f1.is_zero() || h1.is_zero() || f2.is_zero() || h2.is_zero()) continue;
    if (f1.deg_v() == 0 && h1.deg_v() == 0) continue;
    Poly r1 = resultant_v(f1, h1);
    Poly r2 = resultant_v(f2, h2);
    if (r1.is_zero() && r2.is_zero()) {
      if (q.size() == 1 || attempt >= 2) throw MathError(ErrorKind::PositiveDimensional, "resultants vanish identically");
      continue;
    }
    Poly g = r1.is_zero() ? r2 : (r2.is_zero() ? r1 : gcd(r1, r2));
    g = squarefree(g);
    if (g.degree() <= 0) return none;

    const BiPoly& f = r1.is_zero() ? f2 : f1;
    const BiPoly& h = r1.is_zero() ? h2 : h1;
    if (f.deg_v() < 1 || h.deg_v() < 1) continue;
    FirstSubresultant s1 = first_subresultant(f, h);
    if (gcd(s1.a, g).degree() > 0) continue;

    Poly r = (-s1.b * invmod(s1.a, g)) % g;
    Poly d = g;
    for (const auto& p : q) {
      Poly rk = p.at_v(r, d);
      if (!rk.is_zero()) d = gcd(d, rk);
      if (d.degree() <= 0) return none;
    }
    d = d.monic();
    Poly u = (Poly::x() + r * lambda) % d;
    return {d, u, r % d};
  }
  throw InternalError("bivariate solver: no generic projection found");
}

}  // namespace realknot
