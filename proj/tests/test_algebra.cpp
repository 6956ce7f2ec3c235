#include <doctest.h>

#include "realknot/bivariate.hpp"
#include "realknot/linalg.hpp"
#include "realknot/poly.hpp"
#include "support.hpp"

using namespace realknot;
using fixtures::R;

namespace {
Poly P(std::initializer_list<long> ascending) {
  std::vector<Rat> c;
  for (long x : ascending) c.push_back(Rat(x));
  return Poly(c);
}
}  // namespace

TEST_CASE("parse_rat accepts fractions and decimals") {
  CHECK(parse_rat("3/6") == R(1, 2));
  CHECK(parse_rat("-0.25") == R(-1, 4));
  CHECK(parse_rat("+7") == R(7));
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
}

TEST_CASE("quadratic extension arithmetic stays in one field") {
  QuadExt r2 = make_quad(R(0), R(1), R(2));
  CHECK(r2 * r2 == QuadExt(R(2)));
  CHECK((QuadExt(R(1)) + r2).sign() == 1);
  CHECK((QuadExt(R(1)) - r2).sign() == -1);
  // sqrt(8/9) normalizes to 2/3 sqrt(2)
  QuadExt s = make_quad(R(0), R(1), R(8, 9));
  CHECK(s.radicand == R(2));
  CHECK(s.b == R(2, 3));
  CHECK(to_string(make_quad(R(0), R(1), R(-1))) == "i");
  CHECK_THROWS_AS(r2 + make_quad(R(0), R(1), R(3)), InternalError);
}

TEST_CASE("polynomial division, gcd and resultant") {
  Poly a = P({-1, 0, 1}), b = P({-1, 1});
  CHECK((a / b) == P({1, 1}));
  CHECK((a % b).is_zero());
  CHECK(gcd(P({0, 1, 1}), P({1, 2, 1})) == P({1, 1}));
  CHECK(resultant(P({1, 0, 1}), P({-1, 0, 1})) == R(4));
  CHECK(sgn(resultant(P({1, 1}), P({2, 2}))) == 0);
}

TEST_CASE("Sturm counts agree with sign changes on a grid of 10^4 cells") {
  fixtures::Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Poly p(std::vector<Rat>{Rat(rng.integer(-20, 20)), Rat(rng.integer(-20, 20)), Rat(rng.integer(-20, 20)), Rat(1)});
    Poly q = squarefree(p);
    auto sturm = sturm_sequence(q);
    // roots of a monic cubic with coefficients <= 20 lie in (-21, 21)
    int total = 0;
    for (int i = 0; i < 10000; ++i) {
      Rat a = R(-21) + R(42 * i, 10000), b = R(-21) + R(42 * (i + 1), 10000);
      int n = count_roots(sturm, a, b);
      total += n;
      int sa = q.sign_at(a), sb = q.sign_at(b);
      if (sa != 0 && sb != 0) CHECK(n % 2 == (sa != sb ? 1 : 0));
    }
    CHECK(total == count_real_roots(q));
  }
}

TEST_CASE("real root isolation brackets sqrt 2") {
  auto roots = isolate_real_roots(P({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].hi <= 0);
  CHECK(roots[1].lo >= 0);
  RealRoot r = roots[1];
  refine(P({-2, 0, 1}), r, R(1, 1000000));
  CHECK(std::abs(approx(r) - std::sqrt(2.0)) < 1e-6);
  CHECK(sign_at_root(P({-2, 0, 1}), r, P({-1, 1})) == 1);
}

TEST_CASE("complex roots are isolated once per conjugate pair") {
  // (x^2 + 1)(x^2 + 2x + 5)(x - 3)
  Poly p = P({1, 0, 1}) * P({5, 2, 1}) * P({-3, 1});
  auto boxes = isolate_complex_roots(p, R(1, 1024));
  REQUIRE(boxes.size() == 2);
  for (const auto& b : boxes) CHECK(count_roots_in_rect(p, b) == 1);
  auto quads = quadratic_factors(p);
  CHECK(quads.size() == 2);
  for (const auto& q : quads) CHECK((p % q).is_zero());
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_between(R(3, 10), R(2, 5)) == R(1, 3));
  CHECK(simplest_between(R(-1), R(1)) == R(0));
  CHECK(simplest_between(R(-7, 5), R(-6, 5)) == R(-4, 3));
}

TEST_CASE("linear algebra: rank, nullspace, inverse, inertia") {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m * ns[0]));
  Matrix a{{2, 1}, {1, 1}};
  CHECK(a * inverse(a) == Matrix::identity(2));
  Inertia in = inertia(Matrix{{0, 1}, {1, 0}});
  CHECK(in.pos == 1);
  CHECK(in.neg == 1);
}

TEST_CASE("bivariate system with four solutions") {
  // u^2 + v^2 = 5, u v = 2: (1,2), (2,1), (-1,-2), (-2,-1)
  BiPoly u = BiPoly::u(), v = BiPoly::v();
  BiPoly f = u * u + v * v - BiPoly(Poly(5));
  BiPoly g = u * v - BiPoly(Poly(2));
  auto sol = solve_bivariate({f, g});
  CHECK(sol.count() == 4);
  for (const auto& r : isolate_real_roots(sol.D)) {
    RealRoot rr = r;
    refine(sol.D, rr, R(1, 1 << 30));
    double uu = sol.U.eval(rr.mid()).get_d(), vv = sol.V.eval(rr.mid()).get_d();
    CHECK(std::abs(uu * vv - 2) < 1e-6);
  }
}

TEST_CASE("a common curve component is reported") {
  BiPoly u = BiPoly::u(), v = BiPoly::v();
  BiPoly f = (u - v) * (u + BiPoly(Poly(1)));
  BiPoly g = (u - v) * (v - BiPoly(Poly(2)));
  CHECK_THROWS_AS(solve_bivariate({f, g}), MathError);
}
