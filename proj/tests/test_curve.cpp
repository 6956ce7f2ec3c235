#include <doctest.h>

#include <map>

#include "realknot/curve.hpp"
#include "support.hpp"

using namespace realknot;
using fixtures::F;
using fixtures::R;

namespace {

std::map<DoublePoint::Kind, int> kinds(const std::vector<DoublePoint>& pts) {
  std::map<DoublePoint::Kind, int> m;
  for (const auto& p : pts) ++m[p.kind];
  return m;
}

QuadraticForm diag4(long a, long b, long c, long d) { return QuadraticForm(Matrix::diag({R(a), R(b), R(c), R(d)})); }

}  // namespace

TEST_CASE("curve construction removes common factors") {
  auto ok = make_curve({F({1, 0, 0}), F({0, 1, 0}), F({0, 0, 1}), F({0, 0, 0})}, Ambient::P3);
  CHECK(ok.degree_drop == 0);
  CHECK(ok.curve.degree() == 2);

  auto r = make_curve({F({1, 0, 0}), F({0, 1, 0}), F({0, 1, 0}), F({0, 1, 0})}, Ambient::P3);
  CHECK(r.degree_drop == 1);
  CHECK(r.curve.degree() == 1);
  CHECK(r.removed_factor == F({1, 0}));
  CHECK_THROWS_AS(curve_from({F({1, 0, 0}), F({0, 1, 0}), F({0, 1, 0}), F({0, 1, 0})}, Ambient::P3), MathError);
  CHECK_THROWS_AS(make_curve({F({0, 0}), F({0, 0}), F({0, 0}), F({0, 0})}, Ambient::P3), MathError);
  CHECK_THROWS_AS(make_curve({F({1, 0}), F({0, 1})}, Ambient::P3), MathError);
}

TEST_CASE("torus knots") {
  RationalCurve c = torus_knot(2, 1);
  CHECK(c.on_sphere);
  CHECK(c.coords[0] == F({5, 0, 5}));
  CHECK(c.coords[1] == F({3, 0, -3}));
  CHECK(c.coords[2] == F({0, 6, 0}));
  CHECK(c.coords[3] == F({4, 0, -4}));
  CHECK(c.coords[4] == F({0, 8, 0}));
  for (auto [d, m] : {std::pair{4, 1}, {6, 1}, {6, 2}}) {
    RationalCurve k = torus_knot(d, m);
    CHECK(k.degree() == d);
    CHECK(k.on_sphere);
    // re-ingesting recomputes the sphere flag
    CHECK(curve_from(k.coords, Ambient::P4).on_sphere);
  }
  CHECK_THROWS_AS(torus_knot(6, 3), MathError);
  CHECK_THROWS_AS(torus_knot(2, 1, {R(1, 2), R(1, 2)}), MathError);
}

TEST_CASE("quadric membership") {
  RationalCurve c = fixtures::class4_curve();
  CHECK(on_quadric(c, segre_form()));
  CHECK_FALSE(on_quadric(c, diag4(-1, 1, 1, 1)));
  CHECK_THROWS_AS(on_quadric(c, sphere_form()), MathError);

  auto qs = quadric_through_curve(c);
  REQUIRE(qs.size() == 1);
  CHECK(classify_quadric(qs[0]) == QuadricType::Hyperboloid);
  for (const auto& q : qs) CHECK(on_quadric(c, q));

  RationalCurve conic = curve_from({F({1, 0, 0}), F({0, 1, 0}), F({0, 0, 1}), F({0, 0, 0})}, Ambient::P3);
  auto planar = quadric_through_curve(conic);
  CHECK(planar.size() >= 4);
  for (const auto& q : planar) CHECK(on_quadric(conic, q));

  RationalCurve k = torus_knot(6, 2);
  auto sq = quadric_through_curve(k);
  Matrix m(25, sq.size() + 1);
  for (std::size_t j = 0; j < sq.size(); ++j)
    for (std::size_t i = 0; i < 25; ++i) m(i, j) = sq[j].m(i / 5, i % 5);
  for (std::size_t i = 0; i < 25; ++i) m(i, sq.size()) = sphere_form().m(i / 5, i % 5);
  CHECK(rank(m) == sq.size());
}

TEST_CASE("quadric classification") {
  CHECK(classify_quadric(segre_form()) == QuadricType::Hyperboloid);
  CHECK(classify_quadric(diag4(-1, 1, 1, 1)) == QuadricType::Sphere);
  Matrix cone(4, 4);
  cone(0, 2) = cone(2, 0) = R(1, 2);
  cone(1, 1) = -1;
  CHECK(classify_quadric(QuadraticForm(cone)) == QuadricType::Cone);
  CHECK(classify_quadric(diag4(1, -1, 0, 0)) == QuadricType::PlanePair);
  CHECK(classify_quadric(diag4(1, 1, 1, 1)) == QuadricType::Other);
}

TEST_CASE("wall curves have exactly one double point") {
  auto walls = fixtures::wall_coords();
  for (std::size_t i = 0; i < 4; ++i) {
    auto pts = double_points(curve_from(walls[i], Ambient::P3));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].kind == DoublePoint::Kind::RealCrossing);
  }
  auto pts = double_points(curve_from(walls[4], Ambient::P3));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].kind == DoublePoint::Kind::Solitary);
  REQUIRE(pts[0].exact_params.has_value());
  REQUIRE(pts[0].exact_image.has_value());
  // [s:t] = [+-i : 1], i.e. [1 : -+i]
  for (const auto& st : *pts[0].exact_params) {
    CHECK(st[1] == QuadExt(R(1)));
    CHECK(st[0].a == 0);
    CHECK(abs(st[0].b) == 1);
    CHECK(st[0].radicand == -1);
  }
  const auto& img = *pts[0].exact_image;
  CHECK(img[0].is_zero());
  CHECK(img[1].is_zero());
  CHECK(img[2].is_zero());
  CHECK_FALSE(img[3].is_zero());
  CHECK(describe(pts[0]) == "solitary params [i:1], [-i:1] image [0:0:0:1]");
}

TEST_CASE("injective curves have no double points") {
  CHECK(double_points(curve_from({F({1, 0, 1}), F({1, 0, -1}), F({0, 2, 0}), F({0, 0, 0})}, Ambient::P3)).empty());
  CHECK(double_points(torus_knot(6, 2)).empty());
}

TEST_CASE("immersion test") {
  CHECK(is_immersion(curve_from({F({1, 0, 0}), F({0, 1, 0}), F({0, 0, 1}), F({0, 0, 0})}, Ambient::P3)).immersion);
  ImmersionResult cusp = is_immersion(curve_from({F({1, 0, 0, 0}), F({0, 1, 0, 0}), F({0, 0, 0, 1}), F({0, 0, 0, 0})}, Ambient::P3));
  CHECK_FALSE(cusp.immersion);
  REQUIRE(cusp.boxes.size() == 1);
  // the cusp of [s^3 : s^2 t : t^3] sits at s = 0
  CHECK(cusp.boxes[0].kind == RootBox::Kind::Real);
  CHECK(cusp.boxes[0].approx_real() == doctest::Approx(0.0));
  CHECK(is_immersion(torus_knot(6, 2)).immersion);
}

TEST_CASE("nonsingularity certificates") {
  NonsingularCertificate t = is_nonsingular_knot(torus_knot(6, 2));
  CHECK(t.nonsingular);
  CHECK_FALSE(t.resultants.empty());
  for (const auto& w : fixtures::wall_coords()) {
    NonsingularCertificate c = is_nonsingular_knot(curve_from(w, Ambient::P3));
    CHECK_FALSE(c.nonsingular);
    CHECK(c.double_points.size() == 1);
  }
  CHECK(is_nonsingular_knot(curve_from({F({1, 0}), F({0, 1}), F({1, 1}), F({1, 2})}, Ambient::P3)).nonsingular);
  // torus_knot(6, 1) is embedded on the real points but has a conjugate pair of cusps
  NonsingularCertificate c61 = is_nonsingular_knot(torus_knot(6, 1));
  CHECK_FALSE(c61.nonsingular);
  CHECK(c61.double_points.empty());
  CHECK(c61.cusps.size() == 2);
}

TEST_CASE("double points survive reparametrization and projective transforms") {
  fixtures::Rng rng(47);
  Matrix m{{2, 1}, {1, 1}};
  Matrix t = Matrix::identity(4);
  t(0, 3) = 1;
  t(2, 1) = R(1, 2);
  for (const auto& w : fixtures::wall_coords()) {
    RationalCurve c = curve_from(w, Ambient::P3);
    auto base = kinds(double_points(c));
    CHECK(kinds(double_points(reparametrize(c, m))) == base);
    CHECK(kinds(double_points(apply_transform(c, t))) == base);
    CHECK(is_immersion(reparametrize(c, m)).immersion == is_immersion(c).immersion);
  }
}

TEST_CASE("bi-degree of quartics on the Segre quadric") {
  BiDegreeSplit b = bidegree_split(fixtures::class4_curve());
  CHECK(b.complex_bidegree == std::pair{1, 3});
  CHECK_FALSE(b.singular_flag);
  CHECK(b.complex_bidegree.first + b.complex_bidegree.second == 4);
  CHECK(std::abs(b.real_bidegree.first) == 1);

  RationalCurve diag = curve_from({F({1, 0, 0}), F({0, 1, 0}), F({0, 1, 0}), F({0, 0, 1})}, Ambient::P3);
  CHECK(bidegree_split(diag).complex_bidegree == std::pair{1, 1});

  CHECK_THROWS_AS(bidegree_split(curve_from(fixtures::wall_coords()[0], Ambient::P3)), MathError);
}

TEST_CASE("random Segre quartics split as (1,3) and reconstruct") {
  fixtures::Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    RationalCurve c = fixtures::random_segre_quartic(rng);
    BiDegreeSplit b = bidegree_split(c);
    CHECK(b.complex_bidegree == std::pair{1, 3});
    CHECK_FALSE(b.singular_flag);
    std::vector<Form> rebuilt{b.q0 * b.q2, b.q0 * b.q3, b.q1 * b.q2, b.q1 * b.q3};
    CHECK(rebuilt == c.coords);
  }
}

TEST_CASE("signed real degree of a map of the projective line") {
  CHECK(real_degree(F({1, 0}), F({0, 1})) == 1);
  CHECK(std::abs(real_degree(F({1, 0, 0, 1}), F({1, 0, 0, -1}))) == 1);
  CHECK(real_degree(F({1, 0, 1}), F({0, 1, 0})) == 0);
  CHECK(std::abs(real_degree(F({1, 0, -3, 0}), F({0, 3, 0, -1}))) == 3);
}

TEST_CASE("Jacobian rank of the curve space") {
  CHECK(default_samples().size() == 13);
  CHECK(jacobian_rank(torus_knot(6, 1)) == 13);
  CHECK(jacobian_rank(torus_knot(6, 2)) == 13);
  // equal coordinates only duplicate columns; the rank stays full
  RationalCurve k = torus_knot(6, 2);
  std::vector<Form> dup = k.coords;
  dup[2] = dup[1];
  CHECK(jacobian_rank(dup, default_samples(), Chart{}) == 13);
  // every coordinate vanishing at the sample t = 1 zeroes that row
  std::vector<Form> pinched;
  for (const auto& f : torus_knot(4, 1).coords) pinched.push_back(f * F({1, -2, 1}));
  CHECK(jacobian_rank(pinched, default_samples(), Chart{}) < 13);
}

TEST_CASE("transforms and reparametrizations") {
  RationalCurve conic = curve_from({F({1, 0, 0}), F({0, 1, 0}), F({0, 0, 1}), F({0, 0, 0})}, Ambient::P3);
  CHECK(apply_transform(conic, Matrix::identity(4)).coords == conic.coords);
  Matrix swap{{0, 1}, {1, 0}};
  RationalCurve sw = reparametrize(conic, swap);
  CHECK(sw.coords[0] == F({0, 0, 1}));
  CHECK(sw.coords[2] == F({1, 0, 0}));
  Matrix rot = Matrix::identity(5);
  rot(1, 1) = R(3, 5);
  rot(1, 2) = R(-4, 5);
  rot(2, 1) = R(4, 5);
  rot(2, 2) = R(3, 5);
  CHECK(apply_transform(torus_knot(4, 1), rot).on_sphere);
  CHECK_THROWS_AS(apply_transform(conic, Matrix(4, 4)), MathError);
}

TEST_CASE("coefficient matrix of a quartic") {
  Matrix a = coefficient_matrix(torus_knot(4, 1));
  CHECK(sgn(det(a)) != 0);
  CHECK(sgn(det(coefficient_matrix(reparametrize(torus_knot(4, 1), Matrix{{1, 1}, {0, 1}})))) != 0);
  RationalCurve flat = curve_from({F({1, 0, 0, 0, 1}), F({0, 1, 0, 0, 0}), F({0, 0, 1, 0, 0}), F({0, 0, 0, 1, 0}), F({0, 0, 0, 0, 0})}, Ambient::P4);
  try {
    coefficient_matrix(flat);
    FAIL("expected NotInvertible");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::NotInvertible);
    CHECK(std::string(e.what()).find("x4") != std::string::npos);
  }
}

TEST_CASE("sphere curves have even degree") {
  for (auto [d, m] : {std::pair{2, 1}, {4, 1}, {6, 1}, {6, 2}}) CHECK(torus_knot(d, m).degree() % 2 == 0);
}
