#include <doctest.h>

#include "realknot/sphere.hpp"
#include "support.hpp"

using namespace realknot;
using fixtures::F;
using fixtures::R;

namespace {

RationalCurve unit_circle_p3() { return curve_from({F({1, 0, 1}), F({1, 0, -1}), F({0, 2, 0}), F({0, 0, 0})}, Ambient::P3); }
RationalCurve ellipse_p3() { return curve_from({F({1, 0, 1}), F({2, 0, -2}), F({0, 2, 0}), F({0, 0, 0})}, Ambient::P3); }
Vec V3(long a, long b, long c) { return {R(a), R(b), R(c)}; }

}  // namespace

TEST_CASE("sphere points and frames") {
  CHECK(sgn(sphere_form().eval(north_pole())) == 0);
  for (int i = 0; i < 10; ++i) {
    Vec c = sphere_center(i);
    ProjectionFrame f = make_frame(c);
    CHECK(in_po41(f.transform) == Component::IdentitySide);
    CHECK(f.transform * f.inverse == Matrix::identity(5));
    Vec image = f.transform * c;
    CHECK(sgn(image[0]) != 0);
    CHECK(image[0] == image[4]);
    for (std::size_t k = 1; k < 4; ++k) CHECK(sgn(image[k]) == 0);
  }
  CHECK(sphere_center(0) == north_pole());
  CHECK_THROWS_AS(make_frame({R(1), R(1), R(1), R(0), R(0)}), MathError);
  CHECK(in_po41(mirror_transform()) == Component::ReflectionSide);
}

TEST_CASE("projection of a circle off the center is a circle") {
  RationalCurve c = fixtures::slice_circle(1);
  Projection p = project(c);
  CHECK(p.center_multiplicity == 0);
  CHECK(p.curve.degree() == 2);
  CHECK(is_circle_image(p.curve));
  CHECK(p.trace.all_on_conic());
  CHECK(p.trace.pair_count() == 1);
}

TEST_CASE("projection from a point of the curve drops the degree by one") {
  RationalCurve k = torus_knot(4, 1);
  Vec on_curve;
  for (int i = 0; i < 5; ++i) on_curve.push_back(k.coords[static_cast<std::size_t>(i)][0]);  // the point at [1:0]
  Projection p = project(k, make_frame(on_curve));
  CHECK(p.center_multiplicity == 1);
  CHECK(p.curve.degree() == 3);
  CHECK(p.trace.real_count() == 1);
  CHECK(p.trace.pair_count() == 1);
  // the real point is the tangent direction at the center; only the pair meets the empty conic
  CHECK(p.trace.on_conic == 2);
}

TEST_CASE("projection from a double point drops the degree by two") {
  // y0 vanishes at s = +-i t (trace on the conic) and s = +-i sqrt2 t (off the conic)
  Form y0 = F({1, 0, 1}) * F({1, 0, 2});
  RationalCurve y = curve_from({y0, F({1, 0, -1}) * F({1, 0, 3}), F({0, 2, 0}) * F({1, 0, 3}), F({0, 1, 0}) * F({1, 0, 1})}, Ambient::P3);
  InfinityTrace tr = infinity_trace(y);
  CHECK(tr.degree == 4);
  CHECK(tr.on_conic == 2);
  RationalCurve up = lift(y, LiftMode::DoublePoint);
  CHECK(up.degree() == 6);
  CHECK_THROWS_AS(lift(y, LiftMode::Preserve), MathError);
  Projection p = project(up);
  CHECK(p.center_multiplicity == 2);
  CHECK(p.curve.degree() == 4);
  CHECK(p.trace.degree == 4);
  CHECK(p.trace.on_conic == 2);
}

TEST_CASE("lift of a plane circle lies on the sphere with the same degree") {
  RationalCurve up = lift(unit_circle_p3());
  CHECK(up.on_sphere);
  CHECK(up.degree() == 2);
  CHECK_THROWS_AS(lift(ellipse_p3(), LiftMode::Preserve), MathError);
  CHECK(lift(ellipse_p3()).degree() == 4);
}

TEST_CASE("round trips") {
  for (auto [d, m] : {std::pair{2, 1}, {4, 1}, {6, 2}}) {
    RationalCurve k = torus_knot(d, m);
    for (int i = 0; i < 3; ++i) {
      ProjectionFrame f = make_frame(sphere_center(i));
      Projection p = project(k, f);
      if (p.center_multiplicity != 0) continue;
      CHECK(proportional(lift(p.curve, LiftMode::Preserve, f), k));
    }
    CHECK(round_trip(k).ok);
  }
  CHECK(round_trip(ellipse_p3()).ok);
  CHECK_FALSE(round_trip(ellipse_p3()).trace_on_conic);
  CHECK(round_trip(fixtures::hopf_circle(1)).ok);
}

TEST_CASE("plane sections") {
  RationalCurve conic = curve_from({F({1, 0, 0}), F({0, 1, 0}), F({0, 0, 1}), F({0, 0, 0})}, Ambient::P3);
  CHECK_THROWS_AS(intersect_with_plane(conic, {R(0), R(0), R(0), R(1)}), MathError);
  PlaneIntersection c4 = intersect_with_plane(fixtures::class4_curve(), {R(1), R(0), R(0), R(0)});
  CHECK(c4.real_count == 2);
  CHECK(c4.pair_count == 1);
  PlaneIntersection far = intersect_with_plane(unit_circle_p3(), {R(-5), R(1), R(0), R(0)});
  CHECK(far.real_count == 0);
  CHECK(far.pair_count == 1);
}

TEST_CASE("circle test") {
  CHECK(is_circle_image(unit_circle_p3()));
  CHECK_FALSE(is_circle_image(ellipse_p3()));
  CHECK_THROWS_AS(is_circle_image(fixtures::class4_curve()), MathError);
  fixtures::Rng rng(59);
  for (int i = 0; i < 10; ++i) {
    CHECK(is_circle_image(fixtures::random_circle(rng)));
    CHECK_FALSE(is_circle_image(fixtures::random_ellipse(rng)));
  }
}

TEST_CASE("circle through three points passes through them") {
  RationalCurve c = circle_through(V3(0, 0, 0), V3(2, 0, 0), V3(0, 2, 0));
  CHECK(c.degree() == 2);
  CHECK(is_circle_image(c));
  CHECK(unique_common_point(c, circle_through(V3(0, 0, 0), V3(0, 0, 2), V3(1, 3, 1))) == Vec{R(1), R(0), R(0), R(0)});
  CHECK_THROWS_AS(circle_through(V3(0, 0, 0), V3(1, 1, 1), V3(2, 2, 2)), MathError);
}

TEST_CASE("join of two circles meeting once") {
  RationalCurve a = circle_through(V3(0, 0, 0), V3(2, 0, 0), V3(0, 2, 0));
  RationalCurve b = circle_through(V3(0, 0, 0), V3(0, 0, 2), V3(1, 3, 1));
  JoinResult j = join_curves(a, b, {R(1), R(0), R(0), R(0)});
  CHECK(j.curve.degree() == 4);
  CHECK(is_nonsingular_knot(j.curve).nonsingular);
  CHECK(j.halvings <= 20);
  CHECK(infinity_trace(j.curve).all_on_conic());
  RationalCurve up = lift(j.curve, LiftMode::Preserve);
  CHECK(up.degree() == 4);

  // a third circle through a point of the quartic gives a degree-6 knot
  auto pt = j.curve.eval(GaussRat(R(1)), GaussRat(R(1)));
  Vec p{pt[1].re / pt[0].re, pt[2].re / pt[0].re, pt[3].re / pt[0].re};
  RationalCurve c = circle_through(p, V3(3, -2, 1), V3(-1, 4, 2));
  Vec meet = unique_common_point(j.curve, c);
  JoinResult j6 = join_curves(j.curve, c, meet);
  CHECK(j6.curve.degree() == 6);
  CHECK(is_nonsingular_knot(j6.curve).nonsingular);
  CHECK(lift(j6.curve, LiftMode::Preserve).degree() == 6);
}

TEST_CASE("join rejects tangent and twice-meeting inputs") {
  // both circles touch the x axis at the origin and meet nowhere else
  RationalCurve a = circle_through(V3(0, 0, 0), V3(0, 2, 0), V3(1, 1, 0));
  RationalCurve b = circle_through(V3(0, 0, 0), V3(0, 0, 2), V3(1, 0, 1));
  try {
    join_curves(a, b, {R(1), R(0), R(0), R(0)});
    FAIL("expected TangentsDependent");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::TangentsDependent);
  }
  fixtures::Rng rng(71);
  auto [c1, c2] = fixtures::circles_meeting_twice(rng);
  try {
    unique_common_point(c1, c2);
    FAIL("expected MultipleIntersections");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::MultipleIntersections);
  }
}

TEST_CASE("join on the sphere") {
  RationalCurve a = lift(circle_through(V3(0, 0, 0), V3(2, 0, 0), V3(0, 2, 0)));
  RationalCurve b = lift(circle_through(V3(0, 0, 0), V3(0, 0, 2), V3(1, 3, 1)));
  JoinResult j = join_on_sphere(a, b);
  CHECK(j.curve.on_sphere);
  CHECK(j.curve.degree() == 4);
  CHECK(is_nonsingular_knot(j.curve).nonsingular);
  fixtures::Rng rng(61);
  auto twice = fixtures::circles_meeting_twice(rng);
  CHECK_THROWS_AS(join_on_sphere(lift(twice.first), lift(twice.second)), MathError);
}

TEST_CASE("two circles meeting twice lie on a sphere") {
  fixtures::Rng rng(67);
  for (int i = 0; i < 5; ++i) {
    auto [c1, c2] = fixtures::circles_meeting_twice(rng);
    std::vector<ProjPoint> pts;
    for (const auto* c : {&c1, &c2})
      for (int k = -3; k <= 3; ++k) pts.emplace_back(c->eval(GaussRat(R(k)), GaussRat(R(1))));
    auto s = sphere_through(pts);
    REQUIRE(s.has_value());
    CHECK(classify_quadric(*s) == QuadricType::Sphere);
    CHECK(on_quadric(c1, *s));
    CHECK(on_quadric(c2, *s));
  }
}
