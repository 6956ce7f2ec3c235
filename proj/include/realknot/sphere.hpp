#pragma once

#include <complex>
#include <optional>
#include <stop_token>
#include <vector>

#include "realknot/curve.hpp"

namespace realknot {

/// North pole [1:0:0:0:1], the center of the standard stereographic chart.
Vec north_pole();
/// Inverse stereographic image of u in Q^3: [1+|u|^2 : 2u : |u|^2-1].
Vec sphere_point(const Vec& u);
/// Deterministic lattice of rational sphere points; index 0 is the north pole.
Vec sphere_center(int index);

/// Identity-side PO(4,1) element sending a center on the sphere to the north pole.
struct ProjectionFrame {
  Vec center;
  Matrix transform;
  Matrix inverse;
};
ProjectionFrame make_frame(const Vec& center);
ProjectionFrame standard_frame();

/// Reflection-side sphere transform x3 -> -x3; mirrors the stereographic image.
Matrix mirror_transform();

struct TracePoint {
  RootBox param;
  std::vector<std::complex<double>> point;
  bool on_conic = false;
};

/// Intersection of an RP^3 curve with the plane x0 = 0, tested against x1^2+x2^2+x3^2.
struct InfinityTrace {
  Vec plane{Rat(1), Rat(0), Rat(0), Rat(0)};
  std::vector<TracePoint> points;
  int degree = 0;
  int on_conic = 0;  // counted with multiplicity
  std::optional<QuadraticForm> conic_witness;
  bool all_on_conic() const { return on_conic == degree; }
  int real_count() const;
  int pair_count() const;
};
InfinityTrace infinity_trace(const RationalCurve& c);

struct Projection {
  RationalCurve curve;
  InfinityTrace trace;
  int center_multiplicity = 0;
};
/// Stereographic projection [x0 - x4 : x1 : x2 : x3] after moving the frame center to the pole.
Projection project(const RationalCurve& c, const ProjectionFrame& frame = standard_frame());

/// Expected lift degree: e, e + 1 or e + 2 for an input of degree e; Auto accepts any.
enum class LiftMode { Auto, Preserve, Point, DoublePoint };
const char* to_string(LiftMode m);
RationalCurve lift(const RationalCurve& c, LiftMode mode = LiftMode::Auto, const ProjectionFrame& frame = standard_frame());

/// a = lambda * b coordinatewise for some nonzero rational lambda.
bool proportional(const RationalCurve& a, const RationalCurve& b);

/// Sphere curves: lift(project(c)) ~ c from the first lattice center off the curve.
/// RP^3 curves: project(lift(c)) ~ c in the standard frame.
struct RoundTrip {
  bool ok = false;
  int center_index = 0;
  bool trace_on_conic = false;  // of the projected (sphere input) or the input (RP^3) curve
};
RoundTrip round_trip(const RationalCurve& c);

struct PlaneIntersection {
  std::vector<RootBox> roots;
  int real_count = 0;  // with multiplicity
  int pair_count = 0;
};
PlaneIntersection intersect_with_plane(const RationalCurve& c, const Vec& plane);

bool is_circle_image(const RationalCurve& c);

/// Circle in the affine chart x0 = 1 through three affine points, degree 2.
RationalCurve circle_through(const Vec& a, const Vec& b, const Vec& c);

/// The unique real common point of two curves. Throws MultipleIntersections otherwise.
Vec unique_common_point(const RationalCurve& a, const RationalCurve& b, std::stop_token stop = {});

struct JoinResult {
  RationalCurve curve;
  Rat epsilon;
  int halvings = 0;
};
/// [p0 q0 : p_i q0 + q_i p0] after translating the meeting point to the origin;
/// c2 is scaled by epsilon, halved until the result is a nonsingular knot.
JoinResult join_curves(const RationalCurve& c1, const RationalCurve& c2, const Vec& meeting,
                       const Rat& epsilon = Rat(1, 2), int max_halvings = 20, std::stop_token stop = {});
JoinResult join_on_sphere(const RationalCurve& c1, const RationalCurve& c2, const Rat& epsilon = Rat(1, 2),
                          int max_halvings = 20, std::stop_token stop = {});

/// A sphere-type quadric of RP^3 through the points (restriction to x0 = 0 a multiple of the identity).
std::optional<QuadraticForm> sphere_through(const std::vector<ProjPoint>& points);

}  // namespace realknot
