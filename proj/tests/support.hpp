// Fixtures shared by the unit tests and the acceptance binary.
#pragma once

#include <array>
#include <cmath>
#include <initializer_list>
#include <random>
#include <vector>

#include "realknot/sphere.hpp"
#include "realknot/writhe.hpp"

namespace fixtures {

using namespace realknot;

inline Form F(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.push_back(Rat(x));
  return Form(v);
}

inline Rat R(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

class Rng {
 public:
  explicit Rng(unsigned long seed) : g_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  Rat rat(long lo, long hi, long den) { return R(integer(lo * den, hi * den), den); }
  Vec point3(long lo = -5, long hi = 5) { return {rat(lo, hi, 3), rat(lo, hi, 3), rat(lo, hi, 3)}; }
  Form form(int d, long bound = 5) {
    std::vector<Rat> c;
    for (int j = 0; j <= d; ++j) c.push_back(Rat(integer(-bound, bound)));
    if (sgn(c.front()) == 0) c.front() = 1;
    return Form(c);
  }

 private:
  std::mt19937_64 g_;
};

/// Rational rotation (I - W)^{-1} (I + W) for the skew matrix of w.
inline Matrix cayley_rotation(const Vec& w) {
  Matrix W{{0, -w[2], w[1]}, {w[2], 0, -w[0]}, {-w[1], w[0], 0}};
  Matrix I = Matrix::identity(3);
  return inverse(I - W) * (I + W);
}

/// Circle through three random non-collinear points.
inline RationalCurve random_circle(Rng& rng) {
  for (;;) {
    try {
      return circle_through(rng.point3(), rng.point3(), rng.point3());
    } catch (const MathError&) {
    }
  }
}

/// Rotated ellipse c + R (a cos, b sin, 0) with a != b, so not a circle.
inline RationalCurve random_ellipse(Rng& rng) {
  Rat a = rng.rat(1, 4, 2), b;
  do b = rng.rat(1, 4, 2);
  while (b == a);
  Matrix rot = cayley_rotation(rng.point3(-2, 2));
  Vec c = rng.point3();
  Form q = F({1, 0, 1});
  Form x = F({1, 0, -1}) * a, y = F({0, 2, 0}) * b;
  std::vector<Form> coords{q};
  for (std::size_t i = 0; i < 3; ++i) coords.push_back(q * c[i] + x * rot(i, 0) + y * rot(i, 1));
  return curve_from(coords, Ambient::P3);
}

/// Two distinct circles through the same two points.
inline std::pair<RationalCurve, RationalCurve> circles_meeting_twice(Rng& rng) {
  for (;;) {
    Vec p = rng.point3(), q = rng.point3(), a = rng.point3(), b = rng.point3();
    try {
      auto c1 = circle_through(p, q, a), c2 = circle_through(p, q, b);
      if (proportional(c1, c2)) continue;
      return {c1, c2};
    } catch (const MathError&) {
    }
  }
}

/// [q0 q2 : q0 q3 : q1 q2 : q1 q3] for random linear q0, q1 and cubic q2, q3.
inline RationalCurve random_segre_quartic(Rng& rng) {
  for (;;) {
    Form q0 = rng.form(1), q1 = rng.form(1), q2 = rng.form(3), q3 = rng.form(3);
    try {
      return curve_from({q0 * q2, q0 * q3, q1 * q2, q1 * q3}, Ambient::P3);
    } catch (const MathError&) {
    }
  }
}

/// Circles on the sphere: great circles of the (x1,x2) and (x3,x4) planes.
inline RationalCurve hopf_circle(int which) {
  Form q = F({1, 0, 1}), c = F({1, 0, -1}), s = F({0, 2, 0}), z = F({0, 0, 0});
  if (which == 0) return curve_from({q, c, s, z, z}, Ambient::P4);
  return curve_from({q, z, z, c, s}, Ambient::P4);
}

/// Circle of radius 4/5 in the slice x3 = h x0, h = +-3/5.
inline RationalCurve slice_circle(int sign) {
  Form q = F({5, 0, 5});
  return curve_from({q, F({4, 0, -4}), F({0, 8, 0}), q * R(3 * sign, 5), F({0, 0, 0})}, Ambient::P4);
}

inline std::vector<std::vector<Form>> wall_coords() {
  return {{F({0, 1, 0, 0, 0}), F({0, 0, 1, 0, 0}), F({0, 0, 0, 1, 0}), F({1, 0, 0, 0, 1})},
          {F({0, 1, 0, 0, 0}), F({0, 0, 1, 0, 0}), F({0, 0, 0, 1, 0}), F({1, 0, 0, 0, -1})},
          {F({0, 1, 0, 0, 0}), F({0, 0, 1, 0, 0}), F({0, 0, 0, 1, 0}), F({-1, 0, 0, 0, 1})},
          {F({0, 1, 0, 0, 0}), F({0, 0, 1, 0, 0}), F({0, 0, 0, 1, 0}), F({-1, 0, 0, 0, -1})},
          {F({1, 0, 1, 0, 0}), F({0, 1, 0, 1, 0}), F({0, 0, 1, 0, 1}), F({1, 0, 0, 0, 0})}};
}

inline RationalCurve class4_curve() {
  return curve_from({F({1, 0, 0, 1, 0}), F({1, 0, 0, -1, 0}), F({0, 1, 0, 0, 1}), F({0, 1, 0, 0, -1})}, Ambient::P3);
}

/// Numeric oracle for the real crossings of a diagram: the curve is sampled as a
/// closed polyline in the chart x0 = 1, projected with the diagram's rows, and
/// every segment pair that crosses contributes sign((A - B) . (tA x tB)).
struct PolylineCrossings {
  int count = 0;
  int signed_sum = 0;
};

inline PolylineCrossings polyline_crossings(const Diagram& d, int samples = 3000) {
  using P3 = std::array<double, 3>;
  const auto& k = d.source;
  std::vector<P3> pts;
  std::vector<std::array<double, 2>> flat;
  const double pi = std::acos(-1.0);
  for (int i = 0; i < samples; ++i) {
    double th = pi * i / samples;
    double s = std::cos(th), t = std::sin(th);
    std::array<double, 4> x{};
    for (std::size_t j = 0; j < 4; ++j) {
      const Form& f = k.coords[j];
      double acc = 0;
      for (int m = 0; m <= f.degree(); ++m) acc += f[m].get_d() * std::pow(s, f.degree() - m) * std::pow(t, m);
      x[j] = acc;
    }
    pts.push_back({x[1] / x[0], x[2] / x[0], x[3] / x[0]});
    std::array<double, 2> uv{};
    for (std::size_t r = 1; r < 3; ++r) {
      double acc = 0;
      for (std::size_t j = 0; j < 4; ++j) acc += d.projection(r, j).get_d() * x[j];
      uv[r - 1] = acc / x[0];
    }
    flat.push_back(uv);
  }
  auto cross2 = [](const std::array<double, 2>& a, const std::array<double, 2>& b, const std::array<double, 2>& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  };
  PolylineCrossings out;
  int n = samples;
  for (int i = 0; i < n; ++i) {
    int i1 = (i + 1) % n;
    for (int j = i + 2; j < n; ++j) {
      int j1 = (j + 1) % n;
      if (j1 == i) continue;
      double d1 = cross2(flat[i], flat[i1], flat[j]), d2 = cross2(flat[i], flat[i1], flat[j1]);
      double d3 = cross2(flat[j], flat[j1], flat[i]), d4 = cross2(flat[j], flat[j1], flat[i1]);
      if ((d1 > 0) == (d2 > 0) || (d3 > 0) == (d4 > 0)) continue;
      double u = d3 / (d3 - d4), v = d1 / (d1 - d2);
      P3 a{}, b{}, ta{}, tb{};
      for (std::size_t c = 0; c < 3; ++c) {
        a[c] = pts[i][c] + u * (pts[i1][c] - pts[i][c]);
        b[c] = pts[j][c] + v * (pts[j1][c] - pts[j][c]);
        ta[c] = pts[i1][c] - pts[i][c];
        tb[c] = pts[j1][c] - pts[j][c];
      }
      P3 n3{ta[1] * tb[2] - ta[2] * tb[1], ta[2] * tb[0] - ta[0] * tb[2], ta[0] * tb[1] - ta[1] * tb[0]};
      double dot = (a[0] - b[0]) * n3[0] + (a[1] - b[1]) * n3[1] + (a[2] - b[2]) * n3[2];
      ++out.count;
      out.signed_sum += dot > 0 ? 1 : -1;
    }
  }
  return out;
}

}  // namespace fixtures
