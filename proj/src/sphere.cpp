#include "realknot/sphere.hpp"

#include <random>
#include <sstream>

#include "realknot/error.hpp"

namespace realknot {

namespace {

Rat lorentz(const Vec& a, const Vec& b) {
  Rat r = -a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Rat pow2(int e) {
  Rat r(1);
  if (e >= 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

std::vector<std::complex<double>> eval_point(const RationalCurve& c, std::complex<double> s, std::complex<double> t) {
  std::vector<std::complex<double>> out;
  int d = c.degree();
  for (const auto& f : c.coords) {
    std::complex<double> acc = 0;
    for (int j = 0; j <= d; ++j) acc += f[j].get_d() * std::pow(s, d - j) * std::pow(t, j);
    out.push_back(acc);
  }
  return out;
}

Form norm_squared(const std::vector<Form>& y) { return y[1] * y[1] + y[2] * y[2] + y[3] * y[3]; }

}  // namespace

Vec north_pole() { return {Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}; }

Vec sphere_point(const Vec& u) {
  if (u.size() != 3) throw MathError(ErrorKind::DimensionMismatch, "sphere_point expects a point of Q^3");
  Rat n = dot(u, u);
  return primitive(Vec{1 + n, 2 * u[0], 2 * u[1], 2 * u[2], n - 1});
}

Vec sphere_center(int index) {
  if (index == 0) return north_pole();
  std::mt19937_64 rng(0x5eedc0deULL + static_cast<unsigned long long>(index));
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  Vec u;
  for (int i = 0; i < 3; ++i) {
    Rat x(num(rng), den(rng));
    x.canonicalize();
    u.push_back(x);
  }
  return sphere_point(u);
}

ProjectionFrame make_frame(const Vec& center) {
  if (center.size() != 5) throw MathError(ErrorKind::DimensionMismatch, "frame center must be a point of RP^4");
  if (is_zero(center)) throw MathError(ErrorKind::AllZero, "zero frame center");
  if (sgn(lorentz(center, center)) != 0) throw MathError(ErrorKind::CenterNotOnSphere, "frame center is not on the sphere");
  Vec p = center;
  if (sgn(p[0]) < 0) p = scaled(p, Rat(-1));
  Vec n = north_pole();
  ProjectionFrame f;
  f.center = primitive(center);
  if (sgn(p[1]) == 0 && sgn(p[2]) == 0 && sgn(p[3]) == 0 && p[4] == p[0]) {
    f.transform = f.inverse = Matrix::identity(5);
    return f;
  }
  // Lorentz reflection in v = p - n swaps the null vectors p and n; the sign flip
  // of x1 brings the composite back to the identity side.
  p = scaled(p, 1 / p[0]);
  Vec v = add(p, scaled(n, Rat(-1)));
  Rat vv = lorentz(v, v);
  Matrix h = Matrix::identity(5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      Rat jv = j == 0 ? Rat(-v[j]) : v[j];
      h(i, j) -= 2 * v[i] * jv / vv;
    }
  f.transform = Matrix::diag({Rat(1), Rat(-1), Rat(1), Rat(1), Rat(1)}) * h;
  f.inverse = inverse(f.transform);
  ensure(in_po41(f.transform) == Component::IdentitySide, "frame transform left the identity component");
  return f;
}

ProjectionFrame standard_frame() { return make_frame(north_pole()); }

Matrix mirror_transform() { return Matrix::diag({Rat(1), Rat(1), Rat(1), Rat(-1), Rat(1)}); }

int InfinityTrace::real_count() const {
  int n = 0;
  for (const auto& p : points)
    if (p.param.kind == RootBox::Kind::Real) n += p.param.multiplicity;
  return n;
}

int InfinityTrace::pair_count() const {
  int n = 0;
  for (const auto& p : points)
    if (p.param.kind == RootBox::Kind::ComplexPair) n += p.param.multiplicity;
  return n;
}

InfinityTrace infinity_trace(const RationalCurve& c) {
  if (c.ambient != Ambient::P3) throw MathError(ErrorKind::DimensionMismatch, "infinity trace needs a curve in RP^3");
  const Form& y0 = c.coords[0];
  if (y0.is_zero()) throw MathError(ErrorKind::CurveInPlane, "curve lies in the plane at infinity");
  Form n2 = norm_squared(c.coords);
  InfinityTrace tr;
  tr.degree = c.degree();
  tr.on_conic = n2.is_zero() ? tr.degree : form_gcd(y0, n2).degree();
  if (tr.all_on_conic()) tr.conic_witness = standard_empty_conic();

  Rat prec = pow2(-30);
  int ot = y0.order_at_infinity();
  if (ot > 0) {
    TracePoint p;
    p.param.at_infinity = true;
    p.param.multiplicity = ot;
    p.point = eval_point(c, 1.0, 0.0);
    p.on_conic = n2.is_zero() || sgn(n2[0]) == 0;
    tr.points.push_back(p);
  }
  Poly na = affine(n2);
  auto parts = squarefree_decomposition(affine(y0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Poly& q = parts[i];
    if (q.degree() <= 0) continue;
    Poly g = na.is_zero() ? q : gcd(q, na);
    for (auto r : isolate_real_roots(q)) {
      TracePoint p;
      p.on_conic = g.degree() > 0 && sign_at_root(q, r, g) == 0;
      refine(q, r, prec);
      p.param.real = r;
      p.param.multiplicity = static_cast<int>(i) + 1;
      p.point = eval_point(c, r.mid().get_d(), 1.0);
      tr.points.push_back(p);
    }
    for (const auto& rect : isolate_complex_roots(q, prec)) {
      TracePoint p;
      p.param.kind = RootBox::Kind::ComplexPair;
      p.param.rect = rect;
      p.param.multiplicity = static_cast<int>(i) + 1;
      p.on_conic = g.degree() > 0 && count_roots_in_rect(g, rect) > 0;
      std::complex<double> z(Rat((rect.x0 + rect.x1) / 2).get_d(), Rat((rect.y0 + rect.y1) / 2).get_d());
      p.point = eval_point(c, z, 1.0);
      tr.points.push_back(p);
    }
  }
  return tr;
}

Projection project(const RationalCurve& c, const ProjectionFrame& frame) {
  if (c.ambient != Ambient::P4 || !c.on_sphere) throw MathError(ErrorKind::NotOnSphere, "projection needs a curve on the sphere");
  RationalCurve m = apply_transform(c, frame.transform);
  const auto& x = m.coords;
  auto r = make_curve({x[0] - x[4], x[1], x[2], x[3]}, Ambient::P3);
  Projection p;
  p.curve = r.curve;
  p.center_multiplicity = r.degree_drop;
  p.trace = infinity_trace(p.curve);
  return p;
}

const char* to_string(LiftMode m) {
  switch (m) {
    case LiftMode::Auto: return "auto";
    case LiftMode::Preserve: return "preserve";
    case LiftMode::Point: return "point";
    case LiftMode::DoublePoint: return "double-point";
  }
  return "auto";
}

RationalCurve lift(const RationalCurve& c, LiftMode mode, const ProjectionFrame& frame) {
  if (c.ambient != Ambient::P3) throw MathError(ErrorKind::DimensionMismatch, "lift needs a curve in RP^3");
  const auto& y = c.coords;
  Form y0sq = y[0] * y[0];
  Form n2 = norm_squared(y);
  Rat half(1, 2);
  auto r = make_curve({(y0sq + n2) * half, y[0] * y[1], y[0] * y[2], y[0] * y[3], (n2 - y0sq) * half}, Ambient::P4);
  int e = c.degree();
  int want = mode == LiftMode::Preserve ? e : mode == LiftMode::Point ? e + 1 : mode == LiftMode::DoublePoint ? e + 2 : -1;
  if (want >= 0 && r.curve.degree() != want) {
    InfinityTrace tr = infinity_trace(c);
    std::ostringstream os;
    os << to_string(mode) << " lift needs " << (2 * e - want) << " of " << e << " infinity points on x1^2+x2^2+x3^2, found "
       << tr.on_conic;
    throw MathError(ErrorKind::ConicConditionFailed, os.str());
  }
  RationalCurve out = apply_transform(r.curve, frame.inverse);
  ensure(out.on_sphere, "lift left the sphere");
  return out;
}

bool proportional(const RationalCurve& a, const RationalCurve& b) {
  if (a.ambient != b.ambient || a.degree() != b.degree()) return false;
  std::optional<Rat> lambda;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    for (int j = 0; j <= a.degree(); ++j) {
      const Rat& x = a.coords[i][j];
      const Rat& y = b.coords[i][j];
      if (sgn(x) == 0 || sgn(y) == 0) {
        if (sgn(x) != sgn(y)) return false;
        continue;
      }
      if (!lambda) lambda = x / y;
      else if (x != *lambda * y) return false;
    }
  return lambda.has_value();
}

RoundTrip round_trip(const RationalCurve& c) {
  RoundTrip out;
  if (c.ambient == Ambient::P3) {
    RationalCurve up = lift(c);
    out.ok = proportional(project(up).curve, c);
    out.trace_on_conic = infinity_trace(c).all_on_conic();
    return out;
  }
  if (!c.on_sphere) throw MathError(ErrorKind::NotOnSphere, "round trip needs a sphere curve");
  for (int i = 0; i < 32; ++i) {
    ProjectionFrame f = make_frame(sphere_center(i));
    Projection p = project(c, f);
    if (p.center_multiplicity != 0) continue;
    out.center_index = i;
    out.ok = proportional(lift(p.curve, LiftMode::Preserve, f), c);
    out.trace_on_conic = p.trace.all_on_conic();
    return out;
  }
  throw InternalError("no sphere center off the curve");
}

PlaneIntersection intersect_with_plane(const RationalCurve& c, const Vec& plane) {
  if (plane.size() != c.coords.size()) throw MathError(ErrorKind::DimensionMismatch, "plane and curve dimensions differ");
  Form f(c.degree());
  for (std::size_t i = 0; i < plane.size(); ++i)
    if (sgn(plane[i]) != 0) f = f + c.coords[i] * plane[i];
  if (f.is_zero()) throw MathError(ErrorKind::CurveInPlane, "curve lies in the plane");
  PlaneIntersection out;
  out.roots = isolate_roots(f, pow2(-30));
  for (const auto& r : out.roots) {
    if (r.kind == RootBox::Kind::Real) out.real_count += r.multiplicity;
    else out.pair_count += r.multiplicity;
  }
  return out;
}

bool is_circle_image(const RationalCurve& c) {
  if (c.ambient != Ambient::P3) throw MathError(ErrorKind::DimensionMismatch, "circle test needs a curve in RP^3");
  if (c.degree() != 2) throw MathError(ErrorKind::BadDegree, "circle test needs a conic");
  const Form& y0 = c.coords[0];
  if (y0.is_zero()) return false;
  Form n2 = norm_squared(c.coords);
  return n2.is_zero() || form_gcd(y0, n2).degree() == y0.degree();
}

RationalCurve circle_through(const Vec& a, const Vec& b, const Vec& c) {
  if (a.size() != 3 || b.size() != 3 || c.size() != 3) throw MathError(ErrorKind::DimensionMismatch, "circle_through expects points of Q^3");
  Vec e = add(b, scaled(a, Rat(-1)));
  Vec f = add(c, scaled(a, Rat(-1)));
  Vec cross{e[1] * f[2] - e[2] * f[1], e[2] * f[0] - e[0] * f[2], e[0] * f[1] - e[1] * f[0]};
  if (is_zero(cross)) throw MathError(ErrorKind::DegenerateChoice, "collinear points");
  Rat ee = dot(e, e), ff = dot(f, f), ef = dot(e, f);
  // second intersection of the line through a in direction s e + t f
  Form q(std::vector<Rat>{ee, 2 * ef, ff});
  Form l(std::vector<Rat>{ee, ff});
  std::vector<Form> coords{q};
  for (std::size_t i = 0; i < 3; ++i) coords.push_back(q * a[i] + l * Form(std::vector<Rat>{e[i], f[i]}));
  return curve_from(std::move(coords), Ambient::P3);
}

Vec unique_common_point(const RationalCurve& a, const RationalCurve& b, std::stop_token stop) {
  Incidence inc;
  try {
    inc = incidence_system(a.coords, b.coords, stop);
  } catch (const MathError& e) {
    if (e.kind() != ErrorKind::PositiveDimensional) throw;
    throw MathError(ErrorKind::MultipleIntersections, "curves share a component");
  }
  int n = inc.sol.count();
  if (n != 1) throw MathError(ErrorKind::MultipleIntersections, "curves meet in " + std::to_string(n) + " points");
  Rat w0 = -inc.sol.D.coeff(0) / inc.sol.D.coeff(1);
  Rat x = inc.sol.U.eval(w0);
  Vec p;
  for (const auto& f : inc.a) p.push_back(f.eval(x, Rat(1)));
  return primitive(p);
}

namespace {

// [s:t] of the single passage through the point.
std::array<Rat, 2> single_passage(const RationalCurve& c, const Vec& point) {
  Form g = passage_form(c.coords, point);
  if (g.degree() == 0) throw MathError(ErrorKind::NotOnCurve, "meeting point is not on the curve");
  if (g.degree() > 1) throw MathError(ErrorKind::MultipleIntersections, "curve passes through the meeting point more than once");
  return {g[1], -g[0]};
}

}  // namespace

JoinResult join_curves(const RationalCurve& c1, const RationalCurve& c2, const Vec& meeting, const Rat& epsilon,
                       int max_halvings, std::stop_token stop) {
  if (c1.ambient != Ambient::P3 || c2.ambient != Ambient::P3) throw MathError(ErrorKind::DimensionMismatch, "join works in RP^3");
  if (meeting.size() != 4) throw MathError(ErrorKind::DimensionMismatch, "meeting point must be in RP^3");
  if (sgn(meeting[0]) == 0) throw MathError(ErrorKind::DegenerateChoice, "meeting point at infinity");
  if (sgn(epsilon) <= 0) throw MathError(ErrorKind::DegenerateChoice, "epsilon must be positive");
  auto r1 = single_passage(c1, meeting);
  auto r2 = single_passage(c2, meeting);
  try {
    int n = incidence_system(c1.coords, c2.coords, stop).sol.count();
    if (n != 1) throw MathError(ErrorKind::MultipleIntersections, "curves meet in " + std::to_string(n) + " points");
  } catch (const MathError& e) {
    if (e.kind() != ErrorKind::PositiveDimensional) throw;
    throw MathError(ErrorKind::MultipleIntersections, "curves share a component");
  }

  // c1 meets the point at [0:1], c2 at [1:0]
  std::vector<Form> p, q;
  for (const auto& f : c1.coords)
    p.push_back(sgn(r1[1]) != 0 ? f.substitute(Rat(1), r1[0], Rat(0), r1[1]) : f.substitute(Rat(0), r1[0], Rat(1), r1[1]));
  for (const auto& f : c2.coords)
    q.push_back(sgn(r2[0]) != 0 ? f.substitute(r2[0], Rat(0), r2[1], Rat(1)) : f.substitute(r2[0], Rat(1), r2[1], Rat(0)));
  int m = c1.degree();
  Vec mt;
  for (int i = 1; i < 4; ++i) mt.push_back(meeting[static_cast<std::size_t>(i)] / meeting[0]);
  for (int i = 1; i < 4; ++i) {
    p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] - p[0] * mt[static_cast<std::size_t>(i - 1)];
    q[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)] - q[0] * mt[static_cast<std::size_t>(i - 1)];
  }
  Vec t1, t2;
  for (int i = 1; i < 4; ++i) {
    t1.push_back(p[static_cast<std::size_t>(i)][m - 1]);
    t2.push_back(q[static_cast<std::size_t>(i)][1]);
  }
  Vec cross{t1[1] * t2[2] - t1[2] * t2[1], t1[2] * t2[0] - t1[0] * t2[2], t1[0] * t2[1] - t1[1] * t2[0]};
  if (is_zero(cross)) throw MathError(ErrorKind::TangentsDependent, "tangent lines at the meeting point coincide");

  Rat eps = epsilon;
  for (int h = 0; h <= max_halvings; ++h, eps /= 2) {
    if (stop.stop_requested()) throw MathError(ErrorKind::Cancelled, "join cancelled");
    std::vector<Form> qe;
    for (const auto& f : q) qe.push_back(f.substitute(Rat(1), Rat(0), Rat(0), eps));
    Form k0 = p[0] * qe[0];
    std::vector<Form> k{k0};
    for (std::size_t i = 1; i < 4; ++i) k.push_back(p[i] * qe[0] + qe[i] * p[0] + k0 * mt[i - 1]);
    auto r = make_curve(std::move(k), Ambient::P3);
    if (r.degree_drop != 0) continue;
    if (!is_nonsingular_knot(r.curve, stop).nonsingular) continue;
    return JoinResult{r.curve, eps, h};
  }
  throw MathError(ErrorKind::StillSingular, "join still singular at epsilon = " + to_string(Rat(eps * 2)));
}

JoinResult join_on_sphere(const RationalCurve& c1, const RationalCurve& c2, const Rat& epsilon, int max_halvings,
                          std::stop_token stop) {
  for (int k = 0; k < 32; ++k) {
    ProjectionFrame frame = make_frame(sphere_center(k));
    Projection a = project(c1, frame), b = project(c2, frame);
    if (a.center_multiplicity != 0 || b.center_multiplicity != 0) continue;
    Vec meet = unique_common_point(a.curve, b.curve, stop);
    if (sgn(meet[0]) == 0) continue;
    JoinResult j = join_curves(a.curve, b.curve, meet, epsilon, max_halvings, stop);
    j.curve = lift(j.curve, LiftMode::Preserve, frame);
    return j;
  }
  throw InternalError("join_on_sphere: no frame center off both curves");
}

std::optional<QuadraticForm> sphere_through(const std::vector<ProjPoint>& points) {
  auto basis = quadric_through_set(3, points);
  if (basis.empty()) return std::nullopt;
  std::size_t k = basis.size();
  Matrix cond(5, k);
  for (std::size_t j = 0; j < k; ++j) {
    const Matrix& m = basis[j].m;
    cond(0, j) = m(1, 2);
    cond(1, j) = m(1, 3);
    cond(2, j) = m(2, 3);
    cond(3, j) = m(1, 1) - m(2, 2);
    cond(4, j) = m(1, 1) - m(3, 3);
  }
  auto ns = nullspace(cond);
  std::vector<Vec> cands = ns;
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = i + 1; j < ns.size(); ++j) {
      cands.push_back(add(ns[i], ns[j]));
      cands.push_back(add(ns[i], scaled(ns[j], Rat(-1))));
    }
  for (const auto& a : cands) {
    Matrix m(4, 4);
    for (std::size_t j = 0; j < k; ++j) m = m + a[j] * basis[j].m;
    if (sgn(m(1, 1)) == 0) continue;
    QuadraticForm q(m);
    if (classify_quadric(q) == QuadricType::Sphere) return q;
  }
  return std::nullopt;
}

}  // namespace realknot
