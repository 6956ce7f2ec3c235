#include "realknot/writhe.hpp"

#include <random>

#include "realknot/bivariate.hpp"
#include "realknot/error.hpp"
#include "realknot/sphere.hpp"

namespace realknot {

const char* to_string(Crossing::Kind k) { return k == Crossing::Kind::Real ? "real" : "solitary"; }

int Diagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings) w += x.sign;
  return w;
}

int Diagram::real_count() const {
  int n = 0;
  for (const auto& x : crossings) n += x.kind == Crossing::Kind::Real ? 1 : 0;
  return n;
}

int Diagram::solitary_count() const { return static_cast<int>(crossings.size()) - real_count(); }

Vec diagram_center(int index) {
  std::mt19937_64 rng(0xd1a6ULL + static_cast<unsigned long long>(index));
  std::uniform_int_distribution<int> num(-9, 9);
  Vec c{Rat(0)};
  for (int i = 0; i < 3; ++i) c.emplace_back(num(rng));
  if (is_zero(c)) c[3] = 1;
  return c;
}

namespace {

// Elements a + b z of Q[w]/(D) [z]/(z^2 - U z + V).
using Elt = std::array<Poly, 2>;

struct PairRing {
  Poly D, U, V;

  Elt mul(const Elt& x, const Elt& y) const {
    Poly bb = x[1] * y[1];
    return {(x[0] * y[0] - bb * V) % D, (x[0] * y[1] + x[1] * y[0] + bb * U) % D};
  }
  static Elt add(const Elt& x, const Elt& y) { return {x[0] + y[0], x[1] + y[1]}; }
  static Elt sub(const Elt& x, const Elt& y) { return {x[0] - y[0], x[1] - y[1]}; }
  Elt eval(const Poly& p, const Elt& z) const {
    Elt acc{Poly(), Poly()};
    for (int k = p.degree(); k >= 0; --k) acc = add(mul(acc, z), Elt{Poly(p.coeff(k)), Poly()});
    return acc;
  }
};

// Laplace expansion along the first two rows.
template <class T, class Mul, class Add, class Sub>
T det4(const std::array<std::array<T, 4>, 4>& m, Mul mul, Add add, Sub sub) {
  static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  static const int sign[6] = {1, -1, 1, 1, -1, 1};
  T acc{};
  bool first = true;
  for (int p = 0; p < 6; ++p) {
    int j = pairs[p][0], k = pairs[p][1];
    int cj = pairs[5 - p][0], ck = pairs[5 - p][1];
    T top = sub(mul(m[0][j], m[1][k]), mul(m[0][k], m[1][j]));
    T bot = sub(mul(m[2][cj], m[3][ck]), mul(m[2][ck], m[3][cj]));
    T term = mul(top, bot);
    if (first) {
      acc = sign[p] > 0 ? term : sub(T{}, term);
      first = false;
    } else {
      acc = sign[p] > 0 ? add(acc, term) : sub(acc, term);
    }
  }
  return acc;
}

Matrix projection_from(const Vec& center) {
  if (center.size() != 4) throw MathError(ErrorKind::DimensionMismatch, "projection center must be a point of RP^3");
  if (is_zero(center)) throw MathError(ErrorKind::AllZero, "zero projection center");
  std::size_t k = 3;
  while (sgn(center[k]) == 0) --k;
  Matrix p(3, 4);
  std::size_t r = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == k) continue;
    p(r, i) = 1;
    p(r, k) = -center[i] / center[k];
    ++r;
  }
  return p;
}

std::vector<Form> apply_rows(const Matrix& p, const std::vector<Form>& k) {
  std::vector<Form> out;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    Form f(k[0].degree());
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (sgn(p(r, j)) != 0) f = f + k[j] * p(r, j);
    out.push_back(f);
  }
  return out;
}

bool has_common_factor(const std::vector<Form>& g) {
  bool any = false;
  Form acc;
  for (const auto& f : g) {
    if (f.is_zero()) continue;
    acc = any ? form_gcd(acc, f) : monic(f);
    any = true;
  }
  return !any || acc.degree() > 0;
}

// Resultant in w of D(w) and z^2 - U(w) z + V(w): its roots are all parameters
// taking part in a double point.
Poly parameter_eliminant(const Poly& d, const Poly& u, const Poly& v) {
  std::vector<Poly> dc;
  for (const auto& c : d.coeffs()) dc.emplace_back(c);
  int n = std::max({u.degree(), v.degree(), 0});
  std::vector<Poly> hc;
  for (int j = 0; j <= n; ++j) {
    Poly c = Poly::monomial(-u.coeff(j), 1) + Poly(v.coeff(j));
    if (j == 0) c += Poly::monomial(Rat(1), 2);
    hc.push_back(c);
  }
  return resultant_v(BiPoly(std::move(dc)), BiPoly(std::move(hc)));
}

RationalCurve to_space_curve(const RationalCurve& c) {
  if (c.ambient == Ambient::P3) return c;
  if (!c.on_sphere) throw MathError(ErrorKind::NotOnSphere, "diagram of a P4 curve needs a curve on the sphere");
  for (int k = 0; k < 32; ++k) {
    Projection p = project(c, make_frame(sphere_center(k)));
    if (p.center_multiplicity == 0) return p.curve;
  }
  throw InternalError("no sphere center off the curve");
}

}  // namespace

Diagram build_diagram(const RationalCurve& c, const Vec& center, std::stop_token stop) {
  Diagram dg;
  dg.source = to_space_curve(c);
  dg.center = center;
  dg.projection = projection_from(center);
  const auto& k = dg.source.coords;
  auto g = apply_rows(dg.projection, k);
  if (has_common_factor(g)) throw MathError(ErrorKind::CenterOnCurve, "projection center lies on the curve");

  DoublePointSystem sys;
  try {
    sys = double_point_system(g, stop);
  } catch (const MathError& e) {
    if (e.kind() != ErrorKind::PositiveDimensional) throw;
    throw MathError(ErrorKind::NonGenericCenter, "projection is not birational");
  }
  if (sys.diagonal.degree() > 0 && count_real_roots(sys.diagonal) > 0)
    throw MathError(ErrorKind::NonGenericCenter, "projected curve has a real cusp");
  dg.complex_pairs = sys.complex_pairs;
  if (sys.D.degree() <= 0) return dg;
  Poly p = parameter_eliminant(sys.D, sys.U, sys.V);
  if (gcd(p, p.derivative()).degree() > 0) throw MathError(ErrorKind::NonGenericCenter, "projected curve has a triple point");

  PairRing ring{sys.D, sys.U % sys.D, sys.V % sys.D};
  auto kr = reparametrize(k, sys.mobius);
  Elt z{Poly(), Poly(1)}, y{ring.U, Poly(-1)};
  std::array<std::array<Elt, 4>, 4> m;
  for (std::size_t i = 0; i < 4; ++i) {
    Poly a = affine(kr[i]);
    Poly da = a.derivative();
    m[0][i] = ring.eval(a, z);
    m[1][i] = ring.eval(a, y);
    m[2][i] = ring.eval(da, z);
    m[3][i] = ring.eval(da, y);
  }
  Elt det = det4<Elt>(
      m, [&](const Elt& a, const Elt& b) { return ring.mul(a, b); }, PairRing::add, PairRing::sub);
  det = {det[0] % sys.D, det[1] % sys.D};
  ensure(det[1].is_zero(), "crossing determinant is not symmetric in the branches");

  Rat fine(1);
  mpq_div_2exp(fine.get_mpq_t(), fine.get_mpq_t(), 50);
  for (std::size_t i = 0; i < sys.real_roots.size(); ++i) {
    RealRoot r = sys.real_roots[i];
    int s = sign_at_root(sys.D, r, det[0], stop);
    if (s == 0) throw MathError(ErrorKind::NonGenericCenter, "tangential crossing");
    Crossing x;
    x.kind = sys.delta_sign[i] > 0 ? Crossing::Kind::Real : Crossing::Kind::Solitary;
    x.sign = -s;
    refine(sys.D, r, fine);
    std::complex<double> e1 = sys.U.eval(r.mid()).get_d(), e2 = sys.V.eval(r.mid()).get_d();
    std::complex<double> disc = std::sqrt(e1 * e1 - 4.0 * e2);
    x.params = {sys.mobius.apply((e1 + disc) / 2.0), sys.mobius.apply((e1 - disc) / 2.0)};
    dg.crossings.push_back(x);
  }
  return dg;
}

int crossing_sign(const Diagram& d, const Crossing& x) {
  (void)d;
  ensure(x.sign == 1 || x.sign == -1, "uncertified crossing");
  return x.sign;
}

int writhe_at(const RationalCurve& c, const Vec& sphere_center_pt, const Vec& diagram_center_pt, std::stop_token stop) {
  RationalCurve k = c;
  if (c.ambient == Ambient::P4) {
    if (!c.on_sphere) throw MathError(ErrorKind::NotOnSphere, "writhe needs a curve on the sphere");
    Projection p = project(c, make_frame(sphere_center_pt));
    if (p.center_multiplicity != 0) throw MathError(ErrorKind::CenterOnCurve, "sphere center lies on the curve");
    k = p.curve;
  }
  return build_diagram(k, diagram_center_pt, stop).writhe();
}

WritheResult encomplexed_writhe(const RationalCurve& c, int centers, std::stop_token stop) {
  if (c.ambient == Ambient::P4 && !c.on_sphere) throw MathError(ErrorKind::NotOnSphere, "writhe needs a curve on the sphere");
  DoublePointSystem own = double_point_system(c.coords, stop);
  if (own.D.degree() > 0) throw MathError(ErrorKind::Singular, "curve has double points");
  ImmersionResult imm = is_immersion(c);
  for (const auto& b : imm.boxes)
    if (b.kind == RootBox::Kind::Real) throw MathError(ErrorKind::Singular, "curve has a real cusp");

  WritheResult res;
  for (int i = 0; i < 48 && static_cast<int>(res.samples.size()) < centers; ++i) {
    try {
      RationalCurve k = c;
      if (c.ambient == Ambient::P4) {
        Projection p = project(c, make_frame(sphere_center(i)));
        if (p.center_multiplicity != 0) continue;
        k = p.curve;
      }
      Diagram d = build_diagram(k, diagram_center(i), stop);
      if (res.samples.empty()) {
        res.real_crossings = d.real_count();
        res.solitary = d.solitary_count();
      }
      res.samples.push_back(d.writhe());
    } catch (const MathError& e) {
      if (e.kind() != ErrorKind::NonGenericCenter && e.kind() != ErrorKind::CenterOnCurve) throw;
    }
  }
  if (static_cast<int>(res.samples.size()) < centers) throw InternalError("no generic projection centers found");
  for (int w : res.samples)
    if (w != res.samples.front()) throw InternalError("writhe differs between projection centers");
  res.writhe = res.samples.front();
  return res;
}

int linking_number(const RationalCurve& a0, const RationalCurve& b0, std::stop_token stop) {
  RationalCurve a = a0, b = b0;
  if (a.ambient != b.ambient) throw MathError(ErrorKind::DimensionMismatch, "curves in different spaces");
  if (a.ambient == Ambient::P4) {
    bool found = false;
    for (int k = 0; k < 32 && !found; ++k) {
      ProjectionFrame f = make_frame(sphere_center(k));
      Projection pa = project(a0, f), pb = project(b0, f);
      if (pa.center_multiplicity != 0 || pb.center_multiplicity != 0) continue;
      a = pa.curve;
      b = pb.curve;
      found = true;
    }
    if (!found) throw InternalError("no sphere center off both curves");
  }
  for (const auto* c : {&a, &b})
    if (c->coords[0].is_zero() || real_root_count(c->coords[0]) > 0)
      throw MathError(ErrorKind::NoCommonAffineChart, "curve meets the plane x0 = 0 in real points");
  try {
    Incidence inc = incidence_system(a.coords, b.coords, stop);
    if (inc.sol.count() > 0 && count_real_roots(inc.sol.D) > 0) throw MathError(ErrorKind::CurvesIntersect, "curves share a real point");
  } catch (const MathError& e) {
    if (e.kind() != ErrorKind::PositiveDimensional) throw;
    throw MathError(ErrorKind::CurvesIntersect, "curves share a component");
  }

  std::vector<int> values;
  for (int i = 0; i < 48 && values.size() < 2; ++i) {
    Matrix p = projection_from(diagram_center(i));
    auto ga = apply_rows(p, a.coords), gb = apply_rows(p, b.coords);
    if (has_common_factor(ga) || has_common_factor(gb)) continue;
    Incidence inc;
    try {
      inc = incidence_system(ga, gb, stop);
    } catch (const MathError& e) {
      if (e.kind() != ErrorKind::PositiveDimensional) throw;
      continue;
    }
    int total = 0;
    bool generic = true;
    if (inc.sol.count() > 0) {
      const Poly& d = inc.sol.D;
      auto ar = reparametrize(a.coords, inc.ma), br = reparametrize(b.coords, inc.mb);
      std::array<std::array<Poly, 4>, 4> m;
      for (std::size_t j = 0; j < 4; ++j) {
        Poly pa = affine(ar[j]), pb = affine(br[j]);
        m[0][j] = pa.compose(inc.sol.U) % d;
        m[1][j] = pb.compose(inc.sol.V) % d;
        m[2][j] = pa.derivative().compose(inc.sol.U) % d;
        m[3][j] = pb.derivative().compose(inc.sol.V) % d;
      }
      Poly det = det4<Poly>(
          m, [&](const Poly& x, const Poly& y) { return (x * y) % d; }, [](const Poly& x, const Poly& y) { return x + y; },
          [](const Poly& x, const Poly& y) { return x - y; });
      int orient = orientation(inc.ma) * orientation(inc.mb);
      for (auto r : isolate_real_roots(d)) {
        int s = sign_at_root(d, r, det % d, stop);
        if (s == 0) {
          generic = false;
          break;
        }
        total += -s * orient;
      }
    }
    if (!generic) continue;
    if (total % 2 != 0) throw InternalError("odd signed crossing count between two closed curves");
    values.push_back(total / 2);
  }
  if (values.size() < 2) throw InternalError("no generic projection centers found");
  if (values[0] != values[1]) throw InternalError("linking number differs between projection centers");
  return values[0];
}

}  // namespace realknot
