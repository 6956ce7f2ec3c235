#include "realknot/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "realknot/bivariate.hpp"
#include "realknot/error.hpp"

namespace realknot {

std::vector<GaussRat> RationalCurve::eval(const GaussRat& s, const GaussRat& t) const {
  std::vector<GaussRat> out;
  for (const auto& f : coords) out.push_back(to_gauss(f).eval(s, t));
  return out;
}

std::vector<QuadExt> RationalCurve::eval(const QuadExt& s, const QuadExt& t) const {
  int d = degree();
  std::vector<QuadExt> sp{QuadExt(Rat(1))}, tp{QuadExt(Rat(1))};
  for (int k = 1; k <= d; ++k) {
    sp.push_back(sp.back() * s);
    tp.push_back(tp.back() * t);
  }
  std::vector<QuadExt> out;
  for (const auto& f : coords) {
    QuadExt acc;
    for (int j = 0; j <= d; ++j)
      if (sgn(f[j]) != 0)
        acc += QuadExt(f[j]) * sp[static_cast<std::size_t>(d - j)] * tp[static_cast<std::size_t>(j)];
    out.push_back(acc);
  }
  return out;
}

namespace {

bool sphere_check(const std::vector<Form>& p) {
  Form q = p[0] * p[0] * Rat(-1);
  for (std::size_t i = 1; i < p.size(); ++i) q = q + p[i] * p[i];
  return q.is_zero();
}

Rat joint_content(const std::vector<Form>& coords) {
  Int den(1), num(0);
  for (const auto& f : coords)
    for (const auto& x : f.coeffs()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    }
  return Rat(num, den);
}

}  // namespace

MakeCurveResult make_curve(std::vector<Form> coords, Ambient ambient) {
  if (static_cast<int>(coords.size()) != ambient_dim(ambient) + 1)
    throw MathError(ErrorKind::DimensionMismatch, "expected " + std::to_string(ambient_dim(ambient) + 1) + " coordinates");
  int d = coords[0].degree();
  for (const auto& f : coords)
    if (f.degree() != d) throw MathError(ErrorKind::DegreeMismatch, "coordinate forms of different degrees");
  if (std::all_of(coords.begin(), coords.end(), [](const Form& f) { return f.is_zero(); }))
    throw MathError(ErrorKind::AllZero, "all coordinate forms vanish");

  Form g = Form::constant(Rat(1));
  bool first = true;
  for (const auto& f : coords) {
    if (f.is_zero()) continue;
    g = first ? monic(f) : form_gcd(g, f);
    first = false;
  }
  MakeCurveResult r;
  r.removed_factor = Form::constant(Rat(1));
  if (g.degree() > 0) {
    for (auto& f : coords) f = exact_div(f, g);
    r.degree_drop = g.degree();
    r.removed_factor = g;
  }
  Rat c = joint_content(coords);
  for (auto& f : coords) f *= Rat(1 / c);
  r.curve.ambient = ambient;
  r.curve.coords = std::move(coords);
  if (ambient == Ambient::P4) {
    r.curve.on_sphere = sphere_check(r.curve.coords);
    if (r.curve.on_sphere && r.curve.degree() % 2 != 0)
      throw InternalError("odd-degree real curve on the sphere");
  }
  return r;
}

RationalCurve curve_from(std::vector<Form> coords, Ambient ambient) {
  auto r = make_curve(std::move(coords), ambient);
  if (r.degree_drop != 0) throw MathError(ErrorKind::NotCoprime, "coordinate forms share the factor " + to_string(r.removed_factor));
  return r.curve;
}

Form compose(const QuadraticForm& q, const RationalCurve& c) {
  if (q.dim() != c.dim()) throw MathError(ErrorKind::DimensionMismatch, "quadric and curve live in different spaces");
  Form acc(2 * c.degree());
  for (std::size_t i = 0; i < c.coords.size(); ++i)
    for (std::size_t j = 0; j < c.coords.size(); ++j)
      if (sgn(q.m(i, j)) != 0) acc = acc + (c.coords[i] * c.coords[j]) * q.m(i, j);
  return acc;
}

bool on_quadric(const RationalCurve& c, const QuadraticForm& q) { return compose(q, c).is_zero(); }

std::vector<QuadraticForm> quadric_through_curve(const RationalCurve& c) {
  std::size_t n = c.coords.size();
  std::size_t rows = static_cast<std::size_t>(2 * c.degree()) + 1;
  std::size_t ncoef = n * (n + 1) / 2;
  Matrix a(rows, ncoef);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++k) {
      Form f = c.coords[i] * c.coords[j];
      for (std::size_t r = 0; r < rows; ++r) a(r, k) = f[static_cast<int>(r)];
    }
  std::vector<QuadraticForm> out;
  for (const auto& v : nullspace(a)) out.push_back(QuadraticForm::from_monomials(c.dim(), v));
  return out;
}

const char* to_string(QuadricType t) {
  switch (t) {
    case QuadricType::Sphere: return "sphere";
    case QuadricType::Hyperboloid: return "hyperboloid";
    case QuadricType::Cone: return "cone";
    case QuadricType::PlanePair: return "plane-pair";
    case QuadricType::Other: return "other";
  }
  return "other";
}

QuadricType classify_quadric(const QuadraticForm& q) {
  if (q.dim() != 3) throw MathError(ErrorKind::DimensionMismatch, "quadric classification is for RP^3");
  Inertia s = signature(q);
  int r = s.pos + s.neg;
  int lo = std::min(s.pos, s.neg);
  if (r == 4) return lo == 1 ? QuadricType::Sphere : (lo == 2 ? QuadricType::Hyperboloid : QuadricType::Other);
  if (r == 3) return lo == 1 ? QuadricType::Cone : QuadricType::Other;
  if (r == 2) return lo == 1 ? QuadricType::PlanePair : QuadricType::Other;
  return QuadricType::Other;
}

QuadraticForm segre_form() {
  Matrix m(4, 4);
  m(0, 3) = m(3, 0) = Rat(1, 2);
  m(1, 2) = m(2, 1) = Rat(-1, 2);
  return QuadraticForm(m);
}

std::array<QuadExt, 2> Mobius::apply(const QuadExt& x) const {
  QuadExt s = QuadExt(a) * x + QuadExt(b);
  QuadExt t = QuadExt(c) * x + QuadExt(d);
  if (t.is_zero()) return {QuadExt(Rat(1)), QuadExt()};
  return {s / t, QuadExt(Rat(1))};
}

std::array<std::complex<double>, 2> Mobius::apply(std::complex<double> x) const {
  std::complex<double> s = a.get_d() * x + b.get_d();
  std::complex<double> t = c.get_d() * x + d.get_d();
  if (std::abs(t) >= std::abs(s)) return {s / t, 1.0};
  return {1.0, t / s};
}

Mobius mobius_candidate(int index) {
  if (index == 0) return Mobius{};
  std::mt19937_64 rng(0x6d6f6269ULL + static_cast<unsigned long long>(index));
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (;;) {
    Rat b(num(rng), den(rng)), c(num(rng), den(rng));
    b.canonicalize();
    c.canonicalize();
    if (Rat(1) - b * c != 0) return Mobius{Rat(1), b, c, Rat(1)};
  }
}

std::vector<Form> reparametrize(const std::vector<Form>& coords, const Mobius& m) {
  std::vector<Form> out;
  for (const auto& f : coords) out.push_back(f.substitute(m.a, m.b, m.c, m.d));
  return out;
}

namespace {

// h_m(x, y) = sum_{i+j=m} x^i y^j in e1 = u, e2 = v.
std::vector<BiPoly> complete_symmetric(int count) {
  std::vector<BiPoly> h;
  if (count > 0) h.push_back(BiPoly(Poly(1)));
  if (count > 1) h.push_back(BiPoly::u());
  for (int m = 2; m < count; ++m)
    h.push_back(BiPoly::u() * h[static_cast<std::size_t>(m - 1)] - BiPoly::v() * h[static_cast<std::size_t>(m - 2)]);
  return h;
}

BiPoly vpow(int l) {
  std::vector<Poly> c(static_cast<std::size_t>(l) + 1);
  c[static_cast<std::size_t>(l)] = Poly(1);
  return BiPoly(std::move(c));
}

// (a_i(x) a_j(y) - a_j(x) a_i(y)) / (x - y) in (e1, e2).
BiPoly divided_minor(const Poly& ai, const Poly& aj, const std::vector<BiPoly>& h) {
  int d = std::max(ai.degree(), aj.degree());
  BiPoly acc;
  for (int k = 1; k <= d; ++k)
    for (int l = 0; l < k; ++l) {
      Rat c = ai.coeff(k) * aj.coeff(l) - aj.coeff(k) * ai.coeff(l);
      if (sgn(c) == 0) continue;
      acc += vpow(l) * h[static_cast<std::size_t>(k - l - 1)] * c;
    }
  return acc;
}

// The point at X = infinity must be a simple, non-singular point of the parametrization.
bool infinity_is_clean(const std::vector<Form>& q) {
  std::size_t n = q.size();
  Matrix c01(2, n);
  for (std::size_t i = 0; i < n; ++i) {
    c01(0, i) = q[i][0];
    c01(1, i) = q[i].degree() >= 1 ? q[i][1] : Rat(0);
  }
  if (q[0].degree() >= 1 && rank(c01) < 2) return false;
  Poly g;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly m = affine(q[i]) * q[j][0] - affine(q[j]) * q[i][0];
      if (m.is_zero()) continue;
      g = g.is_zero() ? m : gcd(g, m);
    }
  return g.is_zero() || g.degree() <= 0;
}

}  // namespace

DoublePointSystem double_point_system(const std::vector<Form>& coords, std::stop_token stop) {
  ensure(!coords.empty(), "double_point_system: no coordinates");
  int d = coords[0].degree();
  auto h = complete_symmetric(std::max(d, 1));
  for (int idx = 0; idx < 40; ++idx) {
    if (stop.stop_requested()) throw MathError(ErrorKind::Cancelled, "double point search cancelled");
    Mobius mob = mobius_candidate(idx);
    auto q = reparametrize(coords, mob);
    if (!infinity_is_clean(q)) continue;
    std::vector<Poly> a;
    for (const auto& f : q) a.push_back(affine(f));
    std::vector<BiPoly> sys;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) sys.push_back(divided_minor(a[i], a[j], h));

    DoublePointSystem out;
    out.mobius = mob;
    out.reparam = q;
    BivariateSolution sol = solve_bivariate(sys, stop);
    if (sol.count() == 0) {
      out.D = Poly(1);
      out.diagonal = Poly(1);
      return out;
    }
    Poly delta = (sol.U * sol.U - sol.V * Rat(4)) % sol.D;
    Poly diag = delta.is_zero() ? sol.D : gcd(sol.D, delta);
    out.diagonal = diag;
    out.D = (sol.D / diag).monic();
    out.U = sol.U % out.D;
    out.V = sol.V % out.D;
    out.delta = delta % out.D;
    if (out.D.degree() > 0) {
      out.real_roots = isolate_real_roots(out.D);
      for (auto& r : out.real_roots) out.delta_sign.push_back(sign_at_root(out.D, r, out.delta, stop));
      out.complex_pairs = (out.D.degree() - static_cast<int>(out.real_roots.size())) / 2;
    }
    return out;
  }
  throw InternalError("double_point_system: no admissible reparametrization");
}

int orientation(const Mobius& m) { return sgn(m.a * m.d - m.b * m.c); }

Form passage_form(const std::vector<Form>& coords, const Vec& point) {
  if (coords.size() != point.size()) throw MathError(ErrorKind::DimensionMismatch, "point and curve dimensions differ");
  if (is_zero(point)) throw MathError(ErrorKind::AllZero, "zero point");
  bool any = false;
  Form g;
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j) {
      Form m = coords[i] * point[j] - coords[j] * point[i];
      if (m.is_zero()) continue;
      g = any ? form_gcd(g, m) : monic(m);
      any = true;
    }
  ensure(any, "passage_form: constant curve");
  return g;
}

namespace {

// b(Y) passes through the point a(infinity)
bool meets_at_infinity(const std::vector<Form>& a, const std::vector<Form>& b) {
  Vec p;
  for (const auto& f : a) p.push_back(f[0]);
  if (is_zero(p)) return true;
  return passage_form(b, p).degree() > 0;
}

BiPoly minor_bipoly(const Poly& ai, const Poly& aj, const Poly& bi, const Poly& bj) {
  int n = std::max(bi.degree(), bj.degree());
  std::vector<Poly> c;
  for (int l = 0; l <= n; ++l) c.push_back(ai * bj.coeff(l) - aj * bi.coeff(l));
  return BiPoly(std::move(c));
}

}  // namespace

Incidence incidence_system(const std::vector<Form>& a, const std::vector<Form>& b, std::stop_token stop) {
  if (a.size() != b.size()) throw MathError(ErrorKind::DimensionMismatch, "curves in different spaces");
  for (int idx = 0; idx < 40; ++idx) {
    Incidence inc;
    inc.ma = mobius_candidate(idx);
    inc.mb = mobius_candidate(idx == 0 ? 0 : idx + 97);
    inc.a = reparametrize(a, inc.ma);
    inc.b = reparametrize(b, inc.mb);
    if (meets_at_infinity(inc.a, inc.b) || meets_at_infinity(inc.b, inc.a)) continue;
    std::vector<Poly> pa, pb;
    for (const auto& f : inc.a) pa.push_back(affine(f));
    for (const auto& f : inc.b) pb.push_back(affine(f));
    std::vector<BiPoly> sys;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) sys.push_back(minor_bipoly(pa[i], pa[j], pb[i], pb[j]));
    inc.sol = solve_bivariate(sys, stop);
    return inc;
  }
  throw InternalError("incidence_system: no admissible reparametrization");
}

const char* to_string(DoublePoint::Kind k) {
  switch (k) {
    case DoublePoint::Kind::RealCrossing: return "real-crossing";
    case DoublePoint::Kind::Solitary: return "solitary";
    case DoublePoint::Kind::ComplexPair: return "complex-pair";
    case DoublePoint::Kind::Cusp: return "cusp";
  }
  return "?";
}

namespace {

std::string complex_str(std::complex<double> z) {
  std::ostringstream os;
  os.precision(6);
  double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  if (im == 0.0) os << re;
  else if (re == 0.0) os << im << "i";
  else os << re << (im > 0 ? "+" : "") << im << "i";
  return os.str();
}

std::vector<QuadExt> canonical(std::vector<QuadExt> v) {
  auto it = std::find_if(v.begin(), v.end(), [](const QuadExt& x) { return !x.is_zero(); });
  ensure(it != v.end(), "canonical: zero vector");
  QuadExt f = *it;
  for (auto& x : v) x /= f;
  return v;
}

std::vector<std::complex<double>> canonical(std::vector<std::complex<double>> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  std::complex<double> f = v[best];
  for (auto& x : v) x /= f;
  return v;
}

std::vector<std::complex<double>> eval_numeric(const RationalCurve& c, std::complex<double> s, std::complex<double> t) {
  std::vector<std::complex<double>> out;
  int d = c.degree();
  for (const auto& f : c.coords) {
    std::complex<double> acc = 0;
    for (int j = 0; j <= d; ++j) acc += f[j].get_d() * std::pow(s, d - j) * std::pow(t, j);
    out.push_back(acc);
  }
  return canonical(out);
}

DoublePoint make_point(const RationalCurve& c, const Mobius& mob, std::complex<double> e1, std::complex<double> e2,
                       DoublePoint::Kind kind) {
  DoublePoint p;
  p.kind = kind;
  std::complex<double> disc = std::sqrt(e1 * e1 - 4.0 * e2);
  std::complex<double> x = (e1 + disc) / 2.0, y = (e1 - disc) / 2.0;
  if (kind == DoublePoint::Kind::Solitary && x.imag() < 0) std::swap(x, y);
  auto px = mob.apply(x), py = mob.apply(y);
  p.params = {{{px[0], px[1]}, {py[0], py[1]}}};
  p.image = eval_numeric(c, px[0], px[1]);
  return p;
}

std::complex<double> eval_complex(const Poly& p, const GaussRat& z) { return to_complex(p.eval(z)); }

}  // namespace

std::string describe(const DoublePoint& p) {
  std::ostringstream os;
  os << to_string(p.kind) << " params ";
  if (p.exact_params) {
    for (int b = 0; b < 2; ++b) {
      const auto& st = (*p.exact_params)[static_cast<std::size_t>(b)];
      os << (b ? ", " : "") << "[" << to_string(st[0]) << ":" << to_string(st[1]) << "]";
    }
  } else {
    for (int b = 0; b < 2; ++b) {
      const auto& st = p.params[static_cast<std::size_t>(b)];
      os << (b ? ", " : "") << "[" << complex_str(st[0]) << ":" << complex_str(st[1]) << "]";
    }
  }
  os << " image [";
  if (p.exact_image) {
    for (std::size_t i = 0; i < p.exact_image->size(); ++i) os << (i ? ":" : "") << to_string((*p.exact_image)[i]);
  } else {
    for (std::size_t i = 0; i < p.image.size(); ++i) os << (i ? ":" : "") << complex_str(p.image[i]);
  }
  os << "]";
  return os.str();
}

namespace {

std::vector<DoublePoint> points_of(const RationalCurve& c, DoublePointSystem& sys) {
  std::vector<DoublePoint> out;
  if (sys.D.degree() <= 0) return out;
  Rat fine(1);
  mpq_div_2exp(fine.get_mpq_t(), fine.get_mpq_t(), 60);
  for (std::size_t k = 0; k < sys.real_roots.size(); ++k) {
    RealRoot r = sys.real_roots[k];
    refine(sys.D, r, fine);
    Rat w = r.mid();
    auto kind = sys.delta_sign[k] > 0 ? DoublePoint::Kind::RealCrossing : DoublePoint::Kind::Solitary;
    DoublePoint p = make_point(c, sys.mobius, sys.U.eval(w).get_d(), sys.V.eval(w).get_d(), kind);
    if (sys.D.degree() == 1) {
      Rat w0 = -sys.D.coeff(0) / sys.D.coeff(1);
      Rat e1 = sys.U.eval(w0), e2 = sys.V.eval(w0);
      Rat disc = e1 * e1 - 4 * e2;
      std::array<std::array<QuadExt, 2>, 2> ex;
      for (int b = 0; b < 2; ++b) {
        QuadExt x = make_quad(e1 / 2, Rat(b == 0 ? 1 : -1, 2), disc);
        ex[static_cast<std::size_t>(b)] = sys.mobius.apply(x);
      }
      p.exact_params = ex;
      p.exact_image = canonical(c.eval(ex[0][0], ex[0][1]));
    }
    out.push_back(p);
  }
  if (sys.complex_pairs > 0) {
    Rat prec(1);
    mpq_div_2exp(prec.get_mpq_t(), prec.get_mpq_t(), 40);
    for (const auto& rect : isolate_complex_roots(sys.D, prec)) {
      GaussRat w((rect.x0 + rect.x1) / 2, (rect.y0 + rect.y1) / 2);
      out.push_back(make_point(c, sys.mobius, eval_complex(sys.U, w), eval_complex(sys.V, w), DoublePoint::Kind::ComplexPair));
    }
  }
  return out;
}

}  // namespace

std::vector<DoublePoint> double_points(const RationalCurve& c, std::stop_token stop) {
  DoublePointSystem sys = double_point_system(c.coords, stop);
  return points_of(c, sys);
}

namespace {

std::vector<Form> jacobian_minors(const RationalCurve& c) {
  std::vector<Form> out;
  std::vector<Form> fs, ft;
  for (const auto& f : c.coords) {
    fs.push_back(f.ds());
    ft.push_back(f.dt());
  }
  for (std::size_t i = 0; i < c.coords.size(); ++i)
    for (std::size_t j = i + 1; j < c.coords.size(); ++j) out.push_back(fs[i] * ft[j] - ft[i] * fs[j]);
  return out;
}

}  // namespace

ImmersionResult is_immersion(const RationalCurve& c) {
  ImmersionResult r;
  if (c.degree() == 0) {
    r.immersion = false;
    return r;
  }
  bool any = false;
  Form g = Form::constant(Rat(1));
  for (const auto& j : jacobian_minors(c)) {
    if (j.is_zero()) continue;
    g = any ? form_gcd(g, j) : monic(j);
    any = true;
  }
  if (!any) {
    r.immersion = false;
    r.witness = Form(0);
    return r;
  }
  r.witness = primitive(g);
  r.immersion = g.degree() == 0;
  if (!r.immersion) r.boxes = isolate_roots(squarefree(g), Rat(1, 1 << 20));
  return r;
}

NonsingularCertificate is_nonsingular_knot(const RationalCurve& c, std::stop_token stop) {
  NonsingularCertificate cert;
  ImmersionResult imm = is_immersion(c);
  cert.immersion = imm.immersion;
  for (const auto& b : imm.boxes) {
    DoublePoint p;
    p.kind = DoublePoint::Kind::Cusp;
    std::complex<double> s, t;
    if (b.at_infinity) {
      s = 1.0;
      t = 0.0;
    } else if (b.kind == RootBox::Kind::Real) {
      s = b.approx_real();
      t = 1.0;
    } else {
      s = std::complex<double>(Rat((b.rect.x0 + b.rect.x1) / 2).get_d(), Rat((b.rect.y0 + b.rect.y1) / 2).get_d());
      t = 1.0;
    }
    p.params = {{{s, t}, {s, t}}};
    p.image = eval_numeric(c, s, t);
    cert.cusps.push_back(p);
    if (b.kind == RootBox::Kind::ComplexPair) {
      s = std::conj(s);
      p.params = {{{s, t}, {s, t}}};
      p.image = eval_numeric(c, s, t);
      cert.cusps.push_back(p);
    }
  }
  auto minors = jacobian_minors(c);
  if (imm.immersion && minors.size() >= 2) {
    // two fixed combinations of the minors; a nonzero resultant certifies no common root
    for (int attempt = 0; attempt < 4; ++attempt) {
      Form f(minors[0].degree()), g(minors[0].degree());
      for (std::size_t k = 0; k < minors.size(); ++k) {
        f = f + minors[k] * Rat(static_cast<long>(k + 1 + attempt));
        g = g + minors[k] * Rat(static_cast<long>((k * k + 3 * attempt) % 7 + 1));
      }
      if (f.is_zero() || g.is_zero()) continue;
      Rat r = resultant(f, g);
      if (sgn(r) != 0) {
        cert.resultants.emplace_back("jacobian-minor combinations", r);
        break;
      }
    }
  }
  DoublePointSystem sys = double_point_system(c.coords, stop);
  cert.double_points = points_of(c, sys);
  cert.eliminant_degree = std::max(sys.D.degree(), 0);
  cert.nonsingular = cert.immersion && cert.double_points.empty();
  return cert;
}

int real_degree(const Form& a, const Form& b) {
  if (a.degree() != b.degree()) throw MathError(ErrorKind::DegreeMismatch, "map components of different degree");
  if (a.degree() == 0) return 0;
  for (int k = 0; k < 64; ++k) {
    Rat c(k % 2 ? -(k + 1) / 2 : k / 2, 1 + k / 16);
    Form h = a - b * c;
    if (h.is_zero() || sgn(h[0]) == 0) continue;
    Poly ha = affine(h);
    if (gcd(ha, ha.derivative()).degree() > 0) continue;
    Poly bb = affine(b), dh = ha.derivative();
    int deg = 0;
    for (auto r : isolate_real_roots(ha)) deg += sign_at_root(ha, r, bb * dh);
    return deg;
  }
  throw InternalError("real_degree: no regular value found");
}

BiDegreeSplit bidegree_split(const RationalCurve& c) {
  if (c.ambient != Ambient::P3) throw MathError(ErrorKind::DimensionMismatch, "bi-degree needs a curve in RP^3");
  if (!on_quadric(c, segre_form())) throw MathError(ErrorKind::NotOnSegreQuadric, "curve is not on x0*x3 = x1*x2");
  const auto& p = c.coords;
  if (p[0].is_zero() || p[1].is_zero()) throw MathError(ErrorKind::DegenerateSplit, "a coordinate of the first row vanishes");
  BiDegreeSplit s;
  s.q0 = primitive(form_gcd(p[0], p[1]));
  s.q2 = exact_div(p[0], s.q0);
  s.q3 = exact_div(p[1], s.q0);
  if (s.q2.is_zero()) throw MathError(ErrorKind::DegenerateSplit, "vanishing factor");
  s.q1 = exact_div(p[2], s.q2);
  if (s.q1 * s.q3 != p[3]) throw InternalError("bidegree_split: p3 != q1 q3");
  int m = s.q0.degree();
  s.complex_bidegree = {m, c.degree() - m};
  s.real_bidegree = {real_degree(s.q0, s.q1), real_degree(s.q2, s.q3)};
  int x = std::abs(s.real_bidegree.first), y = std::abs(s.real_bidegree.second);
  s.orbit_normal_form = {std::min(x, y), std::max(x, y)};
  if (c.degree() == 4 && m == 2) {
    // a nonsingular quartic never splits this way
    if (is_nonsingular_knot(c).nonsingular) throw InternalError("nonsingular quartic with complex bi-degree (2,2)");
    s.singular_flag = true;
  }
  return s;
}

RationalCurve torus_knot(int d, int m, std::pair<Rat, Rat> radii) {
  if (d <= 0 || d % 2 != 0) throw MathError(ErrorKind::BadDegree, "torus knot degree must be even and positive");
  if (m < 1 || m > d / 2) throw MathError(ErrorKind::BadDegree, "need 1 <= m <= d/2");
  if (std::gcd(m, d / 2) != 1) throw MathError(ErrorKind::NotCoprime, "m and d/2 must be coprime");
  const Rat& a = radii.first;
  const Rat& b = radii.second;
  if (sgn(a) == 0 || sgn(b) == 0 || a * a + b * b != 1)
    throw MathError(ErrorKind::BadRadii, "radii must be a rational point of the unit circle off the axes");
  Int n;
  mpz_lcm(n.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Rat nn(n);
  GForm z(std::vector<GaussRat>{GaussRat(1), GaussRat(Rat(0), Rat(1))});
  Form q = Form::s() * Form::s() + Form::t() * Form::t();
  int h = d / 2;
  GForm w1 = power(z, 2 * m), w2 = power(z, d);
  Form base = power(q, h - m);
  std::vector<Form> coords{power(q, h) * nn, base * real_part(w1) * Rat(nn * a), base * imag_part(w1) * Rat(nn * a),
                           real_part(w2) * Rat(nn * b), imag_part(w2) * Rat(nn * b)};
  auto r = make_curve(std::move(coords), Ambient::P4);
  ensure(r.curve.on_sphere, "torus knot left the sphere");
  return r.curve;
}

std::vector<Rat> default_samples() {
  std::vector<Rat> s;
  for (int j = 1; j <= 13; ++j) s.emplace_back(j);
  return s;
}

int jacobian_rank(const std::vector<Form>& p, const std::vector<Rat>& samples, Chart chart) {
  if (p.empty()) throw MathError(ErrorKind::DimensionMismatch, "no coordinate forms");
  int d = p[0].degree();
  if (chart.coord < 0 || chart.coord >= static_cast<int>(p.size()) || chart.index < 0 || chart.index > d)
    throw MathError(ErrorKind::BadChart, "chart outside the coefficient table");
  if (sgn(p[static_cast<std::size_t>(chart.coord)][chart.index]) == 0)
    throw MathError(ErrorKind::BadChart, "chart coefficient vanishes");
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i] == samples[j]) throw MathError(ErrorKind::DegenerateChoice, "repeated sample parameter");
  std::size_t cols = p.size() * static_cast<std::size_t>(d + 1) - 1;
  Matrix m(samples.size(), cols);
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const Rat& t = samples[j];
    std::size_t col = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      // p_k(t) in the chart s = 1
      Rat val = p[k].eval(Rat(1), t);
      Rat tl(1);
      for (int l = 0; l <= d; ++l, tl *= t) {
        if (static_cast<int>(k) == chart.coord && l == chart.index) continue;
        Rat e = 2 * val * tl;
        m(j, col++) = k == 0 ? Rat(-e) : e;
      }
    }
  }
  return static_cast<int>(rank(m));
}

int jacobian_rank(const RationalCurve& c, const std::vector<Rat>& samples, Chart chart) {
  if (!c.on_sphere) throw MathError(ErrorKind::NotOnSphere, "jacobian rank needs a curve on the sphere");
  return jacobian_rank(c.coords, samples, chart);
}

RationalCurve apply_transform(const RationalCurve& c, const Matrix& t) {
  std::size_t n = c.coords.size();
  if (t.rows() != n || t.cols() != n) throw MathError(ErrorKind::DimensionMismatch, "transform size does not match the curve");
  if (sgn(det(t)) == 0) throw MathError(ErrorKind::NotInvertible, "singular transform");
  std::vector<Form> out;
  for (std::size_t i = 0; i < n; ++i) {
    Form f(c.degree());
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(t(i, j)) != 0) f = f + c.coords[j] * t(i, j);
    out.push_back(f);
  }
  return make_curve(std::move(out), c.ambient).curve;
}

RationalCurve reparametrize(const RationalCurve& c, const Matrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw MathError(ErrorKind::DimensionMismatch, "reparametrization needs a 2x2 matrix");
  if (sgn(det(m)) == 0) throw MathError(ErrorKind::NotInvertible, "singular reparametrization");
  std::vector<Form> out;
  for (const auto& f : c.coords) out.push_back(f.substitute(m(0, 0), m(1, 0), m(0, 1), m(1, 1)));
  return make_curve(std::move(out), c.ambient).curve;
}

std::optional<Vec> hyperplane_containing(const RationalCurve& c) {
  std::size_t n = c.coords.size();
  std::size_t d = static_cast<std::size_t>(c.degree()) + 1;
  Matrix at(d, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) at(j, i) = c.coords[i][static_cast<int>(j)];
  auto ns = nullspace(at);
  if (ns.empty()) return std::nullopt;
  return ns.front();
}

Matrix coefficient_matrix(const RationalCurve& c) {
  if (c.ambient != Ambient::P4) throw MathError(ErrorKind::DimensionMismatch, "coefficient matrix needs a curve in RP^4");
  if (c.degree() != 4) throw MathError(ErrorKind::BadDegree, "coefficient matrix needs degree 4");
  Matrix a(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) a(i, j) = c.coords[i][static_cast<int>(j)];
  if (auto h = hyperplane_containing(c)) {
    std::ostringstream os;
    os << "curve lies on the hyperplane";
    for (std::size_t i = 0; i < h->size(); ++i)
      if (sgn((*h)[i]) != 0) os << " " << to_string((*h)[i]) << "*x" << i;
    throw MathError(ErrorKind::NotInvertible, os.str());
  }
  return a;
}

}  // namespace realknot
