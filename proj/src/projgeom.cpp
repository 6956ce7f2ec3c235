#include "realknot/projgeom.hpp"

#include <algorithm>
#include <sstream>

#include "realknot/error.hpp"

namespace realknot {

ProjPoint::ProjPoint(std::vector<GaussRat> coords) : x(std::move(coords)) {
  if (std::all_of(x.begin(), x.end(), [](const GaussRat& c) { return c.is_zero(); }))
    throw MathError(ErrorKind::AllZero, "projective point with all coordinates zero");
}

ProjPoint ProjPoint::real(const Vec& coords) {
  std::vector<GaussRat> c;
  for (const auto& r : coords) c.emplace_back(r);
  return ProjPoint(std::move(c));
}

ProjPoint ProjPoint::canonical() const {
  ProjPoint p = *this;
  auto it = std::find_if(x.begin(), x.end(), [](const GaussRat& c) { return !c.is_zero(); });
  GaussRat f = *it;
  for (auto& c : p.x) c /= f;
  return p;
}

bool ProjPoint::is_real() const {
  ProjPoint c = canonical();
  return std::all_of(c.x.begin(), c.x.end(), [](const GaussRat& z) { return z.is_real(); });
}

ProjPoint ProjPoint::conj() const {
  ProjPoint p = *this;
  for (auto& c : p.x) c = c.conj();
  return p;
}

Vec ProjPoint::real_coords() const {
  ProjPoint c = canonical();
  Vec v;
  for (const auto& z : c.x) {
    ensure(z.is_real(), "real_coords of a non-real point");
    v.push_back(z.re);
  }
  return v;
}

std::string ProjPoint::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ":" : "") << to_string(x[i]);
  os << "]";
  return os.str();
}

bool same_point(const ProjPoint& a, const ProjPoint& b) {
  if (a.x.size() != b.x.size()) return false;
  for (std::size_t i = 0; i < a.x.size(); ++i)
    for (std::size_t j = i + 1; j < a.x.size(); ++j)
      if (a.x[i] * b.x[j] != a.x[j] * b.x[i]) return false;
  return true;
}

QuadraticForm::QuadraticForm(Matrix sym) : m(std::move(sym)) {
  if (!m.is_symmetric()) throw MathError(ErrorKind::DimensionMismatch, "quadratic form matrix must be symmetric");
}

QuadraticForm QuadraticForm::from_monomials(int n, const Vec& coeffs) {
  std::size_t sz = static_cast<std::size_t>(n) + 1;
  ensure(coeffs.size() == sz * (sz + 1) / 2, "from_monomials: wrong coefficient count");
  Matrix m(sz, sz);
  std::size_t k = 0;
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = i; j < sz; ++j, ++k) {
      if (i == j) m(i, i) = coeffs[k];
      else m(i, j) = m(j, i) = coeffs[k] / 2;
    }
  return QuadraticForm(std::move(m));
}

Rat QuadraticForm::eval(const Vec& v) const { return dot(v, m * v); }

Rat QuadraticForm::polar(const Vec& a, const Vec& b) const { return dot(a, m * b); }

GaussRat QuadraticForm::eval(const std::vector<GaussRat>& v) const {
  ensure(v.size() == m.rows(), "QuadraticForm::eval: dimension mismatch");
  GaussRat s;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(m(i, j)) != 0) s += GaussRat(m(i, j)) * v[i] * v[j];
  return s;
}

bool QuadraticForm::vanishes_at(const ProjPoint& p) const { return eval(p.x).is_zero(); }

std::string QuadraticForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) {
      Rat c = i == j ? m(i, i) : Rat(2 * m(i, j));
      if (sgn(c) == 0) continue;
      os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
      first = false;
      Rat a = abs(c);
      if (a != 1) os << to_string(a) << "*";
      if (i == j) os << "x" << i << "^2";
      else os << "x" << i << "*x" << j;
    }
  if (first) os << "0";
  return os.str();
}

QuadraticForm sphere_form() { return QuadraticForm(Matrix::diag({Rat(-1), Rat(1), Rat(1), Rat(1), Rat(1)})); }

QuadraticForm standard_empty_conic() { return QuadraticForm(Matrix::identity(3)); }

Inertia signature(const QuadraticForm& q) { return inertia(q.m); }

bool is_definite(const QuadraticForm& q) {
  Inertia s = signature(q);
  int n = static_cast<int>(q.m.rows());
  return s.pos == n || s.neg == n;
}

const char* to_string(Component c) { return c == Component::IdentitySide ? "identity-side" : "reflection-side"; }

Component component_detector(const Matrix& m) {
  ensure(m.rows() == 5 && m.cols() == 5, "component_detector: expects a 5x5 matrix");
  int sd = sgn(det(m)), s0 = sgn(m(0, 0));
  ensure(sd != 0 && s0 != 0, "component_detector: not a Lorentz matrix");
  return sd * s0 > 0 ? Component::IdentitySide : Component::ReflectionSide;
}

std::optional<Component> in_po41(const Matrix& m) {
  if (m.rows() != 5 || m.cols() != 5) throw MathError(ErrorKind::DimensionMismatch, "PO(4,1) test needs a 5x5 matrix");
  Matrix j = sphere_form().m;
  Matrix g = m.transpose() * j * m;
  Rat lambda = -g(0, 0);
  if (sgn(lambda) <= 0) return std::nullopt;
  if (g != lambda * j) return std::nullopt;
  return component_detector(m);
}

std::vector<QuadraticForm> quadric_through_set(int n, const std::vector<ProjPoint>& points) {
  std::size_t sz = static_cast<std::size_t>(n) + 1;
  std::size_t ncoef = sz * (sz + 1) / 2;
  std::vector<Vec> rows;
  for (const auto& p : points) {
    if (p.dim() != n) throw MathError(ErrorKind::DimensionMismatch, "point of the wrong dimension");
    Vec re(ncoef), im(ncoef);
    std::size_t k = 0;
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = i; j < sz; ++j, ++k) {
        GaussRat v = p.x[i] * p.x[j];
        re[k] = v.re;
        im[k] = v.im;
      }
    rows.push_back(re);
    if (!is_zero(im)) rows.push_back(im);
  }
  Matrix a(rows.size(), ncoef);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ncoef; ++c) a(r, c) = rows[r][c];
  std::vector<QuadraticForm> out;
  if (rows.empty()) {
    for (std::size_t c = 0; c < ncoef; ++c) {
      Vec e(ncoef);
      e[c] = 1;
      out.push_back(QuadraticForm::from_monomials(n, e));
    }
    return out;
  }
  for (const auto& v : nullspace(a)) out.push_back(QuadraticForm::from_monomials(n, v));
  return out;
}

std::vector<QuadraticForm> conic_through(const std::vector<ProjPoint>& points) { return quadric_through_set(2, points); }

namespace {

// Leading principal minors of a + lambda b as polynomials in lambda.
std::vector<Poly> pencil_minors(const Matrix& a, const Matrix& b) {
  std::vector<Poly> out;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    // degree <= k, interpolate from k + 1 samples
    std::vector<Rat> xs, ys;
    for (std::size_t s = 0; s <= k; ++s) {
      Rat lam(static_cast<long>(s));
      Matrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(i, j) + lam * b(i, j);
      xs.push_back(lam);
      ys.push_back(det(m));
    }
    out.push_back(interpolate(xs, ys));
  }
  return out;
}

QuadraticForm positive_member(const Matrix& m) {
  QuadraticForm q(m);
  Inertia s = signature(q);
  Matrix r = s.neg == static_cast<int>(m.rows()) ? Rat(-1) * m : m;
  // clear denominators for a tidy representative
  Vec flat;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) flat.push_back(r(i, j));
  Vec p = primitive(flat);
  if (sgn(p[0]) < 0) p = scaled(p, Rat(-1));
  Matrix out(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) out(i, j) = p[i * r.cols() + j];
  return QuadraticForm(out);
}

}  // namespace

QuadraticForm empty_conic_through(const std::vector<ProjPoint>& points) {
  if (points.size() != 4) throw MathError(ErrorKind::NotConjugatePairs, "need exactly four points");
  for (const auto& p : points) {
    if (p.dim() != 2) throw MathError(ErrorKind::DimensionMismatch, "conic points need three coordinates");
    if (p.is_real()) throw MathError(ErrorKind::NotConjugatePairs, "real point " + p.str() + " among the base points");
    bool paired = std::any_of(points.begin(), points.end(), [&](const ProjPoint& q) { return same_point(q, p.conj()); });
    if (!paired) throw MathError(ErrorKind::NotConjugatePairs, "conjugate of " + p.str() + " missing");
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (same_point(points[i], points[j])) throw MathError(ErrorKind::NotConjugatePairs, "repeated base point");

  auto pencil = conic_through(points);
  if (pencil.size() != 2) throw MathError(ErrorKind::NoEmptyMember, "base points do not span a pencil");
  const Matrix& a = pencil[0].m;
  const Matrix& b = pencil[1].m;
  for (const Matrix* m : {&a, &b})
    if (is_definite(QuadraticForm(*m))) return positive_member(*m);

  auto minors = pencil_minors(a, b);
  Poly prod(1);
  for (const auto& p : minors)
    if (!p.is_zero()) prod *= p;
  std::vector<Rat> samples;
  auto roots = isolate_real_roots(prod);
  if (roots.empty()) {
    samples.emplace_back(1);
  } else {
    samples.push_back(roots.front().lo - 1);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) samples.push_back((roots[i].hi + roots[i + 1].lo) / 2);
    samples.push_back(roots.back().hi + 1);
  }
  for (const auto& lam : samples) {
    Matrix m = a + lam * b;
    if (is_definite(QuadraticForm(m))) return positive_member(m);
  }
  throw MathError(ErrorKind::NoEmptyMember, "no definite member in the pencil");
}

Matrix RetractTransform::path_rational(const Rat& t) const {
  return (Rat(1) - t) * Matrix::identity(rational.rows()) + t * rational;
}

Matrix RetractTransform::path_radical(const Rat& t) const { return t * radical; }

std::vector<QuadExt> RetractTransform::apply(const Vec& v) const {
  Vec r = rational * v, s = radical * v;
  std::vector<QuadExt> out;
  for (std::size_t i = 0; i < r.size(); ++i) out.push_back(make_quad(r[i], s[i], delta));
  return out;
}

RetractTransform retract_to_conic(const Vec& u, const Vec& v, const Rat& d, const QuadraticForm& target) {
  if (u.size() != 3 || v.size() != 3 || target.m.rows() != 3)
    throw MathError(ErrorKind::DimensionMismatch, "retract works on plane coordinates");
  if (!is_definite(target)) throw MathError(ErrorKind::NoEmptyMember, "target conic is not definite");
  if (sgn(d) >= 0) throw MathError(ErrorKind::DegenerateChoice, "point is real");
  Matrix uv(3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    uv(i, 0) = u[i];
    uv(i, 1) = v[i];
  }
  if (rank(uv) < 2) throw MathError(ErrorKind::DegenerateChoice, "point is real");

  static const Rat kCandidates[4][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  Vec theta;
  for (const auto& c : kCandidates) {
    Matrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      m(i, 0) = c[i];
      m(i, 1) = u[i];
      m(i, 2) = v[i];
    }
    if (sgn(det(m)) != 0) {
      theta = Vec(c, c + 3);
      break;
    }
  }
  if (theta.empty()) throw MathError(ErrorKind::DegenerateChoice, "every candidate lies on the line");

  Rat a = target.eval(u);
  Rat quv = target.polar(u, v);
  Rat k = quv / a;
  Rat delta = -d * (a * target.eval(v) - quv * quv);
  ensure(sgn(delta) > 0, "retract: Cauchy-Schwarz violated for a definite form");

  // basis (e0, U, V, theta) -> (e0, sqrt(delta)/a U, V - k U, theta)
  Matrix basis(4, 4), img_rat(4, 4), img_rad(4, 4);
  basis(0, 0) = img_rat(0, 0) = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    basis(i + 1, 1) = u[i];
    basis(i + 1, 2) = v[i];
    basis(i + 1, 3) = theta[i];
    img_rad(i + 1, 1) = u[i] / a;
    img_rat(i + 1, 2) = v[i] - k * u[i];
    img_rat(i + 1, 3) = theta[i];
  }
  Matrix inv = inverse(basis);
  RetractTransform t{img_rat * inv, img_rad * inv, delta, theta};
  Rat root;
  if (rational_sqrt(delta, &root)) {
    t.rational = t.rational + root * t.radical;
    t.radical = Matrix(4, 4);
  }
  return t;
}

RetractTransform retract_to_conic(const ProjPoint& z, const QuadraticForm& target) {
  std::size_t off = z.x.size() == 4 ? 1 : 0;
  if (z.x.size() != 3 && z.x.size() != 4) throw MathError(ErrorKind::DimensionMismatch, "point must lie in a plane of RP^3");
  if (off == 1 && !z.x[0].is_zero()) throw MathError(ErrorKind::DimensionMismatch, "point is not on the plane x0 = 0");
  Vec u, v;
  for (std::size_t i = off; i < z.x.size(); ++i) {
    u.push_back(z.x[i].re);
    v.push_back(z.x[i].im);
  }
  return retract_to_conic(u, v, Rat(-1), target);
}

bool retract_maps_onto(const RetractTransform& t, const Vec& u, const Vec& v, const Rat& d, const QuadraticForm& target) {
  auto lift = [](const Vec& w) {
    Vec r{Rat(0)};
    r.insert(r.end(), w.begin(), w.end());
    return r;
  };
  auto tu = t.apply(lift(u)), tv = t.apply(lift(v));
  // Q(Tz) = Q(TU) + d Q(TV) + 2 sqrt(d) B(TU, TV), with sqrt(d) outside Q(sqrt(delta))
  auto form = [&](const std::vector<QuadExt>& x, const std::vector<QuadExt>& y) {
    QuadExt s;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) s += QuadExt(target.m(i, j)) * x[i + 1] * y[j + 1];
    return s;
  };
  if (!tu[0].is_zero() || !tv[0].is_zero()) return false;
  QuadExt real_part = form(tu, tu) + QuadExt(d) * form(tv, tv);
  return real_part.is_zero() && form(tu, tv).is_zero();
}

}  // namespace realknot
