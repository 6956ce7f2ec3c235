#include "realknot/forms.hpp"

#include <algorithm>
#include <sstream>

#include "realknot/linalg.hpp"

namespace realknot {

namespace {

template <class T>
std::string form_string(const BinaryForm<T>& f) {
  int d = f.degree();
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= d; ++j) {
    if (f[j] == T(0)) continue;
    std::string c = to_string(f[j]);
    if (c.find_first_of("+-", 1) != std::string::npos) c = "(" + c + ")";
    std::string m;
    if (d - j > 0) m += "s" + (d - j > 1 ? "^" + std::to_string(d - j) : std::string());
    if (j > 0) m += std::string(m.empty() ? "" : "*") + "t" + (j > 1 ? "^" + std::to_string(j) : std::string());
    if (!first) os << " + ";
    first = false;
    if (m.empty()) os << c;
    else if (c == "1") os << m;
    else if (c == "-1") os << "-" << m;
    else os << c << "*" << m;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string to_string(const Form& f) { return form_string(f); }
std::string to_string(const GForm& f) { return form_string(f); }

GForm to_gauss(const Form& f) {
  std::vector<GaussRat> c;
  for (const auto& x : f.coeffs()) c.emplace_back(x);
  return GForm(std::move(c));
}

Form real_part(const GForm& f) {
  std::vector<Rat> c;
  for (const auto& x : f.coeffs()) c.push_back(x.re);
  return Form(std::move(c));
}

Form imag_part(const GForm& f) {
  std::vector<Rat> c;
  for (const auto& x : f.coeffs()) c.push_back(x.im);
  return Form(std::move(c));
}

Poly affine(const Form& f) {
  std::vector<Rat> c(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly(std::move(c));
}

Poly affine_at_infinity(const Form& f) { return Poly(f.coeffs()); }

Form homogenize(const Poly& p, int d) {
  ensure(p.degree() <= d, "homogenize: degree exceeds target");
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(d - k)] = p.coeff(k);
  return Form(std::move(c));
}

Rat content(const Form& f) {
  Int den(1), num(0);
  for (const auto& x : f.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
  }
  return Rat(num, den);
}

Form primitive(const Form& f) {
  if (f.is_zero()) return f;
  Rat c = content(f);
  Form r = f * Rat(1 / c);
  if (sgn(r[r.order_at_infinity()]) < 0) r *= Rat(-1);
  return r;
}

Form monic(const Form& f) {
  if (f.is_zero()) return f;
  Rat l = f[f.order_at_infinity()];
  return f * Rat(1 / l);
}

Form exact_div(const Form& a, const Form& b) {
  if (b.is_zero()) throw MathError(ErrorKind::ZeroForm, "division by the zero form");
  int dq = a.degree() - b.degree();
  if (a.is_zero()) return Form(std::max(dq, 0));
  if (dq < 0) throw MathError(ErrorKind::NonDivisible, to_string(b) + " does not divide " + to_string(a));
  // long division in s-descending order; the powers of t ride along
  std::vector<Rat> r = a.coeffs();
  std::vector<Rat> q(static_cast<std::size_t>(dq) + 1);
  int lb = b.order_at_infinity();
  int db = b.degree();
  for (int j = 0; j <= dq; ++j) {
    Rat f = r[static_cast<std::size_t>(j + lb)] / b[lb];
    q[static_cast<std::size_t>(j)] = f;
    if (sgn(f) == 0) continue;
    for (int i = lb; i <= db; ++i) r[static_cast<std::size_t>(j + i)] -= f * b[i];
  }
  for (const auto& x : r)
    if (sgn(x) != 0) throw MathError(ErrorKind::NonDivisible, to_string(b) + " does not divide " + to_string(a));
  return Form(std::move(q));
}

Form form_gcd(const Form& a, const Form& b) {
  if (a.is_zero() && b.is_zero()) throw MathError(ErrorKind::ZeroForm, "gcd of two zero forms");
  if (b.is_zero()) return monic(a);
  if (a.is_zero()) return monic(b);
  int ot = std::min(a.order_at_infinity(), b.order_at_infinity());
  Poly g = gcd(affine(a), affine(b));
  Form h = homogenize(g, g.degree()) * power(Form::t(), ot);
  return monic(h);
}

Rat resultant(const Form& a, const Form& b) {
  if (a.is_zero() || b.is_zero()) throw MathError(ErrorKind::ZeroForm, "resultant with the zero form");
  return resultant(affine(a), affine(b), a.degree(), b.degree());
}

Rat augmented_sylvester_det(const Form& p0, const Form& p1, int k) {
  int d = p0.degree();
  if (p1.degree() != d) throw MathError(ErrorKind::DegreeMismatch, "augmented Sylvester matrix needs equal degrees");
  if (k < 0) throw MathError(ErrorKind::BadDegree, "negative augmentation");
  std::size_t n = static_cast<std::size_t>(2 * d + k + 1);
  Matrix m(n, n);
  // column c holds s^{n-1-c} t^c in the chart s = 1
  std::size_t row = 0;
  for (int i = 0; i < d; ++i, ++row)
    for (int j = 0; j <= d; ++j) m(row, static_cast<std::size_t>(i + j)) = p0[j];
  for (int i = 0; i <= d + k; ++i, ++row)
    for (int j = 0; j <= d; ++j) m(row, static_cast<std::size_t>(i + j)) = p1[j];
  return det(m);
}

Form squarefree(const Form& f) {
  if (f.is_zero()) return f;
  int ot = f.order_at_infinity();
  Poly sq = squarefree(affine(f));
  Form h = homogenize(sq, sq.degree());
  if (ot > 0) h = h * Form::t();
  return primitive(h);
}

int real_root_count(const Form& p, std::optional<std::pair<Rat, Rat>> interval) {
  if (p.is_zero()) throw MathError(ErrorKind::ZeroForm, "root count of the zero form");
  Poly a = affine(p);
  if (interval) return a.degree() > 0 ? count_roots(a, interval->first, interval->second) : 0;
  return count_real_roots(a) + (p.order_at_infinity() > 0 ? 1 : 0);
}

bool vandermonde_check(const std::vector<Rat>& points, int d) {
  if (d < 0) throw MathError(ErrorKind::BadDegree, "negative degree");
  Matrix m(points.size(), static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Rat p(1);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j, p *= points[i]) m(i, j) = p;
  }
  return rank(m) == static_cast<std::size_t>(d) + 1;
}

std::vector<RootBox> isolate_roots(const Form& p, const Rat& precision) {
  if (p.is_zero()) throw MathError(ErrorKind::ZeroForm, "isolating roots of the zero form");
  ensure(sgn(precision) > 0, "isolate_roots: precision must be positive");
  std::vector<RootBox> out;
  int ot = p.order_at_infinity();
  if (ot > 0) {
    RootBox b;
    b.at_infinity = true;
    b.multiplicity = ot;
    out.push_back(b);
  }
  auto parts = squarefree_decomposition(affine(p));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Poly& q = parts[i];
    if (q.degree() <= 0) continue;
    for (auto r : isolate_real_roots(q)) {
      refine(q, r, precision);
      RootBox b;
      b.real = r;
      b.multiplicity = static_cast<int>(i) + 1;
      out.push_back(b);
    }
    for (const auto& rect : isolate_complex_roots(q, precision)) {
      RootBox b;
      b.kind = RootBox::Kind::ComplexPair;
      b.rect = rect;
      b.multiplicity = static_cast<int>(i) + 1;
      out.push_back(b);
    }
  }
  return out;
}

}  // namespace realknot
