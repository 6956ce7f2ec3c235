#include "realknot/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "realknot/error.hpp"
#include "realknot/linalg.hpp"

namespace realknot {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
Poly::Poly(const Rat& c) : c_{c} { trim(); }
Poly::Poly(int c) : c_{Rat(c)} { trim(); }

Poly Poly::monomial(const Rat& c, int k) {
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
  v[static_cast<std::size_t>(k)] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<std::size_t>(k)];
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

GaussRat Poly::eval(const GaussRat& z) const {
  GaussRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc.re += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Poly r = *this;
  Rat l = lead();
  for (auto& c : r.c_) c /= l;
  return r;
}

namespace {

// Multiply by a positive rational so the coefficients become coprime integers.
Poly positive_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  Int den(1), num(0);
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : p.coeffs()) mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  return p * Rat(den, num);
}

}  // namespace

Poly Poly::primitive() const {
  Poly r = positive_primitive(*this);
  if (sgn(r.lead()) < 0) r *= Rat(-1);
  return r;
}

Poly Poly::shift(const Rat& a) const {
  // Horner in x + a
  Poly acc;
  Poly lin(std::vector<Rat>{a, Rat(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= lin;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::scale(const Rat& a) const {
  Poly r = *this;
  Rat pw(1);
  for (auto& c : r.c_) {
    c *= pw;
    pw *= a;
  }
  r.trim();
  return r;
}

Poly Poly::reverse(int formal_degree) const {
  ensure(formal_degree >= degree(), "Poly::reverse: formal degree too small");
  std::vector<Rat> v(static_cast<std::size_t>(formal_degree) + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) v[static_cast<std::size_t>(formal_degree) - k] = c_[k];
  return Poly(std::move(v));
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += Poly(*it);
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& r) {
  for (auto& c : c_) c *= r;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string Poly::str(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    if (a != 1 || k == 0) os << to_string(a);
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> r = a.coeffs();
  const auto& bc = b.coeffs();
  int db = b.degree();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db) + 1);
  Rat lb = b.lead();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rat f = r[static_cast<std::size_t>(k + db)] / lb;
    q[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

std::optional<Poly> exact_quotient(const Poly& a, const Poly& b) {
  auto qr = divmod(a, b);
  if (!qr.rem.is_zero()) return std::nullopt;
  return qr.quot;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.primitive(), y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = divmod(x, y).rem.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly squarefree(const Poly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Poly(1);
  return (p / gcd(p, p.derivative())).monic();
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
  std::vector<Poly> out;
  if (p.degree() <= 0) return out;
  Poly f = p.monic();
  Poly dp = f.derivative();
  Poly a = gcd(f, dp);
  Poly b = f / a;
  Poly c = dp / a;
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    out.push_back(g);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

Poly invmod(const Poly& a, const Poly& m) {
  // extended Euclid tracking the coefficient of a
  Poly r0 = m, r1 = a % m;
  Poly s0, s1(1);
  while (!r1.is_zero()) {
    auto qr = divmod(r0, r1);
    Poly s2 = s0 - qr.quot * s1;
    r0 = std::move(r1);
    r1 = std::move(qr.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw InternalError("invmod: not invertible");
  return (s0 * (Rat(1) / r0.lead())) % m;
}

Poly powmod(const Poly& a, unsigned k, const Poly& m) {
  Poly result(1), base = a % m;
  result = result % m;
  while (k > 0) {
    if (k & 1U) result = (result * base) % m;
    base = (base * base) % m;
    k >>= 1U;
  }
  return result;
}

Rat resultant(const Poly& a, const Poly& b, int da, int db) {
  ensure(da >= a.degree() && db >= b.degree(), "resultant: formal degree below actual degree");
  int n = da + db;
  if (n == 0) return Rat(1);
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  // columns hold descending powers x^{n-1} .. x^0
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(i + da - j)) = a.coeff(j);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m(static_cast<std::size_t>(db + i), static_cast<std::size_t>(i + db - j)) = b.coeff(j);
  return det(m);
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  ensure(xs.size() == ys.size(), "interpolate: size mismatch");
  std::size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  Poly acc;
  for (std::size_t k = n; k-- > 0;) {
    acc *= Poly(std::vector<Rat>{-xs[k], Rat(1)});
    acc += Poly(dd[k]);
  }
  return acc;
}

int precision_budget() {
  const char* env = std::getenv("REALKNOT_PRECISION_BUDGET");
  if (env == nullptr || *env == '\0') return 64;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || v < 0) return 64;
  return static_cast<int>(std::min(v, 1L << 20));
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(positive_primitive(p));
  Poly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(positive_primitive(d));
  while (true) {
    Poly r = divmod(seq[seq.size() - 2], seq.back()).rem;
    if (r.is_zero()) break;
    seq.push_back(positive_primitive(-r));
  }
  return seq;
}

namespace {

int variations(const std::vector<Poly>& seq, const Rat& x) {
  int v = 0, prev = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int count_roots(const std::vector<Poly>& sturm, const Rat& a, const Rat& b) {
  if (sturm.empty()) return 0;
  return variations(sturm, a) - variations(sturm, b);
}

int count_roots(const Poly& p, const Rat& a, const Rat& b) { return count_roots(sturm_sequence(squarefree(p)), a, b); }

int count_roots_closed(const Poly& p, const Rat& a, const Rat& b) {
  return count_roots(p, a, b) + (p.sign_at(a) == 0 ? 1 : 0);
}

Rat root_bound(const Poly& p) {
  ensure(!p.is_zero(), "root_bound of zero polynomial");
  Rat m(0);
  Rat l = abs(p.lead());
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rat(abs(p.coeff(k)) / l));
  return m + 1;
}

int count_real_roots(const Poly& p) {
  if (p.degree() <= 0) return 0;
  Rat b = root_bound(p);
  return count_roots(p, -b, b);
}

namespace {

void isolate_in(const Poly& q, const std::vector<Poly>& sturm, Rat a, Rat b, int n, std::vector<RealRoot>& out) {
  // invariant: n roots of q in (a, b]
  if (n == 0) return;
  if (n == 1) {
    while (true) {
      if (q.sign_at(b) == 0) {
        out.push_back({b, b});
        return;
      }
      if (q.sign_at(a) != 0) {
        out.push_back({a, b});
        return;
      }
      Rat m = (a + b) / 2;
      if (count_roots(sturm, m, b) == 1) a = m;
      else b = m;
    }
  }
  Rat m = (a + b) / 2;
  int left = count_roots(sturm, a, m);
  isolate_in(q, sturm, a, m, left, out);
  isolate_in(q, sturm, m, b, n - left, out);
}

}  // namespace

std::vector<RealRoot> isolate_real_roots(const Poly& p) {
  std::vector<RealRoot> out;
  if (p.degree() <= 0) return out;
  Poly q = squarefree(p);
  auto sturm = sturm_sequence(q);
  Rat b = root_bound(q);
  isolate_in(q, sturm, -b, b, count_roots(sturm, -b, b), out);
  return out;
}

void bisect_once(const Poly& p, RealRoot& r) {
  if (r.exact()) return;
  Rat m = r.mid();
  int s = p.sign_at(m);
  if (s == 0) {
    r.lo = m;
    r.hi = m;
  } else if (s == p.sign_at(r.lo)) {
    r.lo = m;
  } else {
    r.hi = m;
  }
}

void refine(const Poly& p, RealRoot& r, const Rat& w) {
  while (!r.exact() && r.width() > w) bisect_once(p, r);
}

int sign_at_root(const Poly& p, RealRoot& r, const Poly& q, std::stop_token stop) {
  if (q.is_zero()) return 0;
  if (r.exact()) return q.sign_at(r.lo);
  Poly g = gcd(p, q);
  if (g.degree() > 0 && g.sign_at(r.lo) * g.sign_at(r.hi) < 0) return 0;
  Poly qs = squarefree(q);
  Rat w0 = r.width();
  int budget = precision_budget();
  unsigned long bits = 8;
  for (int round = 0;; ++round) {
    if (stop.stop_requested()) throw MathError(ErrorKind::Cancelled, "sign evaluation cancelled");
    if (r.exact()) return q.sign_at(r.lo);
    if (count_roots_closed(qs, r.lo, r.hi) == 0) return q.sign_at(r.lo);
    if (round >= budget) throw MathError(ErrorKind::PrecisionExhausted, "sign of a polynomial at an algebraic root");
    Rat target = w0;
    mpq_div_2exp(target.get_mpq_t(), w0.get_mpq_t(), bits);
    refine(p, r, target);
    bits *= 2;
  }
}

double approx(const RealRoot& r) { return to_double(r.mid()); }

namespace {

struct EdgePolys {
  Poly u;
  Poly v;
};

// p(a + tau (b - a)) split into real and imaginary parts.
EdgePolys edge_polys(const Poly& p, const GaussRat& a, const GaussRat& b) {
  Poly zr(std::vector<Rat>{a.re, b.re - a.re});
  Poly zi(std::vector<Rat>{a.im, b.im - a.im});
  Poly ur, ui;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Poly nr = ur * zr - ui * zi + Poly(*it);
    Poly ni = ur * zi + ui * zr;
    ur = std::move(nr);
    ui = std::move(ni);
  }
  return {ur, ui};
}

// Position of (u, v) among the eight axis/quadrant classes, counterclockwise from +x.
int angle_class(int su, int sv) {
  if (sv == 0) {
    ensure(su != 0, "angle_class at a zero");
    return su > 0 ? 0 : 4;
  }
  if (su == 0) return sv > 0 ? 2 : 6;
  if (sv > 0) return su > 0 ? 1 : 3;
  return su > 0 ? 7 : 5;
}

int class_diff(int c1, int c2) {
  int d = ((c2 - c1) % 8 + 8) % 8;
  if (d > 4) d -= 8;
  ensure(d != 4, "winding: ambiguous half turn");
  return d;
}

struct EdgeWalker {
  const EdgePolys& e;
  Poly w;
  std::vector<Poly> sturm;

  int cls(const Rat& t) const { return angle_class(e.u.sign_at(t), e.v.sign_at(t)); }

  int open_count(const Rat& a, const Rat& b) const {
    if (sturm.empty()) return 0;
    return count_roots(sturm, a, b) - (w.sign_at(b) == 0 ? 1 : 0);
  }

  int walk(const Rat& a, const Rat& b, int ca, int cb) const {
    int n = open_count(a, b);
    if (n == 0 || (n == 1 && (ca & 1) && (cb & 1))) return class_diff(ca, cb);
    Rat m = (a + b) / 2;
    int cm = cls(m);
    return walk(a, m, ca, cm) + walk(m, b, cm, cb);
  }
};

// Winding of p along the segment, in eighths of a turn.
int edge_winding(const Poly& p, const GaussRat& a, const GaussRat& b) {
  EdgePolys e = edge_polys(p, a, b);
  EdgeWalker walker{e, Poly(), {}};
  Poly uv = e.u * e.v;
  if (!uv.is_zero()) {
    walker.w = squarefree(uv);
    walker.sturm = sturm_sequence(walker.w);
  }
  Rat zero(0), one(1);
  return walker.walk(zero, one, walker.cls(zero), walker.cls(one));
}

std::optional<int> try_count(const Poly& p, const Rect& r) {
  GaussRat c0(r.x0, r.y0), c1(r.x1, r.y0), c2(r.x1, r.y1), c3(r.x0, r.y1);
  if (vanishes_on_segment(p, c0, c1) || vanishes_on_segment(p, c1, c2) || vanishes_on_segment(p, c2, c3) ||
      vanishes_on_segment(p, c3, c0))
    return std::nullopt;
  int total = edge_winding(p, c0, c1) + edge_winding(p, c1, c2) + edge_winding(p, c2, c3) + edge_winding(p, c3, c0);
  ensure(total % 8 == 0, "winding number is not an integer");
  return total / 8;
}

}  // namespace

bool vanishes_on_segment(const Poly& p, const GaussRat& a, const GaussRat& b) {
  EdgePolys e = edge_polys(p, a, b);
  Poly g;
  if (e.u.is_zero()) g = e.v;
  else if (e.v.is_zero()) g = e.u;
  else g = gcd(e.u, e.v);
  if (g.is_zero()) return true;
  if (g.degree() == 0) return false;
  return count_roots_closed(g, Rat(0), Rat(1)) > 0;
}

int count_roots_in_rect(const Poly& p, const Rect& r) {
  auto n = try_count(p, r);
  if (!n) throw InternalError("count_roots_in_rect: root on the boundary");
  return *n;
}

std::vector<Rect> isolate_complex_roots(const Poly& p, const Rat& precision) {
  std::vector<Rect> out;
  if (p.degree() <= 1) return out;
  Poly q = squarefree(p);
  int expected = (q.degree() - count_real_roots(q)) / 2;
  if (expected == 0) return out;
  Rat b = root_bound(q);
  // Shrink the strip's lower edge towards the real axis until it holds every upper root.
  Rat ymin = b / 4;
  Rect top;
  for (;;) {
    top = Rect{-b, b, ymin, b};
    auto n = try_count(q, top);
    if (n && *n == expected) break;
    ensure(!n || *n < expected, "complex isolation: too many roots in the upper strip");
    ymin /= 2;
  }
  static const Rat kSplits[] = {Rat(1, 2), Rat(3, 7), Rat(4, 7), Rat(2, 5), Rat(3, 5), Rat(5, 11), Rat(6, 11)};
  std::vector<std::pair<Rect, int>> stack{{top, expected}};
  while (!stack.empty()) {
    auto [r, n] = stack.back();
    stack.pop_back();
    if (n == 0) continue;
    if (n == 1 && r.width() < precision && r.height() < precision) {
      out.push_back(r);
      continue;
    }
    bool vertical = r.width() >= r.height();
    bool done = false;
    for (int k = 0; !done; ++k) {
      Rat f = k < 7 ? kSplits[k] : Rat(k, 2 * k + 1);
      Rect lo = r, hi = r;
      if (vertical) {
        Rat x = r.x0 + f * r.width();
        lo.x1 = x;
        hi.x0 = x;
      } else {
        Rat y = r.y0 + f * r.height();
        lo.y1 = y;
        hi.y0 = y;
      }
      auto nl = try_count(q, lo);
      if (!nl) continue;
      auto nh = try_count(q, hi);
      ensure(nh.has_value(), "complex isolation: split line hit a root");
      ensure(*nl + *nh == n, "complex isolation: counts do not add up");
      stack.push_back({lo, *nl});
      stack.push_back({hi, *nh});
      done = true;
    }
  }
  std::sort(out.begin(), out.end(), [](const Rect& x, const Rect& y) {
    return x.x0 != y.x0 ? x.x0 < y.x0 : x.y0 < y.y0;
  });
  return out;
}

Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rat(0);
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rat(fl) == lo) return lo;
  if (Rat(fl + 1) <= hi) return Rat(fl + 1);
  return Rat(fl) + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl));
}

std::vector<Poly> quadratic_factors(const Poly& p, int bits) {
  std::vector<Poly> out;
  Poly q = squarefree(p);
  Rat prec(1), tol(1);
  mpq_div_2exp(prec.get_mpq_t(), prec.get_mpq_t(), static_cast<mp_bitcnt_t>(bits + 20));
  mpq_div_2exp(tol.get_mpq_t(), tol.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  for (const Rect& r : isolate_complex_roots(q, prec)) {
    // x^2 - 2 Re(z) x + |z|^2 for the root z in r
    Rat re = (r.x0 + r.x1) / 2, im = (r.y0 + r.y1) / 2;
    Rat b = -2 * re, c = re * re + im * im;
    Poly f(std::vector<Rat>{simplest_between(c - tol, c + tol), simplest_between(b - tol, b + tol), Rat(1)});
    if (f.coeff(1) * f.coeff(1) - 4 * f.coeff(0) >= 0) continue;
    if ((q % f).is_zero()) out.push_back(f);
  }
  return out;
}

}  // namespace realknot
