#include "realknot/scalar.hpp"

#include <cmath>
#include <sstream>

#include "realknot/error.hpp"

namespace realknot {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NonDivisible: return "NonDivisible";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadRadii: return "BadRadii";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::BadChart: return "BadChart";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotOnSegreQuadric: return "NotOnSegreQuadric";
    case ErrorKind::DegenerateSplit: return "DegenerateSplit";
    case ErrorKind::PositiveDimensional: return "PositiveDimensional";
    case ErrorKind::NoEmptyMember: return "NoEmptyMember";
    case ErrorKind::NotConjugatePairs: return "NotConjugatePairs";
    case ErrorKind::DegenerateChoice: return "DegenerateChoice";
    case ErrorKind::NotOnSphere: return "NotOnSphere";
    case ErrorKind::CenterNotOnSphere: return "CenterNotOnSphere";
    case ErrorKind::CenterOnCurve: return "CenterOnCurve";
    case ErrorKind::ConicConditionFailed: return "ConicConditionFailed";
    case ErrorKind::CurveInPlane: return "CurveInPlane";
    case ErrorKind::TangentsDependent: return "TangentsDependent";
    case ErrorKind::MultipleIntersections: return "MultipleIntersections";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::StillSingular: return "StillSingular";
    case ErrorKind::NotCircleInput: return "NotCircleInput";
    case ErrorKind::NonGenericCenter: return "NonGenericCenter";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::CurvesIntersect: return "CurvesIntersect";
    case ErrorKind::NoCommonAffineChart: return "NoCommonAffineChart";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NoQuadraticFactor: return "NoQuadraticFactor";
    case ErrorKind::Cancelled: return "Cancelled";
  }
  return "Unknown";
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  // gmp accepts "a/b" but not decimal points or a leading '+'.
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw ParseError("empty rational");
  auto dot = s.find('.');
  Rat r;
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw ParseError("bad rational: " + std::string(text));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-") throw ParseError("bad rational: " + std::string(text));
    Int num;
    if (num.set_str(digits, 10) != 0) throw ParseError("bad rational: " + std::string(text));
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    r = Rat(num, den);
  } else {
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + std::string(text));
    if (sgn(r.get_den()) == 0) throw ParseError("zero denominator: " + std::string(text));
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

double to_double(const Rat& r) { return r.get_d(); }

long double to_long_double(const Rat& r) {
  // Integer quotient with ~64 significant bits, then rescale.
  if (sgn(r) == 0) return 0.0L;
  long num_exp = 0, den_exp = 0;
  mpz_get_d_2exp(&num_exp, r.get_num_mpz_t());
  mpz_get_d_2exp(&den_exp, r.get_den_mpz_t());
  Int num = r.get_num(), den = r.get_den();
  long shift = 64 - (num_exp - den_exp);
  if (shift > 0) num <<= static_cast<unsigned long>(shift);
  else den <<= static_cast<unsigned long>(-shift);
  Int q = num / den;
  bool neg = sgn(q) < 0;
  if (neg) q = -q;
  // split into two 32-bit halves so no bits are lost in a double conversion
  Int hi = q >> 32;
  Int lo = q - (hi << 32);
  long double v = std::ldexp(static_cast<long double>(hi.get_d()), 32) + static_cast<long double>(lo.get_d());
  if (neg) v = -v;
  return std::ldexp(v, static_cast<int>(-shift));
}

Rat sqrt_lower(const Rat& x, unsigned bits) {
  if (sgn(x) <= 0) return Rat(0);
  // floor(sqrt(x * 4^bits)) / 2^bits
  Int scaled_num = x.get_num();
  scaled_num <<= 2 * bits;
  Int q = scaled_num / x.get_den();
  Int root;
  mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
  Int den(1);
  den <<= bits;
  Rat r(root, den);
  r.canonicalize();
  return r;
}

bool rational_sqrt(const Rat& x, Rat* root) {
  if (sgn(x) < 0) return false;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 || mpz_perfect_square_p(x.get_den_mpz_t()) == 0) return false;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  if (root != nullptr) {
    *root = Rat(n, d);
    root->canonicalize();
  }
  return true;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  Rat n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("GaussRat division by zero");
  Rat r = (re * o.re + im * o.im) / n;
  Rat i = (im * o.re - re * o.im) / n;
  re = r;
  im = i;
  return *this;
}

std::string to_string(const GaussRat& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::ostringstream os;
  if (sgn(z.re) != 0) {
    os << to_string(z.re) << (sgn(z.im) > 0 ? "+" : "-");
    Rat a = abs(z.im);
    if (a != 1) os << to_string(a) << "*";
  } else {
    if (z.im == -1) os << "-";
    else if (z.im != 1) os << to_string(z.im) << "*";
  }
  os << "i";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << to_string(z); }

std::complex<double> to_complex(const GaussRat& z) { return {z.re.get_d(), z.im.get_d()}; }

QuadExt::QuadExt(const Rat& a_, const Rat& b_, const Rat& radicand_) : a(a_), b(b_), radicand(radicand_) {
  if (sgn(b) == 0) radicand = 0;
}

QuadExt make_quad(const Rat& a, const Rat& b, const Rat& r) {
  if (sgn(b) == 0) return QuadExt(a);
  Rat root;
  if (rational_sqrt(r, &root)) return QuadExt(Rat(a + b * root));
  // sqrt(p/q) = sqrt(p q) / q, then pull small square factors out of p q
  Int n = r.get_num() * r.get_den();
  Rat c = b / Rat(r.get_den());
  for (unsigned long f = 2; f < 1000; ++f) {
    Int ff(f * f);
    while (mpz_divisible_p(n.get_mpz_t(), ff.get_mpz_t()) != 0) {
      n /= ff;
      c *= Rat(static_cast<long>(f));
    }
  }
  return QuadExt(a, c, Rat(n));
}

namespace {
Rat common_radicand(const QuadExt& x, const QuadExt& y) {
  if (sgn(x.b) == 0) return y.radicand;
  if (sgn(y.b) == 0) return x.radicand;
  if (x.radicand != y.radicand) throw InternalError("QuadExt: mixing different quadratic fields");
  return x.radicand;
}
}  // namespace

int QuadExt::sign() const {
  int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sgn(radicand) < 0) throw InternalError("QuadExt::sign on a non-real element");
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(r) have opposite signs: compare a^2 with b^2 r
  Rat lhs = a * a, rhs = b * b * radicand;
  int c = cmp(lhs, rhs);
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  radicand = common_radicand(*this, o);
  a += o.a;
  b += o.b;
  if (sgn(b) == 0) radicand = 0;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  radicand = common_radicand(*this, o);
  a -= o.a;
  b -= o.b;
  if (sgn(b) == 0) radicand = 0;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rat r = common_radicand(*this, o);
  Rat na = a * o.a + b * o.b * r;
  Rat nb = a * o.b + b * o.a;
  a = na;
  b = nb;
  radicand = sgn(b) == 0 ? Rat(0) : r;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  Rat n = o.field_norm();
  if (sgn(n) == 0) throw std::domain_error("QuadExt division by zero");
  QuadExt inv(o.a / n, -o.b / n, o.radicand);
  return *this *= inv;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.a != y.a || x.b != y.b) return false;
  return sgn(x.b) == 0 || x.radicand == y.radicand;
}

std::string to_string(const QuadExt& q) {
  if (sgn(q.b) == 0) return to_string(q.a);
  std::ostringstream os;
  if (sgn(q.a) != 0) os << to_string(q.a) << (sgn(q.b) > 0 ? "+" : "-");
  else if (sgn(q.b) < 0) os << "-";
  Rat ab = abs(q.b);
  if (ab != 1) os << to_string(ab) << "*";
  if (q.radicand == -1) os << "i";
  else os << "sqrt(" << to_string(q.radicand) << ")";
  return os.str();
}

std::complex<double> to_complex(const QuadExt& q) {
  double r = q.radicand.get_d();
  if (r >= 0) return {q.a.get_d() + q.b.get_d() * std::sqrt(r), 0.0};
  return {q.a.get_d(), q.b.get_d() * std::sqrt(-r)};
}

}  // namespace realknot
