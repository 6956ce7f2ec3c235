#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realknot/error.hpp"
#include "realknot/poly.hpp"
#include "realknot/scalar.hpp"

namespace realknot {

/// Homogeneous form of degree d in (s, t). Coefficient j belongs to s^{d-j} t^j.
template <class T>
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(int degree) : c_(static_cast<std::size_t>(degree) + 1) {
    if (degree < 0) throw MathError(ErrorKind::BadDegree, "negative form degree");
  }
  BinaryForm(std::vector<T> coeffs) : c_(std::move(coeffs)) {  // NOLINT(google-explicit-constructor)
    if (c_.empty()) throw MathError(ErrorKind::BadDegree, "form needs at least one coefficient");
  }

  static BinaryForm s() { return BinaryForm(std::vector<T>{T(1), T(0)}); }
  static BinaryForm t() { return BinaryForm(std::vector<T>{T(0), T(1)}); }
  static BinaryForm constant(const T& c) { return BinaryForm(std::vector<T>{c}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  T& operator[](int j) { return c_[static_cast<std::size_t>(j)]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!(x == T(0))) return false;
    return true;
  }

  /// Multiplicity of the root [1:0], i.e. the power of t dividing the form.
  int order_at_infinity() const {
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(k)] == T(0)) ++k;
    return k;
  }

  T eval(const T& s, const T& t) const { return eval_direct(s, t); }

  BinaryForm& operator*=(const T& r) {
    for (auto& x : c_) x *= r;
    return *this;
  }
  BinaryForm operator-() const {
    BinaryForm r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  /// d/ds and d/dt.
  BinaryForm ds() const {
    int d = degree();
    if (d == 0) return BinaryForm(0);
    std::vector<T> r(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) r[static_cast<std::size_t>(j)] = c_[static_cast<std::size_t>(j)] * T(d - j);
    return BinaryForm(std::move(r));
  }
  BinaryForm dt() const {
    int d = degree();
    if (d == 0) return BinaryForm(0);
    std::vector<T> r(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j) r[static_cast<std::size_t>(j - 1)] = c_[static_cast<std::size_t>(j)] * T(j);
    return BinaryForm(std::move(r));
  }

  /// f(a s + b t, c s + d t)
  BinaryForm substitute(const T& a, const T& b, const T& c, const T& d) const;

  friend bool operator==(const BinaryForm& x, const BinaryForm& y) { return x.c_ == y.c_; }
  friend bool operator!=(const BinaryForm& x, const BinaryForm& y) { return !(x == y); }

 private:
  T eval_direct(const T& s, const T& t) const {
    int d = degree();
    std::vector<T> sp(static_cast<std::size_t>(d) + 1, T(1)), tp(static_cast<std::size_t>(d) + 1, T(1));
    for (int k = 1; k <= d; ++k) {
      sp[static_cast<std::size_t>(k)] = sp[static_cast<std::size_t>(k - 1)] * s;
      tp[static_cast<std::size_t>(k)] = tp[static_cast<std::size_t>(k - 1)] * t;
    }
    T acc(0);
    for (int j = 0; j <= d; ++j)
      acc += c_[static_cast<std::size_t>(j)] * sp[static_cast<std::size_t>(d - j)] * tp[static_cast<std::size_t>(j)];
    return acc;
  }

  std::vector<T> c_;
};

enum class FormOp { Add, Sub, Mul };

template <class T>
BinaryForm<T> form_arith(const BinaryForm<T>& a, const BinaryForm<T>& b, FormOp op) {
  if (op == FormOp::Mul) {
    std::vector<T> r(static_cast<std::size_t>(a.degree() + b.degree()) + 1, T(0));
    for (int i = 0; i <= a.degree(); ++i)
      for (int j = 0; j <= b.degree(); ++j) r[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    return BinaryForm<T>(std::move(r));
  }
  if (a.degree() != b.degree()) {
    // a zero operand of another degree is the additive identity
    if (b.is_zero()) return a;
    if (a.is_zero()) return op == FormOp::Add ? b : -b;
    throw MathError(ErrorKind::DegreeMismatch, "adding forms of degrees " + std::to_string(a.degree()) + " and " +
                                                   std::to_string(b.degree()));
  }
  std::vector<T> r = a.coeffs();
  for (int j = 0; j <= a.degree(); ++j) {
    if (op == FormOp::Add) r[static_cast<std::size_t>(j)] += b[j];
    else r[static_cast<std::size_t>(j)] -= b[j];
  }
  return BinaryForm<T>(std::move(r));
}

template <class T>
BinaryForm<T> operator+(const BinaryForm<T>& a, const BinaryForm<T>& b) { return form_arith(a, b, FormOp::Add); }
template <class T>
BinaryForm<T> operator-(const BinaryForm<T>& a, const BinaryForm<T>& b) { return form_arith(a, b, FormOp::Sub); }
template <class T>
BinaryForm<T> operator*(const BinaryForm<T>& a, const BinaryForm<T>& b) { return form_arith(a, b, FormOp::Mul); }
template <class T>
BinaryForm<T> operator*(BinaryForm<T> a, const T& r) { return a *= r; }
template <class T>
BinaryForm<T> operator*(const T& r, BinaryForm<T> a) { return a *= r; }

template <class T>
BinaryForm<T> power(const BinaryForm<T>& f, int k) {
  BinaryForm<T> r = BinaryForm<T>::constant(T(1));
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

template <class T>
BinaryForm<T> BinaryForm<T>::substitute(const T& a, const T& b, const T& c, const T& d) const {
  int n = degree();
  BinaryForm<T> ls(std::vector<T>{a, b}), lt(std::vector<T>{c, d});
  std::vector<BinaryForm<T>> sp{BinaryForm<T>::constant(T(1))}, tp{BinaryForm<T>::constant(T(1))};
  for (int k = 1; k <= n; ++k) {
    sp.push_back(sp.back() * ls);
    tp.push_back(tp.back() * lt);
  }
  BinaryForm<T> acc(n);
  for (int j = 0; j <= n; ++j) {
    if (c_[static_cast<std::size_t>(j)] == T(0)) continue;
    acc = acc + (sp[static_cast<std::size_t>(n - j)] * tp[static_cast<std::size_t>(j)]) * c_[static_cast<std::size_t>(j)];
  }
  return acc;
}

using Form = BinaryForm<Rat>;
using GForm = BinaryForm<GaussRat>;

std::string to_string(const Form& f);
std::string to_string(const GForm& f);

GForm to_gauss(const Form& f);
Form real_part(const GForm& f);
Form imag_part(const GForm& f);

/// f(x, 1) as a polynomial in x = s/t.
Poly affine(const Form& f);
/// f(1, y) as a polynomial in y = t/s.
Poly affine_at_infinity(const Form& f);
/// Homogenize p(x) to degree d with x = s/t.
Form homogenize(const Poly& p, int d);

/// Coprime integer coefficients, first nonzero coefficient positive.
Form primitive(const Form& f);
/// Leading nonzero coefficient scaled to 1.
Form monic(const Form& f);
Rat content(const Form& f);

Form exact_div(const Form& a, const Form& b);
Form form_gcd(const Form& a, const Form& b);
Rat resultant(const Form& a, const Form& b);
/// Determinant of the rows {t^i p0}_{i<d} and {t^i p1}_{i<=d+k}; equals +-p1[d]^{k+1} resultant(p0, p1).
Rat augmented_sylvester_det(const Form& p0, const Form& p1, int k);
/// Squarefree part as a form (the root [1:0] kept once).
Form squarefree(const Form& f);

/// Distinct real projective roots; with an interval, only affine roots x = s/t in (lo, hi].
int real_root_count(const Form& p, std::optional<std::pair<Rat, Rat>> interval = std::nullopt);

struct RootBox {
  enum class Kind { Real, ComplexPair };
  Kind kind = Kind::Real;
  bool at_infinity = false;  // the root [1:0]
  RealRoot real;             // affine x = s/t, real kind only
  Rect rect;                 // upper half-plane rectangle, pair kind only
  int multiplicity = 1;

  double approx_real() const { return to_double(real.mid()); }
};

/// True when a polynomial of degree <= d vanishing at all points must be zero
/// (the evaluation matrix has full column rank).
bool vandermonde_check(const std::vector<Rat>& points, int d);

/// Boxes for all roots of p with widths below precision.
std::vector<RootBox> isolate_roots(const Form& p, const Rat& precision);

}  // namespace realknot
