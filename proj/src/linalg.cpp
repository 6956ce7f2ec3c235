#include "realknot/linalg.hpp"

#include "realknot/error.hpp"

namespace realknot {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    ensure(r.size() == cols_, "Matrix: ragged initializer");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diag(const Vec& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)); }

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  ensure(x.cols() == y.rows(), "matrix product: dimension mismatch");
  Matrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (sgn(x(i, k)) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

Matrix operator*(const Rat& s, const Matrix& x) {
  Matrix r = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) *= s;
  return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  ensure(x.rows() == y.rows() && x.cols() == y.cols(), "matrix sum: dimension mismatch");
  Matrix r = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) += y(i, j);
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) { return x + Rat(-1) * y; }

Vec operator*(const Matrix& m, const Vec& v) {
  ensure(m.cols() == v.size(), "matrix-vector product: dimension mismatch");
  Vec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  ensure(a.size() == b.size(), "dot: dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec scaled(const Vec& v, const Rat& r) {
  Vec out = v;
  for (auto& x : out) x *= r;
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  ensure(a.size() == b.size(), "add: dimension mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec primitive(const Vec& v) {
  Int den(1), num(0);
  int first = 0;
  for (const auto& x : v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    if (first == 0) first = sgn(x);
  }
  if (first == 0) return v;
  Rat f(den, num);
  if (first < 0) f = -f;
  return scaled(v, f);
}

namespace {

// Row echelon form in place; returns pivot columns, sign flips through *swaps.
std::vector<std::size_t> echelon(Matrix& m, int* swaps) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      if (swaps) ++*swaps;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rat det(Matrix m) {
  ensure(m.is_square(), "det: not square");
  std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  int swaps = 0;
  auto piv = echelon(m, &swaps);
  if (piv.size() < n) return Rat(0);
  Rat d(swaps % 2 ? -1 : 1);
  for (std::size_t i = 0; i < n; ++i) d *= m(i, i);
  return d;
}

std::size_t rank(Matrix m) { return echelon(m, nullptr).size(); }

std::vector<Vec> nullspace(const Matrix& m0) {
  Matrix m = m0;
  auto piv = echelon(m, nullptr);
  // back-substitute to reduced form
  for (std::size_t k = piv.size(); k-- > 0;) {
    std::size_t c = piv[k];
    Rat p = m(k, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(k, j) /= p;
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(k, j);
    }
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, f);
    basis.push_back(primitive(v));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  ensure(m.is_square(), "inverse: not square");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = echelon(aug, nullptr);
  if (piv.size() < n || piv[n - 1] >= n) throw InternalError("inverse: singular matrix");
  for (std::size_t k = n; k-- > 0;) {
    Rat p = aug(k, k);
    for (std::size_t j = k; j < 2 * n; ++j) aug(k, j) /= p;
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(aug(i, k)) == 0) continue;
      Rat f = aug(i, k);
      for (std::size_t j = k; j < 2 * n; ++j) aug(i, j) -= f * aug(k, j);
    }
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Poly charpoly(const Matrix& a) {
  // Faddeev-LeVerrier
  ensure(a.is_square(), "charpoly: not square");
  std::size_t n = a.rows();
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    Matrix am = a * mk;
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return Poly(std::move(c));
}

Inertia inertia(const Matrix& sym) {
  ensure(sym.is_symmetric(), "inertia: matrix not symmetric");
  Poly p = charpoly(sym);
  Inertia r;
  const auto& c = p.coeffs();
  std::size_t low = 0;
  while (low < c.size() && sgn(c[low]) == 0) ++low;
  r.zero = static_cast<int>(low);
  // all eigenvalues are real, so Descartes' rule is exact
  auto variations = [&](bool flip) {
    int v = 0, prev = 0;
    for (std::size_t k = low; k < c.size(); ++k) {
      int s = sgn(c[k]);
      if (s == 0) continue;
      if (flip && (k % 2 == 1)) s = -s;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  r.pos = variations(false);
  r.neg = variations(true);
  return r;
}

}  // namespace realknot
