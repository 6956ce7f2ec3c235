#pragma once

#include <cstddef>
#include <vector>

#include "realknot/poly.hpp"
#include "realknot/scalar.hpp"

namespace realknot {

using Vec = std::vector<Rat>;

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rat>> rows);
  static Matrix identity(std::size_t n);
  static Matrix diag(const Vec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix transpose() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator*(const Rat& r, const Matrix& x);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Vec operator*(const Matrix& m, const Vec& v);

Rat dot(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Rat& r);
Vec add(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
/// Scaled to coprime integers with the first nonzero entry positive.
Vec primitive(const Vec& v);

Rat det(Matrix m);
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}, each vector primitive.
std::vector<Vec> nullspace(const Matrix& m);
/// Inverse of a square matrix; throws InternalError when singular.
Matrix inverse(const Matrix& m);
/// Characteristic polynomial det(x I - m).
Poly charpoly(const Matrix& m);

struct Inertia {
  int pos = 0;
  int neg = 0;
  int zero = 0;
  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.pos == b.pos && a.neg == b.neg && a.zero == b.zero;
  }
};
/// Sylvester inertia of a symmetric matrix.
Inertia inertia(const Matrix& sym);

}  // namespace realknot
