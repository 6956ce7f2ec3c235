#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realknot/linalg.hpp"
#include "realknot/scalar.hpp"

namespace realknot {

/// Point of real or complex projective space, homogeneous coordinates.
struct ProjPoint {
  std::vector<GaussRat> x;

  ProjPoint() = default;
  explicit ProjPoint(std::vector<GaussRat> coords);
  static ProjPoint real(const Vec& coords);

  int dim() const { return static_cast<int>(x.size()) - 1; }
  bool is_real() const;
  ProjPoint conj() const;
  /// First nonzero coordinate scaled to 1.
  ProjPoint canonical() const;
  /// Real coordinates; requires is_real() after canonicalization.
  Vec real_coords() const;
  std::string str() const;
};

bool same_point(const ProjPoint& a, const ProjPoint& b);

/// Symmetric rational matrix read as a quadratic form.
struct QuadraticForm {
  Matrix m;

  QuadraticForm() = default;
  explicit QuadraticForm(Matrix sym);
  /// From coefficients of the monomials x_i x_j, i <= j, in lexicographic order.
  static QuadraticForm from_monomials(int n, const Vec& coeffs);

  int dim() const { return static_cast<int>(m.rows()) - 1; }
  Rat eval(const Vec& v) const;
  Rat polar(const Vec& a, const Vec& b) const;
  GaussRat eval(const std::vector<GaussRat>& v) const;
  bool vanishes_at(const ProjPoint& p) const;
  std::string str() const;
};

/// The Lorentz form -x0^2 + x1^2 + ... + x4^2 on RP^4.
QuadraticForm sphere_form();
/// x1^2 + x2^2 + x3^2 in plane coordinates.
QuadraticForm standard_empty_conic();

Inertia signature(const QuadraticForm& q);
bool is_definite(const QuadraticForm& q);

enum class Component { IdentitySide, ReflectionSide };
const char* to_string(Component c);

/// sign(det M) * sign(M00), the component of a PO(4,1) element.
Component component_detector(const Matrix& m);
/// Whether m^T J m = lambda J for some lambda > 0, and the component if so.
std::optional<Component> in_po41(const Matrix& m);

/// Real basis of quadratic forms on P^n vanishing at every point.
std::vector<QuadraticForm> quadric_through_set(int n, const std::vector<ProjPoint>& points);
std::vector<QuadraticForm> conic_through(const std::vector<ProjPoint>& points);
/// A definite conic through four non-real points forming two conjugate pairs.
QuadraticForm empty_conic_through(const std::vector<ProjPoint>& points);

/// Real transform T = rational + sqrt(delta) * radical of RP^3 fixing e0 and theta,
/// moving a non-real point z of the plane x0 = 0 onto a definite conic.
struct RetractTransform {
  Matrix rational;
  Matrix radical;
  Rat delta;  // radicand, never a rational square unless radical is zero
  Vec theta;

  bool is_rational() const { return radical.is_zero(); }
  /// T_t = (1 - t) I + t T, split the same way.
  Matrix path_rational(const Rat& t) const;
  Matrix path_radical(const Rat& t) const;
  /// Image of a real vector, coordinates in Q(sqrt(delta)).
  std::vector<QuadExt> apply(const Vec& v) const;
};

/// z = [0 : U + sqrt(d) V] with d < 0 (d = -1 for Gaussian points), U, V in Q^3.
RetractTransform retract_to_conic(const Vec& u, const Vec& v, const Rat& d, const QuadraticForm& target);
RetractTransform retract_to_conic(const ProjPoint& z, const QuadraticForm& target);
/// Exact check that T maps z = U + sqrt(d) V onto the conic.
bool retract_maps_onto(const RetractTransform& t, const Vec& u, const Vec& v, const Rat& d, const QuadraticForm& target);

}  // namespace realknot
