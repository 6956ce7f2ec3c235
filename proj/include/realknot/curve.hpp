#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "realknot/bivariate.hpp"
#include "realknot/forms.hpp"
#include "realknot/linalg.hpp"
#include "realknot/projgeom.hpp"

namespace realknot {

enum class Ambient { P3, P4 };
inline int ambient_dim(Ambient a) { return a == Ambient::P3 ? 3 : 4; }

/// Rational curve [s:t] -> [p_0 : ... : p_n] with jointly coprime coordinate forms.
struct RationalCurve {
  Ambient ambient = Ambient::P3;
  std::vector<Form> coords;
  bool on_sphere = false;  // P4 only: p_1^2 + ... + p_4^2 - p_0^2 vanishes

  int degree() const { return coords.empty() ? 0 : coords[0].degree(); }
  int dim() const { return ambient_dim(ambient); }
  std::vector<GaussRat> eval(const GaussRat& s, const GaussRat& t) const;
  std::vector<QuadExt> eval(const QuadExt& s, const QuadExt& t) const;
};

struct MakeCurveResult {
  RationalCurve curve;
  int degree_drop = 0;
  Form removed_factor;  // constant 1 when nothing was removed
};

/// Validates, removes the common factor and clears the common content.
MakeCurveResult make_curve(std::vector<Form> coords, Ambient ambient);
/// make_curve that insists nothing had to be removed.
RationalCurve curve_from(std::vector<Form> coords, Ambient ambient);

/// q(k(s, t)) as a form of degree 2d.
Form compose(const QuadraticForm& q, const RationalCurve& c);
bool on_quadric(const RationalCurve& c, const QuadraticForm& q);
std::vector<QuadraticForm> quadric_through_curve(const RationalCurve& c);

enum class QuadricType { Sphere, Hyperboloid, Cone, PlanePair, Other };
const char* to_string(QuadricType t);
QuadricType classify_quadric(const QuadraticForm& q);

/// x0 x3 - x1 x2
QuadraticForm segre_form();

/// X -> [s:t] = [a X + b : c X + d]
struct Mobius {
  Rat a{1}, b{0}, c{0}, d{1};
  std::array<QuadExt, 2> apply(const QuadExt& x) const;
  std::array<std::complex<double>, 2> apply(std::complex<double> x) const;
};

Mobius mobius_candidate(int index);
std::vector<Form> reparametrize(const std::vector<Form>& coords, const Mobius& m);

/// Elimination data for the double points of a parametrized curve in the
/// coordinates e1 = X + Y, e2 = X Y of an unordered parameter pair.
struct DoublePointSystem {
  Mobius mobius;
  std::vector<Form> reparam;  // coordinates in the parameter X
  Poly D;                     // squarefree; roots are the double points (off the diagonal)
  Poly U;                     // e1 at a root of D
  Poly V;                     // e2 at a root of D
  Poly delta;                 // e1^2 - 4 e2 modulo D
  Poly diagonal;              // solutions with X = Y (cusps)
  std::vector<RealRoot> real_roots;
  std::vector<int> delta_sign;  // > 0 real crossing, < 0 solitary
  int complex_pairs = 0;
};

/// Throws MathError(PositiveDimensional) for a non-birational parametrization.
DoublePointSystem double_point_system(const std::vector<Form>& coords, std::stop_token stop = {});

/// Parameter pairs (X, Y) with a(X) proportional to b(Y), in the charts of the
/// Mobius-reparametrized inputs; neither input's parameter X = infinity takes part.
struct Incidence {
  Mobius ma, mb;
  std::vector<Form> a, b;  // reparametrized coordinates
  BivariateSolution sol;   // U = X, V = Y
};
Incidence incidence_system(const std::vector<Form>& a, const std::vector<Form>& b, std::stop_token stop = {});
/// Orientation sign of a Mobius map on the real line.
int orientation(const Mobius& m);

/// Params [s:t] where the curve passes through the point (roots of the gcd of the 2x2 minors).
Form passage_form(const std::vector<Form>& coords, const Vec& point);

struct DoublePoint {
  enum class Kind { RealCrossing, Solitary, ComplexPair, Cusp };
  Kind kind = Kind::RealCrossing;
  /// Homogeneous parameters [s:t] of both branches (numeric).
  std::array<std::array<std::complex<double>, 2>, 2> params{};
  /// Exact parameters when the eliminant is linear.
  std::optional<std::array<std::array<QuadExt, 2>, 2>> exact_params;
  std::vector<std::complex<double>> image;
  std::optional<std::vector<QuadExt>> exact_image;
};
const char* to_string(DoublePoint::Kind k);
std::string describe(const DoublePoint& p);

std::vector<DoublePoint> double_points(const RationalCurve& c, std::stop_token stop = {});

struct ImmersionResult {
  bool immersion = true;
  Form witness;  // common factor of the Jacobian minors
  std::vector<RootBox> boxes;
};
ImmersionResult is_immersion(const RationalCurve& c);

struct NonsingularCertificate {
  bool nonsingular = false;
  bool immersion = false;
  std::vector<DoublePoint> double_points;
  std::vector<DoublePoint> cusps;
  int eliminant_degree = 0;
  std::vector<std::pair<std::string, Rat>> resultants;
};
NonsingularCertificate is_nonsingular_knot(const RationalCurve& c, std::stop_token stop = {});

struct BiDegreeSplit {
  Form q0, q1, q2, q3;
  std::pair<int, int> complex_bidegree;
  std::pair<int, int> real_bidegree;
  std::pair<int, int> orbit_normal_form;  // (min |.|, max |.|)
  bool singular_flag = false;             // set when a degree-4 split is (2,2)
};
/// Signed topological degree of [a:b] : RP^1 -> RP^1.
int real_degree(const Form& a, const Form& b);
BiDegreeSplit bidegree_split(const RationalCurve& c);

RationalCurve torus_knot(int d, int m, std::pair<Rat, Rat> radii = {Rat(3, 5), Rat(4, 5)});

struct Chart {
  int coord = 0;
  int index = 0;
};
std::vector<Rat> default_samples();
int jacobian_rank(const std::vector<Form>& coords, const std::vector<Rat>& samples, Chart chart);
int jacobian_rank(const RationalCurve& c, const std::vector<Rat>& samples = default_samples(), Chart chart = {});

RationalCurve apply_transform(const RationalCurve& c, const Matrix& t);
/// Substitute (s, t) -> (s, t) M, i.e. s' = M00 s + M10 t, t' = M01 s + M11 t.
RationalCurve reparametrize(const RationalCurve& c, const Matrix& m);

/// The linear form vanishing on the curve, if any.
std::optional<Vec> hyperplane_containing(const RationalCurve& c);
/// Coefficient matrix (alpha_i^j) of a degree-4 curve in P4.
Matrix coefficient_matrix(const RationalCurve& c);

}  // namespace realknot
