#pragma once

#include <array>
#include <complex>
#include <stop_token>
#include <vector>

#include "realknot/curve.hpp"

namespace realknot {

struct Crossing {
  enum class Kind { Real, Solitary };
  Kind kind = Kind::Real;
  /// [s:t] of both branches; a conjugate pair for solitary crossings.
  std::array<std::array<std::complex<double>, 2>, 2> params{};
  int sign = 0;
};
const char* to_string(Crossing::Kind k);

/// Projection of an RP^3 curve from a point onto a plane, with certified crossings.
struct Diagram {
  RationalCurve source;  // in RP^3
  Vec center;
  Matrix projection;     // 3x4, kernel spanned by center
  std::vector<Crossing> crossings;
  int complex_pairs = 0;  // non-real double points of the plane curve that are not crossings

  int writhe() const;
  int real_count() const;
  int solitary_count() const;
};

/// Deterministic lattice of projection centers on the plane at infinity.
Vec diagram_center(int index);

/// Throws NonGenericCenter for cusps, triple points or tangential crossings of the
/// projected curve, and CenterOnCurve when the center lies on the curve.
/// An on-sphere input is first projected stereographically from a lattice center off the curve.
Diagram build_diagram(const RationalCurve& c, const Vec& center, std::stop_token stop = {});

int crossing_sign(const Diagram& d, const Crossing& x);

struct WritheResult {
  int writhe = 0;
  std::vector<int> samples;  // one value per accepted pair of centers
  int real_crossings = 0;    // of the first diagram
  int solitary = 0;
};

/// Sum of crossing signs, recomputed for `centers` independent projections and
/// required to agree. Throws Singular when the curve has real singular points or
/// double points.
WritheResult encomplexed_writhe(const RationalCurve& c, int centers = 2, std::stop_token stop = {});
/// Writhe for one sphere center (ignored for RP^3 input) and one diagram center.
int writhe_at(const RationalCurve& c, const Vec& sphere_center, const Vec& diagram_center, std::stop_token stop = {});

/// Half the signed count of crossings between the diagrams of two disjoint curves.
int linking_number(const RationalCurve& a, const RationalCurve& b, std::stop_token stop = {});

}  // namespace realknot
