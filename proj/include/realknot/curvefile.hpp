#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "realknot/curve.hpp"

namespace realknot {

/// Text curve format. One `key = value` per line, `#` starts a comment:
///
///   ambient = P4
///   sphere = true
///   degree = 2
///   x0 = 1 0 1          coefficients of s^d, s^(d-1) t, ..., t^d
///   meta.name = circle
struct CurveFile {
  Ambient ambient = Ambient::P3;
  bool sphere_claim = false;
  int degree = 0;
  std::vector<std::vector<Rat>> coeffs;  // one row per coordinate
  std::map<std::string, std::string> metadata;
};

CurveFile parse_curve_file(std::istream& in);
/// "-" reads standard input.
CurveFile read_curve_file(const std::string& path);
std::string format_curve_file(const CurveFile& f);
void write_curve_file(const std::string& path, const CurveFile& f);

/// Re-verifies the sphere claim; a false claim is a ParseError.
RationalCurve to_curve(const CurveFile& f);
CurveFile from_curve(const RationalCurve& c, std::map<std::string, std::string> metadata = {});

}  // namespace realknot
