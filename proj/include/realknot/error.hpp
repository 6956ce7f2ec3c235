#pragma once

#include <stdexcept>
#include <string>

namespace realknot {

/// Mathematical failure categories. Every one of these means the input
/// violated a precondition of the operation, not that the library is broken.
enum class ErrorKind {
  DegreeMismatch,
  NonDivisible,
  ZeroForm,
  DimensionMismatch,
  AllZero,
  NotCoprime,
  BadRadii,
  BadDegree,
  BadChart,
  NotInvertible,
  NotOnSegreQuadric,
  DegenerateSplit,
  PositiveDimensional,
  NoEmptyMember,
  NotConjugatePairs,
  DegenerateChoice,
  NotOnSphere,
  CenterNotOnSphere,
  CenterOnCurve,
  ConicConditionFailed,
  CurveInPlane,
  TangentsDependent,
  MultipleIntersections,
  NotOnCurve,
  StillSingular,
  NotCircleInput,
  NonGenericCenter,
  PrecisionExhausted,
  CurvesIntersect,
  NoCommonAffineChart,
  Singular,
  NoQuadraticFactor,
  Cancelled,
};

const char* to_string(ErrorKind kind);

class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant fails. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const char* what) {
  if (!condition) throw InternalError(what);
}

}  // namespace realknot
