#pragma once

#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace satlab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Base for every failure a numerical routine can raise. The CLI maps these to
// exit code 2; argument/usage problems map to 64 and are not derived from it.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WrongPeriod : NumericalError {
  using NumericalError::NumericalError;
};
struct NoQuadratureConvergence : NumericalError {
  using NumericalError::NumericalError;
};
struct FixedPointOnContour : NumericalError {
  using NumericalError::NumericalError;
};
struct ContinuationFailure : NumericalError {
  using NumericalError::NumericalError;
};
struct OutOfDomain : NumericalError {
  using NumericalError::NumericalError;
};
struct BranchCut : NumericalError {
  using NumericalError::NumericalError;
};
struct IllConditionedFit : NumericalError {
  using NumericalError::NumericalError;
};
struct RootNotMember : NumericalError {
  using NumericalError::NumericalError;
};
struct SearchExhausted : NumericalError {
  using NumericalError::NumericalError;
};

// Raised when a preperiod claimed minimal is not: carries the smaller witness.
struct NotMinimal : NumericalError {
  int witness;
  explicit NotMinimal(int m)
      : NumericalError("preperiod not minimal, already lands at m = " + std::to_string(m)),
        witness(m) {}
};

// Internal angle p/q in lowest terms, q >= 1, 0 <= p < q.
struct IrreducibleRational {
  long long p = 0;
  long long q = 1;

  IrreducibleRational() = default;
  IrreducibleRational(long long num, long long den) {
    if (den <= 0) throw OutOfDomain("internal angle needs a positive denominator");
    num %= den;
    if (num < 0) num += den;
    const long long g = std::gcd(num, den);
    p = num / g;
    q = den / g;
  }

  double angle() const { return kTwoPi * static_cast<double>(p) / static_cast<double>(q); }
  Complex omega() const { return std::polar(1.0, angle()); }
  bool operator==(const IrreducibleRational&) const = default;
};

// Sublimb address: the inner angle selects a satellite of the component H_outer.
struct SublimbId {
  IrreducibleRational outer;
  IrreducibleRational inner;
};

struct PeriodicOrbit {
  std::vector<Complex> cycle;  // one period, starting at the solved point
  Complex multiplier{};
};

struct MultiplierSolution {
  Complex lambda{};
  PeriodicOrbit orbit{};
};

struct FixedPointData {
  int multiplicity = 0;  // zero count of F(w) - w at the fixed point
  Complex index{};       // (1/2pi i) contour of dw / (w - F(w))
  Complex resit{};       // multiplicity/2 - index
};

struct DiameterResult {
  double euclid = 0.0;
  double hyp = 0.0;
  int component_pixels = 0;
};

struct DivergenceRow {
  double t = 0.0;
  Complex lambda_first{};   // Lambda coordinate under the first angle
  Complex lambda_second{};  // Lambda coordinate under the second angle
  double dist = 0.0;
  double bound = 0.0;
};

struct LimbRecord {
  int n = 0;
  IrreducibleRational inner;
  Complex lambda_root{};
  Complex big_lambda_root{};
  double re_lower_bound = 0.0;
  double euclid_diam = 0.0;
  double hyp_diam = 0.0;
};

struct CorollaryRow {
  int n = 0;
  double dist = 0.0;
};

struct MisiurewiczPoint {
  Complex lambda{};
  int preperiod = 0;
  double residual = 0.0;
};

}  // namespace satlab
