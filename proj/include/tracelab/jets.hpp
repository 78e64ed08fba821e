#pragma once

#include "tracelab/poly.hpp"
#include "tracelab/words.hpp"

#include <array>
#include <complex>
#include <random>
#include <vector>

namespace tracelab {

/// Dual-number complex value + slope * eps with eps^2 = 0: the numerical model
/// of C[lam]/(lam - alpha)^2, carrying a value and its first derivative.
struct DualComplex {
  std::complex<double> value{};
  std::complex<double> slope{};

  DualComplex() = default;
  DualComplex(std::complex<double> v, std::complex<double> s = 0.0) : value(v), slope(s) {}
  static DualComplex epsilon() { return {0.0, 1.0}; }

  DualComplex operator+(const DualComplex& o) const { return {value + o.value, slope + o.slope}; }
  DualComplex operator-(const DualComplex& o) const { return {value - o.value, slope - o.slope}; }
  DualComplex operator-() const { return {-value, -slope}; }
  DualComplex operator*(const DualComplex& o) const {
    return {value * o.value, value * o.slope + slope * o.value};
  }
};

/// Evaluates f at alpha + eps by Horner: value = f(alpha), slope = f'(alpha).
DualComplex jet_eval_poly(const GfPoly& f, const GoldenScalar& alpha);

/// 2x2 matrix of dual complex numbers, row-major.
struct JetMatrix2 {
  std::array<DualComplex, 4> m{};

  static JetMatrix2 identity();
  JetMatrix2 operator*(const JetMatrix2& o) const;
  JetMatrix2 operator+(const JetMatrix2& o) const;
  JetMatrix2 operator-() const;
  JetMatrix2 scaled(const DualComplex& s) const;
  DualComplex trace() const { return m[0] + m[3]; }
  DualComplex det() const { return m[0] * m[3] - m[1] * m[2]; }
  /// Inverse for det = 1 (adjugate).
  JetMatrix2 sl2_inverse() const;
  /// Drop the slopes.
  JetMatrix2 truncated() const;
};

double matrix_distance(const JetMatrix2& a, const JetMatrix2& b);

enum class JetMode {
  Shifted,   // tr(XY) = alpha + eps: the trace of W(X,Y) evaluates tau at alpha + eps
  Verbatim,  // tr(XY) = 0 + eps: the normalisation under which (XY)^2 = -I + eps Z
};

struct LambdaRep {
  JetMatrix2 X, Y;
  DualComplex trace_w;
};

/// X = [[e^{i pi/3}, 0], [1, e^{-i pi/3}]]; Y upper triangular with diagonal
/// e^{±i pi/5} and corner solved from the tr(XY) target for the chosen mode.
/// The word is evaluated with balanced syllable exponents, matching the
/// convention of the exact trace polynomial.
LambdaRep lambda_representation(const GroupWord& w, const GoldenScalar& alpha, JetMode mode);

struct NilpotentSquare {
  JetMatrix2 z;  // the value part of the input
  bool ok = false;
};

/// For tr M = eps and det M = 1: checks M^2 = -I + eps Z with Z the value part
/// and tr Z ≈ 0, within 1e-9. Throws PreconditionViolated if tr M is not ≈ eps.
NilpotentSquare nilpotent_square_identity(const JetMatrix2& m);

/// Random SL2 jet with trace exactly eps (value part traceless, det = 1 + 0 eps).
JetMatrix2 random_trace_epsilon_jet(std::mt19937_64& rng);

/// The pairwise-distinct conjugates M Z M^{-1} of the value part Z of XY over
/// the 120-element matrix group generated by the value parts of X and Y.
/// The orbit is closed under further conjugation by construction.
std::vector<JetMatrix2> conjugate_orbit_of_z(const GroupWord& w, const GoldenScalar& alpha);

}  // namespace tracelab
