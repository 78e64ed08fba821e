#pragma once

#include "tracelab/poly.hpp"
#include "tracelab/words.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <random>

namespace tracelab {

/// Element of the subalgebra of 2x2 matrices generated by X and Y, written in the
/// basis {I, X, Y, XY} with coefficients in Q(sqrt5)[lam]. Cayley-Hamilton closes
/// the basis under multiplication once tr X = 1, tr Y = phi, tr XY = lam are fixed,
/// so no matrix entries are ever represented.
struct TraceAlgebraElement {
  std::array<GfPoly, 4> c;  // coefficients of I, X, Y, XY

  static TraceAlgebraElement identity();
  TraceAlgebraElement operator*(const TraceAlgebraElement& o) const;
  /// tr = 2 c_I + c_X + phi c_Y + lam c_XY.
  GfPoly trace() const;
};

/// X^n or Y^n as an algebra element, any integer n (inverses via g^-1 = tr(g) I - g).
TraceAlgebraElement generator_power(char gen, int n);

/// The trace polynomial tau_W(lam) of W(X,Y) for tr X = 1, tr Y = phi, tr XY = lam.
///
/// Syllable exponents are evaluated through balanced residues (x^2 as X^-1; y^3,
/// y^4 as Y^-2, Y^-1). The SL(2) lifts satisfy X^3 = Y^5 = -I, so this changes
/// the lift of each syllable by a central sign only: tau is the trace of a lift
/// of W, roots and degree are unaffected, and the identity
/// tr(XY^-1) = tr X tr Y - tr(XY) comes out in the form the root analysis uses.
GfPoly trace_polynomial(const GroupWord& w);

/// Numeric cross-check: builds explicit 2x2 complex matrices with tr X = 1,
/// tr Y = phi, tr XY = lam0, conjugates by a random invertible matrix per trial,
/// multiplies out the word (same balanced-exponent convention), and returns the
/// mean trace. Per-trial traces must agree pairwise within 1e-9, else
/// DegenerateParameter is thrown.
std::complex<double> numeric_trace_oracle(const GroupWord& w, std::complex<double> lam0,
                                          int trials, std::mt19937_64& rng);

}  // namespace tracelab
