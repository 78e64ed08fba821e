#include "tracelab/trace.hpp"

#include "tracelab/errors.hpp"

#include <cmath>

namespace tracelab {

namespace {

GfPoly cpoly(long long n) { return GfPoly::constant(GoldenScalar(n)); }
GfPoly phi_poly() { return GfPoly::constant(GoldenScalar::phi()); }
GfPoly lam_poly() { return GfPoly::lambda(); }

// Products of basis elements, expressed in the basis {I, X, Y, XY}.
// Derived from g^2 = tr(g) g - I and the linearised form
// AB + BA = tr(A) B + tr(B) A + (tr(AB) - tr(A) tr(B)) I:
//   X*X   = -I + X
//   X*Y   = XY
//   X*XY  = -Y + XY
//   Y*X   = (lam - phi) I + phi X + Y - XY
//   Y*Y   = -I + phi Y
//   Y*XY  = -I + X + lam Y
//   XY*X  = -phi I + lam X + Y
//   XY*Y  = -X + phi XY
//   XY*XY = -I + lam XY
TraceAlgebraElement basis_product(int i, int j) {
  auto mk = [](GfPoly ci, GfPoly cx, GfPoly cy, GfPoly cxy) {
    return TraceAlgebraElement{{std::move(ci), std::move(cx), std::move(cy), std::move(cxy)}};
  };
  if (i == 0 || j == 0) {
    TraceAlgebraElement e{};
    e.c[i == 0 ? j : i] = cpoly(1);
    return e;
  }
  switch (i * 4 + j) {
    case 1 * 4 + 1: return mk(cpoly(-1), cpoly(1), {}, {});
    case 1 * 4 + 2: return mk({}, {}, {}, cpoly(1));
    case 1 * 4 + 3: return mk({}, {}, cpoly(-1), cpoly(1));
    case 2 * 4 + 1: return mk(lam_poly() - phi_poly(), phi_poly(), cpoly(1), cpoly(-1));
    case 2 * 4 + 2: return mk(cpoly(-1), {}, phi_poly(), {});
    case 2 * 4 + 3: return mk(cpoly(-1), cpoly(1), lam_poly(), {});
    case 3 * 4 + 1: return mk(-phi_poly(), lam_poly(), cpoly(1), {});
    case 3 * 4 + 2: return mk({}, cpoly(-1), {}, phi_poly());
    case 3 * 4 + 3: return mk(cpoly(-1), {}, {}, lam_poly());
  }
  raise(Errc::PreconditionViolated, "bad basis index");
}

// Balanced residue of a syllable exponent: the representative of smallest
// absolute value (x^2 -> -1; y^3 -> -2, y^4 -> -1).
int balanced_exponent(char gen, int e) {
  if (gen == 'x') return e == 2 ? -1 : e;
  return e >= 3 ? e - 5 : e;
}

// Algebra element of the syllable g^e, indexed by the canonical exponent e.
const TraceAlgebraElement& syllable_element(char gen, int e) {
  static const std::array<TraceAlgebraElement, 2> xs = {generator_power('x', 1),
                                                        generator_power('x', -1)};
  static const std::array<TraceAlgebraElement, 4> ys = {
      generator_power('y', 1), generator_power('y', 2), generator_power('y', -2),
      generator_power('y', -1)};
  return gen == 'x' ? xs[static_cast<std::size_t>(e - 1)] : ys[static_cast<std::size_t>(e - 1)];
}

}  // namespace

TraceAlgebraElement TraceAlgebraElement::identity() {
  TraceAlgebraElement e{};
  e.c[0] = cpoly(1);
  return e;
}

TraceAlgebraElement TraceAlgebraElement::operator*(const TraceAlgebraElement& o) const {
  TraceAlgebraElement out{};
  for (int i = 0; i < 4; ++i) {
    if (c[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.c[j].is_zero()) continue;
      GfPoly coeff = c[i] * o.c[j];
      TraceAlgebraElement bp = basis_product(i, j);
      for (int k = 0; k < 4; ++k)
        if (!bp.c[k].is_zero()) out.c[k] = out.c[k] + bp.c[k] * coeff;
    }
  }
  return out;
}

GfPoly TraceAlgebraElement::trace() const {
  return c[0] * GoldenScalar(2) + c[1] + c[2] * GoldenScalar::phi() + c[3] * GfPoly::lambda();
}

TraceAlgebraElement generator_power(char gen, int n) {
  TraceAlgebraElement base{};
  base.c[gen == 'x' ? 1 : 2] = cpoly(1);
  if (n < 0) {
    // g^-1 = tr(g) I - g for g in SL(2)
    TraceAlgebraElement inv{};
    inv.c[0] = gen == 'x' ? cpoly(1) : phi_poly();
    inv.c[gen == 'x' ? 1 : 2] = cpoly(-1);
    base = inv;
    n = -n;
  }
  TraceAlgebraElement acc = TraceAlgebraElement::identity();
  for (int i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

GfPoly trace_polynomial(const GroupWord& w) {
  TraceAlgebraElement acc = TraceAlgebraElement::identity();
  for (const auto& [a, b] : w.pairs()) {
    acc = acc * syllable_element('x', a);
    acc = acc * syllable_element('y', b);
  }
  return acc.trace();
}

namespace {

using C = std::complex<double>;
using Mat2 = std::array<C, 4>;  // row-major a b / c d

Mat2 mul(const Mat2& p, const Mat2& q) {
  return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
          p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]};
}
C det(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }
Mat2 inverse(const Mat2& m) {
  C d = det(m);
  return {m[3] / d, -m[1] / d, -m[2] / d, m[0] / d};
}
Mat2 ipow(const Mat2& m, int n) {
  Mat2 base = n < 0 ? inverse(m) : m;
  int k = n < 0 ? -n : n;
  Mat2 acc = {1.0, 0.0, 0.0, 1.0};
  for (int i = 0; i < k; ++i) acc = mul(acc, base);
  return acc;
}

}  // namespace

std::complex<double> numeric_trace_oracle(const GroupWord& w, std::complex<double> lam0,
                                          int trials, std::mt19937_64& rng) {
  if (trials < 1) raise(Errc::PreconditionViolated, "trials must be >= 1");
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  // X companion-form with tr 1, det 1; Y solved from tr Y = phi, det Y = 1,
  // tr(XY) = lam0:  Y = [[phi, b], [b - lam0, 0]] with b^2 - lam0 b + 1 = 0.
  Mat2 x0 = {0.0, -1.0, 1.0, 1.0};
  C b = (lam0 + std::sqrt(lam0 * lam0 - C(4.0))) / C(2.0);
  Mat2 y0 = {C(phi), b, b - lam0, 0.0};
  if (std::abs(det(y0) - C(1.0)) > 1e-9 || !std::isfinite(std::abs(b)))
    raise(Errc::DegenerateParameter, "trace constraints unsolvable at this lambda");

  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<C> traces;
  traces.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    // well-conditioned conjugator, normalised to det 1 so P^-1 stays bounded
    Mat2 p;
    do {
      for (auto& e : p) e = C(unif(rng), unif(rng));
    } while (std::abs(det(p)) < 0.5);
    C scale = std::sqrt(det(p));
    for (auto& e : p) e /= scale;
    Mat2 pi = inverse(p);
    Mat2 xc = mul(mul(p, x0), pi), yc = mul(mul(p, y0), pi);
    Mat2 acc = {1.0, 0.0, 0.0, 1.0};
    for (const auto& [a, bexp] : w.pairs()) {
      acc = mul(acc, ipow(xc, balanced_exponent('x', a)));
      acc = mul(acc, ipow(yc, balanced_exponent('y', bexp)));
    }
    traces.push_back(acc[0] + acc[3]);
  }
  double agree_tol = 1e-9 * std::max(1.0, std::abs(traces[0]));
  for (std::size_t i = 1; i < traces.size(); ++i)
    if (std::abs(traces[i] - traces[0]) > agree_tol)
      raise(Errc::DegenerateParameter, "conjugation-invariance check failed");
  C mean = 0.0;
  for (const C& t : traces) mean += t;
  return mean / C(static_cast<double>(traces.size()));
}

}  // namespace tracelab
