#include "tracelab/jets.hpp"

#include "tracelab/errors.hpp"

#include <cmath>
#include <numbers>

namespace tracelab {

namespace {
using C = std::complex<double>;
constexpr double kTol = 1e-9;
}  // namespace

DualComplex jet_eval_poly(const GfPoly& f, const GoldenScalar& alpha) {
  DualComplex x(alpha.to_double(), 1.0);
  DualComplex acc;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + DualComplex(it->to_double());
  return acc;
}

JetMatrix2 JetMatrix2::identity() {
  JetMatrix2 i;
  i.m[0] = DualComplex(1.0);
  i.m[3] = DualComplex(1.0);
  return i;
}

JetMatrix2 JetMatrix2::operator*(const JetMatrix2& o) const {
  JetMatrix2 out;
  out.m[0] = m[0] * o.m[0] + m[1] * o.m[2];
  out.m[1] = m[0] * o.m[1] + m[1] * o.m[3];
  out.m[2] = m[2] * o.m[0] + m[3] * o.m[2];
  out.m[3] = m[2] * o.m[1] + m[3] * o.m[3];
  return out;
}

JetMatrix2 JetMatrix2::operator+(const JetMatrix2& o) const {
  JetMatrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = m[i] + o.m[i];
  return out;
}

JetMatrix2 JetMatrix2::operator-() const {
  JetMatrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = -m[i];
  return out;
}

JetMatrix2 JetMatrix2::scaled(const DualComplex& s) const {
  JetMatrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = m[i] * s;
  return out;
}

JetMatrix2 JetMatrix2::sl2_inverse() const {
  JetMatrix2 out;
  out.m[0] = m[3];
  out.m[1] = -m[1];
  out.m[2] = -m[2];
  out.m[3] = m[0];
  return out;
}

JetMatrix2 JetMatrix2::truncated() const {
  JetMatrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = DualComplex(m[i].value);
  return out;
}

double matrix_distance(const JetMatrix2& a, const JetMatrix2& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    d = std::max(d, std::abs(a.m[i].value - b.m[i].value));
    d = std::max(d, std::abs(a.m[i].slope - b.m[i].slope));
  }
  return d;
}

namespace {

JetMatrix2 jet_power(const JetMatrix2& g, int e) {
  JetMatrix2 base = e < 0 ? g.sl2_inverse() : g;
  int k = e < 0 ? -e : e;
  JetMatrix2 acc = JetMatrix2::identity();
  for (int i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

int balanced(char gen, int e) {
  if (gen == 'x') return e == 2 ? -1 : e;
  return e >= 3 ? e - 5 : e;
}

}  // namespace

LambdaRep lambda_representation(const GroupWord& w, const GoldenScalar& alpha, JetMode mode) {
  const double pi = std::numbers::pi;
  const C i(0.0, 1.0);
  LambdaRep rep;
  rep.X.m[0] = DualComplex(std::exp(i * (pi / 3.0)));
  rep.X.m[1] = DualComplex(0.0);
  rep.X.m[2] = DualComplex(1.0);
  rep.X.m[3] = DualComplex(std::exp(-i * (pi / 3.0)));

  DualComplex target = mode == JetMode::Shifted ? DualComplex(alpha.to_double(), 1.0)
                                                : DualComplex(0.0, 1.0);
  // tr(XY) = 2 cos(8 pi / 15) + corner for the triangular shapes below.
  DualComplex corner = target - DualComplex(2.0 * std::cos(8.0 * pi / 15.0));
  rep.Y.m[0] = DualComplex(std::exp(i * (pi / 5.0)));
  rep.Y.m[1] = corner;
  rep.Y.m[2] = DualComplex(0.0);
  rep.Y.m[3] = DualComplex(std::exp(-i * (pi / 5.0)));

  JetMatrix2 acc = JetMatrix2::identity();
  for (const auto& [a, b] : w.pairs()) {
    acc = acc * jet_power(rep.X, balanced('x', a));
    acc = acc * jet_power(rep.Y, balanced('y', b));
  }
  rep.trace_w = acc.trace();
  return rep;
}

NilpotentSquare nilpotent_square_identity(const JetMatrix2& m) {
  DualComplex tr = m.trace();
  if (std::abs(tr.value) > kTol || std::abs(tr.slope - C(1.0)) > kTol)
    raise(Errc::PreconditionViolated, "matrix trace is not normalised to eps");
  NilpotentSquare out;
  out.z = m.truncated();
  JetMatrix2 square = m * m;
  // expected: -I + eps Z
  JetMatrix2 expected = (-JetMatrix2::identity()) + out.z.scaled(DualComplex::epsilon());
  out.ok = matrix_distance(square, expected) < kTol && std::abs(out.z.trace().value) < kTol;
  if (!out.ok) {
    // Cayley-Hamilton guarantees this for det 1; a violation means the input
    // was not an SL2 jet.
    raise(Errc::IdentityViolated, "M^2 != -I + eps Z; input is not a trace-eps SL2 jet");
  }
  return out;
}

JetMatrix2 random_trace_epsilon_jet(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  auto rc = [&]() { return C(unif(rng), unif(rng)); };
  // Traceless value part V with det 1: V = [[a, b], [c, -a]], c = -(1 + a^2)/b.
  C a = rc(), b = rc();
  while (std::abs(b) < 0.1) b = rc();
  C c = -(C(1.0) + a * a) / b;
  JetMatrix2 v;
  v.m = {DualComplex(a), DualComplex(b), DualComplex(c), DualComplex(-a)};
  // Slope part S with tr S = 1 and tr(V S) = 0, so that tr M = eps and
  // det M = 1 + eps tr(adj(V) S) = 1 - eps tr(V S) = 1.
  C s0 = rc(), s1 = rc(), s2 = rc();
  JetMatrix2 s;
  s.m = {DualComplex(s0), DualComplex(s1), DualComplex(s2), DualComplex(C(1.0) - s0)};
  C tvs = v.m[0].value * s.m[0].value + v.m[1].value * s.m[2].value +
          v.m[2].value * s.m[1].value + v.m[3].value * s.m[3].value;
  // tr(V (S + t V)) = tvs + t tr(V^2) = tvs - 2 t, so t = tvs / 2.
  C t = tvs / C(2.0);
  JetMatrix2 m = JetMatrix2::identity();
  for (std::size_t k = 0; k < 4; ++k)
    m.m[k] = DualComplex(v.m[k].value, s.m[k].value + t * v.m[k].value);
  return m;
}

std::vector<JetMatrix2> conjugate_orbit_of_z(const GroupWord& w, const GoldenScalar& alpha) {
  LambdaRep rep = lambda_representation(w, alpha, JetMode::Verbatim);
  JetMatrix2 x0 = rep.X.truncated(), y0 = rep.Y.truncated();
  JetMatrix2 z = (x0 * y0).truncated();

  // Closure of <X0, Y0> in SL2(C): 120 elements for the icosahedral trace data.
  std::vector<JetMatrix2> group{JetMatrix2::identity()};
  auto known = [&](const JetMatrix2& g) {
    for (const JetMatrix2& h : group)
      if (matrix_distance(g, h) < 1e-6) return true;
    return false;
  };
  std::vector<JetMatrix2> frontier{x0, y0};
  group.push_back(x0);
  group.push_back(y0);
  while (!frontier.empty()) {
    std::vector<JetMatrix2> next;
    for (const JetMatrix2& g : frontier)
      for (const JetMatrix2* gen : {&x0, &y0}) {
        JetMatrix2 h = g * *gen;
        if (!known(h)) {
          group.push_back(h);
          next.push_back(h);
        }
      }
    frontier = std::move(next);
    if (group.size() > 240) raise(Errc::ClosureFailure, "value-part group failed to close");
  }
  if (group.size() != 120)
    raise(Errc::ClosureFailure,
          "value-part group has order " + std::to_string(group.size()) + ", expected 120");

  std::vector<JetMatrix2> orbit;
  for (const JetMatrix2& g : group) {
    JetMatrix2 conj = g * z * g.sl2_inverse();
    bool dup = false;
    for (const JetMatrix2& known_z : orbit)
      if (matrix_distance(conj, known_z) < 1e-6) {
        dup = true;
        break;
      }
    if (!dup) orbit.push_back(conj);
  }
  return orbit;
}

}  // namespace tracelab
