#include "doctest.h"

#include "tracelab/errors.hpp"
#include "tracelab/golden.hpp"
#include "tracelab/poly.hpp"

#include <cmath>
#include <random>

using namespace tracelab;

namespace {
const GoldenScalar kPhi = GoldenScalar::phi();
const GoldenScalar kOne = GoldenScalar::one();

GoldenScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 9);
  return {Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
}

GfPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  std::vector<GoldenScalar> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = random_scalar(rng);
  return GfPoly(std::move(c));
}
}  // namespace

TEST_CASE("golden field defining relations") {
  CHECK(kPhi * kPhi == kOne + kPhi);
  CHECK(kPhi * (kPhi - kOne) == kOne);
  CHECK((kOne + kPhi) - kPhi == kOne);
  CHECK(GoldenScalar::sqrt5() * GoldenScalar::sqrt5() == GoldenScalar(5));
  CHECK(kPhi.inverse() == kPhi - kOne);
  CHECK_THROWS_AS(GoldenScalar::zero().inverse(), Error);
}

TEST_CASE("golden scalar exact sign and order") {
  CHECK(kPhi.sign() == 1);
  CHECK((-kPhi).sign() == -1);
  CHECK(GoldenScalar::zero().sign() == 0);
  // 1 - phi = -0.618...
  CHECK((kOne - kPhi).sign() == -1);
  // 2 - phi = 0.38...
  CHECK((GoldenScalar(2) - kPhi).sign() == 1);
  // 5 - 3 phi = 0.145...
  CHECK((GoldenScalar(5) - GoldenScalar(3) * kPhi).sign() == 1);
  // 8 - 5 phi = -0.09...
  CHECK((GoldenScalar(8) - GoldenScalar(5) * kPhi).sign() == -1);
  CHECK(kOne < kPhi);
  CHECK(abs(kOne - kPhi) == kPhi - kOne);
}

TEST_CASE("golden arithmetic agrees with floating point on random expressions") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    GoldenScalar a = random_scalar(rng), acc = a;
    double facc = a.to_double();
    for (int depth = 0; depth < 10; ++depth) {
      GoldenScalar b = random_scalar(rng);
      switch (depth % 3) {
        case 0: acc = acc + b; facc += b.to_double(); break;
        case 1: acc = acc - b; facc -= b.to_double(); break;
        default: acc = acc * b; facc *= b.to_double(); break;
      }
    }
    CHECK(std::abs(acc.to_double() - facc) < 1e-9 * std::max(1.0, std::abs(facc)));
  }
}

TEST_CASE("golden scalar serialisation") {
  CHECK(GoldenScalar::zero().str() == "0");
  CHECK(kOne.str() == "1");
  CHECK(kPhi.str() == "phi");
  CHECK((-kPhi).str() == "-phi");
  CHECK((kOne + kPhi).str() == "1+phi");
  CHECK(GoldenScalar(Rat(-1), Rat(2)).str() == "-1+2*phi");
  CHECK(GoldenScalar(Rat(1, 2), Rat(-3, 4)).str() == "1/2-3/4*phi");
}

TEST_CASE("polynomial division examples") {
  // f = lam^2 - 2, g = lam - 1 -> q = lam + 1, r = -1
  GfPoly f({GoldenScalar(-2), GoldenScalar::zero(), kOne});
  GfPoly g({-kOne, kOne});
  auto [q, r] = poly_divrem(f, g);
  CHECK(q == GfPoly({kOne, kOne}));
  CHECK(r == GfPoly::constant(-kOne));

  auto [q2, r2] = poly_divrem(f, f);
  CHECK(q2 == GfPoly::constant(kOne));
  CHECK(r2.is_zero());

  // f = phi lam - 1, g = lam - (phi - 1) -> q = phi, r = 0
  GfPoly f3({-kOne, kPhi});
  GfPoly g3({kOne - kPhi, kOne});
  auto [q3, r3] = poly_divrem(f3, g3);
  CHECK(q3 == GfPoly::constant(kPhi));
  CHECK(r3.is_zero());

  CHECK_THROWS_AS(poly_divrem(f, GfPoly()), Error);
}

TEST_CASE("root multiplicity") {
  GfPoly lam = GfPoly::lambda();
  CHECK(root_multiplicity(lam * lam, GoldenScalar::zero()) == 2);
  GfPoly f({GoldenScalar(-2), GoldenScalar::zero(), kOne});  // lam^2 - 2
  CHECK(root_multiplicity(f, kOne) == 0);
  // (lam - phi)^2 (lam - 1) expanded
  GfPoly lp = GfPoly::linear_root(kPhi);
  GfPoly expanded = lp * lp * GfPoly::linear_root(kOne);
  CHECK(root_multiplicity(expanded, kPhi) == 2);
  CHECK(root_multiplicity(expanded, kOne) == 1);
  CHECK_THROWS_AS(root_multiplicity(GfPoly(), kOne), Error);
}

TEST_CASE("derivative and evaluation") {
  GfPoly f({GoldenScalar(-2), GoldenScalar::zero(), kOne});  // lam^2 - 2
  CHECK(f.derivative() == GfPoly({GoldenScalar::zero(), GoldenScalar(2)}));
  GfPoly g({-kOne, kPhi});  // phi lam - 1
  CHECK(g.eval(kPhi - kOne).is_zero());
  CHECK(GfPoly::lambda().eval(GoldenScalar::zero()).is_zero());
}

TEST_CASE("property: divrem reconstruction and multiple-root criterion") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    GfPoly f = random_poly(rng, 6);
    GfPoly g = random_poly(rng, 3);
    if (g.is_zero()) continue;
    auto [q, r] = poly_divrem(f, g);
    CHECK(q * g + r == f);
    CHECK((r.is_zero() || r.degree() < g.degree()));
  }
  // root_multiplicity >= 2 <=> f(alpha) = f'(alpha) = 0
  for (int trial = 0; trial < 60; ++trial) {
    GfPoly f = random_poly(rng, 5);
    if (f.is_zero()) continue;
    GoldenScalar alpha = random_scalar(rng);
    bool mult2 = root_multiplicity(f, alpha) >= 2;
    bool jet_zero = f.eval(alpha).is_zero() && f.derivative().eval(alpha).is_zero();
    CHECK(mult2 == jet_zero);
  }
  // force some actual multiple roots through the same equivalence
  for (int trial = 0; trial < 20; ++trial) {
    GoldenScalar alpha = random_scalar(rng);
    GfPoly lin = GfPoly::linear_root(alpha);
    GfPoly f = lin * lin * random_poly(rng, 2);
    if (f.is_zero()) continue;
    CHECK(root_multiplicity(f, alpha) >= 2);
    CHECK(f.eval(alpha).is_zero());
    CHECK(f.derivative().eval(alpha).is_zero());
  }
}

TEST_CASE("polynomial printing") {
  GfPoly f({GoldenScalar(-2), GoldenScalar::zero(), kOne});
  CHECK(f.str() == "lam^2 - 2");
  GfPoly g({-kOne, kPhi});
  CHECK(g.str() == "phi*lam - 1");
  CHECK(GfPoly().str() == "0");
}
