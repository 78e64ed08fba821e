#include "doctest.h"

#include "tracelab/trace.hpp"
#include "tracelab/words.hpp"

#include <random>

using namespace tracelab;

namespace {
const GoldenScalar kOne = GoldenScalar::one();
const GoldenScalar kPhi = GoldenScalar::phi();

GroupWord random_word(std::mt19937_64& rng, int k_max) {
  std::uniform_int_distribution<int> klen(1, k_max), ax(1, 2), by(1, 4);
  int k = klen(rng);
  std::vector<GroupWord::SyllablePair> pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(ax(rng), by(rng));
  return GroupWord(std::move(pairs));
}
}  // namespace

TEST_CASE("trace polynomial pinned examples") {
  CHECK(trace_polynomial(parse_word("xy")) == GfPoly::lambda());
  // tau(x y^4) = phi - lam
  CHECK(trace_polynomial(parse_word("x y^4")) == GfPoly({kPhi, -kOne}));
  // tau(x y^2) = phi lam - 1
  CHECK(trace_polynomial(parse_word("x y^2")) == GfPoly({-kOne, kPhi}));
  // tau((xy)^2) = lam^2 - 2
  CHECK(trace_polynomial(parse_word("xyxy")) ==
        GfPoly({GoldenScalar(-2), GoldenScalar::zero(), kOne}));
}

TEST_CASE("trace identity tr(XY) + tr(XY^-1) = tr X tr Y at the polynomial level") {
  GfPoly sum = trace_polynomial(parse_word("x y")) + trace_polynomial(parse_word("x y^4"));
  CHECK(sum == GfPoly::constant(kPhi));
}

TEST_CASE("degree equals syllable count with non-zero leading coefficient") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    GroupWord w = random_word(rng, 8);
    GfPoly tau = trace_polynomial(w);
    CHECK(tau.degree() == static_cast<int>(w.syllable_count()));
    CHECK(!tau.leading().is_zero());
  }
}

TEST_CASE("trace is invariant under cyclic rotation of the word") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    GroupWord w = random_word(rng, 6);
    GfPoly tau = trace_polynomial(w);
    for (std::size_t r = 1; r < w.syllable_count(); ++r)
      CHECK(trace_polynomial(w.rotated(r)) == tau);
  }
}

TEST_CASE("numeric oracle pinned examples") {
  std::mt19937_64 rng(2024);
  auto near = [](std::complex<double> a, double b) { return std::abs(a - b) < 1e-9; };
  CHECK(near(numeric_trace_oracle(parse_word("xy"), 0.25, 5, rng), 0.25));
  CHECK(near(numeric_trace_oracle(parse_word("xyxy"), 2.0, 5, rng), 2.0));
  CHECK(near(numeric_trace_oracle(parse_word("x y^4"), 0.0, 5, rng), kPhi.to_double()));
}

TEST_CASE("symbolic and numeric traces agree on random words") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    GroupWord w = random_word(rng, 8);
    GfPoly tau = trace_polynomial(w);
    for (int i = 0; i < 3; ++i) {
      std::complex<double> lam0(re(rng), re(rng));
      std::complex<double> sym = tau.eval(lam0);
      std::complex<double> num = numeric_trace_oracle(w, lam0, 3, rng);
      CHECK(std::abs(sym - num) < 1e-8);
    }
  }
}
