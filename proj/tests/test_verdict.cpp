#include "doctest.h"

#include "tracelab/errors.hpp"
#include "tracelab/trace.hpp"
#include "tracelab/verdict.hpp"

using namespace tracelab;

namespace {
const GoldenScalar kOne = GoldenScalar::one();
const GoldenScalar kPhi = GoldenScalar::phi();
}  // namespace

TEST_CASE("exceptional set is {0, 1, phi, phi-1}") {
  const auto& omega = exceptional_set();
  CHECK(omega[0] == GoldenScalar::zero());
  CHECK(omega[1] == kOne);
  CHECK(omega[2] == kPhi);
  CHECK(omega[3] == kPhi - kOne);
  // (±1 + sqrt5)/2 in the {1, phi} basis
  CHECK(omega[2] == GoldenScalar(Rat(1, 2)) + GoldenScalar(Rat(1, 2)) * GoldenScalar::sqrt5());
  CHECK(omega[3] == GoldenScalar(Rat(-1, 2)) + GoldenScalar(Rat(1, 2)) * GoldenScalar::sqrt5());
}

TEST_CASE("classify_roots examples") {
  RootReport r1 = classify_roots(GfPoly::lambda());
  CHECK(r1.multiplicity_of(GoldenScalar::zero()) == 1);
  CHECK(r1.total_exceptional_multiplicity() == 1);
  CHECK(r1.residual_degree == 0);

  RootReport r2 = classify_roots(GfPoly({GoldenScalar(-2), GoldenScalar::zero(), kOne}));
  CHECK(r2.total_exceptional_multiplicity() == 0);
  CHECK(r2.residual_degree == 2);

  RootReport r3 = classify_roots(GfPoly({-kOne, kPhi}));
  CHECK(r3.multiplicity_of(kPhi - kOne) == 1);
  CHECK(r3.residual_degree == 0);

  CHECK_THROWS_AS(classify_roots(GfPoly()), Error);
}

TEST_CASE("multiplicities plus residual degree account for the whole degree") {
  for (const char* text : {"xy", "xyxy", "x y^2 x^2 y^3", "x y x y^2 x y^3"}) {
    GroupWord w = parse_word(text);
    GfPoly tau = trace_polynomial(w);
    RootReport rep = classify_roots(tau);
    CHECK(rep.total_exceptional_multiplicity() + rep.residual_degree == tau.degree());
  }
}

TEST_CASE("rosenberger verdict examples") {
  Verdict v1 = rosenberger_verdict(parse_word("xyxy"));
  CHECK(v1.tag == VerdictTag::FreeByRootOutsideOmega);
  CHECK(v1.report.residual_degree == 2);

  Verdict v2 = rosenberger_verdict(parse_word("xy"));
  CHECK(v2.tag == VerdictTag::DeferredPriorWork);
  CHECK(v2.report.degree == 1);

  Verdict v3 = rosenberger_verdict(parse_word("x y^2"));
  CHECK(v3.tag == VerdictTag::DeferredPriorWork);
  CHECK(v3.report.multiplicity_of(kPhi - kOne) == 1);
}

TEST_CASE("verdicts are invariant under cyclic rotation") {
  GroupWord w = parse_word("x y^2 x^2 y x y^3");
  Verdict base = rosenberger_verdict(w);
  for (std::size_t r = 1; r < w.syllable_count(); ++r) {
    Verdict rot = rosenberger_verdict(w.rotated(r));
    CHECK(rot.tag == base.tag);
    CHECK(rot.report.multiplicity == base.report.multiplicity);
    CHECK(rot.report.residual_degree == base.report.residual_degree);
  }
}

TEST_CASE("enumerate_words census") {
  WordCensus c1 = enumerate_words(1);
  CHECK(c1.total == 8);
  CHECK(c1.free_by_multiple_root == 0);
  CHECK(c1.free_by_root_outside + c1.deferred_prior_work == 8);

  WordCensus c2 = enumerate_words(2);
  CHECK(c2.total == 72);
  CHECK(c2.free_by_root_outside + c2.free_by_multiple_root + c2.deferred_prior_work == 72);
  // every reported multiple-root witness must recheck definitionally
  for (const auto& [w, alpha] : c2.multiple_root_witnesses)
    CHECK(root_multiplicity(trace_polynomial(w), alpha) >= 2);

  CHECK_THROWS_AS(enumerate_words(0), Error);
}

TEST_CASE("deferred verdicts have k <= 4 and only simple exceptional roots") {
  WordCensus c = enumerate_words(2);
  // spot-verified structurally: DeferredPriorWork is only emitted when the
  // residual is constant and all multiplicities are <= 1, which forces k <= 4
  long long deferred = 0;
  for (int k = 1; k <= 2; ++k) {
    std::vector<GroupWord::SyllablePair> pairs;
    auto rec = [&](auto&& self, int depth) -> void {
      if (depth == 0) {
        Verdict v = rosenberger_verdict(GroupWord(pairs));
        if (v.tag == VerdictTag::DeferredPriorWork) {
          ++deferred;
          CHECK(pairs.size() <= 4);
          CHECK(v.report.residual_degree == 0);
          for (int m : v.report.multiplicity) CHECK(m <= 1);
        }
        return;
      }
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 4; ++b) {
          pairs.emplace_back(a, b);
          self(self, depth - 1);
          pairs.pop_back();
        }
    };
    rec(rec, k);
  }
  CHECK(deferred == c.deferred_prior_work);
}

TEST_CASE("k = 3 census finds the first multiple-root witnesses") {
  WordCensus c = enumerate_words(3);
  CHECK(c.total == 584);
  CHECK(c.free_by_root_outside == 456);
  CHECK(c.free_by_multiple_root == 48);
  CHECK(c.deferred_prior_work == 80);
  for (const auto& [w, alpha] : c.multiple_root_witnesses)
    CHECK(root_multiplicity(trace_polynomial(w), alpha) >= 2);
}

TEST_CASE("pinned multiple-root witness x y x y^2 x^2 y^3") {
  GroupWord w = parse_word("x y x y^2 x^2 y^3");
  GfPoly tau = trace_polynomial(w);
  // tau = (1+phi) lam^3 - (1+2phi) lam^2 = lam^2 ((1+phi) lam - (1+2phi));
  // N(1+phi) = 1, so the residual simple root is (1+2phi)(2-phi) = phi.
  GfPoly expected({GoldenScalar::zero(), GoldenScalar::zero(),
                   -(kOne + GoldenScalar(2) * kPhi), kOne + kPhi});
  CHECK(tau == expected);
  Verdict v = rosenberger_verdict(w);
  CHECK(v.tag == VerdictTag::FreeByMultipleRoot);
  CHECK(*v.witness_root == GoldenScalar::zero());
  CHECK(v.report.multiplicity_of(GoldenScalar::zero()) == 2);
  CHECK(v.report.multiplicity_of(kPhi) == 1);
  CHECK(v.report.residual_degree == 0);
}
