#include "tracelab/verdict.hpp"

#include "tracelab/errors.hpp"
#include "tracelab/trace.hpp"

namespace tracelab {

const std::array<GoldenScalar, 4>& exceptional_set() {
  static const std::array<GoldenScalar, 4> omega = {
      GoldenScalar::zero(), GoldenScalar::one(), GoldenScalar::phi(),
      GoldenScalar::phi() - GoldenScalar::one()};
  return omega;
}

int RootReport::multiplicity_of(const GoldenScalar& alpha) const {
  const auto& omega = exceptional_set();
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (omega[i] == alpha) return multiplicity[i];
  raise(Errc::PreconditionViolated, "not an exceptional root: " + alpha.str());
}

int RootReport::total_exceptional_multiplicity() const {
  int s = 0;
  for (int m : multiplicity) s += m;
  return s;
}

const char* verdict_tag_name(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::FreeByRootOutsideOmega: return "FreeByRootOutsideOmega";
    case VerdictTag::FreeByMultipleRoot: return "FreeByMultipleRoot";
    case VerdictTag::DeferredPriorWork: return "DeferredPriorWork";
  }
  return "?";
}

RootReport classify_roots(const GfPoly& tau) {
  if (tau.is_zero()) raise(Errc::ZeroPolynomial, "cannot classify roots of zero polynomial");
  RootReport rep;
  rep.degree = tau.degree();
  GfPoly residual = tau;
  const auto& omega = exceptional_set();
  for (std::size_t i = 0; i < omega.size(); ++i) {
    GfPoly lin = GfPoly::linear_root(omega[i]);
    int m = 0;
    while (true) {
      auto [q, r] = poly_divrem(residual, lin);
      if (!r.is_zero()) break;
      residual = q;
      ++m;
    }
    rep.multiplicity[i] = m;
  }
  rep.residual = residual;
  rep.residual_degree = residual.degree();
  return rep;
}

Verdict rosenberger_verdict(const GroupWord& w) {
  Verdict v;
  v.tau = trace_polynomial(w);
  v.report = classify_roots(v.tau);
  if (v.report.residual_degree > 0) {
    v.tag = VerdictTag::FreeByRootOutsideOmega;
    return v;
  }
  const auto& omega = exceptional_set();
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (v.report.multiplicity[i] >= 2) {
      v.tag = VerdictTag::FreeByMultipleRoot;
      v.witness_root = omega[i];
      return v;
    }
  }
  v.tag = VerdictTag::DeferredPriorWork;
  // All roots simple and exceptional, so k = number of distinct roots <= 4.
  if (w.syllable_count() > 4)
    raise(Errc::PreconditionViolated, "deferred verdict with k > 4 is impossible");
  return v;
}

WordCensus enumerate_words(int k_max) {
  if (k_max < 1) raise(Errc::PreconditionViolated, "k_max must be >= 1");
  WordCensus census;
  std::vector<GroupWord::SyllablePair> pairs;
  // Words of length k, lexicographic over syllables (a, b), a in {1,2}, b in {1..4}.
  auto visit = [&](auto&& self, int k) -> void {
    if (k == 0) {
      GroupWord w(pairs);
      Verdict v = rosenberger_verdict(w);
      ++census.total;
      switch (v.tag) {
        case VerdictTag::FreeByRootOutsideOmega: ++census.free_by_root_outside; break;
        case VerdictTag::FreeByMultipleRoot:
          ++census.free_by_multiple_root;
          census.multiple_root_witnesses.emplace_back(w, *v.witness_root);
          break;
        case VerdictTag::DeferredPriorWork: ++census.deferred_prior_work; break;
      }
      return;
    }
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 4; ++b) {
        pairs.emplace_back(a, b);
        self(self, k - 1);
        pairs.pop_back();
      }
    }
  };
  for (int k = 1; k <= k_max; ++k) visit(visit, k);
  return census;
}

}  // namespace tracelab
