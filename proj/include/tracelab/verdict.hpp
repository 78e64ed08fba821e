#pragma once

#include "tracelab/poly.hpp"
#include "tracelab/words.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tracelab {

/// The four exceptional traces {0, 1, phi, phi-1}: the values of tr(XY) for
/// which the representation image is A5 instead of containing a free group.
const std::array<GoldenScalar, 4>& exceptional_set();

struct RootReport {
  std::array<int, 4> multiplicity{};  // indexed like exceptional_set()
  GfPoly residual;                    // tau with all (lam - alpha)^m divided out
  int residual_degree = 0;
  int degree = 0;

  int multiplicity_of(const GoldenScalar& alpha) const;
  int total_exceptional_multiplicity() const;
};

enum class VerdictTag {
  FreeByRootOutsideOmega,  // residual_degree > 0: some root lies outside the set
  FreeByMultipleRoot,      // some exceptional root has multiplicity >= 2
  DeferredPriorWork,       // all roots simple and exceptional; forces k <= 4
};

const char* verdict_tag_name(VerdictTag tag);

struct Verdict {
  VerdictTag tag;
  std::optional<GoldenScalar> witness_root;  // set for FreeByMultipleRoot
  GfPoly tau;
  RootReport report;
};

/// Per-root multiplicities against the exceptional set plus the exact residual factor.
RootReport classify_roots(const GfPoly& tau);

/// The decision procedure: trace polynomial, root classification, dichotomy.
Verdict rosenberger_verdict(const GroupWord& w);

struct WordCensus {
  long long total = 0;
  long long free_by_root_outside = 0;
  long long free_by_multiple_root = 0;
  long long deferred_prior_work = 0;
  std::vector<std::pair<GroupWord, GoldenScalar>> multiple_root_witnesses;
};

/// Classifies every word with k <= k_max syllables (8^k words per length),
/// in deterministic lexicographic order.
WordCensus enumerate_words(int k_max);

}  // namespace tracelab
