#pragma once

#include "tracelab/covers.hpp"
#include "tracelab/verdict.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace tracelab {

inline constexpr int kSchemaVersion = 1;

/// Full analysis pipeline for one word: tau, root report, verdict; with `deep`,
/// essential representations for every exceptional root, the index-30 subgroup
/// presentation census, and jet cross-checks.
nlohmann::json analysis_report(const std::string& word_text, bool deep, std::uint64_t seed,
                               const std::string& command);

/// The icosahedral midpoint-lattice verification block: rank, freeness
/// certificate, coinvariant structures, Klein action matrices, neighbour-sum
/// data. `all_expected_hold` is true only if every classical expected value is
/// matched by the computation.
nlohmann::json lemma2_report();

nlohmann::json census_report(int k_max, const std::string& command);

nlohmann::json jets_report(std::uint64_t seed, const std::string& command);

/// Growth table for a presentation given per-n cover assignments.
nlohmann::json cover_report(const Presentation& p, const std::vector<CoverSpec>& specs,
                            const std::string& command);

/// Human-readable rendering of any of the above reports (never a separate
/// computation path).
std::string render_text(const nlohmann::json& report);

}  // namespace tracelab
