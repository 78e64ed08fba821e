#pragma once

#include "tracelab/icosians.hpp"
#include "tracelab/intlinalg.hpp"
#include "tracelab/words.hpp"

#include <string>
#include <vector>

namespace tracelab {

enum class BaseSubgroup { C, V };  // <image of W> of order 2, or its Klein centraliser

/// Right-coset action of the generators on cosets of C (index 30) or V (index 15)
/// in the projective image A5 of an essential representation.
struct CosetTable {
  BaseSubgroup base;
  int index = 0;
  std::vector<int> x_action, y_action;  // permutations of {0..index-1}, coset 0 = subgroup

  std::vector<int> word_action(const GroupWord& w) const;
};

CosetTable coset_table(const EssentialRep& rep, const GroupWord& w, BaseSubgroup base);

std::vector<std::vector<int>> permutation_orbits(const std::vector<int>& perm);

enum class RelatorOrigin { FromX3, FromY5, FromW2Pair, FromW2Square, Auxiliary };

struct Relator {
  std::vector<int> word;  // signed 1-based Schreier generator indices, freely reduced
  RelatorOrigin origin;
};

struct Presentation {
  int generator_count = 0;
  std::vector<Relator> relators;
  /// Half-words s with relator s^2, for the W-action fixed cosets (in relator order).
  std::vector<std::vector<int>> squared_roots;

  int count(RelatorOrigin origin) const;
  /// chi of the presentation 2-complex: 1 - generators + relators.
  int euler_characteristic() const;
  /// Same with the FromW2Square relators omitted (the subcomplex L).
  int euler_characteristic_without_squares() const;
  std::string str() const;
};

/// Reidemeister-Schreier rewriting over a breadth-first Schreier transversal
/// (alphabet order x, y). Produces one relator per orbit of the relevant
/// permutation: x-orbits for x^3, y-orbits for y^5, W-orbits for W^2; fixed
/// cosets of the W-action yield literal squares s^2. Trivial (tree-edge)
/// generators are eliminated.
///
/// Throws CensusMismatch if the emitted counts disagree with the orbit
/// structure or the Schreier generator formula.
Presentation schreier_presentation(const CosetTable& table, const GroupWord& w);

/// Structure of the abelianisation from the Smith form of the exponent-sum matrix.
AbelianStructure abelianization(const Presentation& p);

/// Exponent-sum matrix (one row per relator).
IntMat exponent_matrix(const Presentation& p);

/// Tietze move: adjoin a fresh generator g with defining relator g * word^-1.
Presentation with_redundant_generator(const Presentation& p, const std::vector<int>& word);

}  // namespace tracelab
