#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tracelab {

/// One syllable g^e with g in {x, y} and e a canonical non-zero residue
/// (1 <= e < 3 for x, 1 <= e < 5 for y).
struct Syllable {
  char gen = 'x';
  int exp = 1;
  bool operator==(const Syllable&) const = default;
};

/// Fully reduced word in the free product Z3 * Z5: strictly alternating syllables
/// with canonical exponents, but with no constraint on which generator starts or
/// ends the word. Inversion is closed on this type.
class FreeProductWord {
 public:
  FreeProductWord() = default;
  explicit FreeProductWord(std::vector<Syllable> syllables);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }

  FreeProductWord inverse() const;
  std::string str() const;
  bool operator==(const FreeProductWord&) const = default;

 private:
  std::vector<Syllable> syl_;
};

/// Relator word W(x,y) = x^{a_1} y^{b_1} ... x^{a_k} y^{b_k} with
/// 0 < a_i < 3 and 0 < b_i < 5, k >= 1.
class GroupWord {
 public:
  using SyllablePair = std::pair<int, int>;

  explicit GroupWord(std::vector<SyllablePair> pairs);

  const std::vector<SyllablePair>& pairs() const { return pairs_; }
  std::size_t syllable_count() const { return pairs_.size(); }

  /// Cyclic rotation by one (x,y)-syllable pair: x^{a2}y^{b2}...x^{a1}y^{b1}.
  GroupWord rotated(std::size_t offset) const;

  FreeProductWord as_free_word() const;
  /// Inverse y^{-b_k} x^{-a_k} ... as a free-product word (it starts with y,
  /// so it is never itself a GroupWord).
  FreeProductWord inverse() const;

  std::string str() const { return as_free_word().str(); }
  bool operator==(const GroupWord&) const = default;

 private:
  std::vector<SyllablePair> pairs_;
};

/// Parses the grammar  word := syl+ ; syl := gen pow? ; gen := "x"|"y" ;
/// pow := "^" "-"? digit+  (whitespace ignored), reduces exponents mod (3,5),
/// deletes empty syllables and re-merges until stable.
///
/// Throws SyntaxError, EmptyAfterReduction (reduces to 1 or to a power of a
/// single generator), or NotAlternatingReducible (reduced word does not have
/// the x...y alternating shape; no cyclic rotation is attempted).
GroupWord parse_word(const std::string& text);

/// Reduction common to parse_word and inverse: canonical residues, zero-syllable
/// deletion, adjacent merge, iterated until stable.
std::vector<Syllable> reduce_syllables(std::vector<Syllable> raw);

}  // namespace tracelab
