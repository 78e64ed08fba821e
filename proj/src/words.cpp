#include "tracelab/words.hpp"

#include "tracelab/errors.hpp"

#include <cctype>
#include <sstream>

namespace tracelab {

namespace {

int modulus_of(char gen) { return gen == 'x' ? 3 : 5; }

int canonical_exp(char gen, long long e) {
  int m = modulus_of(gen);
  long long r = e % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

struct RawSyllable {
  char gen;
  long long exp;
};

std::vector<RawSyllable> tokenize(const std::string& text) {
  std::vector<RawSyllable> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) raise(Errc::SyntaxError, "empty input");
  while (i < text.size()) {
    char g = text[i];
    if (g != 'x' && g != 'y')
      raise(Errc::SyntaxError, std::string("expected generator at position ") + std::to_string(i));
    ++i;
    skip_ws();
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
        skip_ws();
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        raise(Errc::SyntaxError, "expected digits after '^'");
      long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > (1LL << 40)) v %= 15;  // reduce on the fly; only v mod 15 matters
        ++i;
      }
      exp = neg ? -v : v;
    }
    out.push_back({g, exp});
    skip_ws();
  }
  return out;
}

}  // namespace

std::vector<Syllable> reduce_syllables(std::vector<Syllable> raw) {
  // Merge + delete until stable. Exponents of Syllable are already residues,
  // so merging just adds them modulo the generator order.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Syllable> next;
    for (const Syllable& s : raw) {
      int e = canonical_exp(s.gen, s.exp);
      if (e == 0) {
        changed = true;
        continue;
      }
      if (!next.empty() && next.back().gen == s.gen) {
        next.back().exp = canonical_exp(s.gen, static_cast<long long>(next.back().exp) + e);
        changed = true;
        if (next.back().exp == 0) next.pop_back();
      } else {
        next.push_back({s.gen, e});
      }
    }
    raw = std::move(next);
  }
  return raw;
}

FreeProductWord::FreeProductWord(std::vector<Syllable> syllables)
    : syl_(reduce_syllables(std::move(syllables))) {}

FreeProductWord FreeProductWord::inverse() const {
  std::vector<Syllable> rev;
  rev.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
    rev.push_back({it->gen, canonical_exp(it->gen, -static_cast<long long>(it->exp))});
  return FreeProductWord(std::move(rev));
}

std::string FreeProductWord::str() const {
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : syl_) {
    if (!first) os << " ";
    first = false;
    os << s.gen;
    if (s.exp != 1) os << "^" << s.exp;
  }
  return os.str();
}

GroupWord::GroupWord(std::vector<SyllablePair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) raise(Errc::EmptyAfterReduction, "word has no syllables");
  for (const auto& [a, b] : pairs_) {
    if (a <= 0 || a >= 3 || b <= 0 || b >= 5)
      raise(Errc::SyntaxError, "syllable exponents out of range for type (3,5)");
  }
}

GroupWord GroupWord::rotated(std::size_t offset) const {
  std::vector<SyllablePair> out;
  out.reserve(pairs_.size());
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    out.push_back(pairs_[(i + offset) % pairs_.size()]);
  return GroupWord(std::move(out));
}

FreeProductWord GroupWord::as_free_word() const {
  std::vector<Syllable> syl;
  syl.reserve(2 * pairs_.size());
  for (const auto& [a, b] : pairs_) {
    syl.push_back({'x', a});
    syl.push_back({'y', b});
  }
  return FreeProductWord(std::move(syl));
}

FreeProductWord GroupWord::inverse() const { return as_free_word().inverse(); }

GroupWord parse_word(const std::string& text) {
  std::vector<Syllable> syl;
  for (const RawSyllable& rs : tokenize(text))
    syl.push_back({rs.gen, canonical_exp(rs.gen, rs.exp)});
  std::vector<Syllable> red = reduce_syllables(std::move(syl));
  if (red.empty()) raise(Errc::EmptyAfterReduction, "word reduces to the identity");
  bool seen_x = false, seen_y = false;
  for (const Syllable& s : red) (s.gen == 'x' ? seen_x : seen_y) = true;
  if (!seen_x || !seen_y)
    raise(Errc::EmptyAfterReduction, "word reduces to a power of a single generator");
  if (red.front().gen != 'x' || red.back().gen != 'y')
    raise(Errc::NotAlternatingReducible,
          "reduced word is '" + FreeProductWord(red).str() +
              "'; it does not have the x...y alternating shape");
  std::vector<GroupWord::SyllablePair> pairs;
  for (std::size_t i = 0; i < red.size(); i += 2) pairs.emplace_back(red[i].exp, red[i + 1].exp);
  return GroupWord(std::move(pairs));
}

}  // namespace tracelab
