#include "tracelab/subgroups.hpp"

#include "tracelab/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace tracelab {

namespace {

// Letters of the relator word W with the stored positive exponents.
std::vector<char> word_letters(const GroupWord& w) {
  std::vector<char> out;
  for (const auto& [a, b] : w.pairs()) {
    out.insert(out.end(), static_cast<std::size_t>(a), 'x');
    out.insert(out.end(), static_cast<std::size_t>(b), 'y');
  }
  return out;
}

}  // namespace

std::vector<int> CosetTable::word_action(const GroupWord& w) const {
  std::vector<int> out(static_cast<std::size_t>(index));
  for (int c = 0; c < index; ++c) {
    int cur = c;
    for (char g : word_letters(w)) cur = (g == 'x' ? x_action : y_action)[static_cast<std::size_t>(cur)];
    out[static_cast<std::size_t>(c)] = cur;
  }
  return out;
}

CosetTable coset_table(const EssentialRep& rep, const GroupWord& w, BaseSubgroup base) {
  const IcosianGroup& group = IcosianGroup::instance();
  Icosian wbar = word_image(rep.X, rep.Y, w);
  if (!wbar.trace().is_zero())
    raise(Errc::PreconditionViolated, "representation does not send W to an involution");
  Icosian cbar = wbar.sign_normalized();

  std::vector<Icosian> sub;
  if (base == BaseSubgroup::C) {
    sub = {Icosian::one().sign_normalized(), cbar};
  } else {
    KleinFour v = centralizer_klein(cbar);
    sub = {Icosian::one().sign_normalized(), v.a, v.b, v.c};
  }

  // Right cosets S g, keyed by the minimal projective index over the coset.
  auto coset_key = [&](const Icosian& g) {
    int best = -1;
    for (const Icosian& s : sub) {
      int idx = group.projective_index(s * g);
      if (best < 0 || idx < best) best = idx;
    }
    return best;
  };

  Icosian xbar = rep.X.sign_normalized(), ybar = rep.Y.sign_normalized();
  std::map<int, int> label;           // coset key -> BFS label
  std::vector<Icosian> rep_of;        // BFS label -> representative element
  std::map<int, int> x_edges, y_edges;

  Icosian e = Icosian::one();
  label[coset_key(e)] = 0;
  rep_of.push_back(e);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const Icosian* gen : {&xbar, &ybar}) {
      Icosian h = (rep_of[static_cast<std::size_t>(u)] * *gen).sign_normalized();
      int key = coset_key(h);
      auto it = label.find(key);
      if (it == label.end()) {
        int l = static_cast<int>(rep_of.size());
        label[key] = l;
        rep_of.push_back(h);
        queue.push_back(l);
      }
      (gen == &xbar ? x_edges : y_edges)[u] = label[key];
    }
  }

  CosetTable table;
  table.base = base;
  table.index = static_cast<int>(rep_of.size());
  table.x_action.resize(rep_of.size());
  table.y_action.resize(rep_of.size());
  for (int u = 0; u < table.index; ++u) {
    table.x_action[static_cast<std::size_t>(u)] = x_edges.at(u);
    table.y_action[static_cast<std::size_t>(u)] = y_edges.at(u);
  }

  int expected = base == BaseSubgroup::C ? 30 : 15;
  if (table.index != expected)
    raise(Errc::CensusMismatch, "coset count " + std::to_string(table.index) + " != " +
                                    std::to_string(expected));
  // The quotient relations x^3 and y^5 must hold on cosets.
  auto check_order = [&](const std::vector<int>& p, int order) {
    for (int c = 0; c < table.index; ++c) {
      int cur = c;
      for (int i = 0; i < order; ++i) cur = p[static_cast<std::size_t>(cur)];
      if (cur != c) raise(Errc::CensusMismatch, "generator order not respected on cosets");
    }
  };
  check_order(table.x_action, 3);
  check_order(table.y_action, 5);
  return table;
}

std::vector<std::vector<int>> permutation_orbits(const std::vector<int>& perm) {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit{static_cast<int>(i)};
    seen[i] = true;
    for (int j = perm[i]; j != static_cast<int>(i); j = perm[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      orbit.push_back(j);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

int Presentation::count(RelatorOrigin origin) const {
  int n = 0;
  for (const Relator& r : relators) n += r.origin == origin ? 1 : 0;
  return n;
}

int Presentation::euler_characteristic() const {
  return 1 - generator_count + static_cast<int>(relators.size());
}

int Presentation::euler_characteristic_without_squares() const {
  return 1 - generator_count +
         static_cast<int>(relators.size()) - count(RelatorOrigin::FromW2Square);
}

std::string Presentation::str() const {
  std::ostringstream os;
  os << "< g1..g" << generator_count << " | ";
  bool first = true;
  for (const Relator& r : relators) {
    if (!first) os << ", ";
    first = false;
    for (std::size_t i = 0; i < r.word.size(); ++i) {
      int g = r.word[i];
      if (i) os << " ";
      os << "g" << (g > 0 ? g : -g);
      if (g < 0) os << "^-1";
    }
    if (r.word.empty()) os << "1";
  }
  os << " >";
  return os.str();
}

namespace {

std::vector<int> freely_reduce(std::vector<int> w) {
  std::vector<int> out;
  for (int g : w) {
    if (!out.empty() && out.back() == -g) out.pop_back();
    else out.push_back(g);
  }
  return out;
}

struct Rewriter {
  const CosetTable& table;
  std::set<std::pair<int, char>> tree;     // tree edges (coset, letter)
  std::map<std::pair<int, char>, int> gen; // non-tree edge -> 1-based generator

  explicit Rewriter(const CosetTable& t) : table(t) {
    // BFS spanning tree with alphabet order x, y
    std::vector<bool> seen(static_cast<std::size_t>(t.index), false);
    seen[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (char g : {'x', 'y'}) {
        int v = step(u, g);
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          tree.insert({u, g});
          queue.push_back(v);
        }
      }
    }
    int next = 1;
    for (int u = 0; u < t.index; ++u)
      for (char g : {'x', 'y'})
        if (!tree.count({u, g})) gen[{u, g}] = next++;
  }

  int step(int coset, char g) const {
    return (g == 'x' ? table.x_action : table.y_action)[static_cast<std::size_t>(coset)];
  }

  int generator_count() const { return static_cast<int>(gen.size()); }

  /// Schreier letters of the walk of `letters` starting at `start`; tree edges
  /// rewrite to nothing. Returns (word, end coset).
  std::pair<std::vector<int>, int> rewrite(int start, const std::vector<char>& letters) const {
    std::vector<int> out;
    int c = start;
    for (char g : letters) {
      auto it = gen.find({c, g});
      if (it != gen.end()) out.push_back(it->second);
      c = step(c, g);
    }
    return {out, c};
  }
};

}  // namespace

Presentation schreier_presentation(const CosetTable& table, const GroupWord& w) {
  Rewriter rw(table);
  Presentation pres;
  pres.generator_count = rw.generator_count();

  int expected_gens = table.index * 2 - (table.index - 1);
  if (pres.generator_count != expected_gens)
    raise(Errc::CensusMismatch, "Schreier generator count " +
                                    std::to_string(pres.generator_count) + " != " +
                                    std::to_string(expected_gens));

  auto emit = [&](const std::vector<int>& word, RelatorOrigin origin) {
    pres.relators.push_back({freely_reduce(word), origin});
  };

  const std::vector<char> xxx(3, 'x'), yyyyy(5, 'y');
  for (const auto& orbit : permutation_orbits(table.x_action)) {
    auto [word, end] = rw.rewrite(orbit.front(), xxx);
    if (end != orbit.front()) raise(Errc::CensusMismatch, "x^3 walk did not close");
    emit(word, RelatorOrigin::FromX3);
  }
  for (const auto& orbit : permutation_orbits(table.y_action)) {
    auto [word, end] = rw.rewrite(orbit.front(), yyyyy);
    if (end != orbit.front()) raise(Errc::CensusMismatch, "y^5 walk did not close");
    emit(word, RelatorOrigin::FromY5);
  }
  std::vector<char> letters = word_letters(w);
  for (const auto& orbit : permutation_orbits(table.word_action(w))) {
    if (orbit.size() == 1) {
      // W fixes the coset: the rewrite of W^2 is the literal square of the
      // rewrite of W from the same basepoint.
      auto [half, end] = rw.rewrite(orbit.front(), letters);
      if (end != orbit.front()) raise(Errc::CensusMismatch, "W walk did not close at fixed coset");
      std::vector<int> square = half;
      square.insert(square.end(), half.begin(), half.end());
      emit(square, RelatorOrigin::FromW2Square);
      pres.squared_roots.push_back(freely_reduce(half));
    } else if (orbit.size() == 2) {
      std::vector<char> twice = letters;
      twice.insert(twice.end(), letters.begin(), letters.end());
      auto [word, end] = rw.rewrite(orbit.front(), twice);
      if (end != orbit.front()) raise(Errc::CensusMismatch, "W^2 walk did not close");
      emit(word, RelatorOrigin::FromW2Pair);
    } else {
      raise(Errc::CensusMismatch, "W-action orbit of size " + std::to_string(orbit.size()) +
                                      "; W^2 = 1 allows only 1 or 2");
    }
  }

  // Relator counts must equal the orbit counts of the respective actions.
  if (pres.count(RelatorOrigin::FromX3) !=
          static_cast<int>(permutation_orbits(table.x_action).size()) ||
      pres.count(RelatorOrigin::FromY5) !=
          static_cast<int>(permutation_orbits(table.y_action).size()))
    raise(Errc::CensusMismatch, "relator census does not match orbit census");
  return pres;
}

IntMat exponent_matrix(const Presentation& p) {
  IntMat mat;
  for (const Relator& r : p.relators) {
    std::vector<Int> row(static_cast<std::size_t>(p.generator_count));
    for (int g : r.word) row[static_cast<std::size_t>((g > 0 ? g : -g) - 1)] += g > 0 ? 1 : -1;
    mat.push_back(std::move(row));
  }
  return mat;
}

AbelianStructure abelianization(const Presentation& p) {
  return cokernel_structure(exponent_matrix(p), static_cast<std::size_t>(p.generator_count));
}

Presentation with_redundant_generator(const Presentation& p, const std::vector<int>& word) {
  Presentation out = p;
  out.generator_count = p.generator_count + 1;
  std::vector<int> rel{out.generator_count};
  for (auto it = word.rbegin(); it != word.rend(); ++it) rel.push_back(-*it);
  out.relators.push_back({freely_reduce(rel), RelatorOrigin::Auxiliary});
  return out;
}

}  // namespace tracelab
