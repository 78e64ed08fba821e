#include "tracelab/icosians.hpp"

#include "tracelab/errors.hpp"
#include "tracelab/poly.hpp"
#include "tracelab/trace.hpp"

#include <algorithm>
#include <set>

namespace tracelab {

GoldenScalar Icosian::norm() const {
  GoldenScalar s;
  for (const auto& c : c_) s += c * c;
  return s;
}

Icosian Icosian::operator*(const Icosian& o) const {
  const auto& [a, b, c, d] = c_;
  const auto& [e, f, g, h] = o.c_;
  return {a * e - b * f - c * g - d * h, a * f + b * e + c * h - d * g,
          a * g - b * h + c * e + d * f, a * h + b * g - c * f + d * e};
}

Icosian Icosian::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

Icosian Icosian::conjugate() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

bool Icosian::operator<(const Icosian& o) const {
  GoldenLexLess less;
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i] != o.c_[i]) return less(c_[i], o.c_[i]);
  }
  return false;
}

Icosian Icosian::sign_normalized() const {
  for (const auto& c : c_) {
    int s = c.sign();
    if (s > 0) return *this;
    if (s < 0) return -*this;
  }
  return *this;
}

std::array<std::string, 4> Icosian::coord_strings() const {
  return {c_[0].str(), c_[1].str(), c_[2].str(), c_[3].str()};
}

namespace {

std::vector<Icosian> icosian_table() {
  const GoldenScalar zero, one = GoldenScalar::one();
  const GoldenScalar half(Rat(1, 2));
  const GoldenScalar phi_half(Rat(0), Rat(1, 2));           // phi/2
  const GoldenScalar inv_phi_half(Rat(-1, 2), Rat(1, 2));   // (phi-1)/2
  std::set<Icosian> out;

  // 8 unit coordinate vectors
  for (std::size_t i = 0; i < 4; ++i) {
    for (int s : {1, -1}) {
      std::array<GoldenScalar, 4> v{zero, zero, zero, zero};
      v[i] = s == 1 ? one : -one;
      out.insert(Icosian(v[0], v[1], v[2], v[3]));
    }
  }
  // 16 half-integer vectors (±1/2, ±1/2, ±1/2, ±1/2)
  for (int mask = 0; mask < 16; ++mask) {
    std::array<GoldenScalar, 4> v;
    for (std::size_t i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -half : half;
    out.insert(Icosian(v[0], v[1], v[2], v[3]));
  }
  // 96 even permutations of (0, ±1/2, ±(phi-1)/2, ±phi/2)
  const std::array<GoldenScalar, 4> base{zero, half, inv_phi_half, phi_half};
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2 != 0) continue;
    for (int mask = 0; mask < 16; ++mask) {
      std::array<GoldenScalar, 4> v;
      bool skip = false;
      for (std::size_t i = 0; i < 4; ++i) {
        GoldenScalar c = base[perm[i]];
        if ((mask >> i) & 1) {
          if (c.is_zero()) { skip = true; break; }  // avoid double-counting ±0
          c = -c;
        }
        v[i] = c;
      }
      if (!skip) out.insert(Icosian(v[0], v[1], v[2], v[3]));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return {out.begin(), out.end()};
}

}  // namespace

IcosianGroup::IcosianGroup() {
  elements_ = icosian_table();
  if (elements_.size() != 120)
    raise(Errc::ClosureFailure, "expected 120 icosians, built " + std::to_string(elements_.size()));
  std::set<Icosian> table(elements_.begin(), elements_.end());
  for (const Icosian& q : elements_) {
    if (q.norm() != GoldenScalar::one()) raise(Errc::ClosureFailure, "non-unit quaternion in table");
    if (!table.count(q.conjugate())) raise(Errc::ClosureFailure, "table not closed under inverse");
  }
  for (const Icosian& p : elements_)
    for (const Icosian& q : elements_)
      if (!table.count(p * q)) raise(Errc::ClosureFailure, "table not closed under product");

  for (const Icosian& q : elements_)
    if (q.trace().is_zero()) trace_zero_.push_back(q);
  if (trace_zero_.size() != 30)
    raise(Errc::ClosureFailure, "expected 30 trace-0 icosians");

  std::set<Icosian> proj;
  for (const Icosian& q : elements_) proj.insert(q.sign_normalized());
  projective_ = {proj.begin(), proj.end()};
  if (projective_.size() != 60) raise(Errc::ClosureFailure, "expected 60 projective elements");

  // Some pair must generate the whole group; scan deterministically.
  bool generated = false;
  for (std::size_t i = 0; i < elements_.size() && !generated; ++i) {
    for (std::size_t j = i + 1; j < elements_.size() && !generated; ++j) {
      const Icosian &g = elements_[i], &h = elements_[j];
      std::set<Icosian> seen{Icosian::one(), g, h};
      std::vector<Icosian> frontier{g, h};
      while (!frontier.empty() && seen.size() <= 120) {
        std::vector<Icosian> next;
        for (const Icosian& a : frontier)
          for (const Icosian* gen : {&g, &h}) {
            Icosian b = a * *gen;
            if (seen.insert(b).second) next.push_back(b);
          }
        frontier = std::move(next);
      }
      if (seen.size() == 120) generated = true;
    }
  }
  if (!generated) raise(Errc::ClosureFailure, "no generating pair found");
}

const IcosianGroup& IcosianGroup::instance() {
  static const IcosianGroup group;
  return group;
}

bool IcosianGroup::contains(const Icosian& q) const {
  return std::binary_search(elements_.begin(), elements_.end(), q);
}

int IcosianGroup::projective_index(const Icosian& q) const {
  Icosian n = q.sign_normalized();
  auto it = std::lower_bound(projective_.begin(), projective_.end(), n);
  if (it == projective_.end() || !(*it == n))
    raise(Errc::PreconditionViolated, "quaternion not in the projective table");
  return static_cast<int>(it - projective_.begin());
}

std::map<GoldenScalar, int, GoldenLexLess> IcosianGroup::trace_spectrum() const {
  std::map<GoldenScalar, int, GoldenLexLess> spec;
  for (const Icosian& q : elements_) ++spec[q.trace()];
  return spec;
}

int IcosianGroup::projective_subgroup_order(const std::vector<Icosian>& gens) const {
  std::set<Icosian> seen{Icosian::one().sign_normalized()};
  std::vector<Icosian> norm_gens;
  for (const Icosian& g : gens) norm_gens.push_back(g.sign_normalized());
  std::vector<Icosian> frontier = norm_gens;
  for (const Icosian& g : norm_gens) seen.insert(g);
  while (!frontier.empty()) {
    std::vector<Icosian> next;
    for (const Icosian& a : frontier)
      for (const Icosian& g : norm_gens) {
        Icosian b = (a * g).sign_normalized();
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return static_cast<int>(seen.size());
}

Icosian word_image(const Icosian& X, const Icosian& Y, const GroupWord& w) {
  Icosian acc = Icosian::one();
  for (const auto& [a, b] : w.pairs()) {
    for (int i = 0; i < a; ++i) acc = acc * X;
    for (int i = 0; i < b; ++i) acc = acc * Y;
  }
  return acc;
}

EssentialRep essential_representation(const GroupWord& w, const GoldenScalar& alpha) {
  bool exceptional = false;
  for (const GoldenScalar& om : {GoldenScalar::zero(), GoldenScalar::one(), GoldenScalar::phi(),
                                 GoldenScalar::phi() - GoldenScalar::one()})
    if (om == alpha) exceptional = true;
  if (!exceptional)
    raise(Errc::PreconditionViolated, "alpha = " + alpha.str() + " is not an exceptional trace");
  GfPoly tau = trace_polynomial(w);
  if (!tau.eval(alpha).is_zero())
    raise(Errc::PreconditionViolated,
          "tau(" + alpha.str() + ") = " + tau.eval(alpha).str() + " != 0");

  const IcosianGroup& group = IcosianGroup::instance();
  const GoldenScalar one = GoldenScalar::one(), phi = GoldenScalar::phi();
  std::vector<Icosian> xs, ys;
  for (const Icosian& q : group.elements()) {
    GoldenScalar t = abs(q.trace());
    if (t == one) xs.push_back(q);
    if (t == phi) ys.push_back(q);
  }
  GoldenScalar target = abs(alpha);
  for (const Icosian& X : xs) {
    for (const Icosian& Y : ys) {
      if (abs((X * Y).trace()) != target) continue;
      if (!word_image(X, Y, w).trace().is_zero()) continue;
      EssentialRep rep{X, Y, alpha, group.projective_subgroup_order({X, Y})};
      return rep;
    }
  }
  raise(Errc::NoRepresentationFound,
        "no icosian pair realises tau root " + alpha.str() + " for word " + w.str());
}

KleinFour centralizer_klein(const Icosian& c) {
  if (!c.trace().is_zero())
    raise(Errc::BadOrder, "centralizer_klein requires a trace-0 (projective order 2) element");
  const IcosianGroup& group = IcosianGroup::instance();
  Icosian cn = c.sign_normalized();
  std::vector<Icosian> found;
  for (const Icosian& g : group.trace_zero_elements()) {
    Icosian gn = g.sign_normalized();
    if (gn == cn) continue;
    Icosian conj = (g * c * g.conjugate()).sign_normalized();
    if (conj == cn) found.push_back(gn);
  }
  // Each projective element appears twice among the 30 trace-0 quaternions.
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (found.size() != 2)
    raise(Errc::ClosureFailure,
          "projective centraliser of an involution has " + std::to_string(found.size() + 1) +
              " non-identity elements, expected 3");
  KleinFour v{found[0], found[1], cn};
  Icosian ab = (v.a * v.b).sign_normalized();
  if (!(ab == cn)) raise(Errc::ClosureFailure, "Klein relation a*b = ±c violated");
  return v;
}

}  // namespace tracelab
