#include "tracelab/lattice.hpp"

#include "tracelab/errors.hpp"

#include <algorithm>

namespace tracelab {

GoldenVec3 operator+(const GoldenVec3& u, const GoldenVec3& v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}
GoldenVec3 operator-(const GoldenVec3& u, const GoldenVec3& v) {
  return {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
}
GoldenVec3 operator*(const GoldenScalar& s, const GoldenVec3& v) {
  return {s * v[0], s * v[1], s * v[2]};
}
GoldenVec3 apply_rotation(const GoldenMat3& m, const GoldenVec3& v) {
  GoldenVec3 out;
  for (std::size_t i = 0; i < 3; ++i)
    out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return out;
}
GoldenScalar dot(const GoldenVec3& u, const GoldenVec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

GoldenMat3 diag_rotation(int sx, int sy, int sz) {
  GoldenMat3 m{};
  m[0][0] = GoldenScalar(sx);
  m[1][1] = GoldenScalar(sy);
  m[2][2] = GoldenScalar(sz);
  return m;
}
GoldenMat3 identity_rotation() { return diag_rotation(1, 1, 1); }

namespace {

Icosahedron build_icosahedron() {
  Icosahedron ico;
  const GoldenScalar one = GoldenScalar::one(), phi = GoldenScalar::phi(), zero;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      GoldenScalar a = s1 == 1 ? one : -one;
      GoldenScalar b = s2 == 1 ? phi : -phi;
      ico.vertices.push_back({zero, a, b});
      ico.vertices.push_back({b, zero, a});
      ico.vertices.push_back({a, b, zero});
    }
  }
  const GoldenScalar four(4);
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) {
      GoldenVec3 d = ico.vertices[static_cast<std::size_t>(i)] -
                     ico.vertices[static_cast<std::size_t>(j)];
      if (dot(d, d) == four) ico.edges.emplace_back(i, j);
    }
  const GoldenScalar half(Rat(1, 2));
  for (const auto& [i, j] : ico.edges)
    ico.midpoints.push_back(half * (ico.vertices[static_cast<std::size_t>(i)] +
                                    ico.vertices[static_cast<std::size_t>(j)]));
  return ico;
}

}  // namespace

std::vector<int> Icosahedron::edges_sharing_vertex(int e) const {
  std::vector<int> out;
  auto [u, v] = edges[static_cast<std::size_t>(e)];
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    if (k == e) continue;
    auto [p, q] = edges[static_cast<std::size_t>(k)];
    int shared = (p == u || p == v ? 1 : 0) + (q == u || q == v ? 1 : 0);
    if (shared == 1) out.push_back(k);
  }
  return out;
}

const Icosahedron& icosahedron() {
  static const Icosahedron ico = build_icosahedron();
  return ico;
}

std::vector<GoldenVec3> icosahedron_midpoints() { return icosahedron().midpoints; }

IntegerLattice IntegerLattice::from_vectors(const std::vector<GoldenVec3>& vecs) {
  if (vecs.empty()) raise(Errc::PreconditionViolated, "lattice needs at least one generator");
  IntegerLattice lat;
  Int den = 1;
  auto lcm_in = [&den](const Rat& r) {
    Int d = boost::multiprecision::denominator(r);
    den = lcm(den, d);
  };
  for (const GoldenVec3& v : vecs)
    for (const GoldenScalar& c : v) {
      lcm_in(c.rational_part());
      lcm_in(c.phi_part());
    }
  lat.den_ = den;
  for (const GoldenVec3& v : vecs) {
    std::vector<Int> row;
    row.reserve(6);
    for (const GoldenScalar& c : v) {
      for (const Rat* part : {&c.rational_part(), &c.phi_part()}) {
        Rat scaled = *part * den;
        row.push_back(boost::multiprecision::numerator(scaled));
      }
    }
    lat.generators_.push_back(std::move(row));
  }
  lat.basis_ = hnf_basis(lat.generators_);
  return lat;
}

std::optional<std::vector<Int>> IntegerLattice::cleared(const GoldenVec3& v) const {
  std::vector<Int> row;
  row.reserve(6);
  for (const GoldenScalar& c : v) {
    for (const Rat* part : {&c.rational_part(), &c.phi_part()}) {
      Rat scaled = *part * den_;
      if (boost::multiprecision::denominator(scaled) != 1) return std::nullopt;
      row.push_back(boost::multiprecision::numerator(scaled));
    }
  }
  return row;
}

bool IntegerLattice::contains(const GoldenVec3& v) const { return coordinates(v).has_value(); }

std::optional<std::vector<Int>> IntegerLattice::coordinates(const GoldenVec3& v) const {
  auto row = cleared(v);
  if (!row) return std::nullopt;
  return coords_in_basis(basis_, *row);
}

std::vector<Int> IntegerLattice::generator_invariant_factors() const {
  IntMat coords;
  for (const auto& g : generators_) {
    auto c = coords_in_basis(basis_, g);
    if (!c) raise(Errc::ClosureFailure, "generator escaped its own span");
    coords.push_back(*c);
  }
  return smith_normal_form(coords).diag;
}

std::vector<Int> IntegerLattice::ambient_invariant_factors() const {
  return smith_normal_form(generators_).diag;
}

IntMat IntegerLattice::rotation_matrix(const GoldenMat3& g) const {
  IntMat out;
  for (const auto& row : basis_) {
    // basis row -> golden vector (divide by the denominator), rotate, solve back.
    GoldenVec3 v;
    for (std::size_t i = 0; i < 3; ++i)
      v[i] = GoldenScalar(Rat(row[2 * i], den_), Rat(row[2 * i + 1], den_));
    GoldenVec3 image = apply_rotation(g, v);
    auto coords = coordinates(image);
    if (!coords) raise(Errc::NotStable, "rotation does not preserve the lattice");
    out.push_back(*coords);
  }
  return out;
}

namespace {

IntMat one_minus(const IntMat& action) {
  IntMat out = action;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[i][j] = (i == j ? Int(1) : Int(0)) - out[i][j];
  return out;
}

}  // namespace

EndoSmith one_minus_smith(const IntegerLattice& m, const GoldenMat3& g) {
  IntMat rel = one_minus(m.rotation_matrix(g));
  SmithForm snf = smith_normal_form(rel);
  return {snf.diag, m.rank() - snf.rank};
}

AbelianStructure coinvariants(const IntegerLattice& m, const GoldenMat3& g) {
  IntMat rel = one_minus(m.rotation_matrix(g));
  return cokernel_structure(rel, m.rank());
}

IntMat free_quotient_action(const IntegerLattice& m, const GoldenMat3& c, const GoldenMat3& h) {
  // Column convention: x are coordinates in the lattice basis, (1-c) maps
  // x -> A x with A = transpose of the row-convention action matrix.
  IntMat a_cols = transpose(one_minus(m.rotation_matrix(c)));
  SmithForm snf = smith_normal_form(a_cols);
  // In z = U x coordinates the image lattice is spanned by d_i e_i, so the
  // torsion-free quotient is the projection to the coordinates past the rank.
  IntMat h_cols = transpose(m.rotation_matrix(h));
  IntMat hp = matmul(matmul(snf.U, h_cols), snf.Uinv);
  // h must commute with c on M for the induced map to be defined;
  // torsion coordinates map to torsion, so the free block is the lower-right corner.
  std::size_t n = m.rank(), r = snf.rank;
  IntMat block(n - r, std::vector<Int>(n - r));
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = r; j < n; ++j) block[i - r][j - r] = hp[i][j];
  return block;
}

GoldenScalar neighbor_sum_coefficient(const Icosahedron& ico) {
  GoldenScalar ratio;
  bool have_ratio = false;
  for (int e = 0; e < static_cast<int>(ico.edges.size()); ++e) {
    GoldenVec3 sum{};
    for (int k : ico.edges_sharing_vertex(e)) sum = sum + ico.midpoints[static_cast<std::size_t>(k)];
    const GoldenVec3& mid = ico.midpoints[static_cast<std::size_t>(e)];
    // find a non-zero coordinate of the midpoint to read off the ratio
    GoldenScalar r;
    bool found = false;
    for (std::size_t i = 0; i < 3; ++i) {
      if (!mid[i].is_zero()) {
        r = sum[i] / mid[i];
        found = true;
        break;
      }
    }
    if (!found || !(sum == r * mid))
      raise(Errc::IdentityViolated, "neighbour sum is not proportional to the midpoint");
    if (!have_ratio) {
      ratio = r;
      have_ratio = true;
    } else if (ratio != r) {
      raise(Errc::IdentityViolated, "neighbour-sum ratio differs between edges");
    }
  }
  return ratio;
}

bool neighbor_sum_identity_check(const Icosahedron& ico, const GoldenScalar& expected) {
  for (int e = 0; e < static_cast<int>(ico.edges.size()); ++e) {
    GoldenVec3 sum{};
    for (int k : ico.edges_sharing_vertex(e)) sum = sum + ico.midpoints[static_cast<std::size_t>(k)];
    if (!(sum == expected * ico.midpoints[static_cast<std::size_t>(e)])) return false;
  }
  return true;
}

}  // namespace tracelab
