#pragma once

#include "tracelab/golden.hpp"
#include "tracelab/intlinalg.hpp"

#include <array>
#include <vector>

namespace tracelab {

using GoldenVec3 = std::array<GoldenScalar, 3>;
using GoldenMat3 = std::array<std::array<GoldenScalar, 3>, 3>;

GoldenVec3 operator+(const GoldenVec3& u, const GoldenVec3& v);
GoldenVec3 operator-(const GoldenVec3& u, const GoldenVec3& v);
GoldenVec3 operator*(const GoldenScalar& s, const GoldenVec3& v);
GoldenVec3 apply_rotation(const GoldenMat3& m, const GoldenVec3& v);
GoldenScalar dot(const GoldenVec3& u, const GoldenVec3& v);

GoldenMat3 diag_rotation(int sx, int sy, int sz);
GoldenMat3 identity_rotation();

/// The icosahedron with vertices at the cyclic permutations of (0, ±1, ±phi).
struct Icosahedron {
  std::vector<GoldenVec3> vertices;              // 12
  std::vector<std::pair<int, int>> edges;        // 30 vertex index pairs, d^2 = 4
  std::vector<GoldenVec3> midpoints;             // edge midpoints, parallel to edges
  /// Indices of the 8 edges sharing exactly one vertex with edge e.
  std::vector<int> edges_sharing_vertex(int e) const;
};

const Icosahedron& icosahedron();

/// The 30 edge midpoints (u+v)/2.
std::vector<GoldenVec3> icosahedron_midpoints();

/// Z-span of golden 3-vectors, flattened to Q^6 through the {1, phi} basis per
/// coordinate and cleared to a common positive denominator.
class IntegerLattice {
 public:
  static IntegerLattice from_vectors(const std::vector<GoldenVec3>& vecs);

  std::size_t rank() const { return basis_.size(); }
  const IntMat& basis() const { return basis_; }
  const Int& denominator() const { return den_; }

  /// Cleared integer coordinates den * flat(v); nullopt when v has a
  /// denominator the lattice cannot represent.
  std::optional<std::vector<Int>> cleared(const GoldenVec3& v) const;
  bool contains(const GoldenVec3& v) const;
  /// Integer coordinates of v in the HNF basis (nullopt if not a member).
  std::optional<std::vector<Int>> coordinates(const GoldenVec3& v) const;

  /// Invariant factors of the generator matrix with rows rewritten in the
  /// lattice's own basis; all 1 exactly when the generators span a free
  /// Z-module with the computed basis (the "M is free of this rank" certificate).
  std::vector<Int> generator_invariant_factors() const;
  /// Invariant factors of the cleared generator matrix inside the ambient Z^6.
  std::vector<Int> ambient_invariant_factors() const;

  /// Matrix of a stable rotation in the HNF basis (rows = images of basis rows).
  /// Throws NotStable if some basis vector does not map back into the lattice.
  IntMat rotation_matrix(const GoldenMat3& g) const;

 private:
  IntMat generators_;  // cleared generator rows
  IntMat basis_;       // HNF rows
  Int den_ = 1;
};

/// Structure of the coinvariants M/(1-g)M via Smith normal form of (1-g)
/// restricted to M in its HNF basis.
AbelianStructure coinvariants(const IntegerLattice& m, const GoldenMat3& g);

/// Invariant factors (including any 1s) of (1-g) on the lattice, plus kernel rank.
struct EndoSmith {
  std::vector<Int> diag;
  std::size_t kernel_rank = 0;
};
EndoSmith one_minus_smith(const IntegerLattice& m, const GoldenMat3& g);

/// Matrix of h on the torsion-free quotient of M/(1-c)M, in a basis computed
/// from the Smith transforms. Requires c, h stable on M and h commuting with c.
IntMat free_quotient_action(const IntegerLattice& m, const GoldenMat3& c, const GoldenMat3& h);

/// The common exact ratio sum(midpoints of the 8 edges sharing a vertex with
/// e's edge) = rho * e, verified identical over all 30 edges.
/// Throws IdentityViolated if the sums are not all proportional with one ratio.
GoldenScalar neighbor_sum_coefficient(const Icosahedron& ico);

/// True iff the 8-neighbour midpoint sum equals expected * e for all 30 edges.
bool neighbor_sum_identity_check(const Icosahedron& ico, const GoldenScalar& expected);

}  // namespace tracelab
