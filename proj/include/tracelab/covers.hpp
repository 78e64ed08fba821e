#pragma once

#include "tracelab/subgroups.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tracelab {

/// Finite 2-complex: c0 vertices, edges with endpoints, 2-cells attached along
/// edge paths (signed 1-based edge indices). Labels keep relator provenance so
/// subcomplexes can be formed by origin.
struct TwoComplex {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // tail, head
  struct Face {
    std::vector<int> boundary;  // signed 1-based edge indices, a closed walk
    RelatorOrigin origin = RelatorOrigin::Auxiliary;
  };
  std::vector<Face> faces;

  int euler_characteristic() const {
    return vertex_count - static_cast<int>(edges.size()) + static_cast<int>(faces.size());
  }
  /// Checks boundary words reference existing edges and form closed walks.
  void validate() const;
  /// Copy with the faces of the given origin removed.
  TwoComplex without_faces(RelatorOrigin origin) const;
};

/// One vertex, a loop per generator, a disc per relator.
TwoComplex presentation_complex(const Presentation& p);

/// Deck group Z_n x Z_n with an element assigned to every base edge.
struct CoverSpec {
  int n = 0;
  std::vector<std::array<int, 2>> assignment;  // per base edge, values mod n

  std::array<int, 2> face_image(const TwoComplex& base, const TwoComplex::Face& f) const;
  bool kills_all_faces(const TwoComplex& base) const;
  bool surjective() const;
};

struct Cover {
  TwoComplex complex;
  bool connected = false;  // false when the assignment is not surjective
};

/// Regular n^2-sheeted cover: cells are (base cell, deck element) with
/// boundaries translated by the assignment. Throws RelatorNotKilled when a face
/// image is non-zero; a non-surjective assignment yields a disconnected cover,
/// reported through Cover::connected rather than rejected.
Cover build_finite_cover(const TwoComplex& base, const CoverSpec& spec);

struct F2Homology {
  int h0 = 0, h1 = 0, h2 = 0;
  bool operator==(const F2Homology&) const = default;
};

/// Dimensions of the cellular homology over the 2-element field.
F2Homology homology_f2(const TwoComplex& k);

/// Dense bit-matrix rank over F2 (rows as bit sets).
int f2_rank(const std::vector<std::vector<int>>& rows_of_indices, int cols);

struct GrowthRow {
  int n = 0;
  F2Homology full;       // cover of the whole complex K
  F2Homology subcomplex; // cover of L (squared-relator faces removed)
  bool connected = false;
};

/// Covers of the presentation complex K and its subcomplex L across n_list,
/// using the per-n assignments supplied by the caller.
std::vector<GrowthRow> h1_growth_experiment(const Presentation& p,
                                            const std::vector<CoverSpec>& specs);

/// All homomorphisms from the presented group to Z_n, as a generating set of
/// assignment vectors mod n (nullspace of the exponent matrix mod n, via the
/// integer Smith form).
std::vector<std::vector<int>> hom_to_zn_generators(const Presentation& p, int n);

/// Text export: one line per cell ("v <count>", "e <tail> <head>", "f <signed ids...>").
std::string export_edge_list(const TwoComplex& k);

}  // namespace tracelab
