#pragma once

#include "tracelab/golden.hpp"

#include <optional>
#include <vector>

namespace tracelab {

using IntMat = std::vector<std::vector<Int>>;

IntMat identity_matrix(std::size_t n);
IntMat matmul(const IntMat& a, const IntMat& b);
IntMat transpose(const IntMat& a);

/// Row-style Hermite normal form of the row span: echelon basis with positive
/// pivots and entries above each pivot reduced into [0, pivot). Zero rows are
/// dropped, so the result is a canonical basis of the row lattice.
IntMat hnf_basis(IntMat rows);

/// Smith normal form U*A*V = D with unimodular transforms. diag holds the
/// invariant factors d1 | d2 | ... | dr (positive); rank = r.
struct SmithForm {
  std::vector<Int> diag;
  IntMat U, Uinv, V;
  std::size_t rank = 0;
  std::size_t rows = 0, cols = 0;
};

SmithForm smith_normal_form(const IntMat& a);

/// Abelian group structure read off a Smith form of a relation matrix whose
/// cokernel is Z^cols / (row lattice): torsion invariant factors > 1 plus free rank.
struct AbelianStructure {
  std::vector<Int> torsion;  // nontrivial invariant factors, divisibility chain
  std::size_t free_rank = 0;
  bool operator==(const AbelianStructure&) const = default;
  std::string str() const;
};

/// Structure of Z^n / (lattice spanned by the rows of `relations`), n = cols.
AbelianStructure cokernel_structure(const IntMat& relations, std::size_t cols);

/// Integer coordinates of v in the HNF basis, if v lies in the row lattice.
std::optional<std::vector<Int>> coords_in_basis(const IntMat& hnf, const std::vector<Int>& v);

}  // namespace tracelab
