#pragma once

#include "tracelab/golden.hpp"
#include "tracelab/words.hpp"

#include <array>
#include <map>
#include <vector>

namespace tracelab {

/// Unit quaternion w + x i + y j + z k with coordinates in (1/2) Z[phi];
/// as an SU(2) matrix [[w + x i, y + z i], [-y + z i, w - x i]] its trace is 2w.
class Icosian {
 public:
  Icosian() : c_{GoldenScalar::one(), {}, {}, {}} {}
  Icosian(GoldenScalar w, GoldenScalar x, GoldenScalar y, GoldenScalar z)
      : c_{std::move(w), std::move(x), std::move(y), std::move(z)} {}

  static Icosian one() { return Icosian(); }

  const GoldenScalar& operator[](std::size_t i) const { return c_[i]; }
  GoldenScalar trace() const { return c_[0] + c_[0]; }
  GoldenScalar norm() const;

  Icosian operator*(const Icosian& o) const;
  Icosian operator-() const;
  Icosian conjugate() const;  // the quaternion inverse for unit norm

  bool operator==(const Icosian& o) const { return c_ == o.c_; }
  bool operator<(const Icosian& o) const;  // deterministic container order

  /// Representative of {q, -q} with the first non-zero coordinate positive.
  Icosian sign_normalized() const;

  std::array<std::string, 4> coord_strings() const;

 private:
  std::array<GoldenScalar, 4> c_;
};

/// The binary icosahedral group 2I as an explicit sorted table of 120 unit
/// quaternions, with projective (A5) structure on top.
class IcosianGroup {
 public:
  /// Builds the 120-element table, verifies closure under multiplication and
  /// inverse, and that some pair of elements generates the whole group.
  /// Throws ClosureFailure if any consistency check fails.
  static const IcosianGroup& instance();

  const std::vector<Icosian>& elements() const { return elements_; }
  const std::vector<Icosian>& trace_zero_elements() const { return trace_zero_; }
  /// Sign-normalised representatives of the 60 elements of 2I / {±1}.
  const std::vector<Icosian>& projective_elements() const { return projective_; }

  bool contains(const Icosian& q) const;
  int projective_index(const Icosian& q) const;  // index of sign-normalised rep

  /// Multiplicity of each trace value over the 120 elements.
  std::map<GoldenScalar, int, GoldenLexLess> trace_spectrum() const;

  /// Size of the projective subgroup generated by the given elements.
  int projective_subgroup_order(const std::vector<Icosian>& gens) const;

 private:
  IcosianGroup();
  std::vector<Icosian> elements_;     // sorted
  std::vector<Icosian> trace_zero_;
  std::vector<Icosian> projective_;  // sorted sign-normalised reps
};

/// Literal word evaluation W(X, Y) with the stored positive exponents.
/// (X^3 = Y^5 = -1 in 2I, so exponent conventions only move the result by a
/// central sign; the trace-zero condition below is sign-invariant.)
Icosian word_image(const Icosian& X, const Icosian& Y, const GroupWord& w);

struct EssentialRep {
  Icosian X, Y;
  GoldenScalar alpha;
  int image_order = 0;  // order of the projective subgroup generated by X, Y
};

/// Searches 2I x 2I in deterministic order for |tr X| = 1, |tr Y| = phi,
/// |tr XY| = |alpha| and tr W(X,Y) = 0, i.e. the images of x, y, W have
/// projective orders 3, 5, 2.
///
/// Pre: alpha is exceptional and tau_w(alpha) = 0 (PreconditionViolated
/// otherwise). Throws NoRepresentationFound if the search fails, which would
/// contradict the existence guarantee and signals a bug.
EssentialRep essential_representation(const GroupWord& w, const GoldenScalar& alpha);

struct KleinFour {
  Icosian a, b, c;  // projectively {1, a, b, c}; a*b = ±c
};

/// The projective centraliser {g : g c g^-1 = ±c} of a trace-0 element:
/// a Klein four-group. Throws BadOrder unless tr c = 0.
KleinFour centralizer_klein(const Icosian& c);

}  // namespace tracelab
