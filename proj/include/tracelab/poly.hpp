#pragma once

#include "tracelab/golden.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace tracelab {

/// Univariate polynomial over Q(sqrt5), coefficients lowest degree first.
/// The zero polynomial is the empty coefficient list; otherwise the leading
/// coefficient is non-zero.
class GfPoly {
 public:
  GfPoly() = default;
  explicit GfPoly(std::vector<GoldenScalar> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static GfPoly constant(const GoldenScalar& s) { return GfPoly({s}); }
  static GfPoly lambda() { return GfPoly({GoldenScalar::zero(), GoldenScalar::one()}); }
  /// lambda - alpha
  static GfPoly linear_root(const GoldenScalar& alpha) {
    return GfPoly({-alpha, GoldenScalar::one()});
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<GoldenScalar>& coeffs() const { return c_; }
  GoldenScalar coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : GoldenScalar::zero();
  }
  const GoldenScalar& leading() const { return c_.back(); }

  GfPoly operator-() const;
  GfPoly operator+(const GfPoly& o) const;
  GfPoly operator-(const GfPoly& o) const;
  GfPoly operator*(const GfPoly& o) const;
  GfPoly operator*(const GoldenScalar& s) const;
  bool operator==(const GfPoly& o) const { return c_ == o.c_; }
  bool operator!=(const GfPoly& o) const { return !(*this == o); }

  GfPoly derivative() const;
  GoldenScalar eval(const GoldenScalar& x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  std::string str(const std::string& var = "lam") const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GoldenScalar> c_;
};

/// Exact division with remainder: f = q*g + r, deg r < deg g. Throws DivisionByZero on g = 0.
std::pair<GfPoly, GfPoly> poly_divrem(const GfPoly& f, const GfPoly& g);

/// Largest m with (lam - alpha)^m dividing f, by repeated exact division.
/// Throws ZeroPolynomial on f = 0.
int root_multiplicity(const GfPoly& f, const GoldenScalar& alpha);

}  // namespace tracelab
