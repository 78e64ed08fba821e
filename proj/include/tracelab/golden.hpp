#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tracelab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact element a + b*phi of Q(sqrt5), where phi = (1+sqrt5)/2 and phi^2 = phi + 1.
/// Rationals are kept in lowest terms with positive denominator (cpp_rational canonical form).
class GoldenScalar {
 public:
  GoldenScalar() = default;
  GoldenScalar(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}
  explicit GoldenScalar(long long n) : a_(n) {}
  explicit GoldenScalar(const Rat& a) : a_(a) {}

  static GoldenScalar zero() { return GoldenScalar(); }
  static GoldenScalar one() { return GoldenScalar(1); }
  static GoldenScalar phi() { return GoldenScalar(Rat(0), Rat(1)); }
  // sqrt5 = 2*phi - 1
  static GoldenScalar sqrt5() { return GoldenScalar(Rat(-1), Rat(2)); }

  const Rat& rational_part() const { return a_; }
  const Rat& phi_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  GoldenScalar operator-() const { return {-a_, -b_}; }
  GoldenScalar operator+(const GoldenScalar& o) const { return {a_ + o.a_, b_ + o.b_}; }
  GoldenScalar operator-(const GoldenScalar& o) const { return {a_ - o.a_, b_ - o.b_}; }
  GoldenScalar operator*(const GoldenScalar& o) const {
    // (a1 + b1 p)(a2 + b2 p) = a1 a2 + b1 b2 + (a1 b2 + b1 a2 + b1 b2) p
    return {a_ * o.a_ + b_ * o.b_, a_ * o.b_ + b_ * o.a_ + b_ * o.b_};
  }
  GoldenScalar inverse() const;
  GoldenScalar operator/(const GoldenScalar& o) const { return *this * o.inverse(); }

  GoldenScalar& operator+=(const GoldenScalar& o) { return *this = *this + o; }
  GoldenScalar& operator-=(const GoldenScalar& o) { return *this = *this - o; }
  GoldenScalar& operator*=(const GoldenScalar& o) { return *this = *this * o; }

  bool operator==(const GoldenScalar& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const GoldenScalar& o) const { return !(*this == o); }

  /// Galois conjugate a + b*(1 - phi) (sends sqrt5 to -sqrt5).
  GoldenScalar conjugate() const { return {a_ + b_, -b_}; }
  /// Field norm N(x) = x * conj(x) = a^2 + a b - b^2, a rational.
  Rat norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

  /// Exact sign of the real value a + b*(1+sqrt5)/2: -1, 0, or +1.
  int sign() const;

  /// Total order by numeric value (exact).
  bool operator<(const GoldenScalar& o) const { return (*this - o).sign() < 0; }

  double to_double() const;

  /// Serialises as "a+b*phi" with exact rationals ("0", "1", "phi", "-1+2*phi", ...).
  std::string str() const;

 private:
  Rat a_, b_;
};

GoldenScalar abs(const GoldenScalar& x);

/// Lexicographic order on the (a, b) coordinates; a deterministic container order
/// that is cheaper than the numeric one.
struct GoldenLexLess {
  bool operator()(const GoldenScalar& x, const GoldenScalar& y) const;
};

}  // namespace tracelab
