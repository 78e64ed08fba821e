#include "tracelab/golden.hpp"

#include "tracelab/errors.hpp"

#include <cmath>
#include <sstream>

namespace tracelab {

namespace {
int rat_sign(const Rat& r) {
  if (r == 0) return 0;
  return r < 0 ? -1 : 1;
}
}  // namespace

GoldenScalar GoldenScalar::inverse() const {
  Rat n = norm();
  if (n == 0) raise(Errc::DivisionByZero, "inverse of zero golden scalar");
  // 1/x = conj(x)/N(x)
  GoldenScalar c = conjugate();
  return {c.a_ / n, c.b_ / n};
}

int GoldenScalar::sign() const {
  // a + b*phi = (u + v*sqrt5)/2 with u = 2a + b, v = b.
  Rat u = 2 * a_ + b_;
  Rat v = b_;
  int su = rat_sign(u), sv = rat_sign(v);
  if (su == 0 && sv == 0) return 0;
  if (su >= 0 && sv >= 0) return 1;
  if (su <= 0 && sv <= 0) return -1;
  // Opposite signs: compare u^2 against 5 v^2.
  Rat u2 = u * u, v25 = 5 * v * v;
  if (u2 == v25) return 0;  // impossible for rational u, v not both 0, but harmless
  bool u_dominates = u2 > v25;
  return u_dominates ? su : sv;
}

double GoldenScalar::to_double() const {
  static const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
  return a_.convert_to<double>() + b_.convert_to<double>() * kPhi;
}

std::string GoldenScalar::str() const {
  auto rat_str = [](const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
  };
  if (b_ == 0) return rat_str(a_);
  std::ostringstream os;
  if (a_ != 0) {
    os << rat_str(a_);
    os << (b_ > 0 ? "+" : "-");
  } else if (b_ < 0) {
    os << "-";
  }
  Rat babs = b_ < 0 ? Rat(-b_) : b_;
  if (babs != 1) os << rat_str(babs) << "*";
  os << "phi";
  return os.str();
}

GoldenScalar abs(const GoldenScalar& x) { return x.sign() < 0 ? -x : x; }

bool GoldenLexLess::operator()(const GoldenScalar& x, const GoldenScalar& y) const {
  if (x.rational_part() != y.rational_part()) return x.rational_part() < y.rational_part();
  return x.phi_part() < y.phi_part();
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::EmptyAfterReduction: return "EmptyAfterReduction";
    case Errc::NotAlternatingReducible: return "NotAlternatingReducible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegenerateParameter: return "DegenerateParameter";
    case Errc::ClosureFailure: return "ClosureFailure";
    case Errc::NoRepresentationFound: return "NoRepresentationFound";
    case Errc::BadOrder: return "BadOrder";
    case Errc::NotStable: return "NotStable";
    case Errc::CensusMismatch: return "CensusMismatch";
    case Errc::RelatorNotKilled: return "RelatorNotKilled";
    case Errc::IdentityViolated: return "IdentityViolated";
    case Errc::PreconditionViolated: return "PreconditionViolated";
  }
  return "UnknownError";
}

}  // namespace tracelab
