#include "tracelab/poly.hpp"

#include "tracelab/errors.hpp"

#include <sstream>

namespace tracelab {

GfPoly GfPoly::operator-() const {
  std::vector<GoldenScalar> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return GfPoly(std::move(out));
}

GfPoly GfPoly::operator+(const GfPoly& o) const {
  std::vector<GoldenScalar> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
  return GfPoly(std::move(out));
}

GfPoly GfPoly::operator-(const GfPoly& o) const { return *this + (-o); }

GfPoly GfPoly::operator*(const GfPoly& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<GoldenScalar> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return GfPoly(std::move(out));
}

GfPoly GfPoly::operator*(const GoldenScalar& s) const {
  std::vector<GoldenScalar> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
  return GfPoly(std::move(out));
}

GfPoly GfPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GoldenScalar> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * GoldenScalar(static_cast<long long>(i));
  return GfPoly(std::move(out));
}

GoldenScalar GfPoly::eval(const GoldenScalar& x) const {
  GoldenScalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> GfPoly::eval(const std::complex<double>& x) const {
  std::complex<double> acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

std::string GfPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const GoldenScalar& co = c_[static_cast<std::size_t>(i)];
    if (co.is_zero()) continue;
    GoldenScalar shown = co;
    if (!first) {
      os << (co.sign() < 0 ? " - " : " + ");
      shown = abs(co);
    }
    first = false;
    std::string cs = shown.str();
    bool needs_parens = cs.find('+') != std::string::npos ||
                        (cs.find('-') != std::string::npos && cs.rfind('-', 0) != 0);
    if (i == 0) {
      os << cs;
    } else {
      if (shown == GoldenScalar::one()) {
        os << var;
      } else {
        if (needs_parens) os << "(" << cs << ")";
        else os << cs;
        os << "*" << var;
      }
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<GfPoly, GfPoly> poly_divrem(const GfPoly& f, const GfPoly& g) {
  if (g.is_zero()) raise(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<GoldenScalar> rem(f.coeffs());
  int dg = g.degree();
  GoldenScalar lead_inv = g.leading().inverse();
  std::vector<GoldenScalar> quot;
  if (f.degree() >= dg) quot.assign(static_cast<std::size_t>(f.degree() - dg) + 1, {});
  auto top = [&rem]() {
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    return static_cast<int>(rem.size()) - 1;
  };
  for (int d = top(); d >= dg; d = top()) {
    GoldenScalar q = rem.back() * lead_inv;
    std::size_t shift = static_cast<std::size_t>(d - dg);
    quot[shift] = q;
    for (int j = 0; j <= dg; ++j)
      rem[shift + static_cast<std::size_t>(j)] -= q * g.coeff(static_cast<std::size_t>(j));
  }
  return {GfPoly(std::move(quot)), GfPoly(std::move(rem))};
}

int root_multiplicity(const GfPoly& f, const GoldenScalar& alpha) {
  if (f.is_zero()) raise(Errc::ZeroPolynomial, "root multiplicity of zero polynomial");
  GfPoly lin = GfPoly::linear_root(alpha);
  GfPoly cur = f;
  int m = 0;
  while (true) {
    auto [q, r] = poly_divrem(cur, lin);
    if (!r.is_zero()) return m;
    ++m;
    cur = q;
  }
}

}  // namespace tracelab
