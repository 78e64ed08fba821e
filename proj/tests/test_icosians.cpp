#include "doctest.h"

#include "tracelab/errors.hpp"
#include "tracelab/icosians.hpp"
#include "tracelab/trace.hpp"

#include <map>
#include <set>

using namespace tracelab;

namespace {
const GoldenScalar kOne = GoldenScalar::one();
const GoldenScalar kPhi = GoldenScalar::phi();
}  // namespace

TEST_CASE("binary icosahedral table basics") {
  const IcosianGroup& g = IcosianGroup::instance();
  CHECK(g.elements().size() == 120);
  CHECK(g.contains(Icosian::one()));
  CHECK(g.trace_zero_elements().size() == 30);
  CHECK(g.projective_elements().size() == 60);
  for (const Icosian& q : g.elements()) CHECK(q.norm() == kOne);
}

TEST_CASE("trace spectrum of 2I") {
  const IcosianGroup& g = IcosianGroup::instance();
  auto spec = g.trace_spectrum();
  std::map<std::string, int> by_name;
  for (const auto& [t, n] : spec) by_name[t.str()] = n;
  CHECK(by_name.size() == 9);
  CHECK(by_name["2"] == 1);
  CHECK(by_name["-2"] == 1);
  CHECK(by_name["1"] == 20);
  CHECK(by_name["-1"] == 20);
  CHECK(by_name["0"] == 30);
  CHECK(by_name["phi"] == 12);
  CHECK(by_name["-phi"] == 12);
  CHECK(by_name["-1+phi"] == 12);
  CHECK(by_name["1-phi"] == 12);
}

TEST_CASE("trace equation tr(XY) + tr(XY^-1) = tr(X) tr(Y) over all pairs") {
  const IcosianGroup& g = IcosianGroup::instance();
  for (const Icosian& p : g.elements()) {
    for (const Icosian& q : g.elements()) {
      GoldenScalar lhs = (p * q).trace() + (p * q.conjugate()).trace();
      CHECK(lhs == p.trace() * q.trace());
    }
  }
}

TEST_CASE("projective order is determined by |trace|") {
  const IcosianGroup& g = IcosianGroup::instance();
  auto projective_order = [&](const Icosian& q) {
    Icosian acc = q;
    int order = 1;
    while (!(acc.sign_normalized() == Icosian::one().sign_normalized())) {
      acc = acc * q;
      ++order;
    }
    return order;
  };
  for (const Icosian& q : g.elements()) {
    GoldenScalar t = abs(q.trace());
    int order = projective_order(q);
    if (t == GoldenScalar(2)) CHECK(order == 1);
    else if (t == GoldenScalar::zero()) CHECK(order == 2);
    else if (t == kOne) CHECK(order == 3);
    else CHECK(order == 5);  // |t| = phi or phi - 1
  }
}

TEST_CASE("conjugation permutes the 30 trace-0 icosians") {
  const IcosianGroup& g = IcosianGroup::instance();
  std::set<Icosian> zeros(g.trace_zero_elements().begin(), g.trace_zero_elements().end());
  for (const Icosian& m : g.elements()) {
    for (const Icosian& z : g.trace_zero_elements()) {
      CHECK(zeros.count(m * z * m.conjugate()) == 1);
    }
  }
}

TEST_CASE("essential representation for xy at alpha = 0") {
  GroupWord w = parse_word("xy");
  EssentialRep rep = essential_representation(w, GoldenScalar::zero());
  CHECK(abs(rep.X.trace()) == kOne);
  CHECK(abs(rep.Y.trace()) == kPhi);
  CHECK((rep.X * rep.Y).trace().is_zero());
  CHECK(word_image(rep.X, rep.Y, w).trace().is_zero());
  CHECK(rep.image_order == 60);
}

TEST_CASE("essential representation for xy^2 at alpha = phi-1") {
  GroupWord w = parse_word("x y^2");
  EssentialRep rep = essential_representation(w, kPhi - kOne);
  CHECK(word_image(rep.X, rep.Y, w).trace().is_zero());
  CHECK(rep.image_order == 60);
}

TEST_CASE("essential representation precondition failures") {
  GroupWord w = parse_word("xy");
  // tau(1) = 1 != 0: precondition, not a failed search
  CHECK_THROWS_WITH_AS(essential_representation(w, kOne), doctest::Contains("tau"), Error);
  // alpha outside the exceptional set
  CHECK_THROWS_AS(essential_representation(w, GoldenScalar(7)), Error);
}

TEST_CASE("Klein four centraliser of every involution") {
  const IcosianGroup& g = IcosianGroup::instance();
  std::set<Icosian> involutions;
  for (const Icosian& z : g.trace_zero_elements()) involutions.insert(z.sign_normalized());
  CHECK(involutions.size() == 15);
  for (const Icosian& c : involutions) {
    KleinFour v = centralizer_klein(c);
    CHECK(v.a.trace().is_zero());
    CHECK(v.b.trace().is_zero());
    CHECK((v.a * v.b).sign_normalized() == v.c);
    CHECK((v.b * v.a).sign_normalized() == v.c);
    // commuting projectively
    Icosian ab = v.a * v.b, ba = v.b * v.a;
    CHECK((ab == ba || ab == -ba));
  }
  CHECK_THROWS_AS(centralizer_klein(Icosian::one()), Error);
}

TEST_CASE("quaternion i has the coordinate Klein group as centraliser") {
  Icosian i(GoldenScalar::zero(), kOne, GoldenScalar::zero(), GoldenScalar::zero());
  KleinFour v = centralizer_klein(i);
  std::set<Icosian> got{v.a, v.b, v.c};
  Icosian j(GoldenScalar::zero(), GoldenScalar::zero(), kOne, GoldenScalar::zero());
  Icosian k(GoldenScalar::zero(), GoldenScalar::zero(), GoldenScalar::zero(), kOne);
  CHECK(got.count(i.sign_normalized()) == 1);
  CHECK(got.count(j.sign_normalized()) == 1);
  CHECK(got.count(k.sign_normalized()) == 1);
}
