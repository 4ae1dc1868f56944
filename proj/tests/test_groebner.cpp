#include <gtest/gtest.h>

#include "dpv/groebner.hpp"
#include "dpv/parser.hpp"
#include "support/suites.hpp"

using namespace dpv;

namespace {

Polynomial P(const Ring& r, std::string_view s) { return parse_polynomial(s, r); }

std::vector<Polynomial> Ps(const Ring& r, std::initializer_list<std::string_view> l) {
  std::vector<Polynomial> out;
  for (auto s : l) out.push_back(P(r, s));
  return out;
}

bool same_ideal(const Ring& r, const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  return ideal_contains(r, a, b) && ideal_contains(r, b, a);
}

}  // namespace

TEST(Buchberger, SmallLex) {
  auto r = parse_ring("ring p=3 geom x y");
  auto g = buchberger(Ps(r, {"x^2+y", "y"}), MonomialOrder::lex(2));
  EXPECT_EQ(g.generators(), Ps(r, {"y", "x^2"}));
  EXPECT_TRUE(oracle::s_pairs_reduce_to_zero(g.generators(), g.order()));
  EXPECT_TRUE(same_ideal(r, g.generators(), Ps(r, {"x^2+y", "y"})));
}

TEST(Buchberger, UnitAndZero) {
  auto r = parse_ring("ring p=2 geom x y");
  auto one = groebner(r, Ps(r, {"1"}));
  EXPECT_TRUE(one.is_unit());
  EXPECT_EQ(one.generators(), Ps(r, {"1"}));
  EXPECT_TRUE(groebner(r, {}).is_zero());
  EXPECT_EQ(dimension(groebner(r, {})), 2);
}

TEST(Buchberger, ChartWithUnitDerivative) {
  auto r = parse_ring("ring p=3 geom x1 y z params s0 s1 s2 s3");
  auto f = P(r, "s0*z^2 + s1*y^3 + s2 + s3*x1^6");
  auto g = groebner(r, {f, diff(f, "s2")});
  EXPECT_TRUE(g.is_unit());
}

TEST(Buchberger, MonicInterreducedSorted) {
  auto r = parse_ring("ring p=5 geom x y z params s");
  auto g = groebner(r, Ps(r, {"s*x^2 + y*z", "x*y - z^2/s", "y^3 + x"}));
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    EXPECT_TRUE(leading_term(gens[i], g.order()).terms().front().coef.is_one());
    if (i) {
      EXPECT_TRUE(g.order().less(g.leading_monomial(i - 1), g.leading_monomial(i)));
    }
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j) {
        EXPECT_FALSE(g.leading_monomial(i).divides(g.leading_monomial(j)));
      }
  }
  EXPECT_TRUE(satisfies_buchberger_criterion(g));
}

TEST(Buchberger, Deterministic) {
  auto r = parse_ring("ring p=2 geom x y z params s t");
  auto gens = Ps(r, {"x^2*y + s*z^3", "y^2 + t*x*z", "x*y*z + 1"});
  GroebnerStats a, b;
  GroebnerOptions oa, ob;
  oa.stats = &a;
  ob.stats = &b;
  EXPECT_EQ(groebner(r, gens, oa).generators(), groebner(r, gens, ob).generators());
  EXPECT_EQ(a.pairs, b.pairs);
  EXPECT_EQ(a.reduction_steps, b.reduction_steps);
}

TEST(Buchberger, ResourceLimit) {
  auto r = parse_ring("ring p=3 geom x y z");
  GroebnerOptions o;
  o.limits.max_pairs = 1;
  try {
    groebner(r, Ps(r, {"x^2 + y*z", "y^2 + x*z", "z^2 + x*y + 1"}), o);
    FAIL() << "expected ResourceLimitExceeded";
  } catch (const ResourceLimitExceeded& e) {
    EXPECT_EQ(e.resource(), "pair");
    EXPECT_EQ(e.limit(), 1u);
  }
}

TEST(Reduce, Examples) {
  auto r = parse_ring("ring p=3 geom x y");
  EXPECT_TRUE(reduce(P(r, "y^3"), groebner(r, Ps(r, {"y"}))).is_zero());
  EXPECT_EQ(reduce(P(r, "x"), groebner(r, Ps(r, {"y"}))), P(r, "x"));
  auto g = groebner(r, Ps(r, {"x+y"}));
  EXPECT_TRUE(reduce(P(r, "x^2*y + x*y^2"), g).is_zero());
  EXPECT_EQ(P(r, "x*y") * P(r, "x+y"), P(r, "x^2*y + x*y^2"));
}

TEST(UnitIdeal, Examples) {
  auto r = parse_ring("ring p=2 geom x xp w params t1 t2 t3 t4");
  auto f = P(r, "w^2 + x*xp^2 + t1*x^2*xp^2 + t2*xp^2 + t3*x^2 + t4");
  EXPECT_EQ(diff(f, "t4"), Polynomial::constant(r, 1));
  EXPECT_TRUE(is_unit_ideal(r, {f, diff(f, "t4")}));
  auto r2 = parse_ring("ring p=3 geom x y");
  EXPECT_TRUE(is_unit_ideal(r2, Ps(r2, {"x", "y", "x+y+1"})));
  EXPECT_FALSE(is_unit_ideal(r2, Ps(r2, {"x^2", "x*y"})));
}

TEST(RadicalMembership, Examples) {
  auto r = parse_ring("ring p=3 geom x y z params s t");
  EXPECT_TRUE(radical_membership(P(r, "x"), Ps(r, {"x^2"})));
  EXPECT_FALSE(radical_membership(P(r, "1"), Ps(r, {"x"})));

  auto f = P(r, "x^2*y + x*y^2 + s*z^3 + t");
  auto g = P(r, "y*(y-x)");
  EXPECT_EQ(diff(f, "x"), P(r, "y^2 + 2*x*y"));
  EXPECT_FALSE(radical_membership(g, {f}));
  // Witness over F_3 with s = t = 1: (x, y, z) = (0, 1, 2).
  const std::uint32_t pt[] = {0, 1, 2}, par[] = {1, 1};
  EXPECT_EQ(evaluate(f, pt, par), 0u);
  EXPECT_NE(evaluate(g, pt, par), 0u);
}

TEST(Saturate, Examples) {
  auto r = parse_ring("ring p=3 geom x y z");
  EXPECT_TRUE(same_ideal(r, saturate(Ps(r, {"x*y", "x*z"}), P(r, "x")), Ps(r, {"y", "z"})));
  EXPECT_TRUE(is_unit_ideal(r, saturate(Ps(r, {"x"}), P(r, "x"))));

  auto r2 = parse_ring("ring p=2 geom x v w params s");
  auto I = Ps(r2, {"x^2 + s + v*w^2"});
  EXPECT_TRUE(same_ideal(r2, saturate(I, P(r2, "w")), I));
}

TEST(Dimension, Examples) {
  auto r = parse_ring("ring p=3 geom x y z params s t");
  EXPECT_EQ(dimension(r, Ps(r, {"z"})), 2);
  EXPECT_EQ(dimension(r, Ps(r, {"1"})), -1);
  auto f = P(r, "x^2*y + x*y^2 + s*z^3 + t");
  EXPECT_EQ(dimension(r, {f, diff(f, "x"), diff(f, "y")}), 1);
  // The component {y = x, -x^3 + s z^3 + t = 0} lies in it.
  EXPECT_TRUE(ideal_contains(r, Ps(r, {"y - x", "-x^3 + s*z^3 + t"}), {f, diff(f, "x"), diff(f, "y")}));
}

TEST(QuotientDimension, Examples) {
  auto r = parse_ring("ring p=5 geom x y");
  EXPECT_EQ(quotient_dimension(r, Ps(r, {"x^2", "y^3"})), 6u);
  EXPECT_FALSE(quotient_dimension(r, Ps(r, {"x^2"})));
}

TEST(ProjectiveEmpty, Examples) {
  auto r = parse_ring("ring p=2 geom x0:1 x1:1 x2:1 y:2 params s0 s1 s2 t");
  EXPECT_TRUE(projective_is_empty(
      r, Ps(r, {"y^2 + t*x0^2*y + s0*x0^4 + s1*x1^4 + s2*x2^4", "x0", "x1", "x2"}), {"y"}));

  auto r2 = parse_ring("ring p=3 geom x0:1 x1:1 y:2 z:3 params s0 s1 s2 s3");
  auto gens = Ps(r2, {"s0*z^2 + s1*y^3 + s2*x0^6 + s3*x1^6", "x0", "x1"});
  EXPECT_FALSE(projective_is_empty(r2, gens, {"y", "z"}));
  EXPECT_FALSE(radical_membership(P(r2, "y"), gens));

  auto r3 = parse_ring("ring p=5 geom x0 x1");
  EXPECT_TRUE(projective_is_empty(r3, Ps(r3, {"x0", "x1"}), {"x0", "x1"}));
}

TEST(GroebnerProperties, RandomIdeals) {
  auto res = oracle::groebner_property_suite(510);
  EXPECT_EQ(res.instances, 510u);
  EXPECT_EQ(res.failures, 0u) << res.first_failure;
}

TEST(GroebnerProperties, EmptinessAgreesWithEnumeration) {
  auto res = oracle::emptiness_oracle_suite(120);
  EXPECT_EQ(res.failures, 0u) << res.first_failure;
  EXPECT_GT(res.nonempty, 10u);
  EXPECT_LT(res.nonempty, res.instances - 10);
}

TEST(Oracle, FieldOfSizePToTheSix) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    oracle::Fq F(p);
    // a^(p^6) = a for all a, and z generates a degree-6 extension.
    auto a = F.element(p + 1);
    EXPECT_EQ(F.pow(a, F.size()), a);
    auto z = F.element(p);  // the class of the generator z
    EXPECT_EQ(F.pow(z, F.size() - 1), F.one());
    for (std::uint64_t d : {F.size() / p, std::uint64_t{p} * p * p, std::uint64_t{p} * p})
      EXPECT_NE(F.pow(z, d), z) << p << " " << d;
  }
}
