#include <gtest/gtest.h>

#include "dpv/catalogue.hpp"
#include "dpv/parser.hpp"
#include "dpv/predicates.hpp"
#include "support/oracles.hpp"

using namespace dpv;

namespace {

ModelPtr record(const std::string& id) { return catalogue::load_example(id).model; }

ModelPtr model(std::string_view text) { return std::make_shared<SurfaceModel>(parse_model(text)); }

Polynomial P(const Ring& r, std::string_view s) { return parse_polynomial(s, r); }

bool same_ideal(const Ring& r, const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  return ideal_contains(r, a, b) && ideal_contains(r, b, a);
}

std::vector<std::string> names(const std::vector<Chart>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.name);
  return out;
}

}  // namespace

TEST(Charts, WeightedWithExtraChart) {
  auto m = record("e1-1-p3");
  auto cs = charts(*m);
  EXPECT_EQ(names(cs), (std::vector<std::string>{"D+(x0)", "D+(x1)", "U"}));
  EXPECT_EQ(cs[0].equations.front(), P(cs[0].ring, "s0*z^2 + s1*y^3 + s2 + s3*x1^6"));
  ASSERT_EQ(cs[2].inverted.size(), 1u);
  EXPECT_THROW(find_chart(*m, "D+(y)"), ModelError);
}

TEST(Charts, ProductCharts) {
  auto cs = charts(*record("e2-5-pencil"));
  EXPECT_EQ(cs.size(), 6u);
  EXPECT_EQ(cs.front().name, "D+(x)xD+(u)");
}

TEST(Charts, Materialize) {
  auto c = find_chart(*record("e1-1-p3"), "U");
  auto mc = materialize(c);
  EXPECT_TRUE(mc.inverted.empty());
  EXPECT_EQ(mc.equations.size(), c.equations.size() + 1);
  EXPECT_EQ(mc.ring->nvars(), c.ring->nvars() + 1);
  // u is a unit: 1 lies in (equations, u) on the materialised chart.
  auto u = embed(c.inverted.front(), mc.ring);
  auto gens = mc.equations;
  gens.push_back(u);
  EXPECT_TRUE(is_unit_ideal(mc.ring, gens));
}

TEST(Ambient, Coverage) {
  auto e12 = ambient_check(*record("e1-2"));
  EXPECT_TRUE(e12.ok);
  EXPECT_TRUE(e12.standard_charts_cover);
  EXPECT_FALSE(e12.coverage_asserted);
  for (const auto& s : e12.strata) EXPECT_TRUE(s.avoided) << s.locus;
  EXPECT_FALSE(e12.strata.empty());

  auto e11 = ambient_check(*record("e1-1-p3"));
  EXPECT_TRUE(e11.ok);
  EXPECT_FALSE(e11.standard_charts_cover);
  EXPECT_TRUE(e11.coverage_asserted);
  EXPECT_TRUE(e11.extra_loci_verified);
  EXPECT_GE(e11.strata.size(), 2u);

  auto e13 = ambient_check(*record("e1-3"));
  EXPECT_TRUE(e13.ok);
  EXPECT_TRUE(e13.standard_charts_cover);
  EXPECT_TRUE(e13.strata.empty());
}

TEST(Ambient, MeetingASingularPointFails) {
  // y^3 + z^2 vanishes at no point of {x0 = x1 = 0}... but z^2 alone passes
  // through [0:0:1:0], a singular point of P(1,1,2,3).
  auto m = model("ring p=5 geom x0 x1 y z\nambient wproj 1 1 2 3\nhypersurface z^2 + x0^6 + x1^6\n");
  EXPECT_FALSE(ambient_check(*m).ok);
}

TEST(NonsmoothIdeal, CubicChart) {
  auto c = find_chart(*record("e1-3"), "D+(w)");
  auto J = nonsmooth_ideal(c);
  auto r = c.ring;
  EXPECT_TRUE(same_ideal(r, J.generators, {P(r, "x^2*y + x*y^2 + s*z^3 + t"), P(r, "y^2 + 2*x*y"), P(r, "x^2 + 2*x*y")}));
  EXPECT_EQ(diff(c.equations.front(), "z"), Polynomial(r));
}

TEST(NonsmoothIdeal, CompleteIntersectionChart) {
  auto c = find_chart(*record("e1-4"), "D+(x0)");
  auto J = nonsmooth_ideal(c);
  // Over F_2 the rows are (1,0,0,0) and (0,1,0,0): one nonzero minor, 1.
  EXPECT_EQ(J.minors, 1u);
  EXPECT_EQ(J.generators.back(), Polynomial::constant(c.ring, 1));
}

TEST(NonsmoothIdeal, LineInThePlane) {
  auto m = model("ring p=3 geom x y\nambient affine 2\nhypersurface x\n");
  auto c = charts(*m).front();
  EXPECT_TRUE(is_unit_ideal(c.ring, nonsmooth_ideal(c).generators));
}

TEST(Regularity, RegularButNotSmooth) {
  auto m = model("ring p=2 geom y params s\nambient affine 1\nhypersurface y^2 + s\n");
  auto c = charts(*m).front();
  EXPECT_TRUE(is_unit_ideal(c.ring, nonsmooth_ideal(c, 1, true).generators));
  auto geo = nonsmooth_ideal(c, 1, false);
  EXPECT_FALSE(is_unit_ideal(c.ring, geo.generators));
  EXPECT_TRUE(same_ideal(c.ring, geo.generators, {P(c.ring, "y^2 + s")}));
  EXPECT_EQ(check_regular(*m).regular, Verdict::yes);
  EXPECT_EQ(check_regular(*m, {}, false).regular, Verdict::no);
}

TEST(Regularity, CatalogueExamples) {
  for (const char* id : {"e1-1-p3", "e2-4"}) {
    auto rep = check_regular(*record(id));
    EXPECT_EQ(rep.regular, Verdict::yes) << id;
    for (const auto& c : rep.charts) EXPECT_EQ(c.basis, std::vector<std::string>{"1"}) << id << " " << c.chart;
  }
}

TEST(SingularLocus, ResourceLimitIsInconclusive) {
  GroebnerOptions o;
  o.limits.max_pairs = 1;
  auto r = geometric_singular_dimension(*record("e1-4"), o);
  EXPECT_EQ(r.decided, Verdict::inconclusive);
  EXPECT_EQ(is_geometrically_normal(r), Verdict::inconclusive);
  bool exhausted = false;
  for (const auto& c : r.charts) exhausted = exhausted || !c.exhausted.empty();
  EXPECT_TRUE(exhausted);
}

TEST(SingularLocus, Dimensions) {
  EXPECT_EQ(geometric_singular_dimension(*record("e1-1-p3")).dimension, 1);
  EXPECT_EQ(geometric_singular_dimension(*record("e2-4")).dimension, 1);
  auto conic = model("ring p=5 geom x y z\nambient wproj 1 1 1\nhypersurface x^2 + y*z\n");
  auto r = geometric_singular_dimension(*conic);
  EXPECT_EQ(r.decided, Verdict::yes);
  EXPECT_EQ(r.dimension, -1);
}

TEST(SingularLocus, CubicContainsTheDiagonalLine) {
  auto c = find_chart(*record("e1-3"), "D+(w)");
  auto J = nonsmooth_ideal(c);
  auto r = c.ring;
  // {x = y, -x^3 + s z^3 + t = 0} is inside Sing; the geometric line
  // x = y = z of the cubic passes through it.
  EXPECT_TRUE(ideal_contains(r, {P(r, "y - x"), P(r, "-x^3 + s*z^3 + t")}, J.generators));
  // The line {x = z = 0} is not: d/dx = y^2 there.
  EXPECT_FALSE(ideal_contains(r, {P(r, "x"), P(r, "z")}, J.generators));
  auto cubic = find_chart(*record("e1-3"), "D+(y)");
  auto Jy = nonsmooth_ideal(cubic);
  EXPECT_FALSE(radical_membership(P(cubic.ring, "x"), Jy.generators));
}

TEST(Normality, Examples) {
  EXPECT_EQ(is_geometrically_normal(*record("e1-4")), Verdict::no);
  EXPECT_EQ(is_geometrically_normal(*record("e2-6")), Verdict::no);
  auto quadric = model("ring p=2 geom x0 x1 x2 x3\nambient wproj 1 1 1 1\nhypersurface x0*x3 + x1*x2\n");
  EXPECT_EQ(is_geometrically_normal(*quadric), Verdict::yes);
}

TEST(Integrality, Examples) {
  for (const char* id : {"e1-3", "e2-2"}) {
    auto m = record(id);
    auto g = geometric_integrality(*m, check_regular(*m).regular);
    EXPECT_EQ(g.reduced, Verdict::yes) << id;
    EXPECT_EQ(g.irreducibility, "implied") << id;
    EXPECT_FALSE(g.witness_chart.empty());
  }
  auto dbl = model("ring p=2 geom x\nambient affine 1\nhypersurface x^2\n");
  auto g = geometric_integrality(*dbl, Verdict::no);
  EXPECT_EQ(g.reduced, Verdict::no);
  EXPECT_EQ(g.irreducibility, "unchecked");
}

TEST(Monotonicity, NonRegularInsideSingular) {
  for (const auto& id : catalogue::record_ids()) {
    auto m = record(id);
    auto a = nonregular_dimension(*m), b = geometric_singular_dimension(*m);
    ASSERT_EQ(a.decided, Verdict::yes) << id;
    EXPECT_LE(a.dimension, b.dimension) << id;
    for (const auto& c : charts(*m)) {
      auto geo = nonsmooth_ideal(c, c.codim, false), full = nonsmooth_ideal(c, c.codim, true);
      EXPECT_TRUE(ideal_contains(geo.ring, full.generators, geo.generators)) << id << " " << c.name;
    }
  }
}

TEST(BlowUp, QuadricAtDegreeTwoPoint) {
  auto m = record("e2-6");
  auto a = find_chart(*m, "Bl-A"), b = find_chart(*m, "Bl-B");
  EXPECT_TRUE(same_ideal(b.ring, b.equations, {P(b.ring, "x^2 + s + v*w^2")}));
  EXPECT_TRUE(same_ideal(a.ring, a.equations, {P(a.ring, "x^2 + s + u*z^2")}));
  ASSERT_TRUE(m->blowup);
  EXPECT_EQ(m->blowup->center_degree, 2u);
  EXPECT_TRUE(blowup_charts_agree(*m));
  EXPECT_EQ(charts(*m).size(), 2u + charts(*m->blowup->parent).size());
}

TEST(BlowUp, CenterDegreesAndAgreement) {
  const std::pair<const char*, std::uint64_t> cases[] = {{"e2-3", 1}, {"e2-5-blowup", 4}, {"e2-6", 2}};
  for (auto [id, d] : cases) {
    auto m = record(id);
    ASSERT_TRUE(m->blowup) << id;
    EXPECT_EQ(m->blowup->center_degree, d) << id;
    EXPECT_TRUE(blowup_charts_agree(*m)) << id;
    EXPECT_EQ(check_regular(*m).regular, Verdict::yes) << id;
  }
}

TEST(BlowUp, AffinePlaneAtOrigin) {
  auto plane = model("ring p=3 geom x y\nambient affine 2\n");
  auto m = blow_up(plane, "A^2", "x", "y");
  auto cs = charts(m);
  ASSERT_GE(cs.size(), 2u);
  EXPECT_TRUE(cs[0].equations.empty() || is_unit_ideal(cs[0].ring, cs[0].equations) == false);
  for (const auto& e : cs[0].equations) EXPECT_TRUE(e.is_zero());
  EXPECT_EQ(m.blowup->center_degree, 1u);
  EXPECT_TRUE(blowup_charts_agree(m));
}

TEST(BlowUp, RejectsNonPoints) {
  auto plane = model("ring p=3 geom x y\nambient affine 2\n");
  EXPECT_THROW(blow_up(plane, "A^2", "x", "x"), ModelError);
  EXPECT_THROW(blow_up(plane, "A^2", "x", "x + 1"), ModelError);
}

TEST(DoubleCover, ChartEquations) {
  auto m = record("e2-4");
  auto c = find_chart(*m, "D+(x)xD+(x')");
  auto r = c.ring;
  ASSERT_EQ(c.equations.size(), 1u);
  EXPECT_EQ(c.equations[0], P(r, "w^2 + y + t1 + t2*y^2 + t3*y'^2 + t4*y^2*y'^2"));
  auto d = find_chart(*m, "D+(y)xD+(y')");
  EXPECT_EQ(d.equations[0], P(d.ring, "w^2 + x*x'^2 + t1*x^2*x'^2 + t2*x'^2 + t3*x^2 + t4"));
  for (const auto& ch : charts(*m)) EXPECT_TRUE(diff(ch.equations[0], "w").is_zero()) << ch.name;

  auto base = parse_ring("ring p=2 geom x y x' y' params t");
  base = RingContext::make(2, {"x", "y", "x'", "y'"}, {{1, 0}, {1, 0}, {0, 1}, {0, 1}}, {"t"});
  auto zero = double_cover(base, Polynomial(base), {1, 1});
  for (const auto& ch : charts(zero)) EXPECT_EQ(ch.equations[0], Polynomial::variable(ch.ring, "w").pow(2));
  EXPECT_THROW(double_cover(base, P(base, "x*x'"), {1, 1}), ModelError);
}

TEST(Disjointness, ConicsOnTheQuartic) {
  auto m = record("e2-2");
  auto r = m->ambient.ring;
  std::vector<Polynomial> c1{m->named.at("c1a"), m->named.at("c1b")}, c2{m->named.at("c2a"), m->named.at("c2b")};
  auto d = subschemes_disjoint(*m, c1, c2);
  EXPECT_EQ(d.disjoint, Verdict::yes);
  EXPECT_TRUE(d.projective);
  for (const auto& c : d.charts) EXPECT_EQ(c.basis, std::vector<std::string>{"1"}) << c.chart;
  EXPECT_EQ(d.charts.size(), 3u);

  auto h = P(r, "x0");
  EXPECT_EQ(subschemes_disjoint(*m, {h}, {h}).disjoint, Verdict::no);
}

TEST(Disjointness, PointsOnTheLine) {
  auto line = model("ring p=2 geom x0 x1\nambient wproj 1 1\n");
  auto r = line->ambient.ring;
  EXPECT_EQ(subschemes_disjoint(*line, {P(r, "x0")}, {P(r, "x1")}).disjoint, Verdict::yes);
  EXPECT_EQ(subschemes_disjoint(*line, {P(r, "x0")}, {P(r, "x0")}).disjoint, Verdict::no);
}

TEST(ModelText, Errors) {
  EXPECT_THROW(parse_model("ambient wproj 1 1\n"), ModelError);
  EXPECT_THROW(parse_model("ring p=2 geom x y\nambient wproj 1 1 1\n"), ModelError);
  EXPECT_THROW(parse_model("ring p=2 geom x y\nambient wproj 1 1\nhypersurface x + y^2\n"), ModelError);
  EXPECT_THROW(parse_model("ring p=2 geom x y\nambient wproj 1 1\nfrobnicate\n"), ModelError);
  EXPECT_THROW(parse_model("blowup parent=nowhere chart=D+(x) center x, y\n"), std::exception);
}
