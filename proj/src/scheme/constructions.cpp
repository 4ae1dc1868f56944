#include <algorithm>

#include "dpv/model.hpp"
#include "dpv/parser.hpp"

namespace dpv {

namespace {

struct StrictTransform {
  Chart chart;
  std::vector<Polynomial> lifted;  // in the overlap ring, with the defining relation
};

// Chart of the blow-up where `dep` = t * `base`, t a new coordinate named
// `tname`; the strict transform is the saturation by `base`.
StrictTransform blowup_chart(const Chart& c, const Polynomial& base, const Polynomial& dep, const std::string& tname,
                             const Ring& overlap, int surface_dim, const GroebnerOptions& opts) {
  const Ring& r = c.ring;
  auto dep_var = dep.as_variable();
  Ring target;
  std::vector<Polynomial> eqs;
  Polynomial base_t(r);
  if (dep_var && base.degree_in(*dep_var) <= 0) {
    // Eliminate the dependent coordinate: it becomes t * base.
    auto names = r->var_names();
    names[*dep_var] = tname;
    target = r->with_variables(names, r->weights());
    base_t = embed(base, target);
    Substitution s;
    s.geometric.emplace(r->var_names()[*dep_var], Polynomial::variable(target, tname) * base_t);
    for (const auto& f : c.equations) eqs.push_back(substitute(f, s, target));
  } else {
    target = r->extended({tname});
    base_t = embed(base, target);
    for (const auto& f : c.equations) eqs.push_back(embed(f, target));
    eqs.push_back(embed(dep, target) - Polynomial::variable(target, tname) * base_t);
  }
  auto sat = saturate(eqs, base_t, opts);
  std::size_t nv = target->nvars();
  StrictTransform st{Chart{"", target, sat, {}, nv - static_cast<std::size_t>(surface_dim), "blow-up"}, {}};
  for (const auto& f : sat) st.lifted.push_back(embed(f, overlap));
  st.lifted.push_back(embed(dep, overlap) - Polynomial::variable(overlap, tname) * embed(base, overlap));
  return st;
}

}  // namespace

SurfaceModel blow_up(ModelPtr parent, std::string_view chart_name, const std::string& g1_text,
                     const std::string& g2_text, const std::optional<std::string>& invert_text,
                     const GroebnerOptions& opts) {
  if (!parent) throw ModelError("blow-up without a parent model");
  Chart c = find_chart(*parent, chart_name);
  Polynomial g1 = parse_polynomial(g1_text, c.ring), g2 = parse_polynomial(g2_text, c.ring);
  if (g1.is_zero() || g2.is_zero()) throw ModelError("blow-up center generator is zero");
  std::optional<Polynomial> h;
  if (invert_text) {
    h = parse_polynomial(*invert_text, c.ring);
    c.inverted.push_back(*h);
  }
  Chart mc = materialize(c);
  Polynomial m1 = embed(g1, mc.ring), m2 = embed(g2, mc.ring);

  auto center = mc.equations;
  center.push_back(m1);
  center.push_back(m2);
  auto gb = groebner(mc.ring, center, opts);
  if (gb.is_unit()) throw ModelError("blow-up center does not meet chart " + c.name);
  if (dimension(gb) != 0) throw ModelError("blow-up center is not a closed point of chart " + c.name);
  auto degree = quotient_dimension(gb);

  std::string u = mc.ring->fresh_name("u"), v = mc.ring->fresh_name("v");
  if (u == v) v = mc.ring->extended({u})->fresh_name("v");
  Ring overlap = mc.ring->extended({u, v});
  const int dim = parent->dimension();
  auto a = blowup_chart(mc, m1, m2, u, overlap, dim, opts);
  auto b = blowup_chart(mc, m2, m1, v, overlap, dim, opts);
  Polynomial unit = Polynomial::variable(overlap, u) * Polynomial::variable(overlap, v) - Polynomial::constant(overlap, 1);
  a.lifted.push_back(unit);
  b.lifted.push_back(unit);

  const std::string g1s = g1.to_string(), g2s = g2.to_string();
  a.chart.name = "Bl-A";
  a.chart.provenance = "blow-up of " + c.name + ": " + u + " = (" + g2s + ")/(" + g1s + ")";
  b.chart.name = "Bl-B";
  b.chart.provenance = "blow-up of " + c.name + ": " + v + " = (" + g1s + ")/(" + g2s + ")";

  SurfaceModel m;
  m.presentation = Presentation::blow_up;
  m.ambient = parent->ambient;
  m.assumptions = parent->assumptions;
  m.built_charts = {a.chart, b.chart};
  // Parent charts are opens of X only away from the center; every check on
  // them is a check on a superset of that open (see README).
  for (auto pc : charts(*parent)) {
    pc.name = "parent:" + pc.name;
    pc.provenance = "parent";
    m.built_charts.push_back(std::move(pc));
  }
  m.blowup = BlowUpData{parent, parent->name, c.name, g1, g2, h, degree.value_or(0), overlap, a.lifted, b.lifted};
  return m;
}

SurfaceModel double_cover(const Ring& base, const Polynomial& section, std::array<int, 2> bidegree) {
  if (base->nvars() != 4 || base->grading_rank() != 2) throw ModelError("double cover base must be P1xP1");
  const std::vector<std::vector<int>> expect{{1, 0}, {1, 0}, {0, 1}, {0, 1}};
  if (base->weights() != expect) throw ModelError("double cover base must be graded as P1xP1");
  if (!compatible(section.ring(), base)) throw RingMismatch("double cover section from another ring");
  auto deg = weighted_degree(section);
  if (!section.is_zero() && (!deg.homogeneous() || deg.degree != std::vector<int>{2 * bidegree[0], 2 * bidegree[1]}))
    throw ModelError("section degree mismatch: expected bidegree (" + std::to_string(2 * bidegree[0]) + "," +
                     std::to_string(2 * bidegree[1]) + ")");

  SurfaceModel m;
  m.presentation = Presentation::double_cover;
  m.ambient = AmbientSpace{AmbientKind::multiprojective, {}, {1, 1}, base};
  std::string w = base->fresh_name("w");
  m.cover = DoubleCoverData{section, bidegree, w};
  for (std::size_t a : {0u, 1u})
    for (std::size_t b : {2u, 3u}) {
      std::vector<std::string> names;
      std::vector<std::vector<int>> weights;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != a && i != b) {
          names.push_back(base->var_names()[i]);
          weights.push_back(base->weight(i));
        }
      names.push_back(w);
      weights.push_back({bidegree[0], bidegree[1]});
      // Trivialise by the chart variables: s / (a^(2 d1) b^(2 d2)).
      Ring target = RingContext::make(base->prime(), names, weights, base->param_names());
      Substitution s;
      s.geometric.emplace(base->var_names()[a], Polynomial::constant(target, 1));
      s.geometric.emplace(base->var_names()[b], Polynomial::constant(target, 1));
      Polynomial wv = Polynomial::variable(target, w);
      Chart c{"D+(" + base->var_names()[a] + ")xD+(" + base->var_names()[b] + ")", target,
              {wv * wv - substitute(section, s, target)}, {}, 1, "double cover"};
      m.built_charts.push_back(std::move(c));
    }
  return m;
}

}  // namespace dpv
