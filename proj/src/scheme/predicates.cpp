#include <algorithm>
#include <numeric>
#include <set>

#include "dpv/predicates.hpp"

namespace dpv {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

using Matrix = std::vector<std::vector<Polynomial>>;

Polynomial determinant(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                       const Ring& ring) {
  const std::size_t k = rows.size();
  if (k == 0) return Polynomial::constant(ring, 1);
  if (k == 1) return m[rows[0]][cols[0]];
  if (k == 2)
    return m[rows[0]][cols[0]] * m[rows[1]][cols[1]] - m[rows[0]][cols[1]] * m[rows[1]][cols[0]];
  // Laplace expansion along the first row.
  Polynomial acc(ring);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    const Polynomial& a = m[rows[0]][cols[j]];
    if (a.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    Polynomial term = a * determinant(m, sub_rows, sub_cols, ring);
    acc = j % 2 ? acc - term : acc + term;
  }
  return acc;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Polynomial> all_minors(const Matrix& m, std::size_t k, const Ring& ring) {
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  const std::size_t nrows = m.size(), ncols = nrows ? m[0].size() : 0;
  if (k == 0) return {Polynomial::constant(ring, 1)};
  for_each_subset(nrows, k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(ncols, k, [&](const std::vector<std::size_t>& cols) {
      Polynomial d = determinant(m, rows, cols, ring);
      if (d.is_zero()) return;
      if (seen.insert(d.to_string()).second) out.push_back(std::move(d));
    });
  });
  return out;
}

std::vector<std::string> basis_text(const GroebnerBasis& g) {
  std::vector<std::string> out;
  for (const auto& f : g.generators()) out.push_back(f.to_string());
  return out;
}

// Runs one Gröbner computation for a chart, turning budget exhaustion into an
// inconclusive result.
template <class F>
ChartResult chart_computation(const std::string& name, const GroebnerOptions& opts, F&& body) {
  ChartResult r;
  r.chart = name;
  GroebnerOptions local = opts;
  local.stats = &r.stats;
  try {
    body(r, local);
  } catch (const ResourceLimitExceeded& e) {
    r.verdict = Verdict::inconclusive;
    r.exhausted = e.what();
    r.basis.clear();
  }
  if (opts.stats) *opts.stats += r.stats;
  return r;
}

std::vector<Chart> materialized_charts(const SurfaceModel& m) {
  std::vector<Chart> out;
  for (const auto& c : charts(m)) out.push_back(materialize(c));
  return out;
}

SingularityReport singular_dimension(const SurfaceModel& m, const GroebnerOptions& opts, bool params) {
  SingularityReport rep;
  rep.decided = Verdict::yes;
  for (const auto& c : materialized_charts(m)) {
    rep.charts.push_back(chart_computation(c.name, opts, [&](ChartResult& r, const GroebnerOptions& o) {
      auto j = nonsmooth_ideal(c, c.codim, params);
      r.generators = j.generators.size();
      r.minors = j.minors;
      auto gb = groebner(j.ring, j.generators, o);
      r.dimension = dimension(gb);
      r.verdict = Verdict::yes;
      r.basis = basis_text(gb);
    }));
    const auto& r = rep.charts.back();
    if (r.verdict == Verdict::inconclusive)
      rep.decided = Verdict::inconclusive;
    else
      rep.dimension = std::max(rep.dimension, r.dimension);
  }
  return rep;
}

}  // namespace

JacobianIdeal nonsmooth_ideal(const Chart& chart, std::size_t codim, bool parameter_derivations) {
  Chart c = materialize(Chart{chart.name, chart.ring, chart.equations, chart.inverted, codim, chart.provenance});
  const Ring& ring = c.ring;
  Matrix jac;
  for (const auto& e : c.equations) {
    // Rows over F_p[params] keep the minors free of rational-function growth.
    Polynomial f = clear_denominators(e);
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < ring->nvars(); ++v) row.push_back(diff_geometric(f, v));
    if (parameter_derivations)
      for (std::size_t s = 0; s < ring->nparams(); ++s) row.push_back(diff_parameter(f, s));
    jac.push_back(std::move(row));
  }
  JacobianIdeal out{ring, c.equations, 0};
  auto minors = all_minors(jac, c.codim, ring);
  out.minors = minors.size();
  for (auto& g : minors) out.generators.push_back(std::move(g));
  return out;
}

JacobianIdeal nonsmooth_ideal(const Chart& c, bool parameter_derivations) {
  return nonsmooth_ideal(c, c.codim, parameter_derivations);
}

std::vector<Polynomial> irrelevant_generators(const AmbientSpace& a) {
  std::vector<Polynomial> out;
  auto groups = a.factors();
  if (groups.empty()) return out;
  std::vector<std::size_t> pick(groups.size(), 0);
  while (true) {
    Polynomial p = Polynomial::constant(a.ring, 1);
    for (std::size_t g = 0; g < groups.size(); ++g) p = p * Polynomial::variable(a.ring, groups[g][pick[g]]);
    out.push_back(std::move(p));
    std::size_t g = groups.size();
    while (g > 0 && ++pick[g - 1] == groups[g - 1].size()) pick[--g] = 0;
    if (g == 0) break;
  }
  return out;
}

AmbientReport ambient_check(const SurfaceModel& m, const GroebnerOptions& opts) {
  AmbientReport rep;
  if (m.presentation == Presentation::double_cover) {
    rep.ok = rep.standard_charts_cover = true;
    rep.notes.push_back("double cover: charts over the four product charts of P1xP1 cover X");
    return rep;
  }
  if (m.presentation == Presentation::blow_up) {
    rep = ambient_check(*m.blowup->parent, opts);
    rep.notes.push_back("blow-up: the two blow-up charts and the parent charts cover X");
    return rep;
  }
  const auto& a = m.ambient;
  if (a.kind == AmbientKind::affine) {
    rep.ok = rep.standard_charts_cover = true;
    return rep;
  }
  const Ring& ring = a.ring;
  auto irrelevant = irrelevant_generators(a);

  std::vector<std::size_t> unit_vars;
  if (a.kind == AmbientKind::weighted_projective) {
    // P(w) is singular along V(x_i : q does not divide w_i) for each prime q
    // dividing a weight.
    std::set<int> primes;
    for (int w : a.weights)
      for (int q = 2; q <= w; ++q)
        if (w % q == 0 && std::none_of(primes.begin(), primes.end(), [&](int r) { return q % r == 0; }))
          primes.insert(q);
    for (int q : primes) {
      std::vector<Polynomial> gens = m.equations;
      std::string locus = "V(";
      bool first = true;
      for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (a.weights[i] % q != 0) {
          gens.push_back(Polynomial::variable(ring, i));
          locus += (first ? "" : ",") + ring->var_names()[i];
          first = false;
        }
      locus += ")";
      rep.strata.push_back({locus, projective_is_empty(gens, irrelevant, opts)});
    }
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      if (a.weights[i] == 1) unit_vars.push_back(i);
  } else {
    for (std::size_t i = 0; i < ring->nvars(); ++i) unit_vars.push_back(i);
  }
  const bool strata_ok = std::all_of(rep.strata.begin(), rep.strata.end(), [](const auto& s) { return s.avoided; });

  std::vector<Polynomial> off_charts = m.equations;
  for (auto i : unit_vars) off_charts.push_back(Polynomial::variable(ring, i));
  if (unit_vars.size() == ring->nvars())
    rep.standard_charts_cover = true;
  else
    rep.standard_charts_cover = projective_is_empty(off_charts, irrelevant, opts);

  if (!rep.standard_charts_cover && !m.extra_charts.empty()) {
    rep.coverage_asserted = true;
    rep.notes.push_back("coverage asserted by example data: weight-one charts miss part of X");
    bool all_loci = std::all_of(m.extra_loci.begin(), m.extra_loci.end(), [](const auto& l) { return l.has_value(); });
    if (all_loci && !m.extra_loci.empty()) {
      auto gens = off_charts;
      for (const auto& l : m.extra_loci) gens.push_back(*l);
      rep.extra_loci_verified = projective_is_empty(gens, irrelevant, opts);
      if (rep.extra_loci_verified) rep.notes.push_back("the declared extra-chart loci contain the uncovered part of X");
    }
  }
  rep.ok = strata_ok && (rep.standard_charts_cover || rep.coverage_asserted);
  if (!strata_ok) rep.notes.push_back("X meets a singular point of the ambient space");
  return rep;
}

RegularityReport check_regular(const SurfaceModel& m, const GroebnerOptions& opts, bool parameter_derivations) {
  RegularityReport rep;
  rep.regular = Verdict::yes;
  for (const auto& c : materialized_charts(m)) {
    rep.charts.push_back(chart_computation(c.name, opts, [&](ChartResult& r, const GroebnerOptions& o) {
      auto j = nonsmooth_ideal(c, c.codim, parameter_derivations);
      r.generators = j.generators.size();
      r.minors = j.minors;
      auto gb = groebner(j.ring, j.generators, o);
      r.verdict = gb.is_unit() ? Verdict::yes : Verdict::no;
      r.dimension = dimension(gb);
      r.basis = basis_text(gb);
    }));
    const auto v = rep.charts.back().verdict;
    if (v == Verdict::no)
      rep.regular = Verdict::no;
    else if (v == Verdict::inconclusive && rep.regular == Verdict::yes)
      rep.regular = Verdict::inconclusive;
  }
  return rep;
}

SingularityReport geometric_singular_dimension(const SurfaceModel& m, const GroebnerOptions& opts) {
  return singular_dimension(m, opts, false);
}

SingularityReport nonregular_dimension(const SurfaceModel& m, const GroebnerOptions& opts) {
  return singular_dimension(m, opts, true);
}

Verdict is_geometrically_normal(const SingularityReport& r) {
  if (r.decided != Verdict::yes) return Verdict::inconclusive;
  return r.dimension <= 0 ? Verdict::yes : Verdict::no;
}

Verdict is_geometrically_normal(const SurfaceModel& m, const GroebnerOptions& opts) {
  return is_geometrically_normal(geometric_singular_dimension(m, opts));
}

IntegralityReport geometric_integrality(const SurfaceModel& m, Verdict regular, const GroebnerOptions& opts) {
  IntegralityReport rep;
  rep.reduced = Verdict::no;
  bool exhausted = false;
  for (const auto& c : materialized_charts(m)) {
    try {
      auto j = nonsmooth_ideal(c, c.codim, false);
      std::vector<Polynomial> minors(j.generators.begin() + static_cast<std::ptrdiff_t>(c.equations.size()),
                                     j.generators.end());
      std::stable_sort(minors.begin(), minors.end(),
                       [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
      for (const auto& g : minors)
        if (!radical_membership(g, c.equations, opts)) {
          rep.reduced = Verdict::yes;
          rep.witness_chart = c.name;
          rep.witness_minor = g.to_string();
          break;
        }
    } catch (const ResourceLimitExceeded& e) {
      exhausted = true;
      rep.notes.push_back(c.name + ": " + e.what());
    }
    if (rep.reduced == Verdict::yes) break;
  }
  if (rep.reduced == Verdict::no && exhausted) rep.reduced = Verdict::inconclusive;
  if (rep.reduced == Verdict::yes)
    rep.notes.push_back("smooth point on " + rep.witness_chart + "; Cohen-Macaulay, so X over k-bar is reduced");
  const bool h0 = std::find(m.assumptions.begin(), m.assumptions.end(), "H0=k") != m.assumptions.end();
  if (regular == Verdict::yes && h0) {
    rep.irreducibility = "implied";
    rep.notes.push_back("irreducible: X is regular and proper with H0(X,O_X) = k");
  }
  return rep;
}

DisjointnessReport subschemes_disjoint(const SurfaceModel& m, const std::vector<Polynomial>& a,
                                       const std::vector<Polynomial>& b, const GroebnerOptions& opts) {
  if (m.presentation != Presentation::complete_intersection || m.ambient.kind == AmbientKind::affine)
    throw ModelError("subschemes_disjoint needs a projective complete intersection");
  DisjointnessReport rep;
  std::vector<Polynomial> gens = m.equations;
  gens.insert(gens.end(), a.begin(), a.end());
  gens.insert(gens.end(), b.begin(), b.end());
  for (const auto& f : gens)
    if (!f.is_zero() && !weighted_degree(f).homogeneous())
      throw ModelError("subschemes_disjoint: inhomogeneous generator " + f.to_string());
  try {
    rep.projective = projective_is_empty(gens, irrelevant_generators(m.ambient), opts);
  } catch (const ResourceLimitExceeded&) {
    return rep;
  }
  SurfaceModel joint = m;
  joint.equations = gens;
  joint.extra_charts.clear();
  bool all_unit = true, undecided = false;
  for (const auto& c : charts(joint)) {
    rep.charts.push_back(chart_computation(c.name, opts, [&](ChartResult& r, const GroebnerOptions& o) {
      auto gb = groebner(c.ring, c.equations, o);
      r.generators = c.equations.size();
      r.verdict = gb.is_unit() ? Verdict::yes : Verdict::no;
      r.dimension = dimension(gb);
      r.basis = basis_text(gb);
    }));
    all_unit = all_unit && rep.charts.back().verdict == Verdict::yes;
    undecided = undecided || rep.charts.back().verdict == Verdict::inconclusive;
  }
  if (undecided)
    rep.disjoint = Verdict::inconclusive;
  else
    rep.disjoint = rep.projective ? Verdict::yes : Verdict::no;
  if (rep.disjoint == Verdict::yes && !all_unit) rep.disjoint = Verdict::inconclusive;
  return rep;
}

bool blowup_charts_agree(const SurfaceModel& m, const GroebnerOptions& opts) {
  if (!m.blowup) throw ModelError("not a blow-up model");
  const auto& d = *m.blowup;
  return ideal_contains(d.overlap_ring, d.overlap_a, d.overlap_b, opts) &&
         ideal_contains(d.overlap_ring, d.overlap_b, d.overlap_a, opts);
}

}  // namespace dpv
