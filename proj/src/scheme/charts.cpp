#include <algorithm>

#include "dpv/model.hpp"

namespace dpv {

namespace {

// Sets the chosen weight-one variables to 1 in every equation.
Chart standard_chart(const SurfaceModel& m, const std::vector<std::size_t>& chosen) {
  const Ring& ring = m.ambient.ring;
  std::vector<std::string> keep;
  std::vector<std::vector<int>> weights;
  std::string name;
  for (std::size_t k = 0; k < chosen.size(); ++k) name += (k ? "x" : "") + ("D+(" + ring->var_names()[chosen[k]] + ")");
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) {
      keep.push_back(ring->var_names()[i]);
      weights.push_back(ring->weight(i));
    }
  Ring target = ring->with_variables(std::move(keep), std::move(weights));
  Substitution s;
  for (auto v : chosen) s.geometric.emplace(ring->var_names()[v], Polynomial::constant(target, 1));
  Chart c{name, target, {}, {}, m.equations.size(), "standard"};
  for (const auto& f : m.equations) {
    if (!weighted_degree(f).homogeneous() && !f.is_zero())
      throw ModelError("equation is not homogeneous: " + f.to_string());
    c.equations.push_back(substitute(f, s, target));
  }
  return c;
}

}  // namespace

std::vector<Chart> charts(const SurfaceModel& m) {
  if (m.presentation != Presentation::complete_intersection) return m.built_charts;
  std::vector<Chart> out;
  const auto& amb = m.ambient;
  if (amb.kind == AmbientKind::affine) {
    out.push_back(Chart{amb.describe(), amb.ring, m.equations, {}, m.equations.size(), "standard"});
  } else if (amb.kind == AmbientKind::weighted_projective) {
    for (std::size_t v = 0; v < amb.ring->nvars(); ++v)
      if (amb.weights[v] == 1) out.push_back(standard_chart(m, {v}));
  } else {
    auto groups = amb.factors();
    std::vector<std::size_t> pick(groups.size(), 0);
    while (true) {
      std::vector<std::size_t> chosen;
      for (std::size_t g = 0; g < groups.size(); ++g) chosen.push_back(groups[g][pick[g]]);
      out.push_back(standard_chart(m, chosen));
      std::size_t g = groups.size();
      while (g > 0 && ++pick[g - 1] == groups[g - 1].size()) pick[--g] = 0;
      if (g == 0) break;
    }
  }
  for (const auto& c : m.extra_charts) out.push_back(c);
  return out;
}

Chart find_chart(const SurfaceModel& m, std::string_view name) {
  for (auto& c : charts(m))
    if (c.name == name) return c;
  throw ModelError("no chart named '" + std::string(name) + "'");
}

}  // namespace dpv
