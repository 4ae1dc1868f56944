#include <algorithm>
#include <numeric>
#include <sstream>

#include "dpv/model.hpp"

namespace dpv {

std::vector<std::vector<std::size_t>> AmbientSpace::factors() const {
  std::vector<std::vector<std::size_t>> out;
  switch (kind) {
    case AmbientKind::affine:
      break;
    case AmbientKind::weighted_projective:
      out.emplace_back(ring->nvars());
      std::iota(out.back().begin(), out.back().end(), 0);
      break;
    case AmbientKind::multiprojective: {
      std::size_t next = 0;
      for (int n : factor_dims) {
        std::vector<std::size_t> group;
        for (int k = 0; k <= n; ++k) group.push_back(next++);
        out.push_back(std::move(group));
      }
      break;
    }
  }
  return out;
}

int AmbientSpace::dimension() const {
  switch (kind) {
    case AmbientKind::affine:
      return static_cast<int>(ring->nvars());
    case AmbientKind::weighted_projective:
      return static_cast<int>(ring->nvars()) - 1;
    case AmbientKind::multiprojective:
      return std::accumulate(factor_dims.begin(), factor_dims.end(), 0);
  }
  return 0;
}

std::string AmbientSpace::describe() const {
  std::ostringstream os;
  switch (kind) {
    case AmbientKind::affine:
      os << "A^" << ring->nvars();
      break;
    case AmbientKind::weighted_projective:
      if (std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; })) {
        os << "P^" << weights.size() - 1;
      } else {
        os << "P(";
        for (std::size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
        os << ")";
      }
      break;
    case AmbientKind::multiprojective:
      for (std::size_t i = 0; i < factor_dims.size(); ++i) os << (i ? "x" : "") << "P^" << factor_dims[i];
      break;
  }
  return os.str();
}

int SurfaceModel::dimension() const {
  switch (presentation) {
    case Presentation::complete_intersection:
      return ambient.dimension() - static_cast<int>(equations.size());
    case Presentation::double_cover:
      return ambient.dimension();
    case Presentation::blow_up:
      return blowup->parent->dimension();
  }
  return 0;
}

std::size_t SurfaceModel::declared_codim() const {
  switch (presentation) {
    case Presentation::complete_intersection:
      return equations.size();
    case Presentation::double_cover:
      return 1;
    case Presentation::blow_up:
      return blowup->parent->declared_codim();
  }
  return 0;
}

Chart materialize(const Chart& c) {
  if (c.inverted.empty()) return c;
  std::vector<std::string> names;
  Ring probe = c.ring;
  for (std::size_t k = 0; k < c.inverted.size(); ++k) {
    names.push_back(probe->fresh_name("T"));
    probe = probe->extended({names.back()});
  }
  Chart out{c.name, probe, {}, {}, c.codim + c.inverted.size(), c.provenance};
  for (const auto& f : c.equations) out.equations.push_back(embed(f, probe));
  for (std::size_t k = 0; k < c.inverted.size(); ++k) {
    if (c.inverted[k].is_zero()) throw ModelError("chart " + c.name + ": inverted element is zero");
    Polynomial t = Polynomial::variable(probe, names[k]);
    out.equations.push_back(embed(c.inverted[k], probe) * t - Polynomial::constant(probe, 1));
  }
  return out;
}

}  // namespace dpv
