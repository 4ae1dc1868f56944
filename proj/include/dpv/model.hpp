#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpv/groebner.hpp"
#include "dpv/polynomial.hpp"

namespace dpv {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AmbientKind { weighted_projective, multiprojective, affine };

struct AmbientSpace {
  AmbientKind kind = AmbientKind::weighted_projective;
  std::vector<int> weights;      // weighted projective
  std::vector<int> factor_dims;  // multiprojective
  Ring ring;

  /// Variable indices per projective factor (a single group for P(w); empty
  /// for affine space).
  std::vector<std::vector<std::size_t>> factors() const;
  int dimension() const;
  /// "P(1,1,2,3)", "P^3", "P^2xP^1", "A^2".
  std::string describe() const;
};

/// Affine open piece of a model. `inverted` elements are units on the chart;
/// `codim` is the number of equations in a complete-intersection
/// presentation before inverting anything.
struct Chart {
  std::string name;
  Ring ring;
  std::vector<Polynomial> equations;
  std::vector<Polynomial> inverted;
  std::size_t codim = 0;
  std::string provenance;
};

/// The chart with every inverted u replaced by a relation u*T - 1 in a fresh
/// variable T; equivalent, and free of localisations.
Chart materialize(const Chart& c);

enum class Presentation { complete_intersection, double_cover, blow_up };

struct SurfaceModel;
using ModelPtr = std::shared_ptr<const SurfaceModel>;

struct DoubleCoverData {
  Polynomial section;
  std::array<int, 2> bidegree{};
  std::string cover_variable;
};

struct BlowUpData {
  ModelPtr parent;
  std::string parent_id;
  std::string chart;
  /// Center generators and the optional localisation, in the parent chart ring.
  Polynomial g1, g2;
  std::optional<Polynomial> invert;
  /// Length of O/(g1, g2) at the center; the residue degree when the center
  /// is a reduced point.
  std::uint64_t center_degree = 0;
  /// Strict transforms on the two blow-up charts, lifted to one ring that
  /// contains both chart coordinates and the relation u*v - 1.
  Ring overlap_ring;
  std::vector<Polynomial> overlap_a, overlap_b;
};

/// A chart-wise presentation of a surface.
struct SurfaceModel {
  std::string name;
  Presentation presentation = Presentation::complete_intersection;
  AmbientSpace ambient;
  /// Homogeneous equations in ambient.ring (complete intersections).
  std::vector<Polynomial> equations;
  std::vector<Chart> extra_charts;
  /// For each extra chart, an optional ambient locus it is declared to cover.
  std::vector<std::optional<Polynomial>> extra_loci;
  std::vector<std::string> assumptions;
  /// `poly` definitions of the model text, for auxiliary loci.
  std::map<std::string, Polynomial, std::less<>> named;
  std::optional<DoubleCoverData> cover;
  std::optional<BlowUpData> blowup;
  /// Charts built by double_cover / blow_up.
  std::vector<Chart> built_charts;

  int dimension() const;
  std::size_t declared_codim() const;
};

/// Standard charts D+(v) of the weight-one variables (products of factor
/// charts for multiprojective ambients) followed by the extra charts; built
/// charts for double covers and blow-ups.
std::vector<Chart> charts(const SurfaceModel& m);
/// Chart by name; throws ModelError if absent.
Chart find_chart(const SurfaceModel& m, std::string_view name);

/// Blow-up of the point V(g1, g2) on chart `c` of the parent (optionally on
/// the open D(invert) of that chart). The result has the two blow-up charts
/// g2 = u*g1 and g1 = v*g2 with saturated strict transforms, followed by all
/// parent charts (opens of X away from the exceptional curve, up to the
/// center itself).
SurfaceModel blow_up(ModelPtr parent, std::string_view chart, const std::string& g1, const std::string& g2,
                     const std::optional<std::string>& invert = std::nullopt, const GroebnerOptions& opts = {});
/// Double cover w^2 = s of P^1 x P^1, branched along a section of
/// O(2*bidegree); one chart per product of factor charts.
SurfaceModel double_cover(const Ring& base_ring, const Polynomial& section, std::array<int, 2> bidegree);

/// Resolves `parent=<id>` references while parsing.
using ModelResolver = std::function<ModelPtr(std::string_view)>;
SurfaceModel parse_model(std::string_view text, const ModelResolver& resolve = {}, const GroebnerOptions& opts = {});

}  // namespace dpv
