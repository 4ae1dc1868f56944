#pragma once

#include <string>
#include <vector>

#include "dpv/groebner.hpp"
#include "dpv/model.hpp"

namespace dpv {

enum class Verdict { yes, no, inconclusive };
std::string to_string(Verdict v);

/// Chart equations plus all codim x codim minors of the Jacobian matrix.
/// Columns are the geometric chart coordinates, and with
/// `parameter_derivations` also the derivations d/ds of the parameters.
struct JacobianIdeal {
  Ring ring;
  std::vector<Polynomial> generators;
  std::size_t minors = 0;
};

/// `codim` counts the equations of `c` before inverting; inverted elements
/// are materialised and raise the codimension accordingly.
JacobianIdeal nonsmooth_ideal(const Chart& c, std::size_t codim, bool parameter_derivations = false);
JacobianIdeal nonsmooth_ideal(const Chart& c, bool parameter_derivations = false);

/// Generators of the irrelevant locus: all variables of P(w), or products of
/// one variable per factor of a product of projective spaces.
std::vector<Polynomial> irrelevant_generators(const AmbientSpace& a);

struct StratumCheck {
  std::string locus;
  bool avoided = false;
};

struct AmbientReport {
  bool ok = false;
  std::vector<StratumCheck> strata;
  bool standard_charts_cover = false;
  /// Extra charts fill the gap; their equations are taken from the model data.
  bool coverage_asserted = false;
  /// The declared loci of the extra charts contain everything the standard
  /// charts miss.
  bool extra_loci_verified = false;
  std::vector<std::string> notes;
};

AmbientReport ambient_check(const SurfaceModel& m, const GroebnerOptions& opts = {});

/// Outcome of one Gröbner computation on one chart.
struct ChartResult {
  std::string chart;
  Verdict verdict = Verdict::inconclusive;
  int dimension = 0;
  std::size_t generators = 0;
  std::size_t minors = 0;
  /// Reduced basis as text: {1} for unit certificates.
  std::vector<std::string> basis;
  std::string exhausted;
  GroebnerStats stats;
};

struct RegularityReport {
  Verdict regular = Verdict::inconclusive;
  std::vector<ChartResult> charts;
};

/// Unit-ideal test of the full Jacobian ideal on every chart.
RegularityReport check_regular(const SurfaceModel& m, const GroebnerOptions& opts = {},
                               bool parameter_derivations = true);

struct SingularityReport {
  /// yes when every chart was decided.
  Verdict decided = Verdict::inconclusive;
  int dimension = -1;
  std::vector<ChartResult> charts;
};

/// max over charts of dim V(equations + geometric minors): dim Sing(X over k̄).
SingularityReport geometric_singular_dimension(const SurfaceModel& m, const GroebnerOptions& opts = {});
/// Dimension of the non-regular locus, from the full Jacobian ideal.
SingularityReport nonregular_dimension(const SurfaceModel& m, const GroebnerOptions& opts = {});
Verdict is_geometrically_normal(const SingularityReport& r);
Verdict is_geometrically_normal(const SurfaceModel& m, const GroebnerOptions& opts = {});

struct IntegralityReport {
  /// A smooth point of X over k̄ exists.
  Verdict reduced = Verdict::inconclusive;
  std::string witness_chart;
  /// A geometric minor outside the radical of the chart ideal.
  std::string witness_minor;
  /// "implied" (regular, proper, H0=k) or "unchecked".
  std::string irreducibility = "unchecked";
  std::vector<std::string> notes;
};

IntegralityReport geometric_integrality(const SurfaceModel& m, Verdict regular, const GroebnerOptions& opts = {});

struct DisjointnessReport {
  Verdict disjoint = Verdict::inconclusive;
  /// Emptiness of the intersection in the ambient projective space.
  bool projective = false;
  /// Per standard chart: unit ideal of equations + A + B.
  std::vector<ChartResult> charts;
};

DisjointnessReport subschemes_disjoint(const SurfaceModel& m, const std::vector<Polynomial>& a,
                                       const std::vector<Polynomial>& b, const GroebnerOptions& opts = {});

/// The two blow-up charts define the same scheme on their overlap.
bool blowup_charts_agree(const SurfaceModel& m, const GroebnerOptions& opts = {});

}  // namespace dpv
