#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "reesblow/rees.hpp"

namespace reesblow {

struct NonnegPart {
  /// R_{>=0} on x and v: eliminate(J_R, u).
  GradedAlgebra algebra;
  /// Indices of v in the ring of `algebra`.
  std::vector<std::size_t> v;
  GenerationReport generation;
};

NonnegPart nonneg_part(const ReesPresentation& rees, int bound = 6);

/// One chart per degree-1 generator with all pairwise transitions. Throws
/// NotNGraded for a negative weight and NotDegreeOne for a bad generator.
ProjAtlas proj_atlas(const GradedAlgebra& algebra, const std::vector<Polynomial>& generators);

struct AtlasCheck {
  /// Chart a → chart b → chart a is the identity on chart-a variables.
  bool two_cycles_identity = true;
  /// Each transition sends the relations of its chart to zero on the overlap.
  bool transitions_well_defined = true;
  bool ok() const { return two_cycles_identity && transitions_well_defined; }
};

AtlasCheck verify_atlas(const ProjAtlas& atlas);

/// No charts, or every chart ring is the zero ring.
bool is_empty_atlas(const ProjAtlas& atlas);

/// Proj of the non-negative part of the Rees algebra, charted at v_1..v_k.
/// Chart j records the image of f_j as its exceptional generator.
ProjAtlas blow_up(const ImmersionData& data);

struct ExceptionalChartCheck {
  std::size_t chart = 0;
  /// The blow-up chart ideal plus its exceptional generator.
  Ideal expected;
  bool agrees = false;
};

/// κ: i*R = R_{>=0}/(f) → R/(u), the identity on x and v.
struct KappaReport {
  bool well_defined = false;
  std::vector<std::pair<int, bool>> surjective_by_degree;
  bool surjective() const;
};

struct ExceptionalDivisor {
  /// Proj of the cone, charted at v_1..v_k.
  ProjAtlas atlas;
  ProjAtlas blowup;
  std::vector<ExceptionalChartCheck> charts;
  KappaReport kappa;
};

ExceptionalDivisor exceptional_divisor(const ImmersionData& data, int bound = 4);

struct DeformationFiber {
  Scalar value;
  /// J_R + (u - c) with u eliminated; weights are dropped when c != 0.
  GradedAlgebra fiber;
  /// c != 0: fiber ≅ A via v_i ↦ f_i / c, both directions checked.
  std::optional<bool> isomorphic_to_base;
  /// c = 0: canonical generators coincide with those of the cone.
  std::optional<bool> equals_cone;
};

/// The Rees algebra viewed as a family over the u-line.
class DeformationFamily {
 public:
  explicit DeformationFamily(ReesPresentation rees) : rees_(std::move(rees)) {}
  const ReesPresentation& rees() const noexcept { return rees_; }
  DeformationFiber fiber(const Scalar& c) const;

 private:
  ReesPresentation rees_;
};

DeformationFiber deformation_fiber(const ReesPresentation& rees, const Scalar& c);

}  // namespace reesblow
