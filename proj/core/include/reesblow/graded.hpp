#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "reesblow/ideal.hpp"

namespace reesblow {

/// k[x]/J for a weighted polynomial ring and a weighted-homogeneous ideal J.
class GradedAlgebra {
 public:
  /// Throws NonHomogeneousGenerator if some generator of J is not
  /// weighted-homogeneous.
  explicit GradedAlgebra(Ideal ideal, std::string name = {});
  /// The free algebra k[x].
  explicit GradedAlgebra(RingPtr ring, std::string name = {});

  const RingPtr& ring() const noexcept { return ideal_.context(); }
  const Ideal& ideal() const noexcept { return ideal_; }
  const std::string& name() const noexcept { return name_; }
  GradedAlgebra renamed(std::string name) const;

  /// 1 ∈ J.
  bool is_zero_ring() const { return ideal_.is_unit(); }
  bool has_negative_weights() const;
  bool all_weights_positive() const;
  /// Indices of the variables of positive weight.
  std::vector<std::size_t> positive_variables() const;

  Polynomial reduce(const Polynomial& p) const { return ideal_.normal_form(p); }
  Polynomial parse(const std::string& text) const;

 private:
  Ideal ideal_;
  std::string name_;
};

/// Standard-monomial basis of one graded piece.
struct GradedPiece {
  std::int64_t degree = 0;
  /// B(shift)_degree = B_{shift + degree}.
  std::int64_t shift = 0;
  std::vector<Monomial> basis;
  /// Exponent cap applied to variables of weight <= 0, if any.
  std::optional<int> bound;
};

/// B(shift)_d, i.e. the standard monomials of weighted degree d + shift
/// modulo the grevlex basis of J. A bound is mandatory when some variable
/// has weight <= 0 (UnboundedPiece otherwise).
GradedPiece graded_piece_basis(const GradedAlgebra& algebra, std::int64_t degree, std::optional<int> bound,
                               std::int64_t shift = 0);

struct DegreeZeroSplit {
  /// B_0 on the weight-0 variables.
  GradedAlgebra degree_zero;
  /// B_+ generated by the positive-weight variables (in B's ring).
  Ideal irrelevant;
};

/// Throws NegativeWeights for rings with a negative-weight variable.
DegreeZeroSplit split_degree_zero(const GradedAlgebra& algebra);

struct SplitCheck {
  std::int64_t degree = 0;
  std::size_t total = 0;
  std::size_t degree_zero_part = 0;
  std::size_t irrelevant_part = 0;
  bool disjoint = true;
  bool additive() const { return total == degree_zero_part + irrelevant_part; }
};

/// Compares |B_d| against |(B_0)_d| + |(B_+)_d| for 0 <= d <= max_degree.
/// (B_+)_d is counted as dim B_d - dim (B/B_+)_d through a separate basis
/// of J + B_+, so the two sides are computed independently.
std::vector<SplitCheck> check_split(const GradedAlgebra& algebra, const DegreeZeroSplit& split, int max_degree,
                                    int exponent_bound);

/// Element of a localization: numerator / denominator.
struct Fraction {
  Polynomial numerator;
  Polynomial denominator;

  static Fraction of(const Polynomial& p);
  Fraction operator*(const Fraction& o) const;
  Fraction inverse() const;
  /// Integer powers; negative exponents invert.
  Fraction pow(int n) const;
  /// a/b ~ c/d iff a*d = c*b.
  bool equivalent(const Fraction& o) const;
  bool is_one() const { return equivalent(of(Polynomial::constant(numerator.context(), 1))); }
  std::string to_string() const;
};

/// p evaluated at fractions (one per variable of p's ring), landing in
/// `target`.
Fraction substitute(const Polynomial& p, const std::vector<Fraction>& images, const RingPtr& target);

/// Affine chart D+(f) = Spec B_(f) of a graded algebra.
struct Chart {
  /// B_(f), all weights 0.
  GradedAlgebra ring;
  /// B itself, or B with a variable s and relation s - f adjoined when f
  /// is not a variable.
  GradedAlgebra source;
  /// Index of the distinguished degree-1 variable in `source`.
  std::size_t distinguished = 0;
  /// Image in the chart of each source variable (in source order).
  std::vector<Polynomial> images;
  /// Chart variable standing for each source variable; none for the
  /// distinguished one.
  std::vector<std::optional<std::size_t>> chart_variable;
  /// Image of f_j in the j-th blow-up chart, when known.
  std::optional<Polynomial> exceptional;

  bool is_zero_ring() const { return ring.is_zero_ring(); }
  /// (source variable name, chart expression) pairs in source order.
  std::vector<std::pair<std::string, std::string>> substitution() const;
};

/// Chart of B at a degree-1 element f. When f is not a variable, a fresh
/// weight-1 variable s with relation s - f is adjoined first. The chart
/// ideal is sat(J, f) with f = 1 and every other variable y renamed to its
/// chart variable (y / f^deg y). Throws NotDegreeOne.
Chart homogeneous_localization_chart(const GradedAlgebra& algebra, const Polynomial& f);

/// Chart-variable naming: "w" for a single nonzero-weight variable, "w<k>"
/// for v<k>, "w_<name>" otherwise.
std::string chart_variable_name(const std::string& source_name, bool single);

/// Result of checking B_(f)[t, t^-1] ⇄ B_f (t ↦ f) on generators.
struct LocalizationCheck {
  bool forward_well_defined = false;
  bool backward_well_defined = false;
  bool forward_then_backward_identity = false;
  bool backward_then_forward_identity = false;
  bool ok() const {
    return forward_well_defined && backward_well_defined && forward_then_backward_identity &&
           backward_then_forward_identity;
  }
};

LocalizationCheck verify_degree_zero_localization(const GradedAlgebra& algebra, const Chart& chart);

struct VeroneseResult {
  GradedAlgebra algebra;
  /// Image in B of each weight-1 generator of the Veronese ring.
  std::vector<Polynomial> generator_images;
  int delta = 1;
  int degree_bound = 0;
  /// (d, dim B^(δ)_d, dim B_{δd}) for δd <= degree_bound, when all weights
  /// of B are positive.
  std::vector<std::tuple<int, std::size_t, std::size_t>> hilbert_check;
};

/// B^(δ) presented on the weight-0 variables and one weight-1 variable per
/// standard monomial of degree δ in the positive-weight variables.
/// Throws NegativeWeights.
VeroneseResult veronese(const GradedAlgebra& algebra, int delta, int degree_bound);

struct GenerationReport {
  bool generated = true;
  int bound = 0;
  std::optional<int> failing_degree;
  std::optional<Monomial> witness;
};

/// Checks B_d ⊆ B_1·B_{d-1} for 2 <= d <= bound: every standard monomial of
/// degree d in the positive-weight variables lies in (weight-1 vars) + J.
/// Throws NegativeWeights.
GenerationReport generated_in_degree_one(const GradedAlgebra& algebra, int bound = 6);

/// Affine charts of Proj B for a list of degree-1 generators.
struct ProjAtlas {
  GradedAlgebra source;
  std::vector<Polynomial> generators;
  std::vector<Chart> charts;
  /// transitions[a][b][k]: the k-th variable of chart b written in chart-a
  /// coordinates, i.e. y / f_b^deg(y) with y, f_b expressed in chart a.
  std::vector<std::vector<std::vector<Fraction>>> transitions;
  /// E.g. generators that do not generate B_+ up to radical.
  std::vector<std::string> warnings;
};

/// Image in the chart of a polynomial of the original ring of B.
Polynomial chart_expression(const Chart& chart, const Polynomial& p);

/// a = b in (ring/ideal)[1/inverted], denominators inverted as well.
bool equivalent_in(const Fraction& a, const Fraction& b, const Ideal& ideal, const Polynomial& inverted);

struct CocycleEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  /// (f_i / f_j)^n in chart-j coordinates.
  Fraction value;
  Fraction inverse;
};

struct TwistCocycle {
  int n = 0;
  std::vector<CocycleEntry> entries;
  const CocycleEntry& at(std::size_t i, std::size_t j) const;
};

/// Transition units of O(n) on the atlas.
TwistCocycle twist_cocycle(const ProjAtlas& atlas, int n);
/// a·b = c entrywise, in the coordinate ring of each overlap.
bool cocycle_product_holds(const ProjAtlas& atlas, const TwistCocycle& a, const TwistCocycle& b,
                           const TwistCocycle& c);
/// g_ij·g_jk = g_ik on triple overlaps, in chart-k coordinates.
bool cocycle_condition_holds(const ProjAtlas& atlas, const TwistCocycle& g);

}  // namespace reesblow
