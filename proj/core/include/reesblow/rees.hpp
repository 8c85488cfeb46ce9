#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reesblow/graded.hpp"

namespace reesblow {

/// A closed immersion at π₀: a base algebra A = k[x]/J_A (all weights 0)
/// and a finite sequence f in the ambient ring of A, stored in normal form
/// modulo J_A. An empty sequence is the identity quotient.
class ImmersionData {
 public:
  /// Throws IllFormedPayload when A has a variable of nonzero weight.
  ImmersionData(GradedAlgebra base, std::vector<Polynomial> sequence);

  const GradedAlgebra& base() const noexcept { return base_; }
  const std::vector<Polynomial>& sequence() const noexcept { return sequence_; }
  /// (f) + J_A in the ring of A.
  Ideal center() const;

 private:
  GradedAlgebra base_;
  std::vector<Polynomial> sequence_;
};

/// Extended Rees algebra A[v_1..v_k, u] / (J_A + (v_i u - f_i)), with
/// deg v_i = 1 and u = t^-1 of degree -1.
struct ReesPresentation {
  ImmersionData data;
  GradedAlgebra algebra;
  /// Indices of v_1..v_k in the ambient ring; the x variables come first.
  std::vector<std::size_t> v;
  std::size_t u = 0;

  const RingPtr& ring() const { return algebra.ring(); }
  const Ideal& ideal() const { return algebra.ideal(); }
  std::vector<std::string> v_names() const;
  std::string u_name() const;
};

ReesPresentation rees_extended(const ImmersionData& data);

/// R/(u) with u eliminated, an N-graded algebra on x and v.
GradedAlgebra cone(const ReesPresentation& rees);

/// The variable playing t^-1: one named "u" of weight -1, else the only
/// variable of weight -1. Throws IllFormedPayload.
std::size_t find_inverse_parameter(const RingContext& ring);

struct Regularization {
  /// Presented by sat(J, u).
  GradedAlgebra algebra;
  /// Generators of sat(J, u) that are nonzero modulo J.
  Ideal kernel;
  int stabilized_at = 0;
  bool zero_ring() const { return algebra.is_zero_ring(); }
};

/// Universal u-regular quotient of a graded algebra over A[u].
Regularization regularize(const GradedAlgebra& q);
Regularization regularize(const GradedAlgebra& q, std::size_t u);

struct TRegularity {
  bool regular = true;
  /// Normal forms modulo J of the generators of (J : u); empty iff regular.
  Ideal obstruction;
};

TRegularity t_regularity(const GradedAlgebra& q);
TRegularity t_regularity(const GradedAlgebra& q, std::size_t u);

struct ClassicalDegree {
  int n = 0;
  /// Relations map to zero and v^α lands in I^n.
  bool well_defined = false;
  /// The images f^α generate I^n modulo J_A.
  bool surjective = false;
  /// Degree-n relations of the classical Rees algebra hold in the side.
  bool injective = false;
  bool matches() const { return well_defined && surjective && injective; }
};

struct ClassicalSide {
  std::vector<ClassicalDegree> degrees;
  bool matches() const;
};

struct ClassicalComparison {
  int bound = 0;
  bool vacuous = false;
  bool t_regular = true;
  ClassicalSide regularized;
  ClassicalSide unregularized;
  /// Canonical generators of I^n + J_A for 1 <= n <= bound.
  std::vector<Ideal> powers;
};

/// Degree-wise comparison of the non-negative part of R (and of its
/// regularization) with the classical Rees algebra ⊕ I^n t^n, 1 <= n <= N.
ClassicalComparison compare_to_classical(const ReesPresentation& rees, int bound = 5);

/// R_{<=0} is A[u]: eliminating v from J_R gives J_A·k[x, u], and every
/// monomial of degree <= 0 reduces to a v-free polynomial under an order
/// eliminating v.
bool nonpositive_part_is_free(const ReesPresentation& rees, int bound = 4);

/// Classical Rees algebra ⊕ I^n t^n ⊆ A[t] presented on x and v.
Ideal classical_rees_ideal(const ImmersionData& data, const RingPtr& xv_ring);

struct BaseChangeReport {
  /// Rees(A', φ(f)).
  ReesPresentation direct;
  /// J_A' + φ(J_R) in the ring of `direct`.
  Ideal pulled;
  /// Images of the variables of R: x ↦ φ(x), v ↦ v, u ↦ u.
  std::vector<Polynomial> map;
  bool equal = false;
};

/// Base change along A → A' given by images of A's variables in A's'
/// ring. Throws IllFormedPayload when φ(J_A) ⊄ J_A'.
BaseChangeReport rees_base_change(const ImmersionData& data, const GradedAlgebra& target,
                                  const std::vector<Polynomial>& images);

struct TargetReport {
  /// R_{B/C} = Rees(C, a ++ b).
  ReesPresentation source;
  /// R_{B/A} = Rees(C/(a), b).
  ReesPresentation target;
  /// Images of the variables of `source`.
  std::vector<Polynomial> map;
  bool well_defined = false;
  /// (degree, every module generator of that degree has a witness).
  std::vector<std::pair<int, bool>> surjective_by_degree;
  bool surjective() const;
};

/// R_{B/C} → R_{B/A} for A = C/(a), B = A/(b): v_a ↦ 0, v_b ↦ v, u ↦ u.
TargetReport rees_target_map(const GradedAlgebra& ambient, const std::vector<Polynomial>& a,
                             const std::vector<Polynomial>& b, int bound = 4);

}  // namespace reesblow
