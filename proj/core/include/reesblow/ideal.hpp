#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reesblow/polynomial.hpp"

namespace reesblow {

/// Reduced Gröbner basis: monic, autoreduced, sorted by descending leading
/// monomial. Its polynomials live in `context()`, a copy of the ideal's
/// ring carrying `order()`.
class ReducedGB {
 public:
  ReducedGB(RingPtr ctx, std::vector<Polynomial> basis) : ctx_(std::move(ctx)), basis_(std::move(basis)) {}

  const RingPtr& context() const noexcept { return ctx_; }
  const MonomialOrder& order() const noexcept { return ctx_->order(); }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  bool is_unit() const { return basis_.size() == 1 && basis_.front().is_one(); }
  bool is_zero() const noexcept { return basis_.empty(); }

  /// Unique remainder of p; p is converted into the basis ring and the
  /// result is returned in p's ring.
  Polynomial reduce(const Polynomial& p) const;
  /// Standard monomial test.
  bool is_standard(const Monomial& m) const;

  friend bool operator==(const ReducedGB& a, const ReducedGB& b);

 private:
  RingPtr ctx_;
  std::vector<Polynomial> basis_;
};

/// Buchberger's algorithm with the coprime and chain criteria and normal
/// pair selection. Deterministic for a given generator list and order.
ReducedGB groebner(std::span<const Polynomial> generators, const RingPtr& ring, const MonomialOrder& order);

/// Normal form of p with respect to an arbitrary (not necessarily reduced)
/// list of polynomials in p's ring; divisors are tried in list order.
Polynomial reduce_by(const Polynomial& p, std::span<const Polynomial> divisors);

/// S-polynomial of two nonzero polynomials of one ring.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Ideal of a polynomial ring given by generators; zero generators are
/// dropped. Copies share a cache of reduced bases keyed by order.
class Ideal {
 public:
  explicit Ideal(RingPtr ctx, std::vector<Polynomial> generators = {});

  static Ideal unit(RingPtr ctx);

  const RingPtr& context() const noexcept { return ctx_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  /// Cached reduced basis for `order` (the ring's order when omitted).
  const ReducedGB& groebner(const MonomialOrder& order) const;
  const ReducedGB& groebner() const { return groebner(ctx_->order()); }

  Polynomial normal_form(const Polynomial& p) const { return groebner().reduce(p); }
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const { return gens_.empty(); }

  /// Same ideal with generators re-sorted for a ring with the same variables.
  Ideal in(const RingPtr& ctx) const;
  /// The generators of the grevlex reduced basis.
  Ideal canonical() const;

  /// Equality of reduced grevlex bases.
  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::unique_ptr<ReducedGB>> bases;
  };

  RingPtr ctx_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Unique remainder of p modulo I under `order`.
Polynomial normal_form(const Polynomial& p, const Ideal& ideal, const MonomialOrder& order);

enum class IdealOp { Sum, Product, Intersection, Quotient };

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// a ∩ b by eliminating t from t·a + (1-t)·b.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// a : (g) = (a ∩ (g)) / g. g = 0 gives the unit ideal.
Ideal colon(const Ideal& a, const Polynomial& g);
/// a : b as the intersection of a : g over the generators g of b. Throws
/// DivisionByZeroGenerator when b is the zero ideal.
Ideal ideal_quotient(const Ideal& a, const Ideal& b);
Ideal ideal_algebra(IdealOp op, const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned n);

struct SaturationResult {
  Ideal ideal;
  /// Number of colon steps that enlarged the ideal before the fixed point.
  int stabilized_at = 0;
};

/// I : f^∞ by iterated colon ideals until the reduced bases stop changing.
/// Throws std::invalid_argument when f = 0.
SaturationResult saturation(const Ideal& ideal, const Polynomial& f);

/// I ∩ k[remaining variables]; the result lives in the restricted ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& variables);
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& names);

/// Kernel of source -> target/J sending variable i to images[i], computed
/// from the graph ideal by elimination. `target_ideal` carries the target
/// ring.
Ideal map_kernel(const RingPtr& source, std::span<const Polynomial> images, const Ideal& target_ideal);

struct RegularSequenceResult {
  bool regular = true;
  /// 0-based index of the element that fails to be a nonzerodivisor.
  std::optional<std::size_t> failing_index;
  /// Element of the colon ideal outside the base ideal.
  std::optional<Polynomial> witness;
  /// False when 1 ∈ J + (f).
  bool proper = true;
};

/// Classical criterion: ((J + (f_1..f_i)) : f_{i+1}) = J + (f_1..f_i) for
/// every i, and J + (f) is proper. Elements are tested in the given order.
RegularSequenceResult regular_sequence_test(std::span<const Polynomial> sequence, const Ideal& base);

/// (J : f); nonzero modulo J exactly when f is a zero divisor in k[x]/J.
Ideal annihilator(const Polynomial& f, const Ideal& base);

/// Dimension of each weighted-degree piece of k[x]/J for d in [dmin, dmax].
/// Throws NonPositiveWeights unless every weight is positive.
std::vector<std::pair<int, std::size_t>> hilbert_function(const Ideal& ideal, int dmin, int dmax);

/// Enumerates monomials of weighted degree `degree`; variables of weight
/// <= 0 have exponents capped by `nonpositive_bound`.
std::vector<Monomial> monomials_of_degree(const RingContext& ring, std::int64_t degree, int nonpositive_bound);

/// Indices of the named variables; throws UnknownVariable.
std::vector<std::size_t> variable_indices(const RingContext& ring, const std::vector<std::string>& names);

}  // namespace reesblow
