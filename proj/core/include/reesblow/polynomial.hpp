#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reesblow/ring.hpp"
#include "reesblow/scalar.hpp"

namespace reesblow {

struct Term {
  Monomial monomial;
  Scalar coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Set of weighted degrees occurring in a polynomial. Empty for the zero
/// polynomial, which counts as homogeneous of every degree.
class DegreeInfo {
 public:
  explicit DegreeInfo(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees)) {}
  bool is_zero_polynomial() const noexcept { return degrees_.empty(); }
  bool homogeneous() const noexcept { return degrees_.size() <= 1; }
  /// The degree of a nonzero homogeneous polynomial.
  std::optional<std::int64_t> degree() const {
    if (degrees_.size() == 1) return degrees_.front();
    return std::nullopt;
  }
  /// Distinct degrees, ascending.
  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }

 private:
  std::vector<std::int64_t> degrees_;
};

/// Sparse polynomial in canonical form: nonzero coefficients, monomials
/// strictly descending in the order of its context.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial constant(RingPtr ctx, const Scalar& c);
  static Polynomial constant(RingPtr ctx, long c);
  static Polynomial variable(RingPtr ctx, std::size_t index);
  static Polynomial variable(RingPtr ctx, std::string_view name);
  static Polynomial term(RingPtr ctx, Monomial m, Scalar c);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ctx, std::vector<Term> terms);

  const RingPtr& context() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coefficient() const { return terms_.front().coefficient; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  /// this - c*m*other, computed in one merge.
  Polynomial minus_term_times(const Monomial& m, const Scalar& c, const Polynomial& other) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  /// Same polynomial re-sorted for a context with the same variables.
  Polynomial in(const RingPtr& ctx) const;
  /// Moves variables into another context: source variable i becomes
  /// target variable map[i]. Throws ContextMismatch if a variable that
  /// occurs has no image.
  Polynomial rename_into(const RingPtr& target, std::span<const std::optional<std::size_t>> map) const;
  /// Ring-map evaluation into `target`: variable i goes to images[i].
  Polynomial evaluate(std::span<const Polynomial> images, const RingPtr& target) const;
  /// Substitutes one variable by a polynomial of the same context.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;

  DegreeInfo weighted_degree() const;
  std::int64_t total_degree() const;
  bool uses_variable(std::size_t index) const;
  std::int32_t degree_in(std::size_t index) const;

  /// Canonical text: descending terms, explicit '*' and '^', reduced
  /// fractions. Unique per polynomial.
  std::string to_string() const;

  /// Equal contexts (by variables) and equal terms.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ctx, std::vector<Term> sorted) : ctx_(std::move(ctx)), terms_(std::move(sorted)) {}

  RingPtr ctx_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// Throws ContextMismatch unless both rings have the same variables.
void require_same_ring(const RingContext& a, const RingContext& b);

/// Exact multivariate division: returns q with a == q*b, or nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

}  // namespace reesblow
