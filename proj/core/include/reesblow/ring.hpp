#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "reesblow/scalar.hpp"

namespace reesblow {

/// Exponent vector aligned with the variable list of a RingContext.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::int32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  std::int32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::int32_t>& exponents() const noexcept { return exps_; }

  std::int64_t total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  /// True when the two monomials share no variable.
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::int32_t> exps_;
};

/// Term order on monomials of a fixed length. Graded orders use the plain
/// total degree (variable weights may be zero or negative).
class MonomialOrder {
 public:
  enum class Kind { Lex, GRevLex, BlockElimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GRevLex, {}); }
  /// The variables flagged in `front` form the first block; each block is
  /// ordered by grevlex and blocks are compared lexicographically.
  static MonomialOrder block(std::vector<bool> front) { return MonomialOrder(Kind::BlockElimination, std::move(front)); }

  Kind kind() const noexcept { return kind_; }
  const std::vector<bool>& front_block() const noexcept { return front_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == std::strong_ordering::greater; }

  /// Stable cache key, e.g. "grevlex" or "block:1100".
  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<bool> front) : kind_(kind), front_(std::move(front)) {}
  Kind kind_;
  std::vector<bool> front_;
};

struct Variable {
  std::string name;
  int weight = 0;
  friend bool operator==(const Variable&, const Variable&) = default;
};

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// Weighted polynomial ring k[x_1..x_n] with a monomial order. Immutable;
/// always handled through RingPtr.
class RingContext {
  struct Token {};

 public:
  RingContext(Token, Field field, std::vector<Variable> vars, MonomialOrder order);

  /// Validates names (identifiers, unique) and the order descriptor.
  static RingPtr make(Field field, std::vector<Variable> vars, MonomialOrder order = MonomialOrder::grevlex());

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<Variable>& variables() const noexcept { return vars_; }
  const Variable& variable(std::size_t i) const { return vars_.at(i); }
  int weight(std::size_t i) const { return vars_.at(i).weight; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t require(std::string_view name) const;
  const MonomialOrder& order() const noexcept { return order_; }

  std::int64_t weighted_degree(const Monomial& m) const;

  RingPtr with_order(MonomialOrder order) const;
  /// Drops the listed variables; a block order falls back to grevlex.
  RingPtr without(const std::vector<std::size_t>& drop) const;
  /// Appends variables (or prepends when `front`); the order falls back to
  /// grevlex when it was a block order.
  RingPtr extended(const std::vector<Variable>& extra, bool front = false) const;

  /// Same field, same variable names and weights (orders may differ).
  bool same_variables(const RingContext& other) const;
  /// `base` itself if unused, else `base` followed by the first free suffix.
  std::string fresh_name(const std::string& base) const;

  /// "QQ[x:0,y:0] grevlex"
  std::string describe() const;

 private:
  Field field_;
  std::vector<Variable> vars_;
  MonomialOrder order_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Identifier rule shared by the ring constructor and the parser.
bool is_identifier(std::string_view name);

}  // namespace reesblow
