#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace reesblow {

class Scalar;

/// Coefficient field: the rationals, or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  /// Throws ZeroCharacteristicDivision when the denominator vanishes mod p.
  Scalar from_rational(const mpq_class& value) const;

  /// "QQ" or "Fp:<p>".
  std::string name() const;
  /// Inverse of name(); throws std::invalid_argument.
  static Field parse(const std::string& text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Element of a Field. Rationals are kept in lowest terms with positive
/// denominator; residues lie in [0, p).
class Scalar {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint32_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
  Scalar(std::uint64_t residue, std::uint32_t modulus) : value_(Residue{residue % modulus, modulus}) {}

  bool is_residue() const noexcept { return std::holds_alternative<Residue>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  const Residue& residue() const { return std::get<Residue>(value_); }

  bool is_zero() const;
  bool is_one() const;
  /// True for rationals < 0; residues are never negative.
  bool is_negative() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Reduced fraction "a/b", integer "a", or residue digits.
  std::string to_string() const;

 private:
  std::variant<mpq_class, Residue> value_;
};

}  // namespace reesblow
