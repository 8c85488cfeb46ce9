#include "reesblow/scalar.hpp"

#include <stdexcept>

#include "reesblow/errors.hpp"

namespace reesblow {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

void check_same_field(const Scalar::Residue& a, const Scalar::Residue& b) {
  if (a.modulus != b.modulus) throw ContextMismatch("scalars from different prime fields");
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31U) || !is_prime(p)) throw std::invalid_argument("not a prime below 2^31: " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  if (p_ == 0) return Scalar(mpq_class(value));
  long r = value % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (p_ == 0) return Scalar(value);
  mpq_class q = value;
  q.canonicalize();
  std::uint64_t den = reduce_mpz(q.get_den(), p_);
  if (den == 0)
    throw ZeroCharacteristicDivision("denominator " + q.get_den().get_str() + " vanishes in " + name());
  std::uint64_t num = reduce_mpz(q.get_num(), p_);
  return Scalar(num * pow_mod(den, p_ - 2, p_) % p_, p_);
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "Fp:" + std::to_string(p_); }

Field Field::parse(const std::string& text) {
  if (text == "QQ") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw std::invalid_argument("bad field '" + text + "'");
    return prime(static_cast<std::uint32_t>(std::stoull(digits)));
  }
  throw std::invalid_argument("unknown field '" + text + "' (expected QQ or Fp:<p>)");
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool Scalar::is_negative() const {
  if (is_residue()) return false;
  return sgn(std::get<mpq_class>(value_)) < 0;
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Scalar((r->modulus - r->value) % r->modulus, r->modulus);
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (auto* r = std::get_if<Residue>(&value_)) return Scalar(pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus);
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_residue() || b.is_residue()) {
    if (!a.is_residue() || !b.is_residue()) throw ContextMismatch("mixed rational and residue scalars");
    check_same_field(a.residue(), b.residue());
    return Scalar(a.residue().value + b.residue().value, a.residue().modulus);
  }
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_residue() || b.is_residue()) {
    if (!a.is_residue() || !b.is_residue()) throw ContextMismatch("mixed rational and residue scalars");
    check_same_field(a.residue(), b.residue());
    return Scalar(a.residue().value * b.residue().value, a.residue().modulus);
  }
  return Scalar(mpq_class(a.rational() * b.rational()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_residue() != b.is_residue()) return false;
  if (a.is_residue()) return a.residue() == b.residue();
  return a.rational() == b.rational();
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace reesblow
