#include "reesblow/ring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "reesblow/errors.hpp"

namespace reesblow {

std::int64_t Monomial::total_degree() const {
  std::int64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

namespace {

// grevlex restricted to the variables where mask[i] == want (all when mask empty)
std::strong_ordering grevlex_on(const Monomial& a, const Monomial& b, const std::vector<bool>& mask, bool want) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!mask.empty() && mask[i] != want) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (!mask.empty() && mask[k] != want) continue;
    if (a[k] != b[k]) return b[k] <=> a[k];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::GRevLex:
      return grevlex_on(a, b, {}, true);
    case Kind::BlockElimination: {
      auto c = grevlex_on(a, b, front_, true);
      if (c != std::strong_ordering::equal) return c;
      return grevlex_on(a, b, front_, false);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GRevLex:
      return "grevlex";
    case Kind::BlockElimination: {
      std::string s = "block:";
      for (bool b : front_) s += b ? '1' : '0';
      return s;
    }
  }
  return "?";
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

RingContext::RingContext(Token, Field field, std::vector<Variable> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(std::move(order)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!is_identifier(vars_[i].name)) throw std::invalid_argument("invalid variable name '" + vars_[i].name + "'");
    if (!index_.emplace(vars_[i].name, i).second)
      throw std::invalid_argument("duplicate variable name '" + vars_[i].name + "'");
  }
  if (order_.kind() == MonomialOrder::Kind::BlockElimination && order_.front_block().size() != vars_.size())
    throw std::invalid_argument("block order does not match the variable count");
}

RingPtr RingContext::make(Field field, std::vector<Variable> vars, MonomialOrder order) {
  return std::make_shared<const RingContext>(Token{}, field, std::move(vars), std::move(order));
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RingContext::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw UnknownVariable(std::string(name));
  return *i;
}

std::int64_t RingContext::weighted_degree(const Monomial& m) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) d += static_cast<std::int64_t>(vars_[i].weight) * m[i];
  return d;
}

RingPtr RingContext::with_order(MonomialOrder order) const { return make(field_, vars_, std::move(order)); }

RingPtr RingContext::without(const std::vector<std::size_t>& drop) const {
  std::vector<Variable> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) kept.push_back(vars_[i]);
  auto order = order_.kind() == MonomialOrder::Kind::BlockElimination ? MonomialOrder::grevlex() : order_;
  return make(field_, std::move(kept), order);
}

RingPtr RingContext::extended(const std::vector<Variable>& extra, bool front) const {
  std::vector<Variable> all;
  if (front) {
    all = extra;
    all.insert(all.end(), vars_.begin(), vars_.end());
  } else {
    all = vars_;
    all.insert(all.end(), extra.begin(), extra.end());
  }
  auto order = order_.kind() == MonomialOrder::Kind::BlockElimination ? MonomialOrder::grevlex() : order_;
  return make(field_, std::move(all), order);
}

bool RingContext::same_variables(const RingContext& other) const {
  return field_ == other.field_ && vars_ == other.vars_;
}

std::string RingContext::fresh_name(const std::string& base) const {
  if (!index_of(base)) return base;
  for (int k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!index_of(candidate)) return candidate;
  }
}

std::string RingContext::describe() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += vars_[i].name + ":" + std::to_string(vars_[i].weight);
  }
  return s + "] " + order_.describe();
}

}  // namespace reesblow
