#include "reesblow/polynomial.hpp"

#include <algorithm>
#include <set>

#include "reesblow/errors.hpp"

namespace reesblow {

void require_same_ring(const RingContext& a, const RingContext& b) {
  if (&a == &b) return;
  if (!a.same_variables(b)) throw ContextMismatch("polynomials live in different rings: " + a.describe() + " vs " + b.describe());
}

namespace {

// Merge two canonical term lists: a + scale*b (scale applied when non-null).
std::vector<Term> merge_terms(const MonomialOrder& order, const std::vector<Term>& a, const std::vector<Term>& b,
                              std::size_t a_start, const Monomial* shift, const Scalar* scale) {
  std::vector<Term> out;
  out.reserve(a.size() - a_start + b.size());
  std::size_t i = a_start, j = 0;
  auto b_term = [&](std::size_t k) {
    Term t = b[k];
    if (shift) t.monomial = t.monomial * *shift;
    if (scale) t.coefficient = t.coefficient * *scale;
    return t;
  };
  std::optional<Term> pending;
  while (i < a.size() || j < b.size()) {
    if (!pending && j < b.size()) pending = b_term(j);
    if (i >= a.size()) {
      out.push_back(std::move(*pending));
      pending.reset();
      ++j;
      continue;
    }
    if (!pending) {
      out.push_back(a[i++]);
      continue;
    }
    auto c = order.compare(a[i].monomial, pending->monomial);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(std::move(*pending));
      pending.reset();
      ++j;
    } else {
      Scalar sum = a[i].coefficient + pending->coefficient;
      if (!sum.is_zero()) out.push_back(Term{a[i].monomial, std::move(sum)});
      ++i;
      ++j;
      pending.reset();
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ctx, const Scalar& c) {
  if (c.is_zero()) return Polynomial(std::move(ctx));
  Monomial one(ctx->nvars());
  return Polynomial(ctx, std::vector<Term>{Term{std::move(one), c}});
}

Polynomial Polynomial::constant(RingPtr ctx, long c) {
  auto s = ctx->field().from_int(c);
  return constant(std::move(ctx), s);
}

Polynomial Polynomial::variable(RingPtr ctx, std::size_t index) {
  Monomial m(ctx->nvars());
  m[index] = 1;
  auto one = ctx->field().one();
  return Polynomial(ctx, std::vector<Term>{Term{std::move(m), one}});
}

Polynomial Polynomial::variable(RingPtr ctx, std::string_view name) {
  auto i = ctx->require(name);
  return variable(std::move(ctx), i);
}

Polynomial Polynomial::term(RingPtr ctx, Monomial m, Scalar c) {
  if (c.is_zero()) return Polynomial(std::move(ctx));
  return Polynomial(std::move(ctx), std::vector<Term>{Term{std::move(m), std::move(c)}});
}

Polynomial Polynomial::from_terms(RingPtr ctx, std::vector<Term> terms) {
  const auto& order = ctx->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return order.greater(x.monomial, y.monomial); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  return Polynomial(std::move(ctx), std::move(out));
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coefficient.is_one();
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient = -t.coefficient;
  return Polynomial(ctx_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ctx_, *b.ctx_);
  if (!(a.ctx_->order() == b.ctx_->order())) return a + b.in(a.ctx_);
  return Polynomial(a.ctx_, merge_terms(a.ctx_->order(), a.terms_, b.terms_, 0, nullptr, nullptr));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ctx_, *b.ctx_);
  if (!(a.ctx_->order() == b.ctx_->order())) return a - b.in(a.ctx_);
  auto minus_one = -a.ctx_->field().one();
  return Polynomial(a.ctx_, merge_terms(a.ctx_->order(), a.terms_, b.terms_, 0, nullptr, &minus_one));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ctx_, *b.ctx_);
  if (!(a.ctx_->order() == b.ctx_->order())) return a * b.in(a.ctx_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back(Term{s.monomial * t.monomial, s.coefficient * t.coefficient});
  return Polynomial::from_terms(a.ctx_, std::move(prod));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ctx_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient = t.coefficient * c;
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ctx_);
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.monomial = t.monomial * m;
    t.coefficient = t.coefficient * c;
  }
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::minus_term_times(const Monomial& m, const Scalar& c, const Polynomial& other) const {
  require_same_ring(*ctx_, *other.ctx_);
  if (!(ctx_->order() == other.ctx_->order())) return minus_term_times(m, c, other.in(ctx_));
  Scalar neg = -c;
  return Polynomial(ctx_, merge_terms(ctx_->order(), terms_, other.terms_, 0, &m, &neg));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::in(const RingPtr& ctx) const {
  require_same_ring(*ctx_, *ctx);
  if (ctx_->order() == ctx->order()) return Polynomial(ctx, terms_);
  return from_terms(ctx, terms_);
}

Polynomial Polynomial::rename_into(const RingPtr& target, std::span<const std::optional<std::size_t>> map) const {
  if (map.size() != ctx_->nvars()) throw ContextMismatch("variable map has wrong length");
  if (!(ctx_->field() == target->field())) throw ContextMismatch("rings over different fields");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < ctx_->nvars(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!map[i]) throw ContextMismatch("variable '" + ctx_->variable(i).name + "' has no image in " + target->describe());
      m[*map[i]] += t.monomial[i];
    }
    out.push_back(Term{std::move(m), t.coefficient});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::evaluate(std::span<const Polynomial> images, const RingPtr& target) const {
  if (images.size() != ctx_->nvars()) throw ContextMismatch("ring map needs one image per variable");
  for (const auto& img : images) require_same_ring(*target, *img.context());
  if (!(ctx_->field() == target->field())) throw ContextMismatch("ring map between different fields");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::int32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<std::int32_t>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size() && !prod.is_zero(); ++i)
      if (t.monomial[i] > 0) prod = prod * power(i, t.monomial[i]);
    result += prod;
  }
  return result;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  std::vector<Polynomial> images;
  images.reserve(ctx_->nvars());
  for (std::size_t i = 0; i < ctx_->nvars(); ++i)
    images.push_back(i == var ? value.in(ctx_) : Polynomial::variable(ctx_, i));
  return evaluate(images, ctx_);
}

DegreeInfo Polynomial::weighted_degree() const {
  std::set<std::int64_t> ds;
  for (const auto& t : terms_) ds.insert(ctx_->weighted_degree(t.monomial));
  return DegreeInfo(std::vector<std::int64_t>(ds.begin(), ds.end()));
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[index] != 0; });
}

std::int32_t Polynomial::degree_in(std::size_t index) const {
  std::int32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[index]);
  return d;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coefficient.is_negative();
    Scalar mag = negative ? -t.coefficient : t.coefficient;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ctx_->nvars(); ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->variable(i).name;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ctx_->same_variables(*b.ctx_)) return false;
  if (a.ctx_->order() == b.ctx_->order()) return a.terms_ == b.terms_;
  return a.terms_ == b.in(a.ctx_).terms_;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.context(), 1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.context(), *b.context());
  if (b.is_zero()) return std::nullopt;
  Polynomial divisor = b.in(a.context());
  Polynomial rest = a;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!divisor.leading_monomial().divides(lt.monomial)) return std::nullopt;
    Monomial m = lt.monomial / divisor.leading_monomial();
    Scalar c = lt.coefficient / divisor.leading_coefficient();
    quotient.push_back(Term{m, c});
    rest = rest.minus_term_times(m, c, divisor);
  }
  return Polynomial::from_terms(a.context(), std::move(quotient));
}

}  // namespace reesblow
