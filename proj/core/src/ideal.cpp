#include "reesblow/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "reesblow/errors.hpp"

namespace reesblow {

Ideal::Ideal(RingPtr ctx, std::vector<Polynomial> generators) : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    require_same_ring(*g.context(), *ctx_);
    if (!g.is_zero()) gens_.push_back(g.in(ctx_));
  }
}

Ideal Ideal::unit(RingPtr ctx) {
  auto one = Polynomial::constant(ctx, 1);
  return Ideal(std::move(ctx), {one});
}

const ReducedGB& Ideal::groebner(const MonomialOrder& order) const {
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->bases[order.describe()];
  if (!slot) slot = std::make_unique<ReducedGB>(reesblow::groebner(gens_, ctx_, order));
  return *slot;
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(*ctx_, *other.ctx_);
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

Ideal Ideal::in(const RingPtr& ctx) const {
  if (ctx == ctx_) return *this;
  return Ideal(ctx, gens_);
}

Ideal Ideal::canonical() const {
  const auto& gb = groebner(MonomialOrder::grevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : gb.basis()) gens.push_back(g.in(ctx_));
  return Ideal(ctx_, std::move(gens));
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!a.ctx_->same_variables(*b.ctx_)) return false;
  return a.groebner(MonomialOrder::grevlex()).basis() == b.groebner(MonomialOrder::grevlex()).basis();
}

Polynomial normal_form(const Polynomial& p, const Ideal& ideal, const MonomialOrder& order) {
  require_same_ring(*p.context(), *ideal.context());
  return ideal.groebner(order).reduce(p);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.context(), *b.context());
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g.in(a.context()));
  return Ideal(a.context(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.context(), *b.context());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.context(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned n) {
  Ideal result = Ideal::unit(a.context());
  for (unsigned k = 0; k < n; ++k) result = ideal_product(result, a).canonical();
  return result;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.context(), *b.context());
  const RingPtr& ctx = a.context();
  if (a.is_zero() || b.is_zero()) return Ideal(ctx);
  RingPtr ext = ctx->extended({Variable{ctx->fresh_name("t"), 0}}, /*front=*/true);
  std::vector<std::optional<std::size_t>> shift(ctx->nvars());
  for (std::size_t i = 0; i < ctx->nvars(); ++i) shift[i] = i + 1;
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.rename_into(ext, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.rename_into(ext, shift));
  return eliminate(Ideal(ext, std::move(gens)), std::vector<std::size_t>{0}).in(ctx);
}

Ideal colon(const Ideal& a, const Polynomial& g) {
  require_same_ring(*a.context(), *g.context());
  const RingPtr& ctx = a.context();
  if (g.is_zero()) return Ideal::unit(ctx);
  if (g.is_constant()) return a;
  Ideal meet = ideal_intersection(a, Ideal(ctx, {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) {
    auto q = divide_exact(h, g.in(ctx));
    if (!q) throw std::logic_error("intersection element not divisible by " + g.to_string());
    gens.push_back(*q);
  }
  return Ideal(ctx, std::move(gens));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.context(), *b.context());
  if (b.is_zero()) throw DivisionByZeroGenerator("quotient by an ideal with only zero generators");
  std::optional<Ideal> result;
  for (const auto& g : b.generators()) {
    Ideal part = colon(a, g);
    result = result ? ideal_intersection(*result, part) : part;
  }
  return *result;
}

Ideal ideal_algebra(IdealOp op, const Ideal& a, const Ideal& b) {
  switch (op) {
    case IdealOp::Sum:
      return ideal_sum(a, b);
    case IdealOp::Product:
      return ideal_product(a, b);
    case IdealOp::Intersection:
      return ideal_intersection(a, b);
    case IdealOp::Quotient:
      return ideal_quotient(a, b);
  }
  throw std::invalid_argument("unknown ideal operation");
}

SaturationResult saturation(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  Ideal current = ideal.canonical();
  int steps = 0;
  while (!current.is_unit()) {
    Ideal next = colon(current, f).canonical();
    if (next == current) break;
    current = std::move(next);
    ++steps;
  }
  return SaturationResult{std::move(current), steps};
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& variables) {
  const RingPtr& ctx = ideal.context();
  if (variables.empty()) return ideal;
  std::vector<bool> mask(ctx->nvars(), false);
  for (auto v : variables) mask.at(v) = true;
  const auto& gb = ideal.groebner(MonomialOrder::block(mask));
  RingPtr restricted = ctx->without(variables);
  std::vector<std::optional<std::size_t>> map(ctx->nvars());
  std::size_t next = 0;
  for (std::size_t i = 0; i < ctx->nvars(); ++i)
    if (!mask[i]) map[i] = next++;
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis()) {
    bool free = std::none_of(variables.begin(), variables.end(), [&](std::size_t v) { return g.uses_variable(v); });
    if (free) kept.push_back(g.rename_into(restricted, map));
  }
  return Ideal(restricted, std::move(kept));
}

std::vector<std::size_t> variable_indices(const RingContext& ring, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(ring.require(n));
  return out;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& names) {
  return eliminate(ideal, variable_indices(*ideal.context(), names));
}

Ideal map_kernel(const RingPtr& source, std::span<const Polynomial> images, const Ideal& target_ideal) {
  const RingPtr& target = target_ideal.context();
  if (images.size() != source->nvars()) throw ContextMismatch("map_kernel needs one image per source variable");
  if (!(source->field() == target->field())) throw ContextMismatch("map_kernel between different fields");
  for (const auto& img : images) require_same_ring(*img.context(), *target);

  // graph ring: renamed target variables first, then the source variables
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < target->nvars(); ++i) {
    std::string name = source->fresh_name("__t" + std::to_string(i));
    vars.push_back(Variable{name, target->weight(i)});
  }
  for (const auto& v : source->variables()) vars.push_back(v);
  RingPtr graph = RingContext::make(source->field(), std::move(vars));
  std::vector<std::optional<std::size_t>> from_target(target->nvars());
  for (std::size_t i = 0; i < target->nvars(); ++i) from_target[i] = i;

  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < source->nvars(); ++i)
    gens.push_back(Polynomial::variable(graph, target->nvars() + i) - images[i].rename_into(graph, from_target));
  for (const auto& g : target_ideal.generators()) gens.push_back(g.rename_into(graph, from_target));

  std::vector<std::size_t> drop(target->nvars());
  for (std::size_t i = 0; i < target->nvars(); ++i) drop[i] = i;
  return eliminate(Ideal(graph, std::move(gens)), drop).in(source);
}

RegularSequenceResult regular_sequence_test(std::span<const Polynomial> sequence, const Ideal& base) {
  RegularSequenceResult result;
  Ideal current = base;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    Ideal c = colon(current, sequence[i]);
    if (!(c == current)) {
      result.regular = false;
      result.failing_index = i;
      Ideal canonical = c.canonical();
      for (const auto& g : canonical.generators()) {
        if (!current.contains(g)) {
          result.witness = g;
          break;
        }
      }
      break;
    }
    current = ideal_sum(current, Ideal(base.context(), {sequence[i]}));
  }
  if (result.regular) {
    current = base;
    for (const auto& f : sequence) current = ideal_sum(current, Ideal(base.context(), {f}));
    if (current.is_unit()) {
      result.regular = false;
      result.proper = false;
    }
  }
  return result;
}

Ideal annihilator(const Polynomial& f, const Ideal& base) { return colon(base, f).canonical(); }

std::vector<Monomial> monomials_of_degree(const RingContext& ring, std::int64_t degree, int nonpositive_bound) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    if (ring.weight(i) <= 0) order.push_back(i);
  const std::size_t first_positive = order.size();
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    if (ring.weight(i) > 0) order.push_back(i);

  std::vector<Monomial> out;
  Monomial current(ring.nvars());
  auto recurse = [&](auto&& self, std::size_t k, std::int64_t remaining) -> void {
    if (k == order.size()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const std::size_t v = order[k];
    const int w = ring.weight(v);
    if (k >= first_positive) {
      if (remaining < 0) return;
      for (std::int64_t e = 0; e * w <= remaining; ++e) {
        current[v] = static_cast<std::int32_t>(e);
        self(self, k + 1, remaining - e * w);
      }
    } else {
      for (int e = 0; e <= nonpositive_bound; ++e) {
        current[v] = e;
        self(self, k + 1, remaining - static_cast<std::int64_t>(e) * w);
      }
    }
    current[v] = 0;
  };
  recurse(recurse, 0, degree);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.order().greater(a, b); });
  return out;
}

std::vector<std::pair<int, std::size_t>> hilbert_function(const Ideal& ideal, int dmin, int dmax) {
  const RingContext& ring = *ideal.context();
  for (const auto& v : ring.variables())
    if (v.weight <= 0) throw NonPositiveWeights("Hilbert function needs positive weights; '" + v.name + "' has weight " + std::to_string(v.weight));
  const auto& gb = ideal.groebner(MonomialOrder::grevlex());
  std::vector<std::pair<int, std::size_t>> out;
  for (int d = dmin; d <= dmax; ++d) {
    std::size_t count = 0;
    if (d >= 0)
      for (const auto& m : monomials_of_degree(ring, d, 0))
        if (gb.is_standard(m)) ++count;
    out.emplace_back(d, count);
  }
  return out;
}

}  // namespace reesblow
