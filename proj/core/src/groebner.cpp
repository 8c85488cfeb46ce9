// Buchberger's algorithm with the Gebauer-Möller pair update.

#include <algorithm>
#include <tuple>

#include "reesblow/errors.hpp"
#include "reesblow/ideal.hpp"

namespace reesblow {

Polynomial reduce_by(const Polynomial& p, std::span<const Polynomial> divisors) {
  Polynomial rest = p;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      Monomial m = lt.monomial / divisor->leading_monomial();
      Scalar c = lt.coefficient / divisor->leading_coefficient();
      rest = rest.minus_term_times(m, c, *divisor);
    } else {
      remainder.push_back(lt);
      rest = rest - Polynomial::term(rest.context(), lt.monomial, lt.coefficient);
    }
  }
  // remainder terms were produced in descending order
  return Polynomial::from_terms(p.context(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(l / f.leading_monomial(), f.leading_coefficient().inverse());
  return a.minus_term_times(l / g.leading_monomial(), g.leading_coefficient().inverse(), g);
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::int64_t degree;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ctx) : ctx_(std::move(ctx)) {}

  std::vector<Polynomial> run(std::span<const Polynomial> input) {
    for (const auto& f : input) {
      Polynomial g = f.in(ctx_);
      if (g.is_zero()) continue;
      if (g.is_constant()) return {Polynomial::constant(ctx_, 1)};
      insert(g.monic());
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        auto c = ctx_->order().compare(a.lcm, b.lcm);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair pair = *best;
      pairs_.erase(best);
      Polynomial h = reduce_by(s_polynomial(polys_[pair.i], polys_[pair.j]), active_polys());
      if (h.is_zero()) continue;
      if (h.is_constant()) return {Polynomial::constant(ctx_, 1)};
      insert(h.monic());
    }
    return reduced_basis();
  }

 private:
  std::vector<Polynomial> active_polys() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

  void insert(Polynomial h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(false);
    const Monomial& lh = polys_[hi].leading_monomial();

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].leading_monomial();
      fresh.push_back(Candidate{g, lcm(lg, lh), lg.coprime(lh)});
    }
    // chain criterion among the new pairs
    std::vector<Candidate> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const auto& c = fresh[k];
      bool redundant = false;
      if (!c.coprime) {
        for (std::size_t r = k + 1; r < fresh.size() && !redundant; ++r)
          redundant = fresh[r].lcm.divides(c.lcm);
        for (std::size_t r = 0; r < kept.size() && !redundant; ++r) redundant = kept[r].lcm.divides(c.lcm);
      }
      if (!redundant) kept.push_back(c);
    }
    // chain criterion on old pairs
    std::vector<Pair> survivors;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) survivors.push_back(std::move(p));
    }
    pairs_ = std::move(survivors);
    // coprime criterion
    for (auto& c : kept)
      if (!c.coprime) pairs_.push_back(Pair{c.g, hi, c.lcm, c.lcm.total_degree()});

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    active_[hi] = true;
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> minimal;
    auto act = active_polys();
    for (std::size_t k = 0; k < act.size(); ++k) {
      bool redundant = false;
      for (std::size_t r = 0; r < act.size() && !redundant; ++r) {
        if (r == k) continue;
        const auto& a = act[r].leading_monomial();
        const auto& b = act[k].leading_monomial();
        redundant = a.divides(b) && (!(a == b) || r < k);
      }
      if (!redundant) minimal.push_back(act[k]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t r = 0; r < minimal.size(); ++r)
        if (r != k) others.push_back(minimal[r]);
      reduced.push_back(reduce_by(minimal[k], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ctx_->order().greater(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
  }

  RingPtr ctx_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

ReducedGB groebner(std::span<const Polynomial> generators, const RingPtr& ring, const MonomialOrder& order) {
  RingPtr ctx = ring->order() == order ? ring : ring->with_order(order);
  for (const auto& g : generators) require_same_ring(*g.context(), *ctx);
  return ReducedGB(ctx, Buchberger(ctx).run(generators));
}

Polynomial ReducedGB::reduce(const Polynomial& p) const {
  require_same_ring(*p.context(), *ctx_);
  return reduce_by(p.in(ctx_), basis_).in(p.context());
}

bool ReducedGB::is_standard(const Monomial& m) const {
  return std::none_of(basis_.begin(), basis_.end(), [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
}

bool operator==(const ReducedGB& a, const ReducedGB& b) {
  return a.ctx_->same_variables(*b.ctx_) && a.order() == b.order() && a.basis_ == b.basis_;
}

}  // namespace reesblow
