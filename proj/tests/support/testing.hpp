#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "reesblow/blowup.hpp"
#include "reesblow/errors.hpp"
#include "reesblow/parser.hpp"

namespace testing {

using namespace reesblow;

inline RingPtr ring(std::initializer_list<std::pair<const char*, int>> vars,
                    MonomialOrder order = MonomialOrder::grevlex(), Field field = Field::rationals()) {
  std::vector<Variable> vs;
  for (auto [name, weight] : vars) vs.push_back(Variable{name, weight});
  return RingContext::make(field, std::move(vs), order);
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline std::vector<Polynomial> Ps(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, r));
  return out;
}

inline Ideal I(const RingPtr& r, std::initializer_list<const char*> texts) { return Ideal(r, Ps(r, texts)); }

inline std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

inline ImmersionData origin() {
  auto r = ring({{"x", 0}, {"y", 0}});
  return ImmersionData(GradedAlgebra(r, "A"), Ps(r, {"x", "y"}));
}

inline ImmersionData dual_numbers() {
  auto r = ring({{"e", 0}});
  return ImmersionData(GradedAlgebra(I(r, {"e^2"}), "D"), Ps(r, {"e"}));
}

// ---- hand-rolled generators ----

/// Small random polynomials and ideals; deterministic per seed.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  RingPtr any_ring(MonomialOrder order = MonomialOrder::grevlex()) {
    static const char* names[] = {"x", "y", "z"};
    std::vector<Variable> vs;
    int n = integer(1, 3);
    for (int i = 0; i < n; ++i) vs.push_back(Variable{names[i], 0});
    return RingContext::make(Field::rationals(), std::move(vs), order);
  }

  Scalar coefficient() {
    int num = 0;
    while (num == 0) num = integer(-3, 3);
    int den = integer(1, 10) <= 8 ? 1 : integer(2, 3);
    return Scalar(mpq_class(num, den));
  }

  Monomial monomial(const RingPtr& r, int max_degree) {
    Monomial m(r->nvars());
    int budget = integer(0, max_degree);
    for (int k = 0; k < budget; ++k) m[static_cast<std::size_t>(integer(0, static_cast<int>(r->nvars()) - 1))] += 1;
    return m;
  }

  Polynomial polynomial(const RingPtr& r, int max_degree, int max_terms = 3) {
    Polynomial p(r);
    int terms = integer(1, max_terms);
    for (int k = 0; k < terms; ++k) p += Polynomial::term(r, monomial(r, max_degree), coefficient());
    return p;
  }

  Polynomial nonzero(const RingPtr& r, int max_degree, int max_terms = 3) {
    for (;;) {
      Polynomial p = polynomial(r, max_degree, max_terms);
      if (!p.is_zero()) return p;
    }
  }

  /// Weighted-homogeneous of degree d; the ring's weights must be 0 or 1,
  /// with at least one of weight 1 when d > 0.
  Polynomial homogeneous(const RingPtr& r, int d, int max_terms = 3) {
    std::vector<std::size_t> graded, flat;
    for (std::size_t i = 0; i < r->nvars(); ++i) (r->weight(i) == 1 ? graded : flat).push_back(i);
    for (;;) {
      Polynomial p(r);
      int terms = integer(1, max_terms);
      for (int k = 0; k < terms; ++k) {
        Monomial m(r->nvars());
        for (int e = 0; e < d; ++e) m[graded[static_cast<std::size_t>(integer(0, static_cast<int>(graded.size()) - 1))]] += 1;
        for (auto i : flat) m[i] = integer(0, 1);
        p += Polynomial::term(r, m, coefficient());
      }
      if (!p.is_zero()) return p;
    }
  }

  Ideal ideal(const RingPtr& r, int max_gens = 3, int max_degree = 3) {
    std::vector<Polynomial> gens;
    int n = integer(1, max_gens);
    for (int k = 0; k < n; ++k) gens.push_back(nonzero(r, max_degree));
    return Ideal(r, std::move(gens));
  }

 private:
  std::mt19937 rng_;
};

// ---- oracles ----

/// Rank of a list of rational row vectors by fraction-exact elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      mpq_class factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// All monomials of weighted degree d; every weight must be positive.
inline std::vector<Monomial> degree_monomials(const RingContext& r, std::int64_t d) {
  std::vector<Monomial> out;
  Monomial m(r.nvars());
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i == r.nvars()) {
      if (left == 0) out.push_back(m);
      return;
    }
    for (std::int32_t e = 0; e * r.weight(i) <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e * r.weight(i));
    }
    m[i] = 0;
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

/// dim_k (k[x]/J)_d by linear algebra on the span of monomial multiples of
/// homogeneous generators; no Gröbner basis involved. Positive weights only.
inline std::size_t piece_dimension(const Ideal& ideal, std::int64_t d) {
  const RingContext& r = *ideal.context();
  auto basis = degree_monomials(r, d);
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : ideal.generators()) {
    auto deg = g.weighted_degree().degree();
    if (!deg || *deg > d) continue;
    for (const auto& m : degree_monomials(r, d - *deg)) {
      Polynomial p = g.times_term(m, r.field().one());
      std::vector<mpq_class> row(basis.size(), 0);
      for (const auto& t : p.terms()) {
        auto it = std::find(basis.begin(), basis.end(), t.monomial);
        row[static_cast<std::size_t>(it - basis.begin())] = t.coefficient.rational();
      }
      rows.push_back(std::move(row));
    }
  }
  return basis.size() - rank(std::move(rows));
}

/// I : f^∞ through an auxiliary variable s: (I + (1 - s f)) ∩ k[x].
inline Ideal rabinowitsch_saturation(const Ideal& ideal, const Polynomial& f) {
  const RingPtr& r = ideal.context();
  RingPtr big = r->extended({Variable{r->fresh_name("s"), 0}}, true);
  std::vector<std::optional<std::size_t>> shift(r->nvars());
  for (std::size_t i = 0; i < r->nvars(); ++i) shift[i] = i + 1;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.rename_into(big, shift));
  gens.push_back(Polynomial::constant(big, 1) - Polynomial::variable(big, 0) * f.rename_into(big, shift));
  Ideal eliminated = eliminate(Ideal(big, std::move(gens)), std::vector<std::size_t>{0});
  return eliminated.in(r);
}

/// Product of generator lists, no reduction.
inline std::vector<Polynomial> naive_power(const std::vector<Polynomial>& gens, int n) {
  std::vector<Polynomial> out = {Polynomial::constant(gens.front().context(), 1)};
  for (int k = 0; k < n; ++k) {
    std::vector<Polynomial> next;
    for (const auto& a : out)
      for (const auto& g : gens) next.push_back(a * g);
    out = std::move(next);
  }
  return out;
}

/// Maps variables of `from` to the equally named variables of `to`.
inline std::vector<std::optional<std::size_t>> by_name(const RingContext& from, const RingContext& to) {
  std::vector<std::optional<std::size_t>> map;
  for (const auto& v : from.variables()) map.push_back(to.index_of(v.name));
  return map;
}

inline Ideal transport(const Ideal& ideal, const RingPtr& to) {
  auto map = by_name(*ideal.context(), *to);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.rename_into(to, map));
  return Ideal(to, std::move(gens));
}

/// Charts of Bl(A[z], f) are the charts of Bl(A, f) with z adjoined.
inline bool blowup_commutes_with_new_variable(const ImmersionData& data) {
  const RingPtr& a = data.base().ring();
  RingPtr az = a->extended({Variable{a->fresh_name("z"), 0}});
  std::vector<Polynomial> rel, seq;
  auto map = by_name(*a, *az);
  for (const auto& g : data.base().ideal().generators()) rel.push_back(g.rename_into(az, map));
  for (const auto& f : data.sequence()) seq.push_back(f.rename_into(az, map));
  ProjAtlas small = blow_up(data);
  ProjAtlas big = blow_up(ImmersionData(GradedAlgebra(Ideal(az, rel)), seq));
  if (small.charts.size() != big.charts.size()) return false;
  for (std::size_t j = 0; j < small.charts.size(); ++j) {
    const RingPtr& target = big.charts[j].ring.ring();
    if (target->nvars() != small.charts[j].ring.ring()->nvars() + 1) return false;
    if (!(transport(small.charts[j].ring.ideal(), target) == big.charts[j].ring.ideal())) return false;
  }
  return true;
}

/// Charts of Proj of the non-negative part of the regularized Rees algebra.
inline ProjAtlas classical_blowup(const ImmersionData& data) {
  ReesPresentation rees = rees_extended(data);
  Regularization reg = regularize(rees.algebra);
  Ideal nonneg = eliminate(reg.algebra.ideal(), std::vector<std::size_t>{rees.u}).canonical();
  GradedAlgebra b(nonneg);
  std::vector<Polynomial> gens;
  for (const auto& name : rees.v_names()) gens.push_back(Polynomial::variable(b.ring(), name));
  return proj_atlas(b, gens);
}

}  // namespace testing
