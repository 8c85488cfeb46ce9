#include "reesblow/rees.hpp"

#include <algorithm>
#include <set>

#include "reesblow/errors.hpp"

namespace reesblow {

namespace {

std::vector<std::optional<std::size_t>> identity_map(std::size_t n) {
  std::vector<std::optional<std::size_t>> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return id;
}

std::string unique_name(const std::string& wanted, std::set<std::string>& taken) {
  std::string name = wanted;
  for (int k = 1; taken.count(name); ++k) name = wanted + "_" + std::to_string(k);
  taken.insert(name);
  return name;
}

// The v-monomial v^alpha as a polynomial of `ring`, given v's indices.
std::vector<Monomial> v_monomials(const RingPtr& ring, const std::vector<std::size_t>& v, int degree) {
  std::vector<Variable> vars;
  for (auto i : v) vars.push_back(Variable{ring->variable(i).name, 1});
  RingPtr vring = RingContext::make(ring->field(), std::move(vars));
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(*vring, degree, 0)) {
    Monomial lifted(ring->nvars());
    for (std::size_t k = 0; k < v.size(); ++k) lifted[v[k]] = m[k];
    out.push_back(std::move(lifted));
  }
  return out;
}

Polynomial monomial(const RingPtr& ring, const Monomial& m) { return Polynomial::term(ring, m, ring->field().one()); }

}  // namespace

ImmersionData::ImmersionData(GradedAlgebra base, std::vector<Polynomial> sequence) : base_(std::move(base)) {
  for (const auto& v : base_.ring()->variables())
    if (v.weight != 0)
      throw IllFormedPayload("base algebra variable '" + v.name + "' must have weight 0, not " +
                             std::to_string(v.weight));
  for (const auto& f : sequence) {
    require_same_ring(*f.context(), *base_.ring());
    sequence_.push_back(base_.reduce(f.in(base_.ring())));
  }
}

Ideal ImmersionData::center() const {
  std::vector<Polynomial> gens = sequence_;
  for (const auto& g : base_.ideal().generators()) gens.push_back(g);
  return Ideal(base_.ring(), std::move(gens));
}

std::vector<std::string> ReesPresentation::v_names() const {
  std::vector<std::string> out;
  for (auto i : v) out.push_back(ring()->variable(i).name);
  return out;
}

std::string ReesPresentation::u_name() const { return ring()->variable(u).name; }

ReesPresentation rees_extended(const ImmersionData& data) {
  const RingPtr& base = data.base().ring();
  const std::size_t n = base->nvars();
  const std::size_t k = data.sequence().size();
  std::set<std::string> taken;
  for (const auto& v : base->variables()) taken.insert(v.name);
  std::vector<Variable> extra;
  for (std::size_t i = 0; i < k; ++i)
    extra.push_back(Variable{unique_name(k == 1 ? "v" : "v" + std::to_string(i + 1), taken), 1});
  extra.push_back(Variable{unique_name("u", taken), -1});
  RingPtr ring = base->extended(extra);

  auto id = identity_map(n);
  std::vector<Polynomial> gens;
  for (const auto& g : data.base().ideal().generators()) gens.push_back(g.rename_into(ring, id));
  Polynomial u = Polynomial::variable(ring, n + k);
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < k; ++i) {
    v.push_back(n + i);
    gens.push_back(Polynomial::variable(ring, n + i) * u - data.sequence()[i].rename_into(ring, id));
  }
  std::string name = data.base().name().empty() ? "" : "R(" + data.base().name() + ")";
  return ReesPresentation{data, GradedAlgebra(Ideal(ring, std::move(gens)), name), std::move(v), n + k};
}

GradedAlgebra cone(const ReesPresentation& rees) {
  Ideal with_u = ideal_sum(rees.ideal(), Ideal(rees.ring(), {Polynomial::variable(rees.ring(), rees.u)}));
  Ideal cone_ideal = eliminate(with_u, std::vector<std::size_t>{rees.u}).canonical();
  GradedAlgebra result(std::move(cone_ideal), rees.algebra.name().empty() ? "" : rees.algebra.name() + "/u");
  if (result.has_negative_weights()) throw NotNGraded("cone presentation has a negative weight");
  return result;
}

std::size_t find_inverse_parameter(const RingContext& ring) {
  if (auto u = ring.index_of("u"); u && ring.weight(*u) == -1) return *u;
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (ring.weight(i) != -1) continue;
    if (found) throw IllFormedPayload("several weight -1 variables and none named 'u'");
    found = i;
  }
  if (!found) throw IllFormedPayload("no weight -1 variable to play t^-1");
  return *found;
}

Regularization regularize(const GradedAlgebra& q) { return regularize(q, find_inverse_parameter(*q.ring())); }

Regularization regularize(const GradedAlgebra& q, std::size_t u) {
  auto sat = saturation(q.ideal(), Polynomial::variable(q.ring(), u));
  std::vector<Polynomial> kernel;
  for (const auto& g : sat.ideal.generators())
    if (!q.ideal().contains(g)) kernel.push_back(g);
  std::string name = q.name().empty() ? "" : q.name() + "_reg";
  return Regularization{GradedAlgebra(sat.ideal, name), Ideal(q.ring(), std::move(kernel)), sat.stabilized_at};
}

TRegularity t_regularity(const GradedAlgebra& q) { return t_regularity(q, find_inverse_parameter(*q.ring())); }

TRegularity t_regularity(const GradedAlgebra& q, std::size_t u) {
  Ideal c = colon(q.ideal(), Polynomial::variable(q.ring(), u)).canonical();
  std::vector<Polynomial> obstruction;
  for (const auto& g : c.generators()) {
    Polynomial r = q.reduce(g);
    if (!r.is_zero()) obstruction.push_back(r.monic());
  }
  TRegularity result{obstruction.empty(), Ideal(q.ring(), std::move(obstruction))};
  return result;
}

bool ClassicalSide::matches() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const ClassicalDegree& d) { return d.matches(); });
}

Ideal classical_rees_ideal(const ImmersionData& data, const RingPtr& xv_ring) {
  const RingPtr& base = data.base().ring();
  const std::size_t n = base->nvars();
  RingPtr with_t = base->extended({Variable{base->fresh_name("t"), 1}});
  auto id = identity_map(n);
  Polynomial t = Polynomial::variable(with_t, n);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(with_t, i));
  for (const auto& f : data.sequence()) images.push_back(f.rename_into(with_t, id) * t);
  std::vector<Polynomial> jgens;
  for (const auto& g : data.base().ideal().generators()) jgens.push_back(g.rename_into(with_t, id));
  return map_kernel(xv_ring, images, Ideal(with_t, std::move(jgens))).canonical();
}

namespace {

ClassicalSide compare_side(const ReesPresentation& rees, const Ideal& side, const Ideal& classical,
                           const std::vector<Ideal>& powers, int bound) {
  const ImmersionData& data = rees.data;
  const RingPtr& base = data.base().ring();
  const Ideal& ja = data.base().ideal();
  Ideal nonneg = eliminate(side, std::vector<std::size_t>{rees.u}).canonical();
  const RingPtr& xv = nonneg.context();
  const std::size_t n = base->nvars();
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < data.sequence().size(); ++i) v.push_back(n + i);

  // x ↦ x, v_i ↦ f_i (t dropped, the degree is tracked separately)
  std::vector<Polynomial> evaluation;
  for (std::size_t i = 0; i < n; ++i) evaluation.push_back(Polynomial::variable(base, i));
  for (const auto& f : data.sequence()) evaluation.push_back(f);

  auto degree_of = [](const Polynomial& g) { return g.weighted_degree().degree().value_or(-1); };

  ClassicalSide out;
  for (int d = 1; d <= bound; ++d) {
    ClassicalDegree c;
    c.n = d;
    const Ideal& power = powers[static_cast<std::size_t>(d - 1)];
    c.well_defined = true;
    for (const auto& g : nonneg.generators())
      if (degree_of(g) == d && !ja.contains(g.evaluate(evaluation, base))) c.well_defined = false;
    std::vector<Polynomial> images;
    for (const auto& m : v_monomials(xv, v, d)) {
      Polynomial image = monomial(xv, m).evaluate(evaluation, base);
      if (!power.contains(image)) c.well_defined = false;
      images.push_back(image);
    }
    c.surjective = ideal_sum(Ideal(base, std::move(images)), ja) == power;
    // the degree-d part of the classical ideal is spanned over the degree-0 ring by g*m with
    // g a generator of degree e <= d and m a v-monomial of degree d - e
    c.injective = true;
    for (const auto& g : classical.generators()) {
      std::int64_t e = degree_of(g);
      if (e < 0 || e > d || !c.injective) continue;
      Polynomial lifted = g.in(xv);
      for (const auto& m : v_monomials(xv, v, static_cast<int>(d - e)))
        if (!nonneg.contains(lifted * monomial(xv, m))) {
          c.injective = false;
          break;
        }
    }
    out.degrees.push_back(c);
  }
  return out;
}

}  // namespace

ClassicalComparison compare_to_classical(const ReesPresentation& rees, int bound) {
  ClassicalComparison report;
  report.bound = bound;
  report.t_regular = t_regularity(rees.algebra, rees.u).regular;
  if (rees.data.sequence().empty()) {
    report.vacuous = true;
    return report;
  }
  const Ideal center = rees.data.center();
  const Ideal& ja = rees.data.base().ideal();
  for (int d = 1; d <= bound; ++d)
    report.powers.push_back(ideal_sum(ideal_power(center, static_cast<unsigned>(d)), ja).canonical());
  RingPtr xv = rees.ring()->without({rees.u});
  Ideal classical = classical_rees_ideal(rees.data, xv);
  Ideal regularized = saturation(rees.ideal(), Polynomial::variable(rees.ring(), rees.u)).ideal;
  report.regularized = compare_side(rees, regularized, classical, report.powers, bound);
  report.unregularized = compare_side(rees, rees.ideal(), classical, report.powers, bound);
  return report;
}

bool nonpositive_part_is_free(const ReesPresentation& rees, int bound) {
  const RingPtr& ring = rees.ring();
  Ideal eliminated = eliminate(rees.ideal(), rees.v).canonical();
  const RingPtr& xu = eliminated.context();
  const std::size_t n = rees.data.base().ring()->nvars();
  auto id = identity_map(n);
  std::vector<Polynomial> base_gens;
  for (const auto& g : rees.data.base().ideal().generators()) base_gens.push_back(g.rename_into(xu, id));
  if (!(eliminated == Ideal(xu, std::move(base_gens)))) return false;

  std::vector<bool> mask(ring->nvars(), false);
  for (auto i : rees.v) mask[i] = true;
  MonomialOrder order = MonomialOrder::block(mask);
  for (int m = 0; m <= bound; ++m) {
    for (int a = 0; a <= bound; ++a) {
      for (const auto& mono : v_monomials(ring, rees.v, a)) {
        Monomial full = mono;
        full[rees.u] = a + m;
        Polynomial r = normal_form(monomial(ring, full), rees.ideal(), order);
        for (auto i : rees.v)
          if (r.uses_variable(i)) return false;
      }
    }
  }
  return true;
}

BaseChangeReport rees_base_change(const ImmersionData& data, const GradedAlgebra& target,
                                  const std::vector<Polynomial>& images) {
  const RingPtr& base = data.base().ring();
  const RingPtr& tring = target.ring();
  if (images.size() != base->nvars()) throw IllFormedPayload("base change needs one image per variable of A");
  for (const auto& img : images) require_same_ring(*img.context(), *tring);
  for (const auto& g : data.base().ideal().generators()) {
    Polynomial image = g.evaluate(images, tring);
    if (!target.ideal().contains(image))
      throw IllFormedPayload("relation " + g.to_string() + " maps to " + image.to_string() +
                             ", which is nonzero in the target");
  }
  std::vector<Polynomial> pulled_sequence;
  for (const auto& f : data.sequence()) pulled_sequence.push_back(f.evaluate(images, tring));
  ReesPresentation source = rees_extended(data);
  ReesPresentation direct = rees_extended(ImmersionData(target, std::move(pulled_sequence)));

  const RingPtr& dring = direct.ring();
  auto id = identity_map(tring->nvars());
  std::vector<Polynomial> map;
  for (const auto& img : images) map.push_back(img.rename_into(dring, id));
  for (auto i : direct.v) map.push_back(Polynomial::variable(dring, i));
  map.push_back(Polynomial::variable(dring, direct.u));

  std::vector<Polynomial> gens;
  for (const auto& g : target.ideal().generators()) gens.push_back(g.rename_into(dring, id));
  for (const auto& g : source.ideal().generators()) gens.push_back(g.evaluate(map, dring));
  Ideal pulled(dring, std::move(gens));
  bool equal = pulled == direct.ideal();
  return BaseChangeReport{std::move(direct), std::move(pulled), std::move(map), equal};
}

bool TargetReport::surjective() const {
  return std::all_of(surjective_by_degree.begin(), surjective_by_degree.end(),
                     [](const auto& d) { return d.second; });
}

TargetReport rees_target_map(const GradedAlgebra& ambient, const std::vector<Polynomial>& a,
                             const std::vector<Polynomial>& b, int bound) {
  std::vector<Polynomial> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  ReesPresentation source = rees_extended(ImmersionData(ambient, ab));
  GradedAlgebra quotient(ideal_sum(ambient.ideal(), Ideal(ambient.ring(), a)),
                         ambient.name().empty() ? "" : ambient.name() + "/a");
  ReesPresentation target = rees_extended(ImmersionData(quotient, b));

  const RingPtr& sring = source.ring();
  const RingPtr& tring = target.ring();
  const std::size_t n = ambient.ring()->nvars();
  std::vector<Polynomial> map;
  for (std::size_t i = 0; i < n; ++i) map.push_back(Polynomial::variable(tring, i));
  for (std::size_t i = 0; i < a.size(); ++i) map.push_back(Polynomial(tring));
  for (auto j : target.v) map.push_back(Polynomial::variable(tring, j));
  map.push_back(Polynomial::variable(tring, target.u));

  TargetReport report{source, target, map, true, {}};
  for (const auto& g : source.ideal().generators())
    if (!target.ideal().contains(g.evaluate(map, tring))) report.well_defined = false;

  // witnesses: v_b^α ↦ v^α in degree d >= 0 and u^m ↦ u^m in degree -m
  std::vector<std::size_t> source_b(source.v.begin() + static_cast<std::ptrdiff_t>(a.size()), source.v.end());
  for (int d = -bound; d <= bound; ++d) {
    bool ok = true;
    if (d < 0) {
      Monomial su(sring->nvars()), tu(tring->nvars());
      su[source.u] = -d;
      tu[target.u] = -d;
      ok = target.ideal().contains(monomial(sring, su).evaluate(map, tring) - monomial(tring, tu));
    } else {
      auto wanted = v_monomials(tring, target.v, d);
      auto witnesses = v_monomials(sring, source_b, d);
      for (std::size_t k = 0; k < wanted.size() && ok; ++k)
        ok = target.ideal().contains(monomial(sring, witnesses[k]).evaluate(map, tring) - monomial(tring, wanted[k]));
    }
    report.surjective_by_degree.emplace_back(d, ok);
  }
  return report;
}

}  // namespace reesblow
