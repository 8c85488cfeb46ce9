#include "reesblow/blowup.hpp"

#include <algorithm>

#include "reesblow/errors.hpp"

namespace reesblow {

namespace {

std::vector<std::optional<std::size_t>> identity_map(std::size_t n) {
  std::vector<std::optional<std::size_t>> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return id;
}

Polynomial chart_variable(const Chart& chart, std::size_t k) { return Polynomial::variable(chart.ring.ring(), k); }

// Source variable of B behind the k-th chart variable.
std::size_t source_of(const Chart& chart, std::size_t k) {
  for (std::size_t i = 0; i < chart.chart_variable.size(); ++i)
    if (chart.chart_variable[i] == k) return i;
  throw std::logic_error("chart variable without a source variable");
}

// Every positive-weight variable lies in the radical of (generators) + J,
// tested up to exponent 6.
bool generates_irrelevant(const GradedAlgebra& algebra, const std::vector<Polynomial>& generators) {
  Ideal span = ideal_sum(algebra.ideal(), Ideal(algebra.ring(), generators));
  for (auto i : algebra.positive_variables()) {
    Polynomial y = Polynomial::variable(algebra.ring(), i);
    bool found = false;
    Polynomial power = y;
    for (int e = 1; e <= 6 && !found; ++e, power = power * y) found = span.contains(power);
    if (!found) return false;
  }
  return true;
}

}  // namespace

NonnegPart nonneg_part(const ReesPresentation& rees, int bound) {
  Ideal ideal = eliminate(rees.ideal(), std::vector<std::size_t>{rees.u}).canonical();
  GradedAlgebra algebra(std::move(ideal), rees.algebra.name().empty() ? "" : rees.algebra.name() + "_+");
  GenerationReport generation = generated_in_degree_one(algebra, bound);
  return NonnegPart{std::move(algebra), rees.v, std::move(generation)};
}

ProjAtlas proj_atlas(const GradedAlgebra& algebra, const std::vector<Polynomial>& generators) {
  if (algebra.has_negative_weights()) throw NotNGraded("Proj needs an N-graded algebra");
  ProjAtlas atlas{algebra, {}, {}, {}, {}};
  for (const auto& g : generators) {
    require_same_ring(*g.context(), *algebra.ring());
    atlas.generators.push_back(g.in(algebra.ring()));
  }
  for (const auto& g : atlas.generators) atlas.charts.push_back(homogeneous_localization_chart(algebra, g));
  if (!generates_irrelevant(algebra, atlas.generators))
    atlas.warnings.push_back("generators do not generate the irrelevant ideal up to radical");

  const RingPtr& ring = algebra.ring();
  const std::size_t r = atlas.charts.size();
  atlas.transitions.assign(r, std::vector<std::vector<Fraction>>(r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      const Chart& cb = atlas.charts[b];
      Fraction fb = Fraction::of(chart_expression(atlas.charts[a], atlas.generators[b]));
      for (std::size_t k = 0; k < cb.ring.ring()->nvars(); ++k) {
        std::size_t y = source_of(cb, k);
        Fraction value = Fraction::of(chart_expression(atlas.charts[a], Polynomial::variable(ring, y)));
        if (ring->weight(y) != 0) value = value * fb.pow(-ring->weight(y));
        atlas.transitions[a][b].push_back(std::move(value));
      }
    }
  }
  return atlas;
}

AtlasCheck verify_atlas(const ProjAtlas& atlas) {
  AtlasCheck check;
  const std::size_t r = atlas.charts.size();
  for (std::size_t a = 0; a < r; ++a) {
    const Chart& ca = atlas.charts[a];
    const Ideal& ia = ca.ring.ideal();
    for (std::size_t b = 0; b < r; ++b) {
      const Chart& cb = atlas.charts[b];
      Polynomial fb = chart_expression(ca, atlas.generators[b]);
      const auto& into_a = atlas.transitions[a][b];
      for (std::size_t k = 0; k < ca.ring.ring()->nvars(); ++k) {
        const Fraction& in_b = atlas.transitions[b][a][k];
        Fraction back = substitute(in_b.numerator, into_a, ca.ring.ring()) *
                        substitute(in_b.denominator, into_a, ca.ring.ring()).inverse();
        if (!equivalent_in(back, Fraction::of(chart_variable(ca, k)), ia, fb)) check.two_cycles_identity = false;
      }
      Fraction zero = Fraction::of(Polynomial(ca.ring.ring()));
      for (const auto& g : cb.ring.ideal().generators())
        if (!equivalent_in(substitute(g, into_a, ca.ring.ring()), zero, ia, fb)) check.transitions_well_defined = false;
    }
  }
  return check;
}

bool is_empty_atlas(const ProjAtlas& atlas) {
  return std::all_of(atlas.charts.begin(), atlas.charts.end(), [](const Chart& c) { return c.is_zero_ring(); });
}

ProjAtlas blow_up(const ImmersionData& data) {
  ReesPresentation rees = rees_extended(data);
  NonnegPart nonneg = nonneg_part(rees);
  const RingPtr& ring = nonneg.algebra.ring();
  std::vector<Polynomial> generators;
  for (auto i : nonneg.v) generators.push_back(Polynomial::variable(ring, i));
  ProjAtlas atlas = proj_atlas(nonneg.algebra, generators);
  auto id = identity_map(data.base().ring()->nvars());
  for (std::size_t j = 0; j < atlas.charts.size(); ++j) {
    Polynomial f = data.sequence()[j].rename_into(ring, id);
    atlas.charts[j].exceptional = chart_expression(atlas.charts[j], f);
  }
  if (!nonneg.generation.generated)
    atlas.warnings.push_back("non-negative part not generated in degree 1 up to degree " +
                             std::to_string(nonneg.generation.bound));
  return atlas;
}

bool KappaReport::surjective() const {
  return std::all_of(surjective_by_degree.begin(), surjective_by_degree.end(),
                     [](const auto& d) { return d.second; });
}

ExceptionalDivisor exceptional_divisor(const ImmersionData& data, int bound) {
  ReesPresentation rees = rees_extended(data);
  GradedAlgebra cone_algebra = cone(rees);
  const RingPtr& ring = cone_algebra.ring();
  std::vector<Polynomial> generators;
  for (std::size_t i = 0; i < rees.v.size(); ++i) generators.push_back(Polynomial::variable(ring, rees.v[i]));

  ExceptionalDivisor result{proj_atlas(cone_algebra, generators), blow_up(data), {}, {}};
  for (std::size_t j = 0; j < result.atlas.charts.size(); ++j) {
    const Chart& bl = result.blowup.charts[j];
    const Chart& e = result.atlas.charts[j];
    Ideal expected = ideal_sum(bl.ring.ideal(), Ideal(bl.ring.ring(), {*bl.exceptional})).canonical();
    bool agrees = expected.context()->same_variables(*e.ring.ring()) && expected == e.ring.ideal().in(expected.context());
    result.charts.push_back(ExceptionalChartCheck{j, std::move(expected), agrees});
  }

  // i*R = R_{>=0} + (f) + J_A, mapped identically onto the cone's ring
  NonnegPart nonneg = nonneg_part(rees);
  const RingPtr& xv = nonneg.algebra.ring();
  auto id = identity_map(data.base().ring()->nvars());
  std::vector<Polynomial> gens = nonneg.algebra.ideal().generators();
  for (const auto& f : data.sequence()) gens.push_back(f.rename_into(xv, id));
  Ideal restricted(xv, std::move(gens));
  result.kappa.well_defined = cone_algebra.ideal().contains(restricted.in(ring));
  for (int d = 0; d <= bound; ++d) {
    bool ok = true;
    for (const auto& m : monomials_of_degree(*xv, d, 0)) {
      Polynomial source = Polynomial::term(xv, m, xv->field().one());
      Polynomial target = Polynomial::term(ring, m, ring->field().one());
      ok = ok && cone_algebra.ideal().contains(source.in(ring) - target);
    }
    result.kappa.surjective_by_degree.emplace_back(d, ok);
  }
  return result;
}

DeformationFiber DeformationFamily::fiber(const Scalar& c) const { return deformation_fiber(rees_, c); }

DeformationFiber deformation_fiber(const ReesPresentation& rees, const Scalar& c) {
  const RingPtr& ring = rees.ring();
  Polynomial u_minus_c = Polynomial::variable(ring, rees.u) - Polynomial::constant(ring, c);
  Ideal eliminated = eliminate(ideal_sum(rees.ideal(), Ideal(ring, {u_minus_c})), std::vector<std::size_t>{rees.u})
                         .canonical();
  const RingPtr& xv = eliminated.context();
  const std::string name = rees.algebra.name().empty() ? "" : rees.algebra.name() + "@" + c.to_string();

  if (c.is_zero()) {
    GradedAlgebra fiber(eliminated, name);
    GradedAlgebra cone_algebra = cone(rees);
    bool same = fiber.ideal().generators() == cone_algebra.ideal().in(xv).generators();
    return DeformationFiber{c, std::move(fiber), std::nullopt, same};
  }

  std::vector<Variable> flat = xv->variables();
  for (auto& v : flat) v.weight = 0;
  RingPtr flat_ring = RingContext::make(xv->field(), std::move(flat));
  auto all = identity_map(xv->nvars());
  std::vector<Polynomial> gens;
  for (const auto& g : eliminated.generators()) gens.push_back(g.rename_into(flat_ring, all));
  GradedAlgebra fiber(Ideal(flat_ring, std::move(gens)), name);

  // to A: x ↦ x, v_i ↦ f_i / c; from A: x ↦ x
  const GradedAlgebra& base = rees.data.base();
  const RingPtr& a = base.ring();
  const std::size_t n = a->nvars();
  std::vector<Polynomial> to_base;
  for (std::size_t i = 0; i < n; ++i) to_base.push_back(Polynomial::variable(a, i));
  for (const auto& f : rees.data.sequence()) to_base.push_back(f.scaled(c.inverse()));
  std::vector<Polynomial> from_base;
  for (std::size_t i = 0; i < n; ++i) from_base.push_back(Polynomial::variable(flat_ring, i));

  bool ok = true;
  for (const auto& g : fiber.ideal().generators()) ok = ok && base.ideal().contains(g.evaluate(to_base, a));
  for (const auto& g : base.ideal().generators()) ok = ok && fiber.ideal().contains(g.evaluate(from_base, flat_ring));
  for (std::size_t k = 0; k < flat_ring->nvars(); ++k) {
    Polynomial round = to_base[k].evaluate(from_base, flat_ring);
    ok = ok && fiber.ideal().contains(round - Polynomial::variable(flat_ring, k));
  }
  return DeformationFiber{c, std::move(fiber), ok, std::nullopt};
}

}  // namespace reesblow
