#include "reesblow/graded.hpp"

#include <algorithm>
#include <set>

#include "reesblow/errors.hpp"
#include "reesblow/parser.hpp"

namespace reesblow {

namespace {

std::string degree_list(const DegreeInfo& info) {
  std::string out;
  for (auto d : info.degrees()) out += (out.empty() ? "" : ",") + std::to_string(d);
  return "{" + out + "}";
}

void require_nonnegative(const RingContext& ring, const char* what) {
  for (const auto& v : ring.variables())
    if (v.weight < 0)
      throw NegativeWeights(std::string(what) + " needs an N-graded ring; '" + v.name + "' has weight " +
                            std::to_string(v.weight));
}

// Single variable (up to a scalar) of a polynomial, if it is one.
std::optional<std::size_t> as_variable(const Polynomial& f) {
  if (f.size() != 1) return std::nullopt;
  const Monomial& m = f.leading_monomial();
  if (m.total_degree() != 1) return std::nullopt;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] == 1) return i;
  return std::nullopt;
}

std::string unique_name(const std::string& wanted, std::set<std::string>& taken) {
  std::string name = wanted;
  for (int k = 1; taken.count(name); ++k) name = wanted + "_" + std::to_string(k);
  taken.insert(name);
  return name;
}

}  // namespace

GradedAlgebra::GradedAlgebra(Ideal ideal, std::string name) : ideal_(std::move(ideal)), name_(std::move(name)) {
  for (const auto& g : ideal_.generators()) {
    auto info = g.weighted_degree();
    if (!info.homogeneous())
      throw NonHomogeneousGenerator("generator " + g.to_string() + " is not weighted-homogeneous (degrees " +
                                    degree_list(info) + ")");
  }
}

GradedAlgebra::GradedAlgebra(RingPtr ring, std::string name) : GradedAlgebra(Ideal(std::move(ring)), std::move(name)) {}

GradedAlgebra GradedAlgebra::renamed(std::string name) const {
  GradedAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool GradedAlgebra::has_negative_weights() const {
  const auto& vars = ring()->variables();
  return std::any_of(vars.begin(), vars.end(), [](const Variable& v) { return v.weight < 0; });
}

bool GradedAlgebra::all_weights_positive() const {
  const auto& vars = ring()->variables();
  return std::all_of(vars.begin(), vars.end(), [](const Variable& v) { return v.weight > 0; });
}

std::vector<std::size_t> GradedAlgebra::positive_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring()->nvars(); ++i)
    if (ring()->weight(i) > 0) out.push_back(i);
  return out;
}

Polynomial GradedAlgebra::parse(const std::string& text) const { return parse_polynomial(text, ring()); }

GradedPiece graded_piece_basis(const GradedAlgebra& algebra, std::int64_t degree, std::optional<int> bound,
                               std::int64_t shift) {
  if (!algebra.all_weights_positive() && !bound)
    throw UnboundedPiece("graded piece of a ring with weight <= 0 variables needs an exponent bound");
  GradedPiece piece;
  piece.degree = degree;
  piece.shift = shift;
  piece.bound = bound;
  const auto& gb = algebra.ideal().groebner(MonomialOrder::grevlex());
  for (auto& m : monomials_of_degree(*algebra.ring(), degree + shift, bound.value_or(0)))
    if (gb.is_standard(m)) piece.basis.push_back(std::move(m));
  return piece;
}

DegreeZeroSplit split_degree_zero(const GradedAlgebra& algebra) {
  require_nonnegative(*algebra.ring(), "split_degree_zero");
  auto positive = algebra.positive_variables();
  std::vector<Polynomial> irrelevant;
  for (auto i : positive) irrelevant.push_back(Polynomial::variable(algebra.ring(), i));
  Ideal b0 = eliminate(algebra.ideal(), positive).canonical();
  return DegreeZeroSplit{GradedAlgebra(std::move(b0), algebra.name().empty() ? "" : algebra.name() + "_0"),
                         Ideal(algebra.ring(), std::move(irrelevant))};
}

std::vector<SplitCheck> check_split(const GradedAlgebra& algebra, const DegreeZeroSplit& split, int max_degree,
                                    int exponent_bound) {
  const RingPtr& ring = algebra.ring();
  const auto& gb_b = algebra.ideal().groebner(MonomialOrder::grevlex());
  Ideal quotient_ideal = ideal_sum(algebra.ideal(), split.irrelevant);
  const auto& gb_q = quotient_ideal.groebner(MonomialOrder::grevlex());
  const auto& gb_0 = split.degree_zero.ideal().groebner(MonomialOrder::grevlex());
  const RingPtr& ring0 = split.degree_zero.ring();

  // embedding of B_0's variables into B's ring
  std::vector<std::optional<std::size_t>> embed(ring0->nvars());
  for (std::size_t i = 0; i < ring0->nvars(); ++i) embed[i] = ring->require(ring0->variable(i).name);
  auto positive = algebra.positive_variables();

  std::vector<SplitCheck> out;
  for (int d = 0; d <= max_degree; ++d) {
    SplitCheck c;
    c.degree = d;
    std::set<std::vector<std::int32_t>> plus_monomials;
    for (const auto& m : monomials_of_degree(*ring, d, exponent_bound)) {
      if (!gb_b.is_standard(m)) continue;
      ++c.total;
      bool in_plus = std::any_of(positive.begin(), positive.end(), [&](std::size_t v) { return m[v] > 0; });
      if (in_plus) plus_monomials.insert(m.exponents());
    }
    std::size_t quotient_dim = 0;
    for (const auto& m : monomials_of_degree(*ring, d, exponent_bound))
      if (gb_q.is_standard(m)) ++quotient_dim;
    c.irrelevant_part = c.total >= quotient_dim ? c.total - quotient_dim : 0;
    for (const auto& m : monomials_of_degree(*ring0, d, exponent_bound)) {
      if (!gb_0.is_standard(m)) continue;
      ++c.degree_zero_part;
      Monomial lifted(ring->nvars());
      for (std::size_t i = 0; i < m.size(); ++i) lifted[*embed[i]] = m[i];
      if (plus_monomials.count(lifted.exponents())) c.disjoint = false;
    }
    out.push_back(c);
  }
  return out;
}

Fraction Fraction::of(const Polynomial& p) { return Fraction{p, Polynomial::constant(p.context(), 1)}; }

namespace {

// Cancels exact quotients and the monomial content shared by both sides.
Fraction normalized(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("fraction with zero denominator");
  const RingPtr& ctx = num.context();
  if (num.is_zero()) return Fraction::of(Polynomial(ctx));
  if (auto q = divide_exact(num, den)) return Fraction::of(*q);
  Monomial common = num.terms().front().monomial;
  auto meet = [](Monomial& acc, const Monomial& m) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = std::min(acc[i], m[i]);
  };
  for (const auto& t : num.terms()) meet(common, t.monomial);
  for (const auto& t : den.terms()) meet(common, t.monomial);
  if (!common.is_one()) {
    auto divide_all = [&](const Polynomial& p) {
      std::vector<Term> terms;
      for (const auto& t : p.terms()) terms.push_back(Term{t.monomial / common, t.coefficient});
      return Polynomial::from_terms(ctx, std::move(terms));
    };
    num = divide_all(num);
    den = divide_all(den);
  }
  Scalar lc = den.leading_coefficient();
  if (!lc.is_one()) {
    Scalar inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return Fraction{std::move(num), std::move(den)};
}

Fraction add(const Fraction& a, const Fraction& b) {
  if (a.denominator == b.denominator) return normalized(a.numerator + b.numerator, a.denominator);
  return normalized(a.numerator * b.denominator + b.numerator * a.denominator, a.denominator * b.denominator);
}

}  // namespace

Fraction Fraction::operator*(const Fraction& o) const {
  return normalized(numerator * o.numerator, denominator * o.denominator);
}

Fraction Fraction::inverse() const {
  if (numerator.is_zero()) throw std::domain_error("inverse of the zero fraction");
  return normalized(denominator, numerator);
}

Fraction Fraction::pow(int n) const {
  Fraction base = n < 0 ? inverse() : *this;
  unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
  return normalized(reesblow::pow(base.numerator, e), reesblow::pow(base.denominator, e));
}

bool Fraction::equivalent(const Fraction& o) const {
  return numerator * o.denominator == o.numerator * denominator;
}

std::string Fraction::to_string() const {
  if (denominator.is_one()) return numerator.to_string();
  auto wrap = [](const Polynomial& p) { return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string(); };
  return wrap(numerator) + "/" + wrap(denominator);
}

Fraction substitute(const Polynomial& p, const std::vector<Fraction>& images, const RingPtr& target) {
  if (images.size() != p.context()->nvars()) throw ContextMismatch("substitute needs one image per variable");
  Fraction sum = Fraction::of(Polynomial(target));
  for (const auto& t : p.terms()) {
    Fraction term = Fraction::of(Polynomial::constant(target, t.coefficient));
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] > 0) term = term * images[i].pow(t.monomial[i]);
    sum = add(sum, term);
  }
  return sum;
}

bool equivalent_in(const Fraction& a, const Fraction& b, const Ideal& ideal, const Polynomial& inverted) {
  Polynomial diff = a.numerator * b.denominator - b.numerator * a.denominator;
  if (ideal.contains(diff)) return true;
  Polynomial units = a.denominator * b.denominator * inverted;
  if (units.is_constant()) return false;
  return saturation(ideal, units).ideal.contains(diff);
}

std::vector<std::pair<std::string, std::string>> Chart::substitution() const {
  std::vector<std::pair<std::string, std::string>> out;
  const RingPtr& src = source.ring();
  for (std::size_t i = 0; i < src->nvars(); ++i)
    if (src->weight(i) != 0) out.emplace_back(src->variable(i).name, images[i].to_string());
  return out;
}

std::string chart_variable_name(const std::string& source_name, bool single) {
  if (single) return "w";
  if (source_name.size() > 1 && source_name[0] == 'v' &&
      std::all_of(source_name.begin() + 1, source_name.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return "w" + source_name.substr(1);
  return "w_" + source_name;
}

Chart homogeneous_localization_chart(const GradedAlgebra& algebra, const Polynomial& f) {
  require_same_ring(*f.context(), *algebra.ring());
  auto info = f.weighted_degree();
  if (info.is_zero_polynomial() || info.degree() != std::optional<std::int64_t>(1))
    throw NotDegreeOne("chart generator " + f.to_string() + " is not homogeneous of degree 1");

  Chart chart{algebra, algebra, 0, {}, {}, std::nullopt};
  Scalar scale = algebra.ring()->field().one();
  if (auto v = as_variable(f)) {
    chart.distinguished = *v;
    scale = f.leading_coefficient().inverse();
  } else {
    const RingPtr& ring = algebra.ring();
    RingPtr ext = ring->extended({Variable{ring->fresh_name("s"), 1}});
    std::vector<std::optional<std::size_t>> id(ring->nvars());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    std::vector<Polynomial> gens;
    for (const auto& g : algebra.ideal().generators()) gens.push_back(g.rename_into(ext, id));
    gens.push_back(Polynomial::variable(ext, ring->nvars()) - f.rename_into(ext, id));
    chart.source = GradedAlgebra(Ideal(ext, std::move(gens)), algebra.name());
    chart.distinguished = ring->nvars();
  }

  const RingPtr& src = chart.source.ring();
  std::size_t graded_others = 0;
  for (std::size_t i = 0; i < src->nvars(); ++i)
    if (i != chart.distinguished && src->weight(i) != 0) ++graded_others;

  std::set<std::string> taken;
  for (const auto& v : src->variables())
    if (v.weight == 0) taken.insert(v.name);
  std::vector<Variable> chart_vars;
  chart.chart_variable.assign(src->nvars(), std::nullopt);
  for (std::size_t i = 0; i < src->nvars(); ++i) {
    if (i == chart.distinguished) continue;
    const Variable& v = src->variable(i);
    std::string name = v.weight == 0 ? v.name : unique_name(chart_variable_name(v.name, graded_others == 1), taken);
    chart.chart_variable[i] = chart_vars.size();
    chart_vars.push_back(Variable{name, 0});
  }
  RingPtr chart_ring = RingContext::make(src->field(), std::move(chart_vars));
  for (std::size_t i = 0; i < src->nvars(); ++i)
    chart.images.push_back(chart.chart_variable[i] ? Polynomial::variable(chart_ring, *chart.chart_variable[i])
                                                   : Polynomial::constant(chart_ring, scale));

  Ideal saturated = saturation(chart.source.ideal(), Polynomial::variable(src, chart.distinguished)).ideal;
  std::vector<Polynomial> dehomogenized;
  for (const auto& g : saturated.generators()) dehomogenized.push_back(g.evaluate(chart.images, chart_ring));
  chart.ring = GradedAlgebra(Ideal(chart_ring, std::move(dehomogenized)).canonical());
  return chart;
}

Polynomial chart_expression(const Chart& chart, const Polynomial& p) {
  const RingPtr& ring = p.context();
  std::vector<Polynomial> images(chart.images.begin(), chart.images.begin() + ring->nvars());
  return p.evaluate(images, chart.ring.ring());
}

LocalizationCheck verify_degree_zero_localization(const GradedAlgebra& algebra, const Chart& chart) {
  (void)algebra;
  const RingPtr& src = chart.source.ring();
  const std::size_t n = src->nvars();
  const RingPtr& cring = chart.ring.ring();
  const std::size_t m = cring->nvars();

  // B_f = src[s] / (J + (s*f - 1)), s of weight -1
  RingPtr bf = src->extended({Variable{src->fresh_name("finv"), -1}});
  std::vector<std::optional<std::size_t>> src_into_bf(n);
  for (std::size_t i = 0; i < n; ++i) src_into_bf[i] = i;
  // f = c * (distinguished variable); the chart sends that variable to 1/c
  Scalar inv_c = chart.images[chart.distinguished].leading_coefficient();
  Scalar c = inv_c.inverse();
  Polynomial x_bf = Polynomial::variable(bf, chart.distinguished);
  Polynomial f_bf = x_bf.scaled(c);
  Polynomial finv = Polynomial::variable(bf, n).scaled(inv_c);
  std::vector<Polynomial> bf_gens;
  for (const auto& g : chart.source.ideal().generators()) bf_gens.push_back(g.rename_into(bf, src_into_bf));
  bf_gens.push_back(Polynomial::variable(bf, n) * x_bf - Polynomial::constant(bf, 1));
  Ideal bf_ideal(bf, std::move(bf_gens));

  // B_(f)[t, t'] / (I + (t*t' - 1))
  std::vector<Variable> lvars = cring->variables();
  std::set<std::string> taken;
  for (const auto& v : lvars) taken.insert(v.name);
  lvars.push_back(Variable{unique_name("t", taken), 1});
  lvars.push_back(Variable{unique_name("tinv", taken), -1});
  RingPtr lt = RingContext::make(cring->field(), std::move(lvars));
  std::vector<std::optional<std::size_t>> chart_into_lt(m);
  for (std::size_t i = 0; i < m; ++i) chart_into_lt[i] = i;
  Polynomial t = Polynomial::variable(lt, m);
  Polynomial tinv = Polynomial::variable(lt, m + 1);
  std::vector<Polynomial> lt_gens;
  for (const auto& g : chart.ring.ideal().generators()) lt_gens.push_back(g.rename_into(lt, chart_into_lt));
  lt_gens.push_back(t * tinv - Polynomial::constant(lt, 1));
  Ideal lt_ideal(lt, std::move(lt_gens));

  auto power = [](const Polynomial& pos, const Polynomial& neg, std::int64_t d) {
    return d >= 0 ? pow(pos, static_cast<unsigned>(d)) : pow(neg, static_cast<unsigned>(-d));
  };

  // forward: chart variable of y ↦ y * f^-deg(y); t ↦ f; t' ↦ f^-1
  std::vector<Polynomial> forward(m + 2, Polynomial(bf));
  for (std::size_t i = 0; i < n; ++i) {
    if (!chart.chart_variable[i]) continue;
    forward[*chart.chart_variable[i]] = Polynomial::variable(bf, i) * power(finv, f_bf, src->weight(i));
  }
  forward[m] = f_bf;
  forward[m + 1] = finv;

  // backward: y ↦ (chart variable of y) * t^deg(y); f ↦ t; f^-1 ↦ t'
  std::vector<Polynomial> backward(n + 1, Polynomial(lt));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == chart.distinguished) {
      backward[i] = t.scaled(inv_c);
      continue;
    }
    backward[i] = Polynomial::variable(lt, *chart.chart_variable[i]) * power(t, tinv, src->weight(i));
  }
  backward[n] = tinv.scaled(c);

  LocalizationCheck check;
  check.forward_well_defined = std::all_of(lt_ideal.generators().begin(), lt_ideal.generators().end(),
                                           [&](const Polynomial& g) { return bf_ideal.contains(g.evaluate(forward, bf)); });
  check.backward_well_defined = std::all_of(bf_ideal.generators().begin(), bf_ideal.generators().end(),
                                            [&](const Polynomial& g) { return lt_ideal.contains(g.evaluate(backward, lt)); });
  check.forward_then_backward_identity = true;
  for (std::size_t k = 0; k < m + 2; ++k) {
    Polynomial x = Polynomial::variable(lt, k);
    if (!lt_ideal.contains(forward[k].evaluate(backward, lt) - x)) check.forward_then_backward_identity = false;
  }
  check.backward_then_forward_identity = true;
  for (std::size_t k = 0; k < n + 1; ++k) {
    Polynomial y = Polynomial::variable(bf, k);
    if (!bf_ideal.contains(backward[k].evaluate(forward, bf) - y)) check.backward_then_forward_identity = false;
  }
  return check;
}

VeroneseResult veronese(const GradedAlgebra& algebra, int delta, int degree_bound) {
  require_nonnegative(*algebra.ring(), "veronese");
  if (delta < 1) throw std::invalid_argument("Veronese degree must be positive");
  const RingPtr& ring = algebra.ring();
  const auto& gb = algebra.ideal().groebner(MonomialOrder::grevlex());

  std::vector<Monomial> gens;
  for (auto& mono : monomials_of_degree(*ring, delta, 0))
    if (gb.is_standard(mono)) gens.push_back(std::move(mono));

  std::vector<Variable> vars;
  std::vector<Polynomial> images;
  std::set<std::string> taken;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (ring->weight(i) != 0) continue;
    vars.push_back(ring->variable(i));
    taken.insert(ring->variable(i).name);
    images.push_back(Polynomial::variable(ring, i));
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::string base = gens.size() == 1 ? "w" : "w" + std::to_string(k + 1);
    vars.push_back(Variable{unique_name(base, taken), 1});
    images.push_back(Polynomial::term(ring, gens[k], ring->field().one()));
  }
  RingPtr source = RingContext::make(ring->field(), std::move(vars));
  Ideal kernel = map_kernel(source, images, algebra.ideal()).canonical();

  VeroneseResult result{GradedAlgebra(std::move(kernel), algebra.name().empty() ? "" : algebra.name() + "_veronese"),
                        std::vector<Polynomial>(images.end() - static_cast<std::ptrdiff_t>(gens.size()), images.end()),
                        delta,
                        degree_bound,
                        {}};
  if (algebra.all_weights_positive() && result.algebra.all_weights_positive()) {
    int top = degree_bound / delta;
    auto small = hilbert_function(result.algebra.ideal(), 0, top);
    auto big = hilbert_function(algebra.ideal(), 0, top * delta);
    for (int d = 0; d <= top; ++d)
      result.hilbert_check.emplace_back(d, small[static_cast<std::size_t>(d)].second,
                                        big[static_cast<std::size_t>(d * delta)].second);
  }
  return result;
}

GenerationReport generated_in_degree_one(const GradedAlgebra& algebra, int bound) {
  require_nonnegative(*algebra.ring(), "generated_in_degree_one");
  const RingPtr& ring = algebra.ring();
  GenerationReport report;
  report.bound = bound;
  std::vector<Polynomial> products;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (ring->weight(i) == 1) products.push_back(Polynomial::variable(ring, i));
  Ideal b1_ideal = ideal_sum(algebra.ideal(), Ideal(ring, std::move(products)));
  const auto& gb = algebra.ideal().groebner(MonomialOrder::grevlex());
  for (int d = 2; d <= bound; ++d) {
    for (const auto& mono : monomials_of_degree(*ring, d, 0)) {
      if (!gb.is_standard(mono)) continue;
      if (!b1_ideal.contains(Polynomial::term(ring, mono, ring->field().one()))) {
        report.generated = false;
        report.failing_degree = d;
        report.witness = mono;
        return report;
      }
    }
  }
  return report;
}

const CocycleEntry& TwistCocycle::at(std::size_t i, std::size_t j) const {
  for (const auto& e : entries)
    if (e.i == i && e.j == j) return e;
  throw std::out_of_range("no cocycle entry for the chart pair");
}

TwistCocycle twist_cocycle(const ProjAtlas& atlas, int n) {
  TwistCocycle g;
  g.n = n;
  for (std::size_t j = 0; j < atlas.charts.size(); ++j) {
    for (std::size_t i = 0; i < atlas.charts.size(); ++i) {
      Fraction ratio = Fraction::of(chart_expression(atlas.charts[j], atlas.generators[i]));
      Fraction value = ratio.pow(n);
      g.entries.push_back(CocycleEntry{i, j, value, value.inverse()});
    }
  }
  std::sort(g.entries.begin(), g.entries.end(),
            [](const CocycleEntry& a, const CocycleEntry& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
  return g;
}

namespace {

// f_i expressed in chart j: the overlap D+(f_i f_j) inverts it.
Polynomial overlap_unit(const ProjAtlas& atlas, std::size_t i, std::size_t j) {
  return chart_expression(atlas.charts[j], atlas.generators[i]);
}

Fraction transport(const Fraction& value, const ProjAtlas& atlas, std::size_t from, std::size_t to) {
  const auto& images = atlas.transitions[to][from];
  const RingPtr& target = atlas.charts[to].ring.ring();
  Fraction num = substitute(value.numerator, images, target);
  Fraction den = substitute(value.denominator, images, target);
  return num * den.inverse();
}

}  // namespace

bool cocycle_product_holds(const ProjAtlas& atlas, const TwistCocycle& a, const TwistCocycle& b,
                           const TwistCocycle& c) {
  for (const auto& e : c.entries) {
    Fraction lhs = a.at(e.i, e.j).value * b.at(e.i, e.j).value;
    if (!equivalent_in(lhs, e.value, atlas.charts[e.j].ring.ideal(), overlap_unit(atlas, e.i, e.j))) return false;
  }
  return true;
}

bool cocycle_condition_holds(const ProjAtlas& atlas, const TwistCocycle& g) {
  const std::size_t r = atlas.charts.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        Fraction lhs = transport(g.at(i, j).value, atlas, j, k) * g.at(j, k).value;
        Polynomial units = overlap_unit(atlas, i, k) * overlap_unit(atlas, j, k);
        if (!equivalent_in(lhs, g.at(i, k).value, atlas.charts[k].ring.ideal(), units)) return false;
      }
  return true;
}

}  // namespace reesblow
