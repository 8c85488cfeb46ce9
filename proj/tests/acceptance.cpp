#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/testing.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

void dual_numbers_regularization(Outcome& out) {
  ReesPresentation r = rees_extended(dual_numbers());
  auto reg = regularize(r.algebra);
  out.require(reg.algebra.ideal() == Ideal(r.ring(), Ps(r.ring(), {"e^2", "v*u - e", "v*e", "v^2"})),
              "regularized ideal is (e^2, v*u - e, v*e, v^2)");
  out.require(reg.algebra.ideal() == rabinowitsch_saturation(r.ideal(), P(r.ring(), "u")),
              "agrees with the auxiliary-variable saturation");
  auto t = t_regularity(r.algebra);
  out.require(!t.regular, "t-regularity is false");
  out.require(t.obstruction.contains(P(r.ring(), "v*e")), "obstruction contains v*e");
  auto cmp = compare_to_classical(r, 5);
  out.require(cmp.regularized.matches() && cmp.regularized.degrees.size() == 5, "regularized side matches up to 5");
}

void zero_divisor(Outcome& out) {
  auto r = ring({{"x", 0}, {"y", 0}, {"z", 0}});
  Ideal j = I(r, {"x*y - z^2", "x^2", "x*y", "x*z", "z^2"});
  Ideal ann = annihilator(P(r, "y"), j);
  out.require(ann.contains(P(r, "x")), "Ann(y) contains x");
  // x*y is a listed generator of J, so x annihilates y independently of any basis
  out.require(reduce_by(P(r, "x*y"), j.generators()).is_zero(), "x*y reduces to 0 by the generators");
  out.require(!j.normal_form(P(r, "x")).is_zero(), "NF(x, J) != 0");
}

void regular_embedding(Outcome& out) {
  ReesPresentation r = rees_extended(origin());
  out.require(regular_sequence_test(r.data.sequence(), Ideal(r.data.base().ring())).regular, "x, y is regular");
  out.require(t_regularity(r.algebra).regular, "t-regular");
  auto cmp = compare_to_classical(r, 5);
  out.require(cmp.unregularized.matches() && cmp.regularized.matches() && cmp.unregularized.degrees.size() == 5,
              "classical comparison matches for n <= 5");
  for (int n = 1; n <= 5; ++n)
    out.require(cmp.powers[static_cast<std::size_t>(n - 1)] ==
                    Ideal(r.data.base().ring(), naive_power(r.data.sequence(), n)),
                "I^" + std::to_string(n) + " agrees with the naive product");
  GradedAlgebra c = cone(r);
  out.require(c.ideal() == Ideal(c.ring(), Ps(c.ring(), {"x", "y"})), "cone ideal is (x, y)");
  Ideal v_only = eliminate(c.ideal(), std::vector<std::string>{"x", "y"});
  out.require(v_only.is_zero() && v_only.context()->nvars() == 2, "cone is QQ[v1, v2]");
  for (auto [d, n] : hilbert_function(v_only, 0, 8))
    out.require(n == static_cast<std::size_t>(d + 1) && n == piece_dimension(v_only, d),
                "Hilbert function d + 1 at d = " + std::to_string(d));
}

void origin_blowup(Outcome& out) {
  ProjAtlas bl = blow_up(origin());
  out.require(bl.charts.size() == 2, "two charts");
  if (bl.charts.size() != 2) return;
  const char* shapes[] = {"y - x*w", "x - y*w"};
  const char* free_var[] = {"y", "x"};
  for (std::size_t j = 0; j < 2; ++j) {
    auto cr = bl.charts[j].ring.ring();
    out.require(bl.charts[j].ring.ideal() == I(cr, {shapes[j]}), std::string("chart shape ") + shapes[j]);
    out.require(eliminate(bl.charts[j].ring.ideal(), std::vector<std::string>{free_var[j]}).is_zero(),
                "chart is a plane");
  }
  auto check = verify_atlas(bl);
  out.require(check.two_cycles_identity && check.transitions_well_defined, "transitions are mutually inverse");

  ExceptionalDivisor e = exceptional_divisor(origin());
  const char* principal[] = {"x", "y"};
  for (std::size_t j = 0; j < e.charts.size(); ++j) {
    const Chart& blc = e.blowup.charts[j];
    out.require(blc.exceptional && *blc.exceptional == P(blc.ring.ring(), principal[j]),
                std::string("exceptional generator ") + principal[j]);
    out.require(e.charts[j].agrees, "E chart = Bl chart / (generator)");
    auto er = e.atlas.charts[j].ring.ring();
    out.require(e.atlas.charts[j].ring.ideal() == I(er, {"x", "y"}), "E chart is an affine line");
  }
  out.require(e.charts.size() == 2 && verify_atlas(e.atlas).ok(), "E is glued from two lines");
  auto g1 = twist_cocycle(bl, 1);
  out.require(cocycle_product_holds(bl, g1, g1, twist_cocycle(bl, 2)), "g(1) g(1) = g(2)");
  out.require(g1.at(0, 1).value.equivalent(Fraction::of(P(bl.charts[1].ring.ring(), "w"))), "g12 = w");
}

void degenerate_blowups(Outcome& out) {
  auto r = ring({{"x", 0}, {"y", 0}});
  GradedAlgebra a(r);
  ProjAtlas identity = blow_up(ImmersionData(a, {}));
  out.require(identity.charts.empty() && is_empty_atlas(identity), "identity quotient gives the empty atlas");
  for (const char* f : {"1", "0"}) {
    ProjAtlas bl = blow_up(ImmersionData(a, Ps(r, {f})));
    bool single = bl.charts.size() == 1 && bl.charts[0].ring.ring()->same_variables(*r) &&
                  bl.charts[0].ring.ideal().is_zero();
    out.require(single, std::string("f = (") + f + ") gives a single chart equal to A");
  }
}

void deformation(Outcome& out) {
  ReesPresentation rees = rees_extended(origin());
  for (long c : {1L, 2L}) {
    auto fiber = deformation_fiber(rees, Field::rationals().from_int(c));
    out.require(fiber.isomorphic_to_base == true, "fiber at " + std::to_string(c) + " is isomorphic to A");
    auto fr = fiber.fiber.ring();
    std::string k = std::to_string(c);
    out.require(fiber.fiber.ideal() == I(fr, {("x - " + k + "*v1").c_str(), ("y - " + k + "*v2").c_str()}),
                "fiber at " + k + " is cut by v_i*" + k + " - f_i");
  }
  auto zero = deformation_fiber(rees, Field::rationals().zero());
  out.require(zero.equals_cone == true, "fiber at 0 equals the cone");
  out.require(strings(zero.fiber.ideal().generators()) == strings(cone(rees).ideal().generators()),
              "verbatim generator equality with the cone");
}

void groebner_properties(Outcome& out) {
  Gen gen(7);
  int ideals = 0;
  for (int trial = 0; trial < 220; ++trial) {
    RingPtr r = gen.any_ring(trial % 4 == 0 ? MonomialOrder::lex() : MonomialOrder::grevlex());
    Ideal ideal = gen.ideal(r);
    ++ideals;
    const auto& basis = ideal.groebner().basis();
    bool spolys = true;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        spolys = spolys && reduce_by(s_polynomial(basis[i], basis[j]), basis).is_zero();
    out.require(spolys, "S-polynomials reduce to 0 (trial " + std::to_string(trial) + ")");
    Polynomial p = gen.polynomial(r, 4, 4);
    Polynomial np = ideal.normal_form(p);
    out.require(ideal.normal_form(np) == np, "NF idempotent");
    Polynomial f = gen.nonzero(r, 2, 2);
    auto sat = saturation(ideal, f);
    out.require(saturation(sat.ideal, f).ideal == sat.ideal, "saturation idempotent");
    out.require(sat.ideal == rabinowitsch_saturation(ideal, f), "iterated colon = auxiliary variable");
    if (r->nvars() >= 2) {
      std::size_t drop = static_cast<std::size_t>(gen.integer(0, static_cast<int>(r->nvars()) - 1));
      Ideal e = eliminate(ideal, std::vector<std::size_t>{drop});
      for (const auto& g : e.generators()) {
        Polynomial back = g.rename_into(r, by_name(*e.context(), *r));
        out.require(!back.uses_variable(drop) && ideal.contains(back), "eliminate output lies in I");
      }
    }
  }
  out.require(ideals >= 200, "at least 200 ideals");
}

void graded_structure(Outcome& out) {
  auto r = ring({{"x", 0}, {"y", 0}, {"v1", 1}, {"v2", 1}});
  GradedAlgebra b(I(r, {"y*v1 - x*v2"}));
  auto split = split_degree_zero(b);
  for (const auto& c : check_split(b, split, 6, 3))
    out.require(c.additive() && c.disjoint, "split additivity at d = " + std::to_string(c.degree));

  Chart chart = homogeneous_localization_chart(b, P(r, "v1"));
  out.require(verify_degree_zero_localization(b, chart).ok(), "degree-zero localization maps are inverse");

  auto s = ring({{"s", 1}, {"t", 1}});
  GradedAlgebra p(s);
  for (int delta = 1; delta <= 3; ++delta) {
    auto v = veronese(p, delta, 4 * delta);
    out.require(v.hilbert_check.size() == 5, "Veronese checked for d <= 4");
    for (auto [d, small, big] : v.hilbert_check)
      out.require(small == big && big == piece_dimension(Ideal(s), delta * d) &&
                      small == piece_dimension(v.algebra.ideal(), d),
                  "Veronese identity delta = " + std::to_string(delta) + ", d = " + std::to_string(d));
    out.require(generated_in_degree_one(v.algebra).generated, "Veronese generated in degree 1");
  }
}

void naturality(Outcome& out) {
  auto z = ring({{"x", 0}, {"y", 0}, {"z", 0}});
  out.require(rees_base_change(origin(), GradedAlgebra(z), Ps(z, {"x", "y"})).equal, "base change to A[z]");
  auto q = ring({{"a", 0}, {"b", 0}});
  out.require(rees_base_change(origin(), GradedAlgebra(I(q, {"a*b"})), Ps(q, {"a^2", "a + b"})).equal,
              "base change to k[a,b]/(ab)");
  auto c = ring({{"x", 0}, {"y", 0}});
  auto target = rees_target_map(GradedAlgebra(c), Ps(c, {"x"}), Ps(c, {"y"}), 4);
  out.require(target.well_defined && target.surjective(), "target map surjective in degrees <= 4");
  out.require(blowup_commutes_with_new_variable(origin()), "blow-up commutes with adjoining z (origin)");
  out.require(blowup_commutes_with_new_variable(ImmersionData(GradedAlgebra(I(c, {"x*y"})), Ps(c, {"x", "y^2"}))),
              "blow-up commutes with adjoining z (non-reduced)");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "dual-numbers regularization", 1, dual_numbers_regularization},
      {2, "zero-divisor counterexample", 1, zero_divisor},
      {3, "regular embedding", 2, regular_embedding},
      {4, "origin blow-up", 2, origin_blowup},
      {5, "degenerate blow-ups", 1, degenerate_blowups},
      {6, "deformation to the normal cone", 1, deformation},
      {7, "Groebner property suite", 60, groebner_properties},
      {8, "graded-structure suite", 5, graded_structure},
      {9, "naturality suite", 5, naturality},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds < c.limit_seconds;
    bool pass = out.ok && in_time;
    if (!in_time) out.detail += (out.detail.empty() ? "" : "; ") + std::string("over the time limit");
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.limit_seconds, out.detail.empty() ? "" : ": ", out.detail.c_str());
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
