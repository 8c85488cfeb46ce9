#include <doctest.h>

#include "support/testing.hpp"

using namespace testing;

namespace {

constexpr int kIdeals = 240;

}  // namespace

TEST_CASE("property: Gröbner kernel on random ideals") {
  Gen gen(2024);
  for (int trial = 0; trial < kIdeals; ++trial) {
    RingPtr r = gen.any_ring(trial % 3 == 0 ? MonomialOrder::lex() : MonomialOrder::grevlex());
    Ideal ideal = gen.ideal(r);
    INFO("ideal " << testing::strings(ideal.generators()).size() << " gens, trial " << trial);
    const auto& gb = ideal.groebner();
    const auto& basis = gb.basis();

    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        CHECK(reduce_by(s_polynomial(basis[i], basis[j]), basis).is_zero());
    for (const auto& g : ideal.generators()) CHECK(reduce_by(g, basis).is_zero());

    Polynomial p = gen.polynomial(r, 4, 4), q = gen.polynomial(r, 4, 4);
    Scalar a = gen.coefficient(), b = gen.coefficient();
    Polynomial np = ideal.normal_form(p);
    CHECK(ideal.normal_form(np) == np);
    CHECK(ideal.normal_form(p.scaled(a) + q.scaled(b)) == np.scaled(a) + ideal.normal_form(q).scaled(b));

    Polynomial f = gen.nonzero(r, 2, 2);
    auto sat = saturation(ideal, f);
    CHECK(sat.ideal.contains(ideal));
    CHECK(saturation(sat.ideal, f).ideal == sat.ideal);
    CHECK(sat.ideal == rabinowitsch_saturation(ideal, f));

    if (r->nvars() >= 2) {
      std::vector<std::size_t> drop = {static_cast<std::size_t>(gen.integer(0, static_cast<int>(r->nvars()) - 1))};
      Ideal e = eliminate(ideal, drop);
      for (const auto& g : e.generators()) {
        Polynomial back = g.rename_into(r, by_name(*e.context(), *r));
        CHECK_FALSE(back.uses_variable(drop.front()));
        CHECK(ideal.contains(back));
      }
    }

    CHECK(testing::strings(Ideal(r, ideal.generators()).canonical().generators()) ==
          testing::strings(ideal.canonical().generators()));
  }
}
