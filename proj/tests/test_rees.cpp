#include <doctest.h>

#include "support/testing.hpp"

using namespace testing;

namespace {

ImmersionData immersion(const char* relations_or_empty, std::initializer_list<const char*> seq) {
  auto r = ring({{"x", 0}, {"y", 0}});
  std::vector<Polynomial> rel;
  if (*relations_or_empty) rel.push_back(P(r, relations_or_empty));
  std::vector<Polynomial> f;
  for (const char* t : seq) f.push_back(P(r, t));
  return ImmersionData(GradedAlgebra(Ideal(r, rel)), f);
}

}  // namespace

TEST_CASE("extended Rees presentations") {
  ReesPresentation r = rees_extended(origin());
  CHECK(r.ring()->describe().find("v1") != std::string::npos);
  CHECK(r.v_names() == std::vector<std::string>{"v1", "v2"});
  CHECK(r.u_name() == "u");
  CHECK(r.ring()->weight(r.u) == -1);
  CHECK(r.ideal() == Ideal(r.ring(), Ps(r.ring(), {"v1*u - x", "v2*u - y"})));

  ReesPresentation empty = rees_extended(immersion("", {}));
  CHECK(empty.ring()->nvars() == 3);
  CHECK(empty.ideal().is_zero());

  ReesPresentation zero = rees_extended(immersion("", {"0"}));
  CHECK(zero.v_names() == std::vector<std::string>{"v"});
  CHECK(zero.ideal() == Ideal(zero.ring(), Ps(zero.ring(), {"v*u"})));

  ReesPresentation dual = rees_extended(dual_numbers());
  CHECK(dual.ideal() == Ideal(dual.ring(), Ps(dual.ring(), {"e^2", "v*u - e"})));

  auto weighted = ring({{"x", 1}});
  CHECK_THROWS_AS(ImmersionData(GradedAlgebra(weighted), {}), IllFormedPayload);
}

TEST_CASE("cone of the origin is a polynomial ring in v1, v2") {
  ReesPresentation r = rees_extended(origin());
  GradedAlgebra c = cone(r);
  CHECK(c.ideal() == Ideal(c.ring(), Ps(c.ring(), {"x", "y"})));
  CHECK_FALSE(c.has_negative_weights());
  Ideal v_only = eliminate(c.ideal(), std::vector<std::string>{"x", "y"});
  CHECK(v_only.is_zero());
  for (auto [d, n] : hilbert_function(v_only, 0, 8)) {
    CHECK(n == static_cast<std::size_t>(d + 1));
    CHECK(n == piece_dimension(v_only, d));
  }
}

TEST_CASE("regularization and t-regularity of the dual numbers") {
  ReesPresentation r = rees_extended(dual_numbers());
  auto reg = regularize(r.algebra);
  CHECK(reg.algebra.ideal() == Ideal(r.ring(), Ps(r.ring(), {"e^2", "v*u - e", "v*e", "v^2"})));
  CHECK(reg.kernel.contains(P(r.ring(), "v*e")));
  CHECK(reg.kernel.contains(P(r.ring(), "v^2")));
  CHECK_FALSE(reg.zero_ring());
  CHECK(t_regularity(reg.algebra).regular);

  auto t = t_regularity(r.algebra);
  CHECK_FALSE(t.regular);
  CHECK(t.obstruction.contains(P(r.ring(), "v*e")));

  // associated graded of (e) in k[e]/(e^2): dim (e^n)/(e^{n+1}) = min(n + 1, 2) - min(n, 2)
  GradedAlgebra reg_cone = cone(ReesPresentation{r.data, reg.algebra, r.v, r.u});
  for (int n = 0; n <= 4; ++n) {
    std::size_t expected = static_cast<std::size_t>(std::min(n + 1, 2) - std::min(n, 2));
    CHECK(graded_piece_basis(reg_cone, n, 3).basis.size() == expected);
  }
}

TEST_CASE("regularization of k[u]/(u^2) is the zero ring") {
  auto r = ring({{"u", -1}});
  auto reg = regularize(GradedAlgebra(I(r, {"u^2"})));
  CHECK(reg.zero_ring());
  CHECK(reg.stabilized_at == 2);
}

TEST_CASE("classical comparison") {
  ReesPresentation r = rees_extended(origin());
  auto cmp = compare_to_classical(r, 4);
  CHECK(cmp.t_regular);
  CHECK(cmp.regularized.matches());
  CHECK(cmp.unregularized.matches());
  REQUIRE(cmp.powers.size() == 4);
  auto base = r.data.base().ring();
  CHECK(cmp.powers[1] == Ideal(base, naive_power(r.data.sequence(), 2)));
  CHECK(cmp.powers[1] == I(base, {"x^2", "x*y", "y^2"}));

  auto dual = compare_to_classical(rees_extended(dual_numbers()), 5);
  CHECK_FALSE(dual.t_regular);
  CHECK_FALSE(dual.unregularized.matches());
  // unregularized R_n = A*v^n has dimension 2 while I^n t^n has dimension <= 1
  for (const auto& c : dual.unregularized.degrees) CHECK_FALSE(c.injective);
  CHECK(dual.regularized.matches());

  auto vacuous = compare_to_classical(rees_extended(immersion("", {})), 5);
  CHECK(vacuous.vacuous);
}

TEST_CASE("non-positive part is free over A[u]") {
  CHECK(nonpositive_part_is_free(rees_extended(origin())));
  CHECK(nonpositive_part_is_free(rees_extended(dual_numbers())));
  CHECK(nonpositive_part_is_free(rees_extended(immersion("x*y", {"x", "y^2"}))));
}

TEST_CASE("base change along A -> A[z]") {
  auto r = ring({{"x", 0}, {"y", 0}, {"z", 0}});
  GradedAlgebra target(r);
  auto report = rees_base_change(origin(), target, Ps(r, {"x", "y"}));
  CHECK(report.equal);
  CHECK(strings(report.pulled.generators()) == strings(report.direct.ideal().generators()));

  auto s = ring({{"a", 0}, {"b", 0}});
  auto second = rees_base_change(origin(), GradedAlgebra(I(s, {"a*b"})), Ps(s, {"a^2", "a + b"}));
  CHECK(second.equal);

  auto quotient = ring({{"x", 0}, {"y", 0}});
  CHECK_THROWS_AS(rees_base_change(immersion("x*y", {"x"}), GradedAlgebra(quotient), Ps(quotient, {"x", "y"})),
                  IllFormedPayload);
}

TEST_CASE("functoriality in the target") {
  auto c = ring({{"x", 0}, {"y", 0}});
  auto report = rees_target_map(GradedAlgebra(c), Ps(c, {"x"}), Ps(c, {"y"}), 4);
  CHECK(report.well_defined);
  CHECK(report.surjective());
  CHECK(report.surjective_by_degree.size() == 9);
}

TEST_CASE("property: Rees invariants on small fixtures") {
  Gen gen(41);
  int regular_seen = 0, irregular_seen = 0;
  for (int trial = 0; trial < 16; ++trial) {
    auto r = ring({{"x", 0}, {"y", 0}});
    std::vector<Polynomial> rel;
    if (trial % 3 == 0) rel.push_back(gen.nonzero(r, 2, 2));
    std::vector<Polynomial> seq;
    int k = gen.integer(1, 2);
    for (int i = 0; i < k; ++i) seq.push_back(gen.nonzero(r, 2, 2));
    ImmersionData data(GradedAlgebra(Ideal(r, rel)), seq);
    ReesPresentation rees = rees_extended(data);

    CHECK(nonpositive_part_is_free(rees));

    auto reg = regularize(rees.algebra);
    auto again = regularize(reg.algebra);
    CHECK(again.algebra.ideal() == reg.algebra.ideal());
    if (!reg.zero_ring()) CHECK(t_regularity(reg.algebra).regular);

    auto treg = t_regularity(rees.algebra);
    auto cmp = compare_to_classical(rees, 4);
    CHECK(treg.regular == cmp.unregularized.matches());
    CHECK(cmp.regularized.matches());
    (treg.regular ? regular_seen : irregular_seen)++;

    if (rel.empty() && regular_sequence_test(data.sequence(), Ideal(r)).regular) CHECK(treg.regular);

    GradedAlgebra c = cone(rees);
    CHECK_FALSE(c.has_negative_weights());
    auto degree_zero = split_degree_zero(c).degree_zero;
    CHECK(degree_zero.ideal() == data.center().in(degree_zero.ring()));
  }
  CHECK(regular_seen > 0);
  CHECK(irregular_seen > 0);
}
