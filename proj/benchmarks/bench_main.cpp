#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "reesblow/blowup.hpp"
#include "reesblow/parser.hpp"

using namespace reesblow;

namespace {

RingPtr plane(std::size_t n) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(Variable{"x" + std::to_string(i + 1), 0});
  return RingContext::make(Field::rationals(), std::move(vars));
}

// Cyclic-n style system, small enough to stay in the millisecond range.
std::vector<Polynomial> cyclic(const RingPtr& r) {
  const std::size_t n = r->nvars();
  std::vector<Polynomial> out;
  for (std::size_t len = 1; len < n; ++len) {
    Polynomial sum(r);
    for (std::size_t start = 0; start < n; ++start) {
      Polynomial term = Polynomial::constant(r, 1);
      for (std::size_t k = 0; k < len; ++k) term = term * Polynomial::variable(r, (start + k) % n);
      sum = sum + term;
    }
    out.push_back(sum);
  }
  Polynomial prod = Polynomial::constant(r, 1);
  for (std::size_t i = 0; i < n; ++i) prod = prod * Polynomial::variable(r, i);
  out.push_back(prod - Polynomial::constant(r, 1));
  return out;
}

void BM_GroebnerCyclic(benchmark::State& state) {
  RingPtr r = plane(static_cast<std::size_t>(state.range(0)));
  auto gens = cyclic(r);
  for (auto _ : state) {
    auto gb = groebner(gens, r, MonomialOrder::grevlex());
    benchmark::DoNotOptimize(gb.size());
  }
}
BENCHMARK(BM_GroebnerCyclic)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_SaturateRees(benchmark::State& state) {
  auto r = plane(2);
  std::vector<Polynomial> seq;
  for (int k = 0; k < state.range(0); ++k)
    seq.push_back(parse_polynomial("x1^" + std::to_string(k + 1) + " - x2^" + std::to_string(k + 2), r));
  GradedAlgebra base(Ideal(r, {parse_polynomial("x1^2*x2", r)}));
  ReesPresentation rees = rees_extended(ImmersionData(base, seq));
  for (auto _ : state) {
    auto reg = regularize(rees.algebra);
    benchmark::DoNotOptimize(reg.stabilized_at);
  }
}
BENCHMARK(BM_SaturateRees)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_BlowUp(benchmark::State& state) {
  auto r = plane(static_cast<std::size_t>(state.range(0)));
  std::vector<Polynomial> seq;
  for (std::size_t i = 0; i < r->nvars(); ++i) seq.push_back(Polynomial::variable(r, i));
  ImmersionData data{GradedAlgebra(r), seq};
  for (auto _ : state) {
    ProjAtlas atlas = blow_up(data);
    benchmark::DoNotOptimize(atlas.charts.size());
  }
}
BENCHMARK(BM_BlowUp)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_ParsePrint(benchmark::State& state) {
  auto r = plane(3);
  const std::string text = "(x1 + 2*x2 - 3/5*x3)^6";
  for (auto _ : state) {
    Polynomial p = parse_polynomial(text, r);
    benchmark::DoNotOptimize(p.to_string());
  }
}
BENCHMARK(BM_ParsePrint);

}  // namespace

BENCHMARK_MAIN();
