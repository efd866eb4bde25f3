#include <benchmark/benchmark.h>

#include <random>

#include "gradex/analysis.hpp"

namespace {

using namespace gradex;

VeryGoodGrading random_grading(std::size_t n, std::mt19937_64& rng) {
  GroupSpec z = GroupSpec::parse("Z");
  std::vector<GroupElement> tuple = {z.identity()};
  for (std::size_t k = 1; k < n; ++k)
    tuple.push_back(z.element({static_cast<std::int64_t>(rng() % 7) - 3}));
  return {z, std::move(tuple)};
}

void LeavittNormalForm(benchmark::State& state) {
  RingSpec spec = RingSpec::leavitt();
  // Chains of x2 y2 fan out through the 1 - x1 y1 rule.
  LeavittWord word;
  for (int k = 0; k < state.range(0); ++k) word += "Bb";
  for (auto _ : state)
    benchmark::DoNotOptimize(leavitt_normal_form({{Rational(1), word}}, spec));
}

void MatrixMulRationals(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  GradedMatrix a(n, RingSpec::rationals());
  GradedMatrix b(n, RingSpec::rationals());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a.set(i, j, RingElement{Rational(static_cast<std::int64_t>(rng() % 19) - 9,
                                       static_cast<std::int64_t>(rng() % 7) + 1)});
      b.set(i, j, RingElement{Rational(static_cast<std::int64_t>(rng() % 19) - 9,
                                       static_cast<std::int64_t>(rng() % 7) + 1)});
    }
  for (auto _ : state) benchmark::DoNotOptimize(matrix_mul(a, b));
}

void EpsilonTableOverSupport(benchmark::State& state) {
  std::mt19937_64 rng(11);
  VeryGoodGrading vg = random_grading(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state)
    for (const auto& g : vg.unit_degree_support())
      benchmark::DoNotOptimize(epsilon(vg, g));
}

void WitnessConstruction(benchmark::State& state) {
  GroupSpec z4 = GroupSpec::parse("Z/4");
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<GroupElement> tuple;
  for (std::size_t k = 0; k < n; ++k)
    tuple.push_back(z4.element({static_cast<std::int64_t>(k % 4)}));
  VeryGoodGrading vg(z4, std::move(tuple));
  for (auto _ : state)
    for (const auto& g : vg.unit_degree_support())
      benchmark::DoNotOptimize(construct_witnesses(vg, g));
}

void CensusZ3(benchmark::State& state) {
  GroupSpec z3 = GroupSpec::parse("Z/3");
  std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(run_exhaustive(z3, n, RingSpec::rationals(), 1));
}

void ProductDecompose(benchmark::State& state) {
  RingSpec qx = RingSpec::poly_ring();
  GroupSpec z2 = GroupSpec::parse("Z/2");
  ProductGrading grading =
      product_grading(GroupSpec::parse("Z"),
                      GoodGrading::from_offdiagonal(z2, {z2.element({1})}));
  GradedMatrix m(2, qx);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m.set(i, j, ring_parse("1+x+3*x^2+x^7", qx));
  GradingDescriptor desc{grading};
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m, desc));
}

}  // namespace

BENCHMARK(LeavittNormalForm)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(MatrixMulRationals)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(EpsilonTableOverSupport)->Arg(6)->Arg(12);
BENCHMARK(WitnessConstruction)->Arg(8)->Arg(12);
BENCHMARK(CensusZ3)->Arg(3)->Arg(5);
BENCHMARK(ProductDecompose);

BENCHMARK_MAIN();
