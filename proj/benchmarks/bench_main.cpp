#include <benchmark/benchmark.h>

#include "sysorder/mc.hpp"
#include "sysorder/theorems.hpp"

using namespace sysorder;

namespace {

LSDistribution weib(double a, double loc, double scale) {
  return LSDistribution(BaselineDistribution::weibull(a), loc, scale);
}

void BenchLsSurvival(benchmark::State& state) {
  const LSDistribution d = weib(1.7, 0.4, 1.2);
  double t = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.sf(t));
    t += 1e-6;
  }
}
BENCHMARK(BenchLsSurvival);

void BenchCopulaEval(benchmark::State& state) {
  const auto g = ArchimedeanGenerator::clayton(1.5);
  const std::vector<double> u{0.7, 0.4, 0.9, 0.25};
  for (auto _ : state) benchmark::DoNotOptimize(copula_eval(g, u));
}
BENCHMARK(BenchCopulaEval);

void BenchSeriesSf(benchmark::State& state) {
  SystemSpec spec({weib(1.4, 0.2, 1.0), weib(1.4, 0.1, 0.8), weib(1.4, 0.3, 1.3)},
                  ArchimedeanGenerator::gumbel(2.0), Structure::Series);
  double t = 0.6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_sf(spec, t));
    t += 1e-6;
  }
}
BENCHMARK(BenchSeriesSf);

void BenchOrderVerdict(benchmark::State& state) {
  const auto a = make_law(weib(1.5, 0.0, 1.0));
  const auto b = make_law(weib(1.5, 0.0, 1.4));
  const auto grid = make_order_grid(a, b, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(order_verdict(a, b, OrderRelation::HR, grid));
}
BENCHMARK(BenchOrderVerdict)->Arg(128)->Arg(512);

void BenchCheckCase(benchmark::State& state) {
  const TheoremCase c = random_case(TheoremId::T6, 3, 42);
  for (auto _ : state) benchmark::DoNotOptimize(check_case(c).overall);
}
BENCHMARK(BenchCheckCase);

void BenchRandomCase(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(random_case(TheoremId::T1, 3, seed++).sub_case);
}
BENCHMARK(BenchRandomCase);

void BenchSimulate(benchmark::State& state) {
  SystemSpec spec({weib(1.4, 0.0, 1.0), weib(1.4, 0.0, 0.8)},
                  ArchimedeanGenerator::clayton(1.0), Structure::Series);
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate_system(spec, 1000, seed++).lifetimes.back());
}
BENCHMARK(BenchSimulate);

}  // namespace

BENCHMARK_MAIN();
