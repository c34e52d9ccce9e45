#include <benchmark/benchmark.h>

#include "metallic/fractal.hpp"
#include "metallic/kernels.hpp"

using namespace metallic;
namespace kn = metallic::kernels;

namespace {

const FractalSpec& bench_spec() {
  static const FractalSpec spec{MetallicParams(1, 1), 4, 1, 1, RemovalPolicy::kKeepFirst, {}};
  return spec;
}

const IntervalCover& parents() {
  static const IntervalCover cover = cover_at_depth(bench_spec(), 8);
  return cover;
}

kn::FloatPattern float_pattern() {
  kn::FloatPattern pattern;
  for (const Survivor& s : survivors(bench_spec())) {
    pattern.offsets.push_back(to_float(s.start, 160));
    pattern.exponents.push_back(s.length_exponent);
  }
  return pattern;
}

template <auto Refine>
void BM_Refine(benchmark::State& state) {
  const kn::Pattern pattern = make_pattern(survivors(bench_spec()));
  const kn::PowerTable powers(bench_spec().params.field(), 64);
  for (auto _ : state) benchmark::DoNotOptimize(Refine(parents().intervals, pattern, powers));
  state.SetItemsProcessed(state.iterations() * parents().intervals.size() * pattern.size());
}

template <auto Histogram>
void BM_Histogram(benchmark::State& state) {
  const std::vector<int> exps{3, 4, 3, 3, 4, 3, 4};
  for (auto _ : state) benchmark::DoNotOptimize(Histogram(exps, static_cast<int>(state.range(0))));
}

template <auto Endpoints>
void BM_Endpoints(benchmark::State& state) {
  const BigFloat g = bench_spec().params.gamma(192);
  for (auto _ : state) benchmark::DoNotOptimize(Endpoints(parents().intervals, g, 128));
  state.SetItemsProcessed(state.iterations() * parents().intervals.size());
}

template <auto Ranges, auto Count>
void BM_BoxCount(benchmark::State& state) {
  const BigFloat g = bench_spec().params.gamma(192);
  const auto ends = kn::serial::endpoints(parents().intervals, g, 128);
  const BigFloat scale = pow(g, 28);
  for (auto _ : state) benchmark::DoNotOptimize(Count(Ranges(ends, scale)));
}

template <auto Limit>
void BM_LimitBoxes(benchmark::State& state) {
  const kn::FloatPattern pattern = float_pattern();
  const BigFloat g = bench_spec().params.gamma(160);
  const int e = static_cast<int>(state.range(0));
  const kn::LimitQuery query{g, pow(g, e), e / 3 + 33, 100'000'000};
  for (auto _ : state) benchmark::DoNotOptimize(Limit(pattern, query));
}

template <auto Sum>
void BM_PairwiseSum(benchmark::State& state) {
  std::vector<double> terms(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = 1.0 / static_cast<double>(i + 1);
  for (auto _ : state) benchmark::DoNotOptimize(Sum(terms));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(terms.size()));
}

}  // namespace

BENCHMARK(BM_Refine<kn::serial::refine>)->Name("refine/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Refine<kn::parallel::refine>)->Name("refine/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Histogram<kn::serial::exponent_histogram>)->Name("histogram/serial")->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Histogram<kn::parallel::exponent_histogram>)->Name("histogram/parallel")->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Endpoints<kn::serial::endpoints>)->Name("endpoints/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Endpoints<kn::parallel::endpoints>)->Name("endpoints/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxCount<kn::serial::box_ranges, kn::serial::count_boxes>)->Name("box_count/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxCount<kn::parallel::box_ranges, kn::parallel::count_boxes>)->Name("box_count/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LimitBoxes<kn::serial::limit_box_ranges>)->Name("limit_boxes/serial")->Arg(24)->Arg(28)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LimitBoxes<kn::parallel::limit_box_ranges>)->Name("limit_boxes/parallel")->Arg(24)->Arg(28)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairwiseSum<kn::serial::pairwise_sum>)->Name("pairwise_sum/serial")->Arg(1 << 20);
BENCHMARK(BM_PairwiseSum<kn::parallel::pairwise_sum>)->Name("pairwise_sum/parallel")->Arg(1 << 20);

BENCHMARK_MAIN();
