#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "coxeter/cosets.hpp"
#include "coxeter/oracle.hpp"
#include "coxeter/ray.hpp"
#include "coxeter/system.hpp"

using namespace coxeter;

namespace {

CoxeterMatrix by_index(int64_t i) {
  switch (i) {
    case 0: return presets::type_a(3);
    case 1: return presets::type_h3();
    default: return presets::g1();
  }
}

const char* label(int64_t i) { return i == 0 ? "A3" : i == 1 ? "H3" : "G1"; }

std::vector<Word> random_words(std::size_t rank, std::size_t len, std::size_t count) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(rank) - 1);
  std::vector<Word> out(count);
  for (auto& w : out) {
    w.resize(len);
    for (auto& g : w) g = static_cast<Generator>(pick(rng));
  }
  return out;
}

void BM_ReduceCached(benchmark::State& state) {
  const CoxeterSystem sys(by_index(state.range(0)));
  const auto words = random_words(sys.rank(), static_cast<std::size_t>(state.range(1)), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sys.reduce(words[i++ % words.size()]));
  state.SetLabel(label(state.range(0)));
}
BENCHMARK(BM_ReduceCached)->ArgsProduct({{0, 1, 2}, {8, 16, 32}});

void BM_ReduceUncached(benchmark::State& state) {
  ReduceOptions opts;
  opts.cache_capacity = 0;
  const CoxeterSystem sys(by_index(state.range(0)), opts);
  const auto words = random_words(sys.rank(), static_cast<std::size_t>(state.range(1)), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sys.reduce(words[i++ % words.size()]));
  state.SetLabel(label(state.range(0)));
}
BENCHMARK(BM_ReduceUncached)->ArgsProduct({{0, 1, 2}, {8, 16}});

void BM_EnumerateH3(benchmark::State& state) {
  const auto m = presets::type_h3();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(m, std::nullopt).size());
}
BENCHMARK(BM_EnumerateH3)->Unit(benchmark::kMillisecond);

void BM_EnumerateAffineA2(benchmark::State& state) {
  const auto m = presets::affine_a2();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(m, state.range(0)).size());
}
BENCHMARK(BM_EnumerateAffineA2)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_LongestInCoset(benchmark::State& state) {
  const CoxeterSystem sys(presets::type_h3());
  const auto words = random_words(3, 12, 64);
  std::vector<Element> ws;
  for (const auto& w : words) ws.push_back(sys.reduce(w));
  const GenSet t{0, 1};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(longest_in_coset(sys, t, ws[i++ % ws.size()]));
}
BENCHMARK(BM_LongestInCoset);

void BM_TheoremTraceG1(benchmark::State& state) {
  const CoxeterSystem g1(presets::g1());
  const std::size_t horizon = static_cast<std::size_t>(state.range(0));
  const RaySpec ray = make_ray(g1, {}, {1, 0}, horizon);
  for (auto _ : state)
    benchmark::DoNotOptimize(theorem_trace(g1, ray, GenSet{1, 2}, 0, 1, horizon));
}
BENCHMARK(BM_TheoremTraceG1)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
