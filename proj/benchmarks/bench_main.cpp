#include <benchmark/benchmark.h>

#include "probekit/chekanov.hpp"
#include "probekit/reduction.hpp"
#include "probekit/spaces.hpp"
#include "probekit/verdict.hpp"

using namespace probekit;

namespace {

Window cube(std::size_t n, long hi) {
  Window w;
  for (std::size_t i = 0; i < n; ++i) {
    w.lo.emplace_back(0);
    w.hi.emplace_back(hi);
  }
  return w;
}

void BM_ScalarSign(benchmark::State& st) {
  Scalar a(Rat(7, 5), Rat(-99, 70), 2);
  for (auto _ : st) benchmark::DoNotOptimize(a.sign());
}
BENCHMARK(BM_ScalarSign);

void BM_Hermite(benchmark::State& st) {
  const long n = st.range(0);
  IntMatrix A(n, n + 2);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n + 2; ++j) A(i, j) = (i * 7 + j * 3) % 11 - 5;
  for (auto _ : st) benchmark::DoNotOptimize(hermite(A));
}
BENCHMARK(BM_Hermite)->Arg(3)->Arg(6)->Arg(10);

void BM_Enumerate(benchmark::State& st) {
  auto P = spaces::preset("cn:3");
  Point x = {Scalar(1), Scalar(2), Scalar(3)};
  for (auto _ : st) benchmark::DoNotOptimize(enumerate(P, x, st.range(0)));
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(2)->Arg(3);

void BM_OrbitC3(benchmark::State& st) {
  auto P = spaces::preset("cn:3");
  OrbitParams p;
  p.max_norm = 1;
  p.max_points = st.range(0);
  p.window = cube(3, 10);
  for (auto _ : st) benchmark::DoNotOptimize(explore(P, {Scalar(1), Scalar(2), Scalar(3)}, p));
}
BENCHMARK(BM_OrbitC3)->Arg(50)->Arg(200)->Arg(800);

void BM_OrbitQuadratic(benchmark::State& st) {
  auto P = spaces::preset("cn:3").with_field(2);
  OrbitParams p;
  p.max_norm = 1;
  p.max_points = st.range(0);
  p.window = cube(3, 6);
  Point x = {Scalar(1), Scalar(2), 1 + Scalar::sqrt(2)};
  for (auto _ : st) benchmark::DoNotOptimize(explore(P, x, p));
}
BENCHMARK(BM_OrbitQuadratic)->Arg(100)->Arg(500);

void BM_Decide(benchmark::State& st) {
  auto P = spaces::preset("cp2");
  Point x = {Scalar(Rat(-1, 2)), Scalar(Rat(-1, 5))}, y = {Scalar(Rat(-1, 2)), Scalar(Rat(1, 10))};
  OrbitParams p;
  for (auto _ : st) benchmark::DoNotOptimize(decide(P, x, y, p));
}
BENCHMARK(BM_Decide);

void BM_Holonomy(benchmark::State& st) {
  auto P = spaces::preset("c_x_s2");
  OrbitParams p;
  p.window = Window{{-1, -1}, {6, 1}};
  auto g = explore(P, {Scalar(1), Scalar(0)}, p);
  for (auto _ : st) benchmark::DoNotOptimize(holonomy_group(g, {Scalar(1), Scalar(0)}, st.range(0)));
}
BENCHMARK(BM_Holonomy)->Arg(50)->Arg(200);

void BM_ProbeWord(benchmark::State& st) {
  std::vector<Scalar> a = {1, 2, 3}, b = {1, 2, Scalar(st.range(0))};
  for (auto _ : st) benchmark::DoNotOptimize(chekanov::probe_word(a, b));
}
BENCHMARK(BM_ProbeWord)->Arg(5)->Arg(50)->Arg(500);

void BM_Reduce(benchmark::State& st) {
  auto P = spaces::preset("c2_x_ts1");
  auto V = AffineSlice::from_equations({make_vector({1, 1, 0})}, {Scalar(1)});
  for (auto _ : st) benchmark::DoNotOptimize(reduce(P, V));
}
BENCHMARK(BM_Reduce);

}  // namespace

BENCHMARK_MAIN();
