#include <benchmark/benchmark.h>

#include "qwalk/canonical.hpp"
#include "qwalk/charpoly.hpp"
#include "qwalk/enumeration.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/spectra.hpp"
#include "qwalk/supports.hpp"
#include "qwalk/tables.hpp"

using namespace qwalk;

static void BM_BuildUTheta(benchmark::State& state) {
  const Digraph g = make_Y(static_cast<int>(state.range(0)) / 2, static_cast<int>(state.range(0)));
  const Angle eta(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_U_theta(g, eta));
}
BENCHMARK(BM_BuildUTheta)->Arg(4)->Arg(6)->Arg(8);

static void BM_CharpolyHermitian(benchmark::State& state) {
  const Digraph g = make_Y(2, static_cast<int>(state.range(0)));
  const OpMatrix h = build_H_eta(g, Angle(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_exact(h));
}
BENCHMARK(BM_CharpolyHermitian)->Arg(5)->Arg(8)->Arg(12);

static void BM_CharpolyInteger(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = static_cast<std::int64_t>((i * 7 + j * 3) % 5) - 2;
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_integer(m));
}
BENCHMARK(BM_CharpolyInteger)->Arg(10)->Arg(20)->Arg(30);

static void BM_SquareSupport(benchmark::State& state) {
  const Digraph g = make_complete(static_cast<int>(state.range(0)));
  const SymmetricArcIndex idx(g);
  for (auto _ : state) benchmark::DoNotOptimize(square_support_fast(g, idx, Angle(1, 2), Sign::Plus));
}
BENCHMARK(BM_SquareSupport)->Arg(4)->Arg(6);

static void BM_SpectrumMapping(benchmark::State& state) {
  const Digraph g = make_Y(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_U_via_mapping(g, Angle(1, 2)));
}
BENCHMARK(BM_SpectrumMapping)->Arg(6)->Arg(10);

static void BM_Canonical(benchmark::State& state) {
  const Digraph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {2, 6}});
  for (auto _ : state) benchmark::DoNotOptimize(canonical(g));
}
BENCHMARK(BM_Canonical);

static void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_codes(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ClassifyTable(benchmark::State& state) {
  const TableSpec spec = TableSpec::square_support(Angle(2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(classify(static_cast<int>(state.range(0)), spec));
}
BENCHMARK(BM_ClassifyTable)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
