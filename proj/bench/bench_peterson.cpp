#include <benchmark/benchmark.h>

#include "kmroots/cartan.hpp"
#include "kmroots/multiplicity.hpp"

using namespace kmroots;

namespace {

struct Fixture {
  MultiplicityTable lower;
  std::vector<RootVector> level;
};

// Table up to height h-1 plus the candidates of height h.
Fixture make(const IntMatrix& rows, int h) {
  const auto a = validate(rows);
  const auto q = symmetrize(a);
  return {compute_table(a, q, h - 1, {Execution::Serial, 1}), level_candidates(a, h)};
}

const IntMatrix kHyperbolic{{2, -3}, {-3, 2}};
const IntMatrix kRank3{{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}};
const IntMatrix kRank4{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -2}, {0, 0, -2, 2}};

void run(benchmark::State& state, const IntMatrix& rows, bool parallel) {
  static thread_local std::vector<std::pair<std::pair<const IntMatrix*, int>, Fixture>> memo;
  const int h = static_cast<int>(state.range(0));
  Fixture* fx = nullptr;
  for (auto& [key, f] : memo)
    if (key.first == &rows && key.second == h) fx = &f;
  if (!fx) fx = &memo.emplace_back(std::make_pair(&rows, h), make(rows, h)).second;
  for (auto _ : state) {
    auto out = parallel ? compute_level_parallel(fx->lower, fx->level) : compute_level_serial(fx->lower, fx->level);
    benchmark::DoNotOptimize(out);
  }
  state.counters["candidates"] = static_cast<double>(fx->level.size());
}

void BM_HyperbolicSerial(benchmark::State& s) { run(s, kHyperbolic, false); }
void BM_HyperbolicParallel(benchmark::State& s) { run(s, kHyperbolic, true); }
void BM_Rank3Serial(benchmark::State& s) { run(s, kRank3, false); }
void BM_Rank3Parallel(benchmark::State& s) { run(s, kRank3, true); }
void BM_Rank4Serial(benchmark::State& s) { run(s, kRank4, false); }
void BM_Rank4Parallel(benchmark::State& s) { run(s, kRank4, true); }

}  // namespace

BENCHMARK(BM_HyperbolicSerial)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HyperbolicParallel)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rank3Serial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rank3Parallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rank4Serial)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rank4Parallel)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
