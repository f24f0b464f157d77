// Serial reference scan vs the OpenMP scan on the same axiom checks.

#include <benchmark/benchmark.h>

#include "clonal/harness.hpp"
#include "clonal/instances.hpp"

using namespace clonal;

namespace {

template <CloningSystem S>
void scan(benchmark::State& state, const S& sys, Axiom axiom, std::size_t max_n, ScanMode mode, Execution exec) {
  HarnessOptions o;
  o.max_n = max_n;
  o.mode = mode;
  o.samples = 20'000;
  o.exec = exec;
  std::uint64_t cases = 0;
  for (auto _ : state) {
    const auto r = check_axiom(sys, axiom, o);
    benchmark::DoNotOptimize(r.pass);
    cases += r.cases;
  }
  state.counters["cases/s"] = benchmark::Counter(static_cast<double>(cases), benchmark::Counter::kIsRate);
}

#define CLONAL_SCAN(name, sys, axiom, n, mode)                                                              \
  void name##_serial(benchmark::State& s) { scan(s, sys, axiom, n, mode, Execution::Serial); }            \
  void name##_parallel(benchmark::State& s) { scan(s, sys, axiom, n, mode, Execution::Parallel); }        \
  BENCHMARK(name##_serial)->Unit(benchmark::kMillisecond)->UseRealTime();                                   \
  BENCHMARK(name##_parallel)->Unit(benchmark::kMillisecond)->UseRealTime()

CLONAL_SCAN(symmetric_c1, SymmetricSystem{}, Axiom::C1, 4, ScanMode::Exhaustive);
CLONAL_SCAN(symmetric_c2, SymmetricSystem{}, Axiom::C2, 5, ScanMode::Exhaustive);
CLONAL_SCAN(signed_c3, SignedSystem{}, Axiom::C3, 4, ScanMode::Auto);
CLONAL_SCAN(matrix_c1, MatrixSystem{}, Axiom::C1, 5, ScanMode::Sampled);

}  // namespace

BENCHMARK_MAIN();
