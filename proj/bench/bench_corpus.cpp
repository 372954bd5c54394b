#include <benchmark/benchmark.h>

#include "liereduce/corpus.hpp"

namespace {

const std::filesystem::path corpus_dir = LIEREDUCE_CORPUS_DIR;

void run(benchmark::State& state, bool parallel) {
  liereduce::CorpusOptions o;
  o.parallel = parallel;
  std::size_t records = 0;
  for (auto _ : state) {
    auto rs = liereduce::run_corpus(corpus_dir, o);
    records = rs.size();
    benchmark::DoNotOptimize(rs);
  }
  state.counters["records"] = static_cast<double>(records);
}

void BM_CorpusSerial(benchmark::State& state) { run(state, false); }
void BM_CorpusParallel(benchmark::State& state) { run(state, true); }

}  // namespace

BENCHMARK(BM_CorpusSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CorpusParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
