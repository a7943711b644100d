#include <benchmark/benchmark.h>

#include <random>

#include "ccurves/sampling.hpp"
#include "ccurves/topology.hpp"

using namespace ccurves;

namespace {

std::vector<CyclicWord> sample(std::size_t len, int count) {
  std::mt19937_64 rng(len);
  std::vector<CyclicWord> out;
  while (static_cast<int>(out.size()) < count) {
    auto w = random_word(rng, 4, len);
    if (w.size() == len) out.push_back(std::move(w));
  }
  return out;
}

template <bool Fast>
void BM_lp1(benchmark::State& state) {
  const auto o = preset(2, 1);
  const auto words = sample(static_cast<std::size_t>(state.range(0)), 32);
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(Fast ? lp1(w, o) : lp1_reference(w, o));
  }
}

template <bool Fast>
void BM_lp2(benchmark::State& state) {
  const auto o = preset(2, 1);
  const auto words = sample(static_cast<std::size_t>(state.range(0)), 16);
  for (auto _ : state) {
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      benchmark::DoNotOptimize(Fast ? lp2(words[i], words[i + 1], o) : lp2_reference(words[i], words[i + 1], o));
    }
  }
}

void BM_scan_cobracket_zero(benchmark::State& state) {
  const auto o = preset(0, 3);
  ScanOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  opts.retain_findings = false;
  for (auto _ : state) benchmark::DoNotOptimize(scan_cobracket_zero(o, 10, opts).words_scanned);
}

void BM_scan_bracket_inverse(benchmark::State& state) {
  const auto o = preset(1, 2);
  ScanOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  opts.retain_findings = false;
  for (auto _ : state) benchmark::DoNotOptimize(scan_bracket_inverse(o, 7, opts).words_scanned);
}

}  // namespace

BENCHMARK(BM_lp1<false>)->Name("lp1/reference")->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_lp1<true>)->Name("lp1/fast")->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_lp2<false>)->Name("lp2/reference")->Arg(4)->Arg(8);
BENCHMARK(BM_lp2<true>)->Name("lp2/fast")->Arg(4)->Arg(8);
BENCHMARK(BM_scan_cobracket_zero)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_scan_bracket_inverse)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
