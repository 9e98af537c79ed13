#include <benchmark/benchmark.h>

#include "vekws/mfcc.hpp"
#include "vekws/rng.hpp"

namespace {

void BM_MfccExtract(benchmark::State& state) {
  vekws::AudioBuffer audio;
  audio.rate = 16000.0;
  audio.channels = 1;
  audio.samples.resize(16000);
  vekws::Rng rng(11);
  for (auto& s : audio.samples) s = 0.1 * rng.normal();
  const vekws::MfccConfig config;
  for (auto _ : state) {
    auto features = vekws::mfcc_extract(audio, config);
    benchmark::DoNotOptimize(features.values.data());
  }
}
BENCHMARK(BM_MfccExtract);

}  // namespace
