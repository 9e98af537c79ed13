#include <benchmark/benchmark.h>

#include "vekws/fmcw.hpp"
#include "vekws/rng.hpp"

namespace {

// Echo-profile computation over one utterance worth of chirps, the hot path
// of featurization.
void BM_EchoProfile(benchmark::State& state) {
  const vekws::ChirpSpec spec{17000.0, 20000.0, 0.012, 48000.0, 0.1};
  const int frames = static_cast<int>(state.range(0));
  vekws::AudioBuffer stream = vekws::generate_fmcw_stream(spec, frames);
  vekws::Rng rng(7);
  for (auto& s : stream.samples) s += 0.01 * rng.normal();
  for (auto _ : state) {
    auto profile = vekws::compute_echo_profile(stream, spec, 0, 119);
    benchmark::DoNotOptimize(profile.values.data());
  }
  state.SetItemsProcessed(state.iterations() * frames);
}
BENCHMARK(BM_EchoProfile)->Arg(16)->Arg(83);

void BM_DifferentialProfile(benchmark::State& state) {
  const vekws::ChirpSpec spec{17000.0, 20000.0, 0.012, 48000.0, 0.1};
  const auto stream = vekws::generate_fmcw_stream(spec, 83);
  const auto profile = vekws::compute_echo_profile(stream, spec, 0, 119);
  for (auto _ : state) {
    auto diff = vekws::differential_echo_profile(profile);
    benchmark::DoNotOptimize(diff.values.data());
  }
}
BENCHMARK(BM_DifferentialProfile);

}  // namespace
