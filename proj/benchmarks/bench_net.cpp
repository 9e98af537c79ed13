#include <benchmark/benchmark.h>

#include "vekws/net.hpp"
#include "vekws/rng.hpp"

namespace {

vekws::NetConfig echoic_config(int divisor, bool ds) {
  vekws::NetConfig cfg;
  cfg.width_divisor = divisor;
  cfg.depthwise_separable = ds;
  cfg.in_channels = 2;
  cfg.in_h = 64;
  cfg.in_w = 82;
  return cfg;
}

void BM_ForwardQuarterDs(benchmark::State& state) {
  const auto cfg = echoic_config(4, true);
  const auto weights = vekws::build_model(cfg, 3);
  vekws::Classifier classifier(weights);
  std::vector<double> input(static_cast<std::size_t>(cfg.in_channels) * cfg.in_h * cfg.in_w);
  vekws::Rng rng(5);
  for (auto& v : input) v = rng.normal();
  for (auto _ : state) {
    auto probs = classifier.predict(input);
    benchmark::DoNotOptimize(probs.probs.data());
  }
}
BENCHMARK(BM_ForwardQuarterDs);

void BM_ForwardEighthDs(benchmark::State& state) {
  const auto cfg = echoic_config(8, true);
  const auto weights = vekws::build_model(cfg, 3);
  vekws::Classifier classifier(weights);
  std::vector<double> input(static_cast<std::size_t>(cfg.in_channels) * cfg.in_h * cfg.in_w);
  vekws::Rng rng(5);
  for (auto& v : input) v = rng.normal();
  for (auto _ : state) {
    auto probs = classifier.predict(input);
    benchmark::DoNotOptimize(probs.probs.data());
  }
}
BENCHMARK(BM_ForwardEighthDs);

}  // namespace
