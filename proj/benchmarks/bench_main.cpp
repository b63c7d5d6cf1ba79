#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>
#include <random>

#include "wenonn/dataset.hpp"
#include "wenonn/losses.hpp"
#include "wenonn/network.hpp"
#include "wenonn/solver.hpp"
#include "wenonn/trainer.hpp"
#include "wenonn/weno.hpp"

using namespace wenonn;

namespace {

std::vector<Stencil5> random_stencils(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<Stencil5> out(n);
  for (auto& s : out)
    for (double& v : s) v = g(rng);
  return out;
}

SchemeConfig scheme_for(int id) {
  static auto net = std::make_shared<const NetworkParams>(
      NetworkParams::glorot_uniform(kDefaultLayerSizes, 3));
  switch (id) {
    case 0: return SchemeConfig::linear();
    case 1: return SchemeConfig::js();
    case 2: return SchemeConfig::z();
    case 3: return SchemeConfig::js_nn(net);
    default: return SchemeConfig::z_nn(net);
  }
}

void BM_Reconstruct(benchmark::State& state) {
  const auto cfg = scheme_for(static_cast<int>(state.range(0)));
  const auto stencils = random_stencils(1024);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct_interface(stencils[k++ & 1023], cfg));
  }
  state.SetLabel(std::string(scheme_name(cfg.kind)));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Reconstruct)->DenseRange(0, 4);

void BM_MlpForward(benchmark::State& state) {
  const auto net = NetworkParams::glorot_uniform(kDefaultLayerSizes, 5);
  FeatureVector x{0.2, 1.0, 0.5, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlp_forward(net, x));
    x[0] = std::fmod(x[0] + 0.37, 1.0);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MlpForward);

void BM_EulerRhs1D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateField u(make_grid(0, 1, n), 3);
  for (int i = 0; i < n; ++i) {
    const auto s = conserved_1d(1.0 + 0.2 * std::sin(6.0 * i / n), 0.3, 1.0, 1.4);
    u(i, 0, 0) = s.rho;
    u(i, 0, 1) = s.mom;
    u(i, 0, 2) = s.E;
  }
  StateField out = u;
  const auto bcs = Boundaries::all(Periodic{});
  const auto physics = PhysicsModel::euler(1.4);
  for (auto _ : state) {
    rhs(u, SchemeConfig::z(), bcs, 0.0, physics, out);
    benchmark::DoNotOptimize(out.values().data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_EulerRhs1D)->Arg(200)->Arg(1000);

void BM_TrainingStep(benchmark::State& state) {
  TrainConfig cfg;
  cfg.dataset.n_tanh = 50;
  cfg.dataset.n_sine = 25;
  cfg.dataset.n_poly = 25;
  const auto data = generate_dataset(cfg.seed, cfg.dataset);
  const auto batch = as_batch(data);
  const auto net = NetworkParams::glorot_uniform(kDefaultLayerSizes, 9);
  LossEvaluator eval(cfg, net);
  std::vector<double> grad(net.size());
  for (auto _ : state) {
    std::fill(grad.begin(), grad.end(), 0.0);
    benchmark::DoNotOptimize(eval.evaluate(batch, net, grad).total);
  }
  state.SetLabel("batch of 100 samples");
}
BENCHMARK(BM_TrainingStep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
