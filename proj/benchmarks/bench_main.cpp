#include <benchmark/benchmark.h>

#include "phononet/fock.hpp"
#include "phononet/gaussian.hpp"
#include "phononet/measures.hpp"
#include "phononet/modulation.hpp"
#include "phononet/tls.hpp"

using namespace phononet;

namespace {

params::SystemParams bench_params(int n_modes) {
  params::SystemParams p = params::default_operating_point(n_modes);
  return p;
}

void bm_lindblad_rhs(benchmark::State& state) {
  const int per_mode = static_cast<int>(state.range(0));
  params::SystemParams p = bench_params(3);
  const auto spectrum = params::mode_spectrum(p);
  fock::HilbertLayout layout{{2, per_mode, per_mode - 1, per_mode - 2}};
  fock::DensityMatrix rho = fock::ground_state(layout);
  rho.rho.setConstant({1e-4, 0.0});
  rho.rho += rho.rho.adjoint().eval();
  rho.rho /= rho.rho.trace().real();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::lindblad_rhs(rho, 1e-9, p, spectrum));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_lindblad_rhs)->Arg(6)->Arg(8)->Arg(10);

void bm_lyapunov_step(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  params::SystemParams p = bench_params(m);
  const auto spectrum = params::mode_spectrum(p);
  const auto coupling = modulation::coupling_matrix(p, spectrum);
  const tls::TlsEffectiveBath bath = tls::effective_bath(p, spectrum);
  const auto drift = gaussian::make_drift_model(p, spectrum, coupling, bath);
  const auto diff = gaussian::build_diffusion(p, spectrum, bath);
  const double dt = gaussian::default_time_step(spectrum, p.modulation_freqs);
  const auto v0 = gaussian::vacuum_cm(m);
  for (auto _ : state) {
    // 64 RK4 steps per iteration, no snapshots
    auto out = gaussian::integrate_lyapunov(v0, drift, diff, spectrum, 64 * dt, dt,
                                            {64 * dt});
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(64 * state.iterations());
}
BENCHMARK(bm_lyapunov_step)->Arg(3)->Arg(6)->Arg(20);

void bm_log_negativity(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  gaussian::CovarianceMatrix v = gaussian::vacuum_cm(m);
  const auto tmsv = gaussian::two_mode_squeezed_cm(0.4);
  v.v.topLeftCorner(4, 4) = tmsv.v;
  std::vector<int> party{0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(measures::log_negativity_gaussian(v, party));
  }
}
BENCHMARK(bm_log_negativity)->Arg(2)->Arg(6)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
