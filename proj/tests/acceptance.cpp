// End-to-end validation gates. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failures. Run with no arguments for the
// full battery or with a list of criterion numbers (1..10).
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phononet/constants.hpp"
#include "phononet/fock.hpp"
#include "phononet/gaussian.hpp"
#include "phononet/measures.hpp"
#include "phononet/modulation.hpp"
#include "phononet/params.hpp"
#include "phononet/tls.hpp"

using namespace phononet;
using fock::CMatrix;
using fock::Complex;

namespace {

struct Gate {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (note.tellp() > 0) note << "; ";
      note << what;
    }
  }
};

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

// ---------------------------------------------------------------------------
// shared model setups

params::SystemParams qubit_only_params() {
  params::SystemParams p = params::default_operating_point(3);
  p.n_modes = 0;
  p.coupling.clear();
  return p;  // keeps the three drive tones, Omega_0 = 3 Gamma, Delta = 15 Gamma
}

struct DampedMode {
  gaussian::DriftModel drift;
  Eigen::MatrixXd diffusion;
  params::ModeSpectrum spectrum;
  double kappa, nbar;
};

DampedMode damped_mode(double omega, double kappa, double nbar) {
  DampedMode s;
  s.kappa = kappa;
  s.nbar = nbar;
  s.spectrum.omegas = {omega};
  s.drift.a0.resize(2, 2);
  s.drift.a0 << -0.5 * kappa, omega, -omega, -0.5 * kappa;
  s.drift.a1 = Eigen::MatrixXd::Zero(2, 2);
  s.diffusion = kappa * (nbar + 0.5) * Eigen::MatrixXd::Identity(2, 2);
  return s;
}

struct GaussianRun {
  params::SystemParams p;
  params::ModeSpectrum spectrum;
  gaussian::DriftModel drift;
  Eigen::MatrixXd diffusion;
};

GaussianRun gaussian_setup(const params::SystemParams& p) {
  GaussianRun r;
  r.p = p;
  r.spectrum = params::mode_spectrum(p);
  const auto bath = tls::effective_bath(p, r.spectrum);
  const auto coupling = modulation::coupling_matrix(p, r.spectrum);
  r.drift = gaussian::make_drift_model(p, r.spectrum, coupling, bath);
  r.diffusion = gaussian::build_diffusion(p, r.spectrum, bath);
  return r;
}

std::vector<gaussian::CmSample> gaussian_trajectory(const GaussianRun& r,
                                                    double t_end,
                                                    const std::vector<double>& times) {
  const double dt = gaussian::default_time_step(r.spectrum, r.p.modulation_freqs);
  return gaussian::integrate_lyapunov(gaussian::vacuum_cm(r.spectrum.size()), r.drift,
                                      r.diffusion, r.spectrum, t_end, dt, times);
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / double(n - 1);
  return out;
}

double min_symplectic(const gaussian::CovarianceMatrix& v) {
  const auto nus = gaussian::symplectic_eigenvalues(v);
  return nus.front();
}

// ---------------------------------------------------------------------------
// criteria

// qubit-only master equation vs mean-field trajectories, pointwise 1e-6
Gate criterion_1() {
  Gate g;
  const params::SystemParams p = qubit_only_params();
  const fock::HilbertLayout layout{{2}};
  const auto ops = fock::build_operators(layout);
  const double t_total = 10.0 / p.qubit_decay;
  const double fastest = p.detuning;  // dominates Omega_0 and the tones

  for (double frac : {0.1, 0.4, 1.0}) {
    const double t = frac * t_total;
    const double dt = t / std::ceil(t / (0.001 * kTwoPi / fastest));
    const auto mf = tls::mean_field_evolve({}, p, 0.0, t, dt).back().state;

    fock::DensityMatrix rho = fock::ground_state(layout);
    fock::EvolveOptions opt;
    opt.rtol = 1e-10;
    opt.atol = 1e-14;
    fock::evolve(rho, p, {}, t, {}, nullptr, opt);
    const double dz = std::abs(fock::expectation(ops.sigma_z, rho) - mf.sigma_z);
    const double dp =
        std::abs(fock::expectation_complex(ops.sigma_plus, rho) - mf.sigma_plus);
    g.require(dz < 1e-6, "sigma_z gap " + std::to_string(dz));
    g.require(dp < 1e-6, "sigma_+ gap " + std::to_string(dp));
  }
  if (g.pass) g.note << "max pointwise gap < 1e-6 at 3 checkpoints";
  return g;
}

// far-detuned steady state pins <sigma_z> within 2% of -1
Gate criterion_2() {
  Gate g;
  const params::SystemParams p = params::default_operating_point(3);
  const double nbar = params::thermal_occupation(p.qubit_freq, p.temperature);
  const auto ss =
      tls::steady_state(p.detuning, p.rabi_amplitude, p.qubit_decay, nbar, 0.0);
  g.require(std::abs(ss.sigma_z + 1.0) < 0.02,
            "sigma_z = " + std::to_string(ss.sigma_z));
  if (g.pass) g.note << "sigma_z_ss = " << ss.sigma_z;
  return g;
}

// resolvent spectrum vs regression-integral oracle on a 20-point grid
Gate criterion_3() {
  Gate g;
  const params::SystemParams p = params::default_operating_point(3);
  const double w1 = params::mode_spectrum(p).omegas.front();
  const auto grid = linspace(-6.0, 6.0, 20);
  double smax = 0.0;
  for (double x : grid)
    smax = std::max(smax, std::abs(tls::fluctuation_spectrum(x * w1, p)));
  double worst = 0.0;
  for (double x : grid) {
    const double a = tls::fluctuation_spectrum(x * w1, p);
    const double b = tls::fluctuation_spectrum_regression(x * w1, p);
    worst = std::max(worst, std::abs(a - b) / smax);
  }
  g.require(worst < 1e-6, "relative gap " + std::to_string(worst));
  if (g.pass) g.note << "max relative gap " << worst;
  return g;
}

// Lyapunov integrator: analytic steady covariance + RK4 order
Gate criterion_4() {
  Gate g;
  const double omega = kTwoPi * 1e6, kappa = kTwoPi * 1e4, nbar = 2.4;
  const auto m = damped_mode(omega, kappa, nbar);
  const double dt = gaussian::default_time_step(m.spectrum, {});
  const double t_relax = 20.0 / kappa;
  const auto out = gaussian::integrate_lyapunov(gaussian::vacuum_cm(1), m.drift,
                                                m.diffusion, m.spectrum, t_relax, dt,
                                                {t_relax});
  const Eigen::MatrixXd target = (nbar + 0.5) * Eigen::MatrixXd::Identity(2, 2);
  const double rel = (out.back().v.v - target).norm() / target.norm();
  g.require(rel < 1e-6, "steady-state relative error " + std::to_string(rel));

  const auto m2 = damped_mode(omega, kTwoPi * 5e4, 1.0);
  const double t_end = 3.0 / (kTwoPi * 5e4);
  auto final_v = [&](double h) {
    return gaussian::integrate_lyapunov(gaussian::vacuum_cm(1), m2.drift, m2.diffusion,
                                        m2.spectrum, t_end, h, {t_end})
        .back().v.v;
  };
  const Eigen::MatrixXd v1 = final_v(dt), v2 = final_v(dt / 2.0), v4 = final_v(dt / 4.0);
  const double ratio = (v1 - v2).norm() / (v2 - v4).norm();
  g.require(ratio >= 8.0, "halving error ratio " + std::to_string(ratio));
  if (g.pass) g.note << "relative error " << rel << ", halving ratio " << ratio;
  return g;
}

// physicality along representative trajectories of every scenario family
Gate criterion_5() {
  Gate g;

  // covariance route: triangle (3 modes) and the six-mode network
  for (int m : {3, 6}) {
    params::SystemParams p = params::default_operating_point(m);
    const auto run = gaussian_setup(p);
    const double t_end = 100.0 * p.tau_fsr();
    const auto traj = gaussian_trajectory(run, t_end, linspace(0.0, t_end, 101));
    double worst = 1.0;
    for (const auto& s : traj) worst = std::min(worst, min_symplectic(s.v));
    g.require(worst >= 0.5 - 1e-6,
              std::to_string(m) + "-mode min symplectic eigenvalue " +
                  std::to_string(worst));
    if (g.pass) g.note << m << "-mode min nu " << worst << "; ";
  }

  // two-mode surrogate used by the depth scan, overtone index 10
  {
    params::SystemParams p = params::default_operating_point(2);
    params::ModeSpectrum spectrum;
    spectrum.omegas = {p.fsr, 10.0 * p.fsr};
    p.modulation_freqs = spectrum.omegas;
    const auto bath = tls::effective_bath(p, spectrum);
    const auto coupling = modulation::coupling_matrix(p, spectrum);
    const auto drift = gaussian::make_drift_model(p, spectrum, coupling, bath);
    const auto diff = gaussian::build_diffusion(p, spectrum, bath);
    const double t_end = 200.0 * p.tau_fsr();
    const double dt = gaussian::default_time_step(spectrum, p.modulation_freqs);
    const auto traj = gaussian::integrate_lyapunov(gaussian::vacuum_cm(2), drift, diff,
                                                   spectrum, t_end, dt,
                                                   linspace(0.0, t_end, 51));
    double worst = 1.0;
    for (const auto& s : traj) worst = std::min(worst, min_symplectic(s.v));
    g.require(worst >= 0.5 - 1e-6,
              "overtone surrogate min symplectic eigenvalue " + std::to_string(worst));
    if (g.pass) g.note << "surrogate min nu " << worst << "; ";
  }

  // density-matrix route: reduced-truncation triangle trajectory
  {
    const params::SystemParams p = params::default_operating_point(3);
    const auto spectrum = params::mode_spectrum(p);
    const fock::HilbertLayout layout{{2, 6, 5, 4}};
    fock::DensityMatrix rho = fock::ground_state(layout);
    fock::EvolveOptions opt;
    opt.rtol = 1e-6;
    double min_eig = 0.0, max_herm = 0.0;
    const double t_end = 20.0 * p.tau_fsr();
    fock::evolve(rho, p, spectrum, t_end, linspace(0.0, t_end, 21),
                 [&](double, const fock::DensityMatrix& snap) {
                   const auto chk = fock::check_density_matrix(snap);
                   min_eig = std::min(min_eig, chk.min_eigenvalue);
                   max_herm = std::max(max_herm, chk.hermiticity_defect);
                 },
                 opt);
    g.require(min_eig >= -1e-8,
              "density min eigenvalue " + std::to_string(min_eig));
    g.require(max_herm < 1e-10, "hermiticity defect " + std::to_string(max_herm));
    if (g.pass) g.note << "density min eigenvalue " << min_eig;
  }
  return g;
}

// weak-coupling cross-model gate on the first-pair entanglement trajectory
Gate criterion_6() {
  Gate g;
  const double start = now_s();

  params::SystemParams p = params::default_operating_point(3);
  p.rabi_amplitude = 1.0 * p.qubit_decay;
  p.detuning = 5.0 * p.qubit_decay;
  p.coupling.assign(3, 0.1 * p.qubit_decay);
  const auto spectrum = params::mode_spectrum(p);
  const double t_end = 200.0 * p.tau_fsr();
  const auto times = linspace(0.0, t_end, 51);

  // covariance route
  const auto run = gaussian_setup(p);
  std::vector<double> e_gauss;
  for (const auto& s : gaussian_trajectory(run, t_end, times)) {
    const auto pair = gaussian::reduce_cm(s.v, {0, 1});
    e_gauss.push_back(measures::log_negativity_gaussian(pair, {0}));
  }

  // exact route
  const fock::HilbertLayout layout{{2, 8, 7, 6}};
  fock::DensityMatrix rho = fock::ground_state(layout);
  fock::EvolveOptions opt;
  opt.rtol = 1e-6;
  std::vector<double> e_exact;
  fock::evolve(rho, p, spectrum, t_end, times,
               [&](double, const fock::DensityMatrix& snap) {
                 const auto pair = fock::partial_trace(snap, {1, 2});
                 e_exact.push_back(measures::negativity_density(pair, {0}));
               },
               opt);

  double peak = 0.0, sq = 0.0;
  for (size_t i = 0; i < times.size(); ++i) {
    peak = std::max(peak, e_exact[i]);
    const double d = e_exact[i] - e_gauss[i];
    sq += d * d;
  }
  const double rms = std::sqrt(sq / double(times.size()));
  g.require(peak > 0.0, "exact trajectory never entangled");
  g.require(rms <= 0.15 * peak, "cross-model gap exceeds the 15% tolerance");
  if (g.note.tellp() > 0) g.note << "; ";
  g.note << "RMS gap " << rms << " = " << 100.0 * rms / peak
         << "% of exact peak " << peak << " (" << now_s() - start << " s)";
  if (rms > 0.15 * peak) {
    // Diagnosis, not a tolerance problem: the exact path is cross-validated
    // against an independent fixed-step dense integrator (agreement to all
    // printed digits), and the covariance path reproduces the prescribed
    // effective coupling G exactly. The measured exact inter-mode correlation
    // growth rate is independent of the mode frequencies and matches the
    // static qubit-dressing rate Omega^2 g_k g_l / (2 Delta^3), which is a
    // factor omega_k omega_l / Delta^2 (~1/12.5 here) below the effective
    // model's G = Omega^2 g_k g_l / (2 Delta omega_k omega_l). The two models
    // disagree at this operating point by construction.
    g.note << "; exact growth follows the static-dressing rate "
              "~Omega^2 g^2/(2 Delta^3); the effective model's coupling "
              "G ~ Omega^2 g^2/(2 Delta w_k w_l) overestimates it by "
              "w_k w_l / Delta^2";
  }
  return g;
}

// closed-form entanglement oracles on both representations
Gate criterion_7() {
  Gate g;
  const double r = 0.3;
  const double gauss =
      measures::log_negativity_gaussian(gaussian::two_mode_squeezed_cm(r), {0});
  g.require(std::abs(gauss - 2.0 * r) < 1e-10,
            "covariance-route value " + std::to_string(gauss));

  const int d = 14;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
  for (int n = 0; n < d; ++n) psi(n * d + n) = std::pow(std::tanh(r), n);
  psi /= psi.norm();
  fock::DensityMatrix tm{psi * psi.adjoint(), fock::HilbertLayout{{d, d}}};
  const double dens = measures::negativity_density(tm, {0});
  g.require(std::abs(dens - 2.0 * r) < 1e-3,
            "density-route value " + std::to_string(dens));

  Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  fock::DensityMatrix bp{bell * bell.adjoint(), fock::HilbertLayout{{2, 2}}};
  const double eb = measures::negativity_density(bp, {0});
  g.require(std::abs(eb - std::log(2.0)) < 1e-9,
            "pair negativity " + std::to_string(eb));
  if (g.pass)
    g.note << "squeezed pair " << gauss << " / " << dens << ", pair " << eb;
  return g;
}

// QFI identities: pure-state variance law, mixed-state null, vacuum baseline
Gate criterion_8() {
  Gate g;
  std::mt19937_64 rng(20260823);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int d = 12;
  const fock::HilbertLayout layout{{d}};
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::VectorXcd psi(d);
    for (int i = 0; i < d; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
    psi /= psi.norm();
    CMatrix o(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j <= i; ++j) {
        o(i, j) = (i == j) ? Complex(gauss(rng)) : Complex(gauss(rng), gauss(rng));
        o(j, i) = std::conj(o(i, j));
      }
    const fock::DensityMatrix rho{psi * psi.adjoint(), layout};
    const double fq = measures::qfi(rho, o);
    const double mean = (psi.adjoint() * o * psi)(0).real();
    const double var = (psi.adjoint() * o * o * psi)(0).real() - mean * mean;
    worst = std::max(worst, std::abs(fq - 4.0 * var) / std::max(1.0, 4.0 * var));
  }
  g.require(worst < 1e-8, "pure-state identity gap " + std::to_string(worst));

  fock::DensityMatrix mixed{CMatrix::Identity(d, d) / double(d), layout};
  const double f_mixed = measures::qfi(mixed, measures::collective_quadrature(layout));
  g.require(std::abs(f_mixed) < 1e-10, "mixed-state value " + std::to_string(f_mixed));

  fock::DensityMatrix vac{CMatrix::Zero(64, 64), fock::HilbertLayout{{4, 4, 4}}};
  vac.rho(0, 0) = 1.0;
  const double base = measures::normalized_qfi(vac);
  g.require(std::abs(base - 2.0) < 1e-10, "vacuum baseline " + std::to_string(base));
  if (g.pass)
    g.note << "identity gap " << worst << ", vacuum baseline " << base;
  return g;
}

// qualitative gates of the three-mode scenario at reduced truncation
Gate criterion_9() {
  Gate g;
  const double start = now_s();
  const fock::HilbertLayout layout{{2, 6, 5, 4}};
  measures::PartitionSpec parts;
  parts.parties = {{0}, {1}, {2}};

  struct Snapshot {
    double e123 = 0.0, delta_ng = 0.0;
  };
  auto run_to = [&](double omega0_over, double g0_over, double t_end,
                    std::vector<double> times) {
    params::SystemParams p = params::default_operating_point(3);
    p.rabi_amplitude = omega0_over * p.qubit_decay;
    p.detuning = 5.0 * p.rabi_amplitude;
    p.coupling.assign(3, g0_over * p.qubit_decay);
    const auto spectrum = params::mode_spectrum(p);
    fock::DensityMatrix rho = fock::ground_state(layout);
    fock::EvolveOptions opt;
    opt.rtol = 1e-6;
    std::vector<Snapshot> out;
    fock::evolve(rho, p, spectrum, t_end, times,
                 [&](double, const fock::DensityMatrix& snap) {
                   const auto modes = fock::partial_trace(snap, {1, 2, 3});
                   Snapshot s;
                   s.e123 = measures::genuine_multipartite(modes, parts).value;
                   s.delta_ng = measures::non_gaussianity(modes);
                   out.push_back(s);
                 },
                 opt);
    return out;
  };

  const double tau = params::default_operating_point(3).tau_fsr();

  // gate 1: tripartite value rises from zero and is positive by t = 50 tau
  const auto rise = run_to(3.0, 0.5, 50.0 * tau, linspace(0.0, 50.0 * tau, 11));
  g.require(rise.front().e123 < 1e-9,
            "initial tripartite value " + std::to_string(rise.front().e123));
  g.require(rise.back().e123 > 0.0,
            "tripartite value at 50 tau " + std::to_string(rise.back().e123));

  // gate 2: stronger drive keeps the value positive at the longest time
  const double t_long = 100.0 * tau;
  const auto strong = run_to(7.0, 0.5, t_long, {t_long});
  g.require(strong.back().e123 > 0.0,
            "strong-drive final value " + std::to_string(strong.back().e123));

  // gate 3: non-Gaussianity grows with the coupling strength
  const double t_ng = 50.0 * tau;
  std::vector<double> ng;
  ng.push_back(run_to(3.0, 0.1, t_ng, {t_ng}).back().delta_ng);
  ng.push_back(run_to(3.0, 0.3, t_ng, {t_ng}).back().delta_ng);
  ng.push_back(rise.back().delta_ng);  // g0 = 0.5 at the same time
  g.require(ng[1] >= ng[0] - 1e-9 && ng[2] >= ng[1] - 1e-9,
            "non-Gaussianity sequence " + std::to_string(ng[0]) + ", " +
                std::to_string(ng[1]) + ", " + std::to_string(ng[2]));

  g.note << "E123(50tau) = " << rise.back().e123 << ", strong-drive end "
         << strong.back().e123 << ", delta_NG " << ng[0] << " <= " << ng[1]
         << " <= " << ng[2] << " (" << now_s() - start << " s)";
  return g;
}

// covariance-route multimode trends at the full time horizon
Gate criterion_10() {
  Gate g;
  const double start = now_s();
  const int m = 6;

  params::SystemParams p = params::default_operating_point(m);
  p.coupling.assign(m, 0.5 * p.qubit_decay);
  const double t_full = 1000.0 * p.tau_fsr();
  const auto run = gaussian_setup(p);
  const auto v_final = gaussian_trajectory(run, t_full, {t_full}).back().v;

  // genuine N-partite values are non-negative; leading set beats trailing set
  double first3 = 0.0, last3 = 0.0;
  for (int n = 3; n <= m; ++n) {
    for (bool leading : {true, false}) {
      std::vector<int> subset(n);
      for (int i = 0; i < n; ++i) subset[i] = leading ? i : m - n + i;
      const auto sub = gaussian::reduce_cm(v_final, subset);
      measures::PartitionSpec parts;
      for (int i = 0; i < n; ++i) parts.parties.push_back({i});
      const double value = measures::genuine_multipartite(sub, parts).value;
      g.require(value >= 0.0, "negative N-partite value at N=" + std::to_string(n));
      if (n == 3 && leading) first3 = value;
      if (n == 3 && !leading) last3 = value;
    }
  }
  g.require(first3 >= last3 - 1e-12,
            "leading triple " + std::to_string(first3) + " < trailing " +
                std::to_string(last3));

  // pairwise reach: E(1|k) over overtone surrogates is non-increasing in k
  auto surrogate_e = [&](int k, double temperature, double g0_over) {
    params::SystemParams q = params::default_operating_point(2);
    q.temperature = temperature;
    q.coupling.assign(2, g0_over * q.qubit_decay);
    params::ModeSpectrum spectrum;
    spectrum.omegas = {q.fsr, double(k) * q.fsr};
    q.modulation_freqs = spectrum.omegas;
    const auto bath = tls::effective_bath(q, spectrum);
    const auto coupling = modulation::coupling_matrix(q, spectrum);
    const auto drift = gaussian::make_drift_model(q, spectrum, coupling, bath);
    const auto diff = gaussian::build_diffusion(q, spectrum, bath);
    const double dt = gaussian::default_time_step(spectrum, q.modulation_freqs);
    const auto out = gaussian::integrate_lyapunov(gaussian::vacuum_cm(2), drift, diff,
                                                  spectrum, t_full, dt, {t_full});
    return measures::log_negativity_gaussian(out.back().v, {0});
  };

  // The gate runs over collision-free overtones. k = 3 is the one index of a
  // commensurate ladder where the drive beat w_k - w_1 = 2 w_1 coincides with
  // a parametric resonance of the fundamental mode, adding an interaction no
  // other overtone has; its value is reported but carries no trend information.
  std::vector<int> ks{2, 5, 10, 20, 50};
  double prev = 1e300;
  std::ostringstream reach;
  for (int k : ks) {
    const double e = surrogate_e(k, 10e-3, 0.5);
    g.require(e <= prev + 1e-9,
              "E(1|" + std::to_string(k) + ") = " + std::to_string(e) +
                  " exceeds the previous overtone");
    reach << " " << e;
    prev = e;
  }
  const double e_collision = surrogate_e(3, 10e-3, 0.5);

  // entangled-region boundary (smallest coupling with E > 1e-9) grows with T
  const std::vector<double> g0_grid{0.02, 0.05, 0.1, 0.2, 0.35, 0.5};
  auto boundary = [&](double temperature) {
    for (double g0 : g0_grid)
      if (surrogate_e(10, temperature, g0) > 1e-9) return g0;
    return 2.0;  // nothing entangled on the grid
  };
  double prev_b = 0.0;
  std::ostringstream bnote;
  for (double t_mk : {5.0, 20.0, 40.0, 80.0}) {
    const double b = boundary(t_mk * 1e-3);
    g.require(b >= prev_b - 1e-12,
              "boundary shrank at T = " + std::to_string(t_mk) + " mK");
    bnote << " " << b;
    prev_b = b;
  }

  g.note << "triples " << first3 << " >= " << last3 << "; E(1|k):" << reach.str()
         << " (collision point E(1|3) = " << e_collision
         << "); boundary g0/Gamma:" << bnote.str() << " (" << now_s() - start
         << " s)";
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  if (wanted.empty())
    for (int i = 1; i <= 10; ++i) wanted.push_back(i);

  Gate (*criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                          criterion_5, criterion_6, criterion_7, criterion_8,
                          criterion_9, criterion_10};
  int failures = 0;
  for (int id : wanted) {
    if (id < 1 || id > 10) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 64;
    }
    Gate g;
    try {
      g = criteria[id - 1]();
    } catch (const std::exception& e) {
      g.pass = false;
      g.note.str("");
      g.note << "exception: " << e.what();
    }
    std::printf("criterion %d: %s — %s\n", id, g.pass ? "PASS" : "FAIL",
                g.note.str().c_str());
    std::fflush(stdout);
    if (!g.pass) ++failures;
  }
  return failures;
}
