#include "phononet/scenarios.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "phononet/constants.hpp"
#include "phononet/csv.hpp"
#include "phononet/fock.hpp"
#include "phononet/gaussian.hpp"
#include "phononet/measures.hpp"
#include "phononet/modulation.hpp"
#include "phononet/tls.hpp"

namespace phononet::scenarios {

namespace fs = std::filesystem;

std::vector<double> snapshot_times(double t_end, int n) {
  if (n < 2) throw std::invalid_argument("snapshot_times: need >= 2 samples");
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = t_end * i / (n - 1);
  return t;
}

std::vector<std::string> run_sweep(int n_points, int threads,
                                   const std::function<void(int)>& point_fn) {
  std::vector<std::string> errors;
  std::mutex err_mutex;
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n_points) return;
      try {
        point_fn(i);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(err_mutex);
        errors.push_back(std::to_string(i) + ": " + e.what());
      }
    }
  };
  const int nt = std::clamp(threads, 1, n_points > 0 ? n_points : 1);
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return errors;
}

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string out_path(const RunOptions& opt, const std::string& name) {
  fs::create_directories(opt.out_dir);
  return (fs::path(opt.out_dir) / name).string();
}

using Meta = std::vector<std::pair<std::string, std::string>>;

Meta metadata(const params::SystemParams& p, const Meta& extra = {}) {
  Meta m = params::describe(p);
  m.insert(m.end(), extra.begin(), extra.end());
  return m;
}

std::string fmt(double v) { return csv::format_double(v); }

// ---- Gaussian pipeline -----------------------------------------------------

struct GaussianModel {
  params::ModeSpectrum spectrum;
  gaussian::DriftModel drift;
  Eigen::MatrixXd diffusion;
};

GaussianModel make_gaussian_model(const params::SystemParams& p,
                                  const params::ModeSpectrum& spectrum) {
  const tls::TlsEffectiveBath bath = tls::effective_bath(p, spectrum);
  const auto coupling = modulation::coupling_matrix(p, spectrum);
  GaussianModel m;
  m.spectrum = spectrum;
  m.drift = gaussian::make_drift_model(p, spectrum, coupling, bath);
  m.diffusion = gaussian::build_diffusion(p, spectrum, bath);
  return m;
}

std::vector<gaussian::CmSample> gaussian_run(const params::SystemParams& p,
                                             const params::ModeSpectrum& spectrum,
                                             double t_end,
                                             const std::vector<double>& samples) {
  const GaussianModel m = make_gaussian_model(p, spectrum);
  const double dt = gaussian::default_time_step(spectrum, p.modulation_freqs);
  return gaussian::integrate_lyapunov(gaussian::vacuum_cm(spectrum.size()), m.drift,
                                      m.diffusion, spectrum, t_end, dt, samples);
}

// ---- Exact-model pipeline --------------------------------------------------

fock::HilbertLayout triangle_layout(bool full) {
  return full ? fock::HilbertLayout{{2, 10, 9, 8}} : fock::HilbertLayout{{2, 6, 5, 4}};
}

struct TriangleSnapshot {
  double t = 0.0;
  double e123 = 0.0;
  double sigma_z = 0.0;
  double fq_norm = 0.0;
  double delta_ng = 0.0;
  std::vector<double> occupation;
  bool floored = false;
};

std::vector<TriangleSnapshot> exact_triangle_run(const params::SystemParams& p,
                                                 const fock::HilbertLayout& layout,
                                                 double t_end, int n_snaps,
                                                 double rtol) {
  const auto spectrum = params::mode_spectrum(p);
  const int m = spectrum.size();
  const auto ops = fock::build_operators(layout);
  std::vector<int> mode_factors(m);
  std::iota(mode_factors.begin(), mode_factors.end(), 1);
  measures::PartitionSpec parties;
  for (int k = 0; k < m; ++k) parties.parties.push_back({k});

  std::vector<TriangleSnapshot> out;
  auto on_sample = [&](double t, const fock::DensityMatrix& rho) {
    TriangleSnapshot s;
    s.t = t;
    s.sigma_z = fock::expectation(ops.sigma_z, rho);
    for (int k = 0; k < m; ++k)
      s.occupation.push_back(
          fock::expectation(fock::compose(ops.create[k], ops.annihilate[k]), rho));
    const fock::DensityMatrix rho_m = fock::partial_trace(rho, mode_factors);
    const auto rep = measures::genuine_multipartite(rho_m, parties);
    s.e123 = rep.value;
    s.floored = rep.floored;
    s.fq_norm = measures::normalized_qfi(rho_m);
    s.delta_ng = measures::non_gaussianity(rho_m);
    out.push_back(std::move(s));
  };

  fock::DensityMatrix rho = fock::ground_state(layout);
  fock::EvolveOptions eopt;
  eopt.rtol = rtol;
  fock::evolve(rho, p, spectrum, t_end, snapshot_times(t_end, n_snaps), on_sample, eopt);
  return out;
}

}  // namespace

// ---- triangle ---------------------------------------------------------------

int run_triangle(const Config& cfg, const RunOptions& opt) {
  params::SystemParams base = params::from_config(cfg);
  if (base.n_modes != 3)
    throw std::invalid_argument("triangle: n_modes must be 3");
  const double gamma = base.qubit_decay;
  const auto g0_list = cfg.get_list("triangle", "g0_over_gamma", {0.5, 1.0, 2.0});
  const double omega0 = cfg.get_double("triangle", "omega0_over_gamma", 3.0) * gamma;
  const double t_end = cfg.get_double("triangle", "t_end_tau", 100.0) * base.tau_fsr();
  const auto grid_temps = cfg.get_list("triangle", "grid_temperatures_mk", {5.0, 10.0, 20.0});
  const auto grid_deph = cfg.get_list("triangle", "grid_dephasing_over_gamma", {0.0, 0.05, 0.2});
  const double grid_t_end = cfg.get_double("triangle", "grid_t_end_tau", 100.0) * base.tau_fsr();
  const auto qfi_g0 = cfg.get_list("triangle", "qfi_g0_over_gamma", {0.5, 1.0});
  const auto qfi_om = cfg.get_list("triangle", "qfi_omega0_over_gamma", {3.0, 7.0});
  const int n_snaps = static_cast<int>(cfg.get_int("triangle", "snapshots", 200));
  const double rtol = cfg.get_double("exact", "rtol", 1e-6);
  const auto layout = triangle_layout(opt.full_dims);

  struct Point {
    params::SystemParams p;
    double t_end;
    // grid / qfi bookkeeping; negative means "time-series sweep point"
    int kind;  // 0 = g0 sweep, 1 = (T, dephasing) grid, 2 = qfi grid
    double a = 0.0, b = 0.0;
  };
  std::vector<Point> points;
  for (double g : g0_list) {
    Point pt{base, t_end, 0, g, 0.0};
    pt.p.coupling.assign(3, g * gamma);
    pt.p.rabi_amplitude = omega0;
    pt.p.detuning = 5.0 * omega0;
    points.push_back(pt);
  }
  for (double tk : grid_temps)
    for (double dph : grid_deph) {
      Point pt{base, grid_t_end, 1, tk, dph};
      pt.p.temperature = tk * 1e-3;
      pt.p.qubit_dephasing = dph * gamma;
      points.push_back(pt);
    }
  for (double g : qfi_g0)
    for (double om : qfi_om) {
      Point pt{base, t_end, 2, g, om};
      pt.p.coupling.assign(3, g * gamma);
      pt.p.rabi_amplitude = om * gamma;
      pt.p.detuning = 5.0 * om * gamma;
      points.push_back(pt);
    }

  std::vector<std::vector<TriangleSnapshot>> results(points.size());
  const auto errors = run_sweep(
      static_cast<int>(points.size()), opt.threads, [&](int i) {
        results[i] = exact_triangle_run(points[i].p, layout, points[i].t_end,
                                        n_snaps, rtol);
      });
  for (const auto& e : errors) fprintf(stderr, "triangle: point %s\n", e.c_str());

  Meta meta = metadata(base, {{"t_end_tau", fmt(t_end / base.tau_fsr())},
                              {"dims", opt.full_dims ? "2,10,9,8" : "2,6,5,4"}});

  // E(t) per g0
  {
    std::vector<std::string> cols{"t_over_tau"};
    for (double g : g0_list) cols.push_back("e123_g0_" + fmt(g));
    csv::Writer w(out_path(opt, "triangle_entanglement.csv"), cols, meta);
    for (int s = 0; s < n_snaps; ++s) {
      std::vector<double> row{t_end * s / (n_snaps - 1) / base.tau_fsr()};
      for (size_t i = 0; i < g0_list.size(); ++i)
        row.push_back(results[i].empty() ? kNan : results[i][s].e123);
      w.row(row);
    }
  }
  // full observable tracks per g0
  for (size_t i = 0; i < g0_list.size(); ++i) {
    std::vector<std::string> cols{"t_over_tau", "e123", "sigma_z", "fq_norm", "delta_ng"};
    for (int k = 1; k <= 3; ++k) cols.push_back("n" + std::to_string(k));
    csv::Writer w(out_path(opt, "triangle_observables_g0_" + fmt(g0_list[i]) + ".csv"),
                  cols, metadata(points[i].p));
    for (const auto& s : results[i])
      w.row({s.t / base.tau_fsr(), s.e123, s.sigma_z, s.fq_norm, s.delta_ng,
             s.occupation[0], s.occupation[1], s.occupation[2]});
  }
  // (T, dephasing) grid at the configured grid horizon
  {
    csv::Writer w(out_path(opt, "triangle_grid.csv"),
                  {"temperature_mk", "dephasing_over_gamma", "e123_final"},
                  metadata(base, {{"grid_t_end_tau", fmt(grid_t_end / base.tau_fsr())}}));
    size_t idx = g0_list.size();
    for (double tk : grid_temps)
      for (double dph : grid_deph) {
        const auto& r = results[idx++];
        w.row({tk, dph, r.empty() ? kNan : r.back().e123});
      }
  }
  // max normalized QFI over (g0, Omega0)
  {
    csv::Writer w(out_path(opt, "triangle_qfi.csv"),
                  {"g0_over_gamma", "omega0_over_gamma", "fq_norm_max"}, meta);
    size_t idx = g0_list.size() + grid_temps.size() * grid_deph.size();
    for (double g : qfi_g0)
      for (double om : qfi_om) {
        const auto& r = results[idx++];
        double best = kNan;
        if (!r.empty()) {
          best = 0.0;
          for (const auto& s : r) best = std::max(best, s.fq_norm);
        }
        w.row({g, om, best});
      }
  }
  return errors.empty() ? 0 : 2;
}

// ---- multimode ----------------------------------------------------------------

int run_multimode(const Config& cfg, const RunOptions& opt) {
  params::SystemParams base = params::from_config(cfg);
  const int m = static_cast<int>(cfg.get_int("multimode", "n_modes", 6));
  if (m < 6 || m > 100) throw std::invalid_argument("multimode: n_modes must be in [6, 100]");
  const double gamma = base.qubit_decay;
  const auto g0_list =
      cfg.get_list("multimode", "g0_over_gamma", {0.2, 0.4, 0.6, 0.8, 1.0});
  const double omega0 = cfg.get_double("multimode", "omega0_over_gamma", 3.0) * gamma;
  const double t_end = cfg.get_double("multimode", "t_end_tau", 1000.0) * base.tau_fsr();

  base.n_modes = m;
  base.rabi_amplitude = omega0;
  base.detuning = 5.0 * omega0;
  const auto spectrum = params::mode_spectrum(base);
  base.modulation_freqs = spectrum.omegas;  // entangle all modes pairwise

  std::vector<gaussian::CovarianceMatrix> finals(g0_list.size());
  const auto errors = run_sweep(
      static_cast<int>(g0_list.size()), opt.threads, [&](int i) {
        params::SystemParams p = base;
        p.coupling.assign(m, g0_list[i] * gamma);
        finals[i] = gaussian_run(p, spectrum, t_end, {t_end}).back().v;
      });
  for (const auto& e : errors) fprintf(stderr, "multimode: point %s\n", e.c_str());

  csv::Writer w(out_path(opt, "multimode.csv"),
                {"g0_over_gamma", "n_partite", "mode_set", "value", "floored"},
                metadata(base, {{"t_end_tau", fmt(t_end / base.tau_fsr())},
                                {"n_modes", std::to_string(m)}}));
  for (size_t i = 0; i < g0_list.size(); ++i) {
    for (int n = 3; n <= 6; ++n)
      for (int set = 1; set <= 2; ++set) {
        if (finals[i].v.size() == 0) {
          w.row({g0_list[i], double(n), double(set), kNan, kNan});
          continue;
        }
        measures::PartitionSpec spec;
        for (int q = 0; q < n; ++q)
          spec.parties.push_back({set == 1 ? q : m - n + q});
        const auto rep = measures::genuine_multipartite(finals[i], spec);
        w.row({g0_list[i], double(n), double(set), rep.value, rep.floored ? 1.0 : 0.0});
      }
  }
  return errors.empty() ? 0 : 2;
}

// ---- depth scan ----------------------------------------------------------------

namespace {

// two-mode surrogate {mode 1, mode k} driven by the two-tone set {w_1, w_k}
double depth_point(const params::SystemParams& base, int k, double g0,
                   double temperature, double t_end) {
  params::SystemParams p = base;
  p.n_modes = 2;
  p.temperature = temperature;
  p.coupling.assign(2, g0);
  params::ModeSpectrum spectrum;
  spectrum.omegas = {base.fsr, k * base.fsr};
  p.modulation_freqs = spectrum.omegas;
  const auto samples = gaussian_run(p, spectrum, t_end, {t_end});
  return measures::log_negativity_gaussian(samples.back().v, {0});
}

}  // namespace

int run_depth_scan(const Config& cfg, const RunOptions& opt) {
  params::SystemParams base = params::from_config(cfg);
  const double gamma = base.qubit_decay;
  auto k_real = cfg.get_list("depth_scan", "k_list", {2, 3, 5, 10, 20, 50, 100});
  const auto g0_list = cfg.get_list("depth_scan", "g0_over_gamma",
                                    {0.05, 0.1, 0.15, 0.2, 0.3, 0.5, 0.75, 1.0});
  const double omega0 = cfg.get_double("depth_scan", "omega0_over_gamma", 3.0) * gamma;
  const double t_end = cfg.get_double("depth_scan", "t_end_tau", 1000.0) * base.tau_fsr();
  auto temps_mk = cfg.get_list("depth_scan", "temperatures_mk", {5, 10, 20, 40, 80});
  base.rabi_amplitude = omega0;
  base.detuning = 5.0 * omega0;
  const double base_t_mk = base.temperature * 1e3;
  if (std::none_of(temps_mk.begin(), temps_mk.end(),
                   [&](double t) { return std::abs(t - base_t_mk) < 1e-9; }))
    temps_mk.insert(temps_mk.begin(), base_t_mk);

  std::vector<int> k_list;
  for (double k : k_real) k_list.push_back(static_cast<int>(std::lround(k)));

  const int nk = static_cast<int>(k_list.size());
  const int ng = static_cast<int>(g0_list.size());
  const int nt = static_cast<int>(temps_mk.size());
  std::vector<double> value(static_cast<size_t>(nk) * ng * nt, kNan);
  const auto errors = run_sweep(nk * ng * nt, opt.threads, [&](int idx) {
    const int it = idx / (nk * ng);
    const int ik = (idx / ng) % nk;
    const int ig = idx % ng;
    value[idx] = depth_point(base, k_list[ik], g0_list[ig] * gamma,
                             temps_mk[it] * 1e-3, t_end);
  });
  for (const auto& e : errors) fprintf(stderr, "depth-scan: point %s\n", e.c_str());

  const Meta meta = metadata(base, {{"t_end_tau", fmt(t_end / base.tau_fsr())}});
  {
    csv::Writer w(out_path(opt, "depth_scan.csv"),
                  {"k", "g0_over_gamma", "e_1k"}, meta);
    int it_base = 0;
    for (int it = 0; it < nt; ++it)
      if (std::abs(temps_mk[it] - base_t_mk) < 1e-9) it_base = it;
    for (int ik = 0; ik < nk; ++ik)
      for (int ig = 0; ig < ng; ++ig)
        w.row({double(k_list[ik]), g0_list[ig],
               value[static_cast<size_t>(it_base) * nk * ng + ik * ng + ig]});
  }
  {
    // smallest grid g0 with E > 0; -1 when the whole row stays separable
    csv::Writer w(out_path(opt, "depth_boundary.csv"),
                  {"temperature_mk", "k", "g0_threshold_over_gamma"}, meta);
    for (int it = 0; it < nt; ++it)
      for (int ik = 0; ik < nk; ++ik) {
        double threshold = -1.0;
        for (int ig = 0; ig < ng; ++ig) {
          const double v = value[static_cast<size_t>(it) * nk * ng + ik * ng + ig];
          if (v > 1e-9) {
            threshold = g0_list[ig];
            break;
          }
        }
        w.row({temps_mk[it], double(k_list[ik]), threshold});
      }
  }
  return errors.empty() ? 0 : 2;
}

// ---- compare -------------------------------------------------------------------

int run_compare(const Config& cfg, const RunOptions& opt) {
  params::SystemParams base = params::from_config(cfg);
  if (base.n_modes != 3) throw std::invalid_argument("compare: n_modes must be 3");
  const double gamma = base.qubit_decay;
  const auto g0_list = cfg.get_list("compare", "g0_over_gamma", {0.1, 0.5});
  const double omega0 = cfg.get_double("compare", "omega0_over_gamma", 1.0) * gamma;
  const double t_end = cfg.get_double("compare", "t_end_tau", 200.0) * base.tau_fsr();
  const int n_snaps = static_cast<int>(cfg.get_int("compare", "snapshots", 200));
  const double rtol = cfg.get_double("exact", "rtol", 1e-6);
  const auto layout = triangle_layout(opt.full_dims);
  base.rabi_amplitude = omega0;
  base.detuning = 5.0 * omega0;

  const auto spectrum = params::mode_spectrum(base);
  const auto times = snapshot_times(t_end, n_snaps);

  struct Track {
    std::vector<double> exact, gauss;
  };
  std::vector<Track> tracks(g0_list.size());
  const auto errors = run_sweep(
      static_cast<int>(g0_list.size()), opt.threads, [&](int i) {
        params::SystemParams p = base;
        p.coupling.assign(3, g0_list[i] * gamma);

        Track tr;
        fock::DensityMatrix rho = fock::ground_state(layout);
        fock::EvolveOptions eopt;
        eopt.rtol = rtol;
        fock::evolve(rho, p, spectrum, t_end, times,
                     [&](double, const fock::DensityMatrix& snap) {
                       const auto rho12 = fock::partial_trace(snap, {1, 2});
                       tr.exact.push_back(measures::negativity_density(rho12, {0}));
                     },
                     eopt);

        for (const auto& s : gaussian_run(p, spectrum, t_end, times)) {
          const auto v12 = gaussian::reduce_cm(s.v, {0, 1});
          tr.gauss.push_back(measures::log_negativity_gaussian(v12, {0}));
        }
        tracks[i] = std::move(tr);
      });
  for (const auto& e : errors) fprintf(stderr, "compare: point %s\n", e.c_str());

  for (size_t i = 0; i < g0_list.size(); ++i) {
    csv::Writer w(out_path(opt, "compare_g0_" + fmt(g0_list[i]) + ".csv"),
                  {"t_over_tau", "e12_exact", "e12_gaussian"},
                  metadata(base, {{"g0_over_gamma", fmt(g0_list[i])},
                                  {"dims", opt.full_dims ? "2,10,9,8" : "2,6,5,4"}}));
    const auto& tr = tracks[i];
    for (int s = 0; s < n_snaps; ++s)
      w.row({times[s] / base.tau_fsr(),
             s < static_cast<int>(tr.exact.size()) ? tr.exact[s] : kNan,
             s < static_cast<int>(tr.gauss.size()) ? tr.gauss[s] : kNan});
  }
  return errors.empty() ? 0 : 2;
}

// ---- tls spectrum ----------------------------------------------------------------

int run_tls_spectrum(const Config& cfg, const RunOptions& opt) {
  const params::SystemParams p = params::from_config(cfg);
  const auto spectrum = params::mode_spectrum(p);
  const double w1 = spectrum.omegas.front();
  const double span = cfg.get_double("tls_spectrum", "span_over_omega1", 6.0);
  const int n = static_cast<int>(cfg.get_int("tls_spectrum", "points", 241));

  {
    csv::Writer w(out_path(opt, "tls_spectrum.csv"), {"omega_over_omega1", "s"},
                  metadata(p));
    for (int i = 0; i < n; ++i) {
      const double x = -span + 2.0 * span * i / (n - 1);
      w.row({x, tls::fluctuation_spectrum(x * w1, p)});
    }
  }
  {
    const auto bath = tls::effective_bath(p, spectrum);
    csv::Writer w(out_path(opt, "tls_bath.csv"),
                  {"mode", "omega_hz", "gamma_tilde_hz", "n_tilde"}, metadata(p));
    for (int k = 0; k < spectrum.size(); ++k)
      w.row({double(k + 1), spectrum.omegas[k] / kTwoPi,
             bath.induced_damping[k] / kTwoPi, bath.induced_occupancy[k]});
  }
  return 0;
}

// ---- adjacency -------------------------------------------------------------------

int run_adjacency(const Config& cfg, const RunOptions& opt) {
  params::SystemParams p = params::from_config(cfg);
  params::ModeSpectrum spectrum;
  if (cfg.get_bool("adjacency", "noncommensurate", false)) {
    spectrum = modulation::noncommensurate_spectrum(
        p.n_modes, p.fsr, cfg.get_double("adjacency", "eps", 1e-2), opt.seed);
    // retune the drive to the perturbed spectrum
    std::vector<int> active(p.n_modes);
    std::iota(active.begin(), active.end(), 0);
    p.modulation_freqs = modulation::make_tones(spectrum, active, p.modulation_scheme);
  } else {
    spectrum = params::mode_spectrum(p);
  }
  const double tol = cfg.get_double("adjacency", "tolerance_hz", 1.0) * kTwoPi;

  const auto adj = modulation::build_adjacency(spectrum, p.modulation_freqs,
                                               p.modulation_scheme, tol);
  const auto coupling = modulation::coupling_matrix(p, spectrum);
  const auto rwa = modulation::rwa_hamiltonian(adj, coupling);

  std::ostringstream active;
  for (size_t i = 0; i < adj.active_set.size(); ++i)
    active << (i ? "," : "") << adj.active_set[i] + 1;
  csv::Writer w(out_path(opt, "adjacency.csv"),
                {"k", "l", "g_eff_hz", "b_tms", "b_qst", "cxx_hz", "cpp_hz"},
                metadata(p, {{"active_set", active.str()}}));
  for (int k = 0; k < p.n_modes; ++k)
    for (int l = 0; l < p.n_modes; ++l)
      w.row({double(k + 1), double(l + 1), coupling.g_eff(k, l) / kTwoPi,
             adj.tms(k, l), adj.qst(k, l), rwa.cxx(k, l) / kTwoPi,
             rwa.cpp(k, l) / kTwoPi});
  return 0;
}

}  // namespace phononet::scenarios
