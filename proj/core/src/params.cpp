#include "phononet/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "phononet/constants.hpp"

namespace phononet::params {

double SystemParams::max_coupling() const {
  double m = 0.0;
  for (double g : coupling) m = std::max(m, g);
  return m;
}

double SystemParams::tau_fsr() const { return kTwoPi / fsr; }

ModeSpectrum mode_spectrum(const SystemParams& p) {
  if (p.n_modes < 1) throw std::invalid_argument("mode_spectrum: n_modes must be >= 1");
  ModeSpectrum s;
  s.omegas.resize(p.n_modes);
  for (int k = 0; k < p.n_modes; ++k) s.omegas[k] = (k + 1) * p.fsr;
  return s;
}

double thermal_occupation(double omega, double temperature) {
  if (omega <= 0.0) throw std::invalid_argument("thermal_occupation: omega must be > 0");
  if (temperature < 0.0) throw std::invalid_argument("thermal_occupation: T must be >= 0");
  if (temperature == 0.0) return 0.0;
  const double x = kHbar * omega / (kBoltzmann * temperature);
  // expm1 keeps precision for small x (high T) and the large-x tail underflows to 0.
  return 1.0 / std::expm1(x);
}

double intrinsic_damping(double omega, double quality_factor) {
  if (quality_factor <= 0.0) throw std::invalid_argument("intrinsic_damping: Q must be > 0");
  return omega / quality_factor;
}

RegimeFlags validate(const SystemParams& p, double far_detuned_factor) {
  if (p.n_modes < 1) throw std::invalid_argument("params: n_modes must be >= 1");
  if (p.fsr <= 0.0) throw std::invalid_argument("params: fsr must be > 0");
  if (p.quality_factor <= 0.0) throw std::invalid_argument("params: quality_factor must be > 0");
  if (p.qubit_freq <= 0.0) throw std::invalid_argument("params: qubit_freq must be > 0");
  if (p.qubit_decay <= 0.0) throw std::invalid_argument("params: qubit_decay must be > 0");
  if (p.qubit_dephasing < 0.0) throw std::invalid_argument("params: qubit_dephasing must be >= 0");
  if (p.temperature < 0.0) throw std::invalid_argument("params: temperature must be >= 0");
  if (static_cast<int>(p.coupling.size()) != p.n_modes)
    throw std::invalid_argument("params: coupling list must have n_modes entries");
  for (double g : p.coupling)
    if (g < 0.0) throw std::invalid_argument("params: coupling must be >= 0");

  RegimeFlags f;
  f.adiabatic = p.qubit_decay > p.max_coupling();
  f.far_detuned = p.detuning > far_detuned_factor * std::max(p.qubit_decay, p.rabi_amplitude);
  if (!f.adiabatic)
    f.warnings.push_back("adiabatic elimination questionable: Gamma <= max g_k");
  if (!f.far_detuned)
    f.warnings.push_back("drive not far detuned: Delta <= " +
                         std::to_string(far_detuned_factor) + " * max(Gamma, Omega_0)");
  return f;
}

SystemParams default_operating_point(int n_modes) {
  SystemParams p;
  p.n_modes = n_modes;
  p.fsr = kTwoPi * 20e6;
  p.quality_factor = 1e7;
  p.qubit_freq = kTwoPi * 10e9;
  p.qubit_decay = kTwoPi * 20e6;
  p.qubit_dephasing = 0.0;
  p.temperature = 10e-3;
  p.coupling.assign(n_modes, 0.5 * p.qubit_decay);
  p.rabi_amplitude = 3.0 * p.qubit_decay;
  p.detuning = 5.0 * p.rabi_amplitude;
  const ModeSpectrum s = mode_spectrum(p);
  p.modulation_freqs = s.omegas;
  p.modulation_scheme = ModulationScheme::ModeFrequencies;
  return p;
}

SystemParams from_config(const Config& cfg) {
  SystemParams p;
  p.n_modes = static_cast<int>(cfg.get_int("system", "n_modes", 3));
  p.fsr = kTwoPi * cfg.get_double("system", "fsr_hz", 20e6);
  p.quality_factor = cfg.get_double("system", "quality_factor", 1e7);
  p.qubit_freq = kTwoPi * cfg.get_double("system", "qubit_freq_hz", 10e9);

  p.qubit_decay = kTwoPi * cfg.get_double("noise", "qubit_decay_hz", 20e6);
  p.qubit_dephasing = kTwoPi * cfg.get_double("noise", "qubit_dephasing_hz", 0.0);
  p.temperature = cfg.get_double("noise", "temperature_k", 10e-3);

  if (cfg.has("system", "coupling_hz")) {
    std::vector<double> g = cfg.get_list("system", "coupling_hz");
    if (g.size() == 1) g.assign(p.n_modes, g[0]);
    if (static_cast<int>(g.size()) != p.n_modes)
      throw std::runtime_error("config: coupling_hz needs 1 or n_modes entries");
    p.coupling.resize(g.size());
    for (size_t i = 0; i < g.size(); ++i) p.coupling[i] = kTwoPi * g[i];
  } else {
    p.coupling.assign(p.n_modes, 0.5 * p.qubit_decay);
  }

  p.rabi_amplitude = kTwoPi * cfg.get_double("drive", "rabi_amplitude_hz",
                                             3.0 * p.qubit_decay / kTwoPi);
  p.detuning = kTwoPi * cfg.get_double("drive", "detuning_hz", 5.0 * p.rabi_amplitude / kTwoPi);

  const std::string scheme = cfg.get_string("drive", "modulation_scheme", "mode_frequencies");
  if (scheme == "mode_frequencies") {
    p.modulation_scheme = ModulationScheme::ModeFrequencies;
  } else if (scheme == "half_sum_frequencies") {
    p.modulation_scheme = ModulationScheme::HalfSumFrequencies;
  } else {
    throw std::runtime_error("config: unknown modulation_scheme: " + scheme);
  }

  if (cfg.has("drive", "modulation_freqs_hz")) {
    for (double f : cfg.get_list("drive", "modulation_freqs_hz"))
      p.modulation_freqs.push_back(kTwoPi * f);
  } else {
    // default: tones per scheme over the active spectrum
    const ModeSpectrum s = mode_spectrum(p);
    if (p.modulation_scheme == ModulationScheme::ModeFrequencies) {
      p.modulation_freqs = s.omegas;
    } else {
      for (int k = 0; k < s.size(); ++k)
        for (int l = k + 1; l < s.size(); ++l)
          p.modulation_freqs.push_back(0.5 * (s.omegas[k] + s.omegas[l]));
    }
  }
  validate(p);
  return p;
}

SystemParams from_config_file(const std::string& path) {
  return from_config(Config::parse_file(path));
}

std::vector<std::pair<std::string, std::string>> describe(const SystemParams& p) {
  std::vector<std::pair<std::string, std::string>> kv;
  auto num = [](double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
  };
  kv.emplace_back("n_modes", std::to_string(p.n_modes));
  kv.emplace_back("fsr_hz", num(p.fsr / kTwoPi));
  kv.emplace_back("quality_factor", num(p.quality_factor));
  kv.emplace_back("qubit_freq_hz", num(p.qubit_freq / kTwoPi));
  kv.emplace_back("qubit_decay_hz", num(p.qubit_decay / kTwoPi));
  kv.emplace_back("qubit_dephasing_hz", num(p.qubit_dephasing / kTwoPi));
  kv.emplace_back("temperature_k", num(p.temperature));
  {
    std::ostringstream ss;
    ss.precision(12);
    for (size_t i = 0; i < p.coupling.size(); ++i)
      ss << (i ? "," : "") << p.coupling[i] / kTwoPi;
    kv.emplace_back("coupling_hz", ss.str());
  }
  kv.emplace_back("rabi_amplitude_hz", num(p.rabi_amplitude / kTwoPi));
  kv.emplace_back("detuning_hz", num(p.detuning / kTwoPi));
  {
    std::ostringstream ss;
    ss.precision(12);
    for (size_t i = 0; i < p.modulation_freqs.size(); ++i)
      ss << (i ? "," : "") << p.modulation_freqs[i] / kTwoPi;
    kv.emplace_back("modulation_freqs_hz", ss.str());
  }
  kv.emplace_back("modulation_scheme",
                  p.modulation_scheme == ModulationScheme::ModeFrequencies
                      ? "mode_frequencies" : "half_sum_frequencies");
  return kv;
}

}  // namespace phononet::params
