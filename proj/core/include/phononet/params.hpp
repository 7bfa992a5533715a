#pragma once

#include <string>
#include <vector>

#include "phononet/config.hpp"

namespace phononet::params {

enum class ModulationScheme { ModeFrequencies, HalfSumFrequencies };

// Full physical parameter set. All frequencies and rates are angular
// (rad/s); temperature is the only quantity carrying SI units beyond that.
struct SystemParams {
  int n_modes = 3;                  // M
  double fsr = 0.0;                 // free spectral range delta_FSR (rad/s)
  double quality_factor = 1e7;      // Q
  double qubit_freq = 0.0;          // omega_q (rad/s)
  double qubit_decay = 0.0;         // Gamma (rad/s)
  double qubit_dephasing = 0.0;     // Gamma~ (rad/s), >= 0
  double temperature = 0.0;         // K
  std::vector<double> coupling;     // g_k (rad/s), length n_modes
  double rabi_amplitude = 0.0;      // Omega_0 (rad/s)
  double detuning = 0.0;            // Delta (rad/s)
  std::vector<double> modulation_freqs;  // w_i (rad/s)
  ModulationScheme modulation_scheme = ModulationScheme::ModeFrequencies;

  double max_coupling() const;
  double tau_fsr() const;  // 2*pi/fsr, the longest mechanical period
};

struct ModeSpectrum {
  std::vector<double> omegas;  // rad/s, strictly increasing
  int size() const { return static_cast<int>(omegas.size()); }
};

struct RegimeFlags {
  bool adiabatic = false;     // Gamma > max_k g_k
  bool far_detuned = false;   // Delta > factor * max(Gamma, Omega_0)
  std::vector<std::string> warnings;
};

// omega_k = k * delta_FSR, k = 1..M
ModeSpectrum mode_spectrum(const SystemParams& p);

// Bose occupation 1/(exp(hbar w / kB T) - 1); exactly 0 at T = 0.
double thermal_occupation(double omega, double temperature);

// gamma = omega / Q
double intrinsic_damping(double omega, double quality_factor);

// Throws std::invalid_argument on hard violations (non-positive rates etc.);
// regime checks are advisory and come back as flags/warnings.
RegimeFlags validate(const SystemParams& p, double far_detuned_factor = 3.0);

// Reference operating point: delta_FSR/2pi = 20 MHz, Q = 1e7, omega_q/2pi = 10 GHz,
// Gamma/2pi = 20 MHz, T = 10 mK, g = 0.5 Gamma, Omega_0 = 3 Gamma, Delta = 5 Omega_0,
// tones at the mode frequencies.
SystemParams default_operating_point(int n_modes = 3);

// Config file carries frequencies in Hz; converted to rad/s here.
SystemParams from_config(const Config& cfg);
SystemParams from_config_file(const std::string& path);

// Flat "key = value" dump (Hz where applicable) for output headers.
std::vector<std::pair<std::string, std::string>> describe(const SystemParams& p);

}  // namespace phononet::params
