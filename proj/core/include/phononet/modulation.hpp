#pragma once

#include <Eigen/Dense>
#include <vector>

#include "phononet/params.hpp"

namespace phononet::modulation {

// Weighted interaction graphs extracted from the modulated drive.
// tms accumulates drive weight resonant with w_k + w_l (two-mode squeezing),
// qst the weight resonant with w_k - w_l (state transfer). The qst diagonal
// collects the DC self-transfer weight; it is recorded but takes no part in
// entanglement graphs.
struct AdjacencyMatrices {
  Eigen::MatrixXd tms;
  Eigen::MatrixXd qst;
  std::vector<int> active_set;  // 0-based mode indices targeted by the tones
};

struct CouplingMatrix {
  Eigen::MatrixXd g_eff;  // G_{k,l} at Omega = Omega_0 (rad/s), symmetric
};

// Quadratic-form coefficients of the RWA Hamiltonian,
// H = sum_{k,l} (cxx_{kl} x_k x_l + cpp_{kl} p_k p_l + cxp_{kl} x_k p_l),
// with the sum running over all ordered index pairs.
struct QuadraticForm {
  Eigen::MatrixXd cxx, cpp, cxp;
};

// Omega(t) = Omega_0 * sum_i cos(w_i t)
double drive_amplitude(double t, double omega_0, const std::vector<double>& tones);

// G_{k,l} = Omega^2 g_k g_l / (2 Delta (2 nbar_q + 1) w_k w_l); static form
// uses Omega_0, the instantaneous form uses Omega(t).
double effective_coupling(int k, int l, const params::SystemParams& p,
                          const params::ModeSpectrum& spectrum);
double effective_coupling_at(double omega_inst, int k, int l,
                             const params::SystemParams& p,
                             const params::ModeSpectrum& spectrum);
CouplingMatrix coupling_matrix(const params::SystemParams& p,
                               const params::ModeSpectrum& spectrum);

// Tone sets per scheme over the chosen active modes (0-based indices):
// mode frequencies, or half sums (w_k + w_l)/2 over distinct pairs.
std::vector<double> make_tones(const params::ModeSpectrum& spectrum,
                               const std::vector<int>& active,
                               params::ModulationScheme scheme);

// Resonance bookkeeping of the expanded cos-product drive. Each ordered tone
// pair contributes components at (w_i + w_j) and (w_i - w_j) with weight 1/4
// (in units of Omega_0^2). Matches within 1e-9 * fsr-scale count as resonant;
// degenerate hits from distinct tone pairs add up.
AdjacencyMatrices build_adjacency(const params::ModeSpectrum& spectrum,
                                  const std::vector<double>& tones,
                                  params::ModulationScheme scheme,
                                  double tolerance);

// Surviving RWA coefficient tables from the adjacency weights and couplings.
QuadraticForm rwa_hamiltonian(const AdjacencyMatrices& adjacency,
                              const CouplingMatrix& coupling);

// w_k = k * delta * (1 + eps * r_k), r_k in (0,1) from a seeded generator.
params::ModeSpectrum noncommensurate_spectrum(int n_modes, double delta,
                                              double eps = 1e-2,
                                              unsigned long long seed = 12345);

}  // namespace phononet::modulation
