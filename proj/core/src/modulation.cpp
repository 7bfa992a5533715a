#include "phononet/modulation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace phononet::modulation {

double drive_amplitude(double t, double omega_0, const std::vector<double>& tones) {
  double sum = 0.0;
  for (double w : tones) sum += std::cos(w * t);
  return omega_0 * sum;
}

double effective_coupling_at(double omega_inst, int k, int l,
                             const params::SystemParams& p,
                             const params::ModeSpectrum& spectrum) {
  if (p.detuning == 0.0) throw std::invalid_argument("effective_coupling: Delta must be nonzero");
  const double wk = spectrum.omegas.at(k);
  const double wl = spectrum.omegas.at(l);
  if (wk <= 0.0 || wl <= 0.0)
    throw std::invalid_argument("effective_coupling: mode frequencies must be > 0");
  const double nbar_q = params::thermal_occupation(p.qubit_freq, p.temperature);
  return omega_inst * omega_inst / (2.0 * p.detuning * (2.0 * nbar_q + 1.0)) *
         p.coupling.at(k) * p.coupling.at(l) / (wk * wl);
}

double effective_coupling(int k, int l, const params::SystemParams& p,
                          const params::ModeSpectrum& spectrum) {
  return effective_coupling_at(p.rabi_amplitude, k, l, p, spectrum);
}

CouplingMatrix coupling_matrix(const params::SystemParams& p,
                               const params::ModeSpectrum& spectrum) {
  const int m = spectrum.size();
  CouplingMatrix c;
  c.g_eff.resize(m, m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l <= k; ++l)
      c.g_eff(k, l) = c.g_eff(l, k) = effective_coupling(k, l, p, spectrum);
  return c;
}

std::vector<double> make_tones(const params::ModeSpectrum& spectrum,
                               const std::vector<int>& active,
                               params::ModulationScheme scheme) {
  std::vector<double> tones;
  if (scheme == params::ModulationScheme::ModeFrequencies) {
    for (int k : active) tones.push_back(spectrum.omegas.at(k));
  } else {
    for (size_t a = 0; a < active.size(); ++a)
      for (size_t b = a + 1; b < active.size(); ++b)
        tones.push_back(0.5 * (spectrum.omegas.at(active[a]) +
                               spectrum.omegas.at(active[b])));
  }
  return tones;
}

AdjacencyMatrices build_adjacency(const params::ModeSpectrum& spectrum,
                                  const std::vector<double>& tones,
                                  params::ModulationScheme scheme,
                                  double tolerance) {
  if (tones.empty()) throw std::invalid_argument("build_adjacency: need at least one tone");
  const int m = spectrum.size();
  AdjacencyMatrices adj;
  adj.tms = Eigen::MatrixXd::Zero(m, m);
  adj.qst = Eigen::MatrixXd::Zero(m, m);

  // Expanded drive components: every ordered tone pair contributes the four
  // exponentials at +-(w_i + w_j) and +-(w_i - w_j), weight 1/4 each.
  std::vector<double> comp;
  comp.reserve(4 * tones.size() * tones.size());
  for (double wi : tones)
    for (double wj : tones) {
      comp.push_back(wi + wj);
      comp.push_back(-(wi + wj));
      comp.push_back(wi - wj);
      comp.push_back(-(wi - wj));
    }

  auto weight_at = [&](double target) {
    double w = 0.0;
    for (double c : comp)
      if (std::abs(c - target) <= tolerance) w += 0.25;
    return w;
  };

  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      if (l <= k) adj.tms(k, l) = adj.tms(l, k) = weight_at(spectrum.omegas[k] + spectrum.omegas[l]);
      adj.qst(k, l) = weight_at(spectrum.omegas[k] - spectrum.omegas[l]);
    }

  for (int k = 0; k < m; ++k) {
    bool active = false;
    if (scheme == params::ModulationScheme::ModeFrequencies) {
      for (double w : tones) active |= std::abs(w - spectrum.omegas[k]) <= tolerance;
    } else {
      for (double w : tones)
        for (int l = 0; l < m; ++l)
          active |= std::abs(2.0 * w - (spectrum.omegas[k] + spectrum.omegas[l])) <= tolerance;
    }
    if (active) adj.active_set.push_back(k);
  }
  return adj;
}

QuadraticForm rwa_hamiltonian(const AdjacencyMatrices& adjacency,
                              const CouplingMatrix& coupling) {
  const long m = adjacency.tms.rows();
  if (coupling.g_eff.rows() != m)
    throw std::invalid_argument("rwa_hamiltonian: adjacency/coupling size mismatch");
  QuadraticForm q;
  // Time average of s(t) x_k(t) x_l(t) with x_k(t) = x_k cos(w_k t) + p_k sin(w_k t):
  // the cos*cos product picks up the w_k + w_l and w_k - w_l drive components
  // in phase (tms + qst), the sin*sin product picks them up with opposite
  // signs (qst - tms), and the cross terms vanish for a cosine drive. The
  // adjacency weights are half-amplitudes and the table is read as a sum over
  // ordered index pairs, which together yield the 1/4 prefactor; the same
  // factor holds on the diagonal, where the DC weight feeds x^2 + p^2 and the
  // 2 w_k weight the x^2 - p^2 squeezing part. Cross-checked against the
  // literal modulated drift in the test suite.
  q.cxx = 0.25 * coupling.g_eff.cwiseProduct(adjacency.qst + adjacency.tms);
  q.cpp = 0.25 * coupling.g_eff.cwiseProduct(adjacency.qst - adjacency.tms);
  q.cxp = Eigen::MatrixXd::Zero(m, m);
  return q;
}

params::ModeSpectrum noncommensurate_spectrum(int n_modes, double delta, double eps,
                                              unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  params::ModeSpectrum s;
  s.omegas.resize(n_modes);
  for (int k = 0; k < n_modes; ++k)
    s.omegas[k] = (k + 1) * delta * (1.0 + eps * uni(rng));
  return s;
}

}  // namespace phononet::modulation
