#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "phononet/params.hpp"

namespace phononet::tls {

using Complex = std::complex<double>;

// Mean-field qubit state (sigma_minus is always conj(sigma_plus)).
struct TlsState {
  Complex sigma_plus{0.0, 0.0};
  double sigma_z = -1.0;

  Complex sigma_minus() const { return std::conj(sigma_plus); }
  // |<s+>|^2 * 4 + <sz>^2 <= 1 inside the Bloch ball
  double bloch_norm() const {
    return 4.0 * std::norm(sigma_plus) + sigma_z * sigma_z;
  }
};

struct TlsEffectiveBath {
  std::vector<double> induced_damping;   // gamma~_k (rad/s)
  std::vector<double> induced_occupancy; // n~_k
};

// Which sign the pure-dephasing rate takes on the diagonal of the
// resolvent matrix. AsPrinted adds +dephasing (the published form);
// Damping subtracts it, which is the usual convention.
enum class DephasingSign { AsPrinted, Damping };

struct SpectrumOptions {
  DephasingSign dephasing_sign = DephasingSign::AsPrinted;
  double singular_tol = 1e-30;  // on |det(sI - M)| relative to scale^3
};

// Mean-field equations of motion, with <P> held at a fixed real value.
// Returns d/dt (sigma_plus, sigma_z). A dephasing rate > 0 adds the
// Lindblad-consistent -2*dephasing decay on the coherences.
void mean_field_rhs(const TlsState& s, double delta, double omega_rabi, double gamma,
                    double dephasing, double nbar_q, double mean_p,
                    Complex& dplus, double& dz);

// Closed-form fixed point for dephasing = 0; linear solve otherwise.
TlsState steady_state(double delta, double omega_rabi, double gamma, double nbar_q,
                      double mean_p, double dephasing = 0.0);

struct MeanFieldPoint {
  double t;
  TlsState state;
};

// Fixed-step RK4 on the mean-field equations with the instantaneous drive
// amplitude Omega(t); an empty tone list means a constant drive at Omega_0.
// Rejects dt that does not resolve the fastest scale
// (dt <= 0.05 * 2pi / max(Delta, Omega, Gamma, tones)).
std::vector<MeanFieldPoint> mean_field_evolve(const TlsState& initial,
                                              const params::SystemParams& p,
                                              double mean_p, double t_end, double dt);

// 3x3 drift matrix of the fluctuation vector (d sigma+, d sigma-, d sigma_z).
Eigen::Matrix3cd resolvent_matrix(const params::SystemParams& p, double nbar_q,
                                  const SpectrumOptions& opt = {});

// true iff all eigenvalues of the resolvent matrix have negative real part
bool resolvent_stable(const params::SystemParams& p, double nbar_q,
                      const SpectrumOptions& opt = {});

// Steady-state fluctuation spectrum S(omega) of sigma_z, via the resolvent.
double fluctuation_spectrum(double omega, const params::SystemParams& p,
                            const SpectrumOptions& opt = {});

// Oracle-grade alternative: integrate the regression two-time correlator
// and the Fourier integral numerically. Truncates at s_max = 20/Gamma_eff.
double fluctuation_spectrum_regression(double omega, const params::SystemParams& p,
                                       const SpectrumOptions& opt = {});

// gamma~_k = g_k^2 [S(w_k) - S(-w_k)],  n~_k = S(-w_k)/[S(w_k) - S(-w_k)].
// Throws if S(w_k) <= S(-w_k) while either value is non-negligible; both
// below tolerance (undriven qubit) yields gamma~ = n~ = 0.
TlsEffectiveBath effective_bath(const params::SystemParams& p,
                                const params::ModeSpectrum& spectrum,
                                const SpectrumOptions& opt = {});

}  // namespace phononet::tls
