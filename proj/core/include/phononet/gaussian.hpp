#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "phononet/modulation.hpp"
#include "phononet/params.hpp"
#include "phononet/tls.hpp"

namespace phononet::gaussian {

// 2M x 2M second moments of (x_1, p_1, ..., x_M, p_M); vacuum = I/2.
struct CovarianceMatrix {
  Eigen::MatrixXd v;
  int modes() const { return static_cast<int>(v.rows()) / 2; }
};

struct PhysicalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CovarianceMatrix vacuum_cm(int n_modes);
CovarianceMatrix thermal_cm(const std::vector<double>& nbars);
// Standard two-mode squeezed vacuum with squeezing parameter r.
CovarianceMatrix two_mode_squeezed_cm(double r);

// Keep only the listed modes (0-based), preserving order.
CovarianceMatrix reduce_cm(const CovarianceMatrix& v, const std::vector<int>& modes);

// Momentum reflection of the listed modes (PPT congruence).
CovarianceMatrix partial_transpose_cm(const CovarianceMatrix& v,
                                      const std::vector<int>& party);

// Standard symplectic form for this ordering, blocks [[0,1],[-1,0]].
Eigen::MatrixXd symplectic_form(int n_modes);

// Symplectic spectrum (each doubly degenerate value reported once), ascending.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& v);

// Von Neumann entropy of the Gaussian state with covariance v, in nats.
double gaussian_entropy(const CovarianceMatrix& v);

// Drift A(t) = a0 + s(t) * a1 where s(t) = (Omega(t)/Omega_0)^2. The static
// part carries the free rotation and damping, a1 the effective couplings.
struct DriftModel {
  Eigen::MatrixXd a0, a1;
  std::vector<double> tones;  // empty tones means a static drift (s = 1)

  double drive_scale(double t) const;
  Eigen::MatrixXd at(double t) const;
};

DriftModel make_drift_model(const params::SystemParams& p,
                            const params::ModeSpectrum& spectrum,
                            const modulation::CouplingMatrix& coupling,
                            const tls::TlsEffectiveBath& bath);

// Static drift for an RWA coefficient table (cross-check path).
DriftModel make_rwa_drift_model(const modulation::QuadraticForm& q,
                                const params::ModeSpectrum& spectrum,
                                const params::SystemParams& p,
                                const tls::TlsEffectiveBath& bath);

Eigen::MatrixXd build_drift(double t, const params::SystemParams& p,
                            const params::ModeSpectrum& spectrum,
                            const modulation::CouplingMatrix& coupling,
                            const tls::TlsEffectiveBath& bath);

Eigen::MatrixXd build_diffusion(const params::SystemParams& p,
                                const params::ModeSpectrum& spectrum,
                                const tls::TlsEffectiveBath& bath);

// Largest angular frequency appearing in A(t), including drive beats.
double max_drift_frequency(const params::ModeSpectrum& spectrum,
                           const std::vector<double>& tones);
// Default integration step (2 pi / w_max) / 50.
double default_time_step(const params::ModeSpectrum& spectrum,
                         const std::vector<double>& tones);

struct CmSample {
  double t;
  CovarianceMatrix v;
};

struct LyapunovOptions {
  // min symplectic eigenvalue below 1/2 - this aborts with a diagnostic
  double physicality_tol = 1e-6;
  bool check_physicality = true;
};

// Fixed-step RK4 for dV/dt = A V + V A^T + D, sampled at sample_times.
// Rejects dt larger than default_time_step for the model's frequencies.
std::vector<CmSample> integrate_lyapunov(const CovarianceMatrix& v0,
                                         const DriftModel& drift,
                                         const Eigen::MatrixXd& diffusion,
                                         const params::ModeSpectrum& spectrum,
                                         double t_end, double dt,
                                         const std::vector<double>& sample_times,
                                         const LyapunovOptions& opt = {});

}  // namespace phononet::gaussian
