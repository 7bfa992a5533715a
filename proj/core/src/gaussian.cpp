#include "phononet/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "phononet/constants.hpp"

namespace phononet::gaussian {

CovarianceMatrix vacuum_cm(int n_modes) {
  return {0.5 * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes)};
}

CovarianceMatrix thermal_cm(const std::vector<double>& nbars) {
  const int m = static_cast<int>(nbars.size());
  CovarianceMatrix v = vacuum_cm(m);
  for (int k = 0; k < m; ++k) {
    v.v(2 * k, 2 * k) = v.v(2 * k + 1, 2 * k + 1) = nbars[k] + 0.5;
  }
  return v;
}

CovarianceMatrix two_mode_squeezed_cm(double r) {
  CovarianceMatrix v{Eigen::MatrixXd::Zero(4, 4)};
  const double c = 0.5 * std::cosh(2.0 * r);
  const double s = 0.5 * std::sinh(2.0 * r);
  v.v.diagonal().setConstant(c);
  v.v(0, 2) = v.v(2, 0) = s;
  v.v(1, 3) = v.v(3, 1) = -s;
  return v;
}

CovarianceMatrix reduce_cm(const CovarianceMatrix& v, const std::vector<int>& modes) {
  const int m = static_cast<int>(modes.size());
  CovarianceMatrix out{Eigen::MatrixXd(2 * m, 2 * m)};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      out.v.block<2, 2>(2 * a, 2 * b) = v.v.block<2, 2>(2 * modes[a], 2 * modes[b]);
  return out;
}

CovarianceMatrix partial_transpose_cm(const CovarianceMatrix& v,
                                      const std::vector<int>& party) {
  CovarianceMatrix out = v;
  for (int k : party) {
    out.v.row(2 * k + 1) *= -1.0;
    out.v.col(2 * k + 1) *= -1.0;
  }
  return out;
}

Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& v) {
  const int m = v.modes();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(v.v);
  if (es.eigenvalues()(0) <= 0.0)
    throw PhysicalityError("symplectic_eigenvalues: covariance matrix not positive definite");
  const Eigen::MatrixXd sqrt_v = es.operatorSqrt();
  // i * sqrt(V) Omega sqrt(V) is Hermitian with spectrum {+-nu_k}
  const Eigen::MatrixXd k = sqrt_v * symplectic_form(m) * sqrt_v;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(
      std::complex<double>(0.0, 1.0) * k.cast<std::complex<double>>());
  std::vector<double> nus(m);
  for (int i = 0; i < m; ++i) nus[i] = hs.eigenvalues()(m + i);  // positive half
  std::sort(nus.begin(), nus.end());
  return nus;
}

double gaussian_entropy(const CovarianceMatrix& v) {
  double s = 0.0;
  for (double nu : symplectic_eigenvalues(v)) {
    const double np = nu + 0.5;
    const double nm = nu - 0.5;
    s += np * std::log(np);
    if (nm > 0.0) s -= nm * std::log(nm);
  }
  return s;
}

double DriftModel::drive_scale(double t) const {
  if (tones.empty()) return 1.0;
  double sum = 0.0;
  for (double w : tones) sum += std::cos(w * t);
  return sum * sum;
}

Eigen::MatrixXd DriftModel::at(double t) const {
  return a0 + drive_scale(t) * a1;
}

DriftModel make_drift_model(const params::SystemParams& p,
                            const params::ModeSpectrum& spectrum,
                            const modulation::CouplingMatrix& coupling,
                            const tls::TlsEffectiveBath& bath) {
  const int m = spectrum.size();
  DriftModel d;
  d.tones = p.modulation_freqs;
  d.a0 = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  d.a1 = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (int k = 0; k < m; ++k) {
    const double w = spectrum.omegas[k];
    const double kappa = params::intrinsic_damping(w, p.quality_factor)
                         + bath.induced_damping.at(k);
    d.a0(2 * k, 2 * k) = -0.5 * kappa;
    d.a0(2 * k + 1, 2 * k + 1) = -0.5 * kappa;
    d.a0(2 * k, 2 * k + 1) = w;
    d.a0(2 * k + 1, 2 * k) = -w;
    // couplings enter the momentum rows only: p_k picks up -G_{k,l} x_l
    for (int l = 0; l < m; ++l) d.a1(2 * k + 1, 2 * l) = -coupling.g_eff(k, l);
  }
  return d;
}

DriftModel make_rwa_drift_model(const modulation::QuadraticForm& q,
                                const params::ModeSpectrum& spectrum,
                                const params::SystemParams& p,
                                const tls::TlsEffectiveBath& bath) {
  const int m = spectrum.size();
  // Hamiltonian part of the flow is Omega_s * grad H; the coefficient tables
  // run over ordered pairs, so the symmetric gradient factor is (C + C^T).
  const Eigen::MatrixXd hxx = q.cxx + q.cxx.transpose();
  const Eigen::MatrixXd hpp = q.cpp + q.cpp.transpose();
  DriftModel d;
  d.a0 = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  d.a1 = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (int k = 0; k < m; ++k) {
    const double kappa = params::intrinsic_damping(spectrum.omegas[k], p.quality_factor)
                         + bath.induced_damping.at(k);
    d.a0(2 * k, 2 * k) = -0.5 * kappa;
    d.a0(2 * k + 1, 2 * k + 1) = -0.5 * kappa;
    for (int l = 0; l < m; ++l) {
      // x_k' = dH/dp_k, p_k' = -dH/dx_k
      d.a0(2 * k, 2 * l + 1) += hpp(k, l);
      d.a0(2 * k, 2 * l) += q.cxp(l, k);
      d.a0(2 * k + 1, 2 * l) -= hxx(k, l);
      d.a0(2 * k + 1, 2 * l + 1) -= q.cxp(k, l);
    }
  }
  return d;
}

Eigen::MatrixXd build_drift(double t, const params::SystemParams& p,
                            const params::ModeSpectrum& spectrum,
                            const modulation::CouplingMatrix& coupling,
                            const tls::TlsEffectiveBath& bath) {
  return make_drift_model(p, spectrum, coupling, bath).at(t);
}

Eigen::MatrixXd build_diffusion(const params::SystemParams& p,
                                const params::ModeSpectrum& spectrum,
                                const tls::TlsEffectiveBath& bath) {
  const int m = spectrum.size();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (int k = 0; k < m; ++k) {
    const double w = spectrum.omegas[k];
    const double gamma = params::intrinsic_damping(w, p.quality_factor);
    const double nbar = params::thermal_occupation(w, p.temperature);
    const double val = gamma * (nbar + 0.5)
                       + bath.induced_damping.at(k) * (bath.induced_occupancy.at(k) + 0.5);
    d(2 * k, 2 * k) = d(2 * k + 1, 2 * k + 1) = val;
  }
  return d;
}

double max_drift_frequency(const params::ModeSpectrum& spectrum,
                           const std::vector<double>& tones) {
  double w_max = 0.0;
  for (double w : spectrum.omegas) w_max = std::max(w_max, w);
  // the squared drive oscillates at tone sums, up to twice the largest tone
  for (double w : tones) w_max = std::max(w_max, 2.0 * w);
  return w_max;
}

double default_time_step(const params::ModeSpectrum& spectrum,
                         const std::vector<double>& tones) {
  return kTwoPi / max_drift_frequency(spectrum, tones) / 50.0;
}

std::vector<CmSample> integrate_lyapunov(const CovarianceMatrix& v0,
                                         const DriftModel& drift,
                                         const Eigen::MatrixXd& diffusion,
                                         const params::ModeSpectrum& spectrum,
                                         double t_end, double dt,
                                         const std::vector<double>& sample_times,
                                         const LyapunovOptions& opt) {
  const long n = v0.v.rows();
  if (drift.a0.rows() != n || diffusion.rows() != n)
    throw std::invalid_argument("integrate_lyapunov: dimension mismatch");
  const double dt_max = default_time_step(spectrum, drift.tones);
  if (dt <= 0.0 || dt > dt_max * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "integrate_lyapunov: dt = " << dt << " exceeds resolution limit "
        << dt_max << " for the fastest drift frequency";
    throw std::invalid_argument(msg.str());
  }

  std::vector<double> samples = sample_times;
  std::sort(samples.begin(), samples.end());

  auto check = [&](const CovarianceMatrix& v, double t) {
    const auto nus = symplectic_eigenvalues(v);
    if (nus.front() < 0.5 - opt.physicality_tol) {
      std::ostringstream msg;
      msg << "integrate_lyapunov: unphysical covariance at t = " << t
          << " (min symplectic eigenvalue " << nus.front() << " < 1/2)";
      throw PhysicalityError(msg.str());
    }
  };

  Eigen::MatrixXd v = 0.5 * (v0.v + v0.v.transpose());
  Eigen::MatrixXd a(n, n), w(n, n), k1(n, n), k2(n, n), k3(n, n), k4(n, n), tmp(n, n);
  // dV = A V + (A V)^T + D: one product per stage since V stays symmetric
  auto rhs = [&](double t, const Eigen::MatrixXd& vin, Eigen::MatrixXd& out) {
    a.noalias() = drift.a0 + drift.drive_scale(t) * drift.a1;
    w.noalias() = a * vin;
    out = w + w.transpose() + diffusion;
  };

  std::vector<CmSample> out;
  out.reserve(samples.size());
  size_t next = 0;
  double t = 0.0;
  auto emit_due = [&](double tcur) {
    while (next < samples.size() && samples[next] <= tcur + 1e-12 * std::max(1.0, tcur)) {
      CovarianceMatrix snap{v};
      if (opt.check_physicality) check(snap, tcur);
      out.push_back({samples[next], snap});
      ++next;
    }
  };
  emit_due(0.0);

  while (t < t_end - 1e-15 * t_end) {
    double h = std::min(dt, t_end - t);
    if (next < samples.size() && samples[next] > t && samples[next] < t + h)
      h = samples[next] - t;
    rhs(t, v, k1);
    tmp = v + 0.5 * h * k1;
    rhs(t + 0.5 * h, tmp, k2);
    tmp = v + 0.5 * h * k2;
    rhs(t + 0.5 * h, tmp, k3);
    tmp = v + h * k3;
    rhs(t + h, tmp, k4);
    v += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
    emit_due(t);
  }
  emit_due(t_end);
  return out;
}

}  // namespace phononet::gaussian
