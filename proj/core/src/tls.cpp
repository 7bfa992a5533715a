#include "phononet/tls.hpp"

#include <cmath>
#include <stdexcept>

#include "phononet/constants.hpp"
#include "phononet/modulation.hpp"

namespace phononet::tls {

namespace {
constexpr Complex kI{0.0, 1.0};

double qubit_nbar(const params::SystemParams& p) {
  return params::thermal_occupation(p.qubit_freq, p.temperature);
}
}  // namespace

void mean_field_rhs(const TlsState& s, double delta, double omega_rabi, double gamma,
                    double dephasing, double nbar_q, double mean_p,
                    Complex& dplus, double& dz) {
  const double gp = gamma * (2.0 * nbar_q + 1.0);
  const Complex phase = std::exp(kI * mean_p);
  dplus = -(0.5 * gp + 2.0 * dephasing - kI * delta) * s.sigma_plus
          - 0.5 * kI * omega_rabi * phase * s.sigma_z;
  const Complex zdot = -gamma * (1.0 + (2.0 * nbar_q + 1.0) * s.sigma_z)
                       - kI * omega_rabi * (s.sigma_plus * std::conj(phase)
                                            - s.sigma_minus() * phase);
  dz = zdot.real();
}

TlsState steady_state(double delta, double omega_rabi, double gamma, double nbar_q,
                      double mean_p, double dephasing) {
  if (gamma <= 0.0) throw std::invalid_argument("steady_state: Gamma must be > 0");
  const double n2 = 2.0 * nbar_q + 1.0;
  const double gp = gamma * n2;
  const Complex phase = std::exp(kI * mean_p);

  if (dephasing == 0.0) {
    const double denom = n2 * (gp * gp + 4.0 * delta * delta
                               + 2.0 * omega_rabi * omega_rabi);
    TlsState s;
    s.sigma_z = -(gp * gp + 4.0 * delta * delta) / denom;
    s.sigma_plus = kI * omega_rabi * Complex(gp, 2.0 * delta) * phase / denom;
    return s;
  }

  // With pure dephasing the equations are still affine; solve the 3x3 system.
  Eigen::Matrix3cd m;
  m << Complex(-0.5 * gp - 2.0 * dephasing, delta), 0.0, -0.5 * kI * omega_rabi * phase,
       0.0, Complex(-0.5 * gp - 2.0 * dephasing, -delta), 0.5 * kI * omega_rabi * std::conj(phase),
       -kI * omega_rabi * std::conj(phase), kI * omega_rabi * phase, Complex(-gp, 0.0);
  Eigen::Vector3cd rhs(0.0, 0.0, gamma);
  const Eigen::Vector3cd x = m.colPivHouseholderQr().solve(rhs);
  TlsState s;
  s.sigma_plus = x(0);
  s.sigma_z = x(2).real();
  return s;
}

std::vector<MeanFieldPoint> mean_field_evolve(const TlsState& initial,
                                              const params::SystemParams& p,
                                              double mean_p, double t_end, double dt) {
  double fastest = std::max({p.detuning, p.rabi_amplitude, p.qubit_decay});
  for (double w : p.modulation_freqs) fastest = std::max(fastest, w);
  if (dt > 0.05 * kTwoPi / fastest)
    throw std::invalid_argument("mean_field_evolve: dt too large for max(Delta, Omega, Gamma)");

  const double nbar = qubit_nbar(p);
  // no tones means a constant drive at the full amplitude
  auto omega_at = [&](double time) {
    return p.modulation_freqs.empty()
               ? p.rabi_amplitude
               : modulation::drive_amplitude(time, p.rabi_amplitude,
                                             p.modulation_freqs);
  };
  auto rhs = [&](double time, const TlsState& s, Complex& dp, double& dz) {
    mean_field_rhs(s, p.detuning, omega_at(time), p.qubit_decay, p.qubit_dephasing,
                   nbar, mean_p, dp, dz);
  };

  std::vector<MeanFieldPoint> out;
  const long n = std::lround(std::ceil(t_end / dt));
  out.reserve(n + 1);
  TlsState s = initial;
  out.push_back({0.0, s});
  double t = 0.0;
  for (long i = 0; i < n; ++i) {
    const double h = std::min(dt, t_end - t);
    Complex k1p, k2p, k3p, k4p;
    double k1z, k2z, k3z, k4z;
    TlsState tmp;
    rhs(t, s, k1p, k1z);
    tmp.sigma_plus = s.sigma_plus + 0.5 * h * k1p;
    tmp.sigma_z = s.sigma_z + 0.5 * h * k1z;
    rhs(t + 0.5 * h, tmp, k2p, k2z);
    tmp.sigma_plus = s.sigma_plus + 0.5 * h * k2p;
    tmp.sigma_z = s.sigma_z + 0.5 * h * k2z;
    rhs(t + 0.5 * h, tmp, k3p, k3z);
    tmp.sigma_plus = s.sigma_plus + h * k3p;
    tmp.sigma_z = s.sigma_z + h * k3z;
    rhs(t + h, tmp, k4p, k4z);
    s.sigma_plus += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    s.sigma_z += h / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z);
    t += h;
    out.push_back({t, s});
    if (t >= t_end) break;
  }
  return out;
}

Eigen::Matrix3cd resolvent_matrix(const params::SystemParams& p, double nbar_q,
                                  const SpectrumOptions& opt) {
  const double gp = p.qubit_decay * (2.0 * nbar_q + 1.0);
  const double gd = (opt.dephasing_sign == DephasingSign::AsPrinted ? 1.0 : -1.0)
                    * p.qubit_dephasing;
  const double omega = p.rabi_amplitude;
  Eigen::Matrix3cd m;
  m << Complex(-0.5 * gp + gd, p.detuning), 0.0, -0.5 * kI * omega,
       0.0, Complex(-0.5 * gp + gd, -p.detuning), 0.5 * kI * omega,
       -kI * omega, kI * omega, Complex(-gp, 0.0);
  return m;
}

bool resolvent_stable(const params::SystemParams& p, double nbar_q,
                      const SpectrumOptions& opt) {
  const Eigen::Matrix3cd m = resolvent_matrix(p, nbar_q, opt);
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(m, false);
  for (int i = 0; i < 3; ++i)
    if (es.eigenvalues()(i).real() >= 0.0) return false;
  return true;
}

namespace {

Eigen::Vector3cd fluctuation_source(const params::SystemParams& p, double nbar_q) {
  const TlsState ss = steady_state(p.detuning, p.rabi_amplitude, p.qubit_decay,
                                   nbar_q, 0.0, p.qubit_dephasing);
  Eigen::Vector3cd v;
  v(0) = -ss.sigma_plus * (1.0 + ss.sigma_z);
  v(1) = ss.sigma_minus() * (1.0 - ss.sigma_z);
  v(2) = 1.0 - ss.sigma_z * ss.sigma_z;
  return v;
}

}  // namespace

double fluctuation_spectrum(double omega, const params::SystemParams& p,
                            const SpectrumOptions& opt) {
  const double nbar_q = qubit_nbar(p);
  const Eigen::Matrix3cd m = resolvent_matrix(p, nbar_q, opt);
  const Eigen::Vector3cd v = fluctuation_source(p, nbar_q);
  Eigen::Matrix3cd a = -m;
  a.diagonal().array() += Complex(0.0, -omega);  // s I - M at s = -i omega
  const double scale = a.cwiseAbs().maxCoeff();
  const Complex det = a.determinant();
  if (std::abs(det) < opt.singular_tol * scale * scale * scale)
    throw std::runtime_error("fluctuation_spectrum: resolvent singular at this frequency");
  const Eigen::Vector3cd c = a.colPivHouseholderQr().solve(v);
  return 0.5 * c(2).real();
}

double fluctuation_spectrum_regression(double omega, const params::SystemParams& p,
                                       const SpectrumOptions& opt) {
  const double nbar_q = qubit_nbar(p);
  const Eigen::Matrix3cd m = resolvent_matrix(p, nbar_q, opt);
  const Eigen::Vector3cd v0 = fluctuation_source(p, nbar_q);

  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(m, false);
  double slowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    const double re = es.eigenvalues()(i).real();
    if (re >= 0.0)
      throw std::runtime_error("fluctuation_spectrum_regression: drift matrix unstable");
    slowest = std::min(slowest, -re);
  }
  // e^{-20} truncation tail is far below the target accuracy
  const double s_max = 20.0 / slowest;

  const double w_scale = std::max({std::abs(omega), p.detuning, p.rabi_amplitude,
                                   p.qubit_decay * (2.0 * nbar_q + 1.0)});
  long n = std::lround(std::ceil(s_max * w_scale / 0.02));
  n = std::max<long>(n, 400);
  if (n % 2 != 0) ++n;
  const double ds = s_max / n;

  // RK4 on dC/ds = M C alongside a Simpson accumulation of e^{i w s} C_3(s)
  Eigen::Vector3cd c = v0;
  Complex integral = std::exp(kI * omega * 0.0) * c(2);  // weight-1 endpoint
  double s = 0.0;
  for (long i = 1; i <= n; ++i) {
    const Eigen::Vector3cd k1 = m * c;
    const Eigen::Vector3cd k2 = m * (c + 0.5 * ds * k1);
    const Eigen::Vector3cd k3 = m * (c + 0.5 * ds * k2);
    const Eigen::Vector3cd k4 = m * (c + ds * k3);
    c += ds / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    s = i * ds;
    const double w = (i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    integral += w * std::exp(kI * omega * s) * c(2);
  }
  integral *= ds / 3.0;
  return 0.5 * integral.real();
}

TlsEffectiveBath effective_bath(const params::SystemParams& p,
                                const params::ModeSpectrum& spectrum,
                                const SpectrumOptions& opt) {
  TlsEffectiveBath bath;
  const int m = spectrum.size();
  bath.induced_damping.resize(m);
  bath.induced_occupancy.resize(m);
  // S carries units of time; compare against a negligible scale set by Gamma
  const double tiny = 1e-14 / p.qubit_decay;
  for (int k = 0; k < m; ++k) {
    const double sp = fluctuation_spectrum(spectrum.omegas[k], p, opt);
    const double sm = fluctuation_spectrum(-spectrum.omegas[k], p, opt);
    if (std::abs(sp) < tiny && std::abs(sm) < tiny) {
      bath.induced_damping[k] = 0.0;
      bath.induced_occupancy[k] = 0.0;
      continue;
    }
    const double diff = sp - sm;
    if (diff <= 0.0)
      throw std::runtime_error(
          "effective_bath: S(w) <= S(-w) at mode " + std::to_string(k + 1) +
          "; TLS-induced damping would be non-positive in this regime");
    const double g = p.coupling.at(k);
    bath.induced_damping[k] = g * g * diff;
    bath.induced_occupancy[k] = sm / diff;
  }
  return bath;
}

}  // namespace phononet::tls
