#include "phononet/fock.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "phononet/constants.hpp"
#include "phononet/modulation.hpp"

namespace phononet::fock {

namespace {
constexpr Complex kI{0.0, 1.0};
}

long HilbertLayout::dim() const {
  long d = 1;
  for (int n : dims) d *= n;
  return d;
}

void HilbertLayout::validate(long memory_ceiling_bytes) const {
  if (dims.empty()) throw std::invalid_argument("HilbertLayout: empty dims");
  for (int n : dims)
    if (n < 1) throw std::invalid_argument("HilbertLayout: dims must be positive");
  const long d = dim();
  if (d > memory_ceiling_bytes / (16 * d))
    throw std::invalid_argument("HilbertLayout: density matrix would exceed the memory ceiling");
}

CMatrix LadderOp::dense() const {
  const long n = dim();
  CMatrix m = CMatrix::Zero(n, n);
  for (long i = 0; i < n; ++i)
    if (col[i] >= 0) m(i, col[i]) = val[i];
  return m;
}

void LadderOp::apply_left(Complex alpha, const CMatrix& rho, CMatrix& out) const {
  const long n = dim();
  for (long j = 0; j < n; ++j) {
    const Complex* in = rho.col(j).data();
    Complex* o = out.col(j).data();
    for (long i = 0; i < n; ++i)
      if (col[i] >= 0) o[i] += alpha * val[i] * in[col[i]];
  }
}

void LadderOp::apply_right_dagger(Complex alpha, const CMatrix& rho, CMatrix& out) const {
  const long n = dim();
  for (long j = 0; j < n; ++j)
    if (col[j] >= 0)
      out.col(j) += alpha * std::conj(val[j]) * rho.col(col[j]);
}

void LadderOp::sandwich(double alpha, const CMatrix& rho, CMatrix& out) const {
  const long n = dim();
  for (long j = 0; j < n; ++j) {
    if (col[j] < 0) continue;
    const Complex w = alpha * std::conj(val[j]);
    const Complex* in = rho.col(col[j]).data();
    Complex* o = out.col(j).data();
    for (long i = 0; i < n; ++i)
      if (col[i] >= 0) o[i] += w * val[i] * in[col[i]];
  }
}

LadderOp LadderOp::dagger() const {
  const long n = dim();
  LadderOp d;
  d.col.assign(n, -1);
  d.val.assign(n, Complex{});
  for (long i = 0; i < n; ++i)
    if (col[i] >= 0) {
      d.col[col[i]] = i;
      d.val[col[i]] = std::conj(val[i]);
    }
  return d;
}

LadderOp compose(const LadderOp& a, const LadderOp& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("compose: dimension mismatch");
  const long n = a.dim();
  LadderOp c;
  c.col.assign(n, -1);
  c.val.assign(n, Complex{});
  for (long i = 0; i < n; ++i) {
    if (a.col[i] < 0) continue;
    const long k = a.col[i];
    if (b.col[k] < 0) continue;
    c.col[i] = b.col[k];
    c.val[i] = a.val[i] * b.val[k];
  }
  return c;
}

LadderOp lift(const HilbertLayout& layout, int factor, const LadderOp& local) {
  const int s = factor;
  const int d_loc = layout.dims.at(s);
  if (local.dim() != d_loc) throw std::invalid_argument("lift: local dim mismatch");
  long stride = 1;
  for (int q = s + 1; q < layout.n_factors(); ++q) stride *= layout.dims[q];
  const long n = layout.dim();
  LadderOp g;
  g.col.assign(n, -1);
  g.val.assign(n, Complex{});
  for (long i = 0; i < n; ++i) {
    const long is = (i / stride) % d_loc;
    if (local.col[is] < 0) continue;
    g.col[i] = i + (local.col[is] - is) * stride;
    g.val[i] = local.val[is];
  }
  return g;
}

LadderOp local_identity(int d) {
  LadderOp o;
  o.col.resize(d);
  o.val.assign(d, Complex{1.0, 0.0});
  std::iota(o.col.begin(), o.col.end(), 0L);
  return o;
}

LadderOp local_annihilation(int d) {
  LadderOp o;
  o.col.assign(d, -1);
  o.val.assign(d, Complex{});
  for (int r = 0; r + 1 < d; ++r) {
    o.col[r] = r + 1;
    o.val[r] = std::sqrt(static_cast<double>(r + 1));
  }
  return o;
}

LadderOp local_creation(int d) { return local_annihilation(d).dagger(); }

LadderOp local_sigma_z() {
  LadderOp o = local_identity(2);
  o.val[0] = -1.0;
  return o;
}

LadderOp local_sigma_x() {
  LadderOp o;
  o.col = {1, 0};
  o.val = {1.0, 1.0};
  return o;
}

LadderOp local_sigma_plus() {
  LadderOp o;
  o.col = {-1, 0};
  o.val = {0.0, 1.0};
  return o;
}

LadderOp local_sigma_minus() { return local_sigma_plus().dagger(); }

OperatorSet build_operators(const HilbertLayout& layout) {
  layout.validate();
  if (layout.dims[0] != 2)
    throw std::invalid_argument("build_operators: first factor must be the TLS (dim 2)");
  OperatorSet ops;
  ops.layout = layout;
  ops.sigma_x = lift(layout, 0, local_sigma_x());
  ops.sigma_z = lift(layout, 0, local_sigma_z());
  ops.sigma_plus = lift(layout, 0, local_sigma_plus());
  ops.sigma_minus = lift(layout, 0, local_sigma_minus());
  for (int k = 1; k < layout.n_factors(); ++k) {
    ops.annihilate.push_back(lift(layout, k, local_annihilation(layout.dims[k])));
    ops.create.push_back(lift(layout, k, local_creation(layout.dims[k])));
  }
  return ops;
}

namespace {

// diag(L^dagger L); exact on the truncated space
Eigen::VectorXd diag_dagger_product(const LadderOp& l) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(l.dim());
  for (long i = 0; i < l.dim(); ++i)
    if (l.col[i] >= 0) d(l.col[i]) += std::norm(l.val[i]);
  return d;
}

struct Generator {
  HilbertLayout layout;
  params::SystemParams p;
  params::ModeSpectrum spectrum;

  // Hamiltonian split into eigen-operator terms c(t) O + h.c. with
  // c(t) = amp(t) e^{i nu t} in the interaction picture (nu = Bohr frequency)
  struct HamTerm {
    LadderOp op, op_dag;
    double nu = 0.0;
    double amp = 0.0;   // static amplitude (mode terms)
    bool drive = false; // amplitude is Omega(t)/2 instead
  };
  std::vector<HamTerm> terms;

  struct Jump {
    LadderOp op;
    double weight2;  // 2w for the 2 L rho L^dag part
  };
  std::vector<Jump> jumps;
  Eigen::VectorXd dvec;      // sum of w diag(L^dag L)
  Eigen::VectorXd energies;  // diagonal free Hamiltonian

  CMatrix h_static, h_drive;  // lab-frame pieces, H = h_static + Omega(t) h_drive
};

Generator make_generator(const params::SystemParams& p,
                         const params::ModeSpectrum& spectrum,
                         const HilbertLayout& layout, bool need_dense) {
  if (spectrum.size() != layout.n_factors() - 1)
    throw std::invalid_argument("make_generator: layout/spectrum mode count mismatch");
  Generator g;
  g.layout = layout;
  g.p = p;
  g.spectrum = spectrum;
  const OperatorSet ops = build_operators(layout);
  const long n = layout.dim();

  Generator::HamTerm drive;
  drive.op = ops.sigma_plus;
  drive.op_dag = ops.sigma_minus;
  drive.nu = p.detuning;
  drive.drive = true;
  g.terms.push_back(std::move(drive));
  for (int k = 0; k < spectrum.size(); ++k) {
    Generator::HamTerm t;
    t.op = compose(ops.sigma_z, ops.annihilate[k]);
    t.op_dag = t.op.dagger();
    t.nu = -spectrum.omegas[k];
    t.amp = 0.5 * p.coupling.at(k);
    g.terms.push_back(std::move(t));
  }

  const double nbar_q = params::thermal_occupation(p.qubit_freq, p.temperature);
  std::vector<std::pair<double, const LadderOp*>> diss;
  diss.emplace_back(0.5 * p.qubit_decay * (nbar_q + 1.0), &ops.sigma_minus);
  diss.emplace_back(0.5 * p.qubit_decay * nbar_q, &ops.sigma_plus);
  diss.emplace_back(0.5 * p.qubit_dephasing, &ops.sigma_z);
  std::vector<LadderOp> keepalive;
  for (int k = 0; k < spectrum.size(); ++k) {
    const double gamma = params::intrinsic_damping(spectrum.omegas[k], p.quality_factor);
    const double nbar = params::thermal_occupation(spectrum.omegas[k], p.temperature);
    diss.emplace_back(0.5 * gamma * (nbar + 1.0), &ops.annihilate[k]);
    diss.emplace_back(0.5 * gamma * nbar, &ops.create[k]);
  }
  g.dvec = Eigen::VectorXd::Zero(n);
  for (auto& [w, l] : diss) {
    if (w <= 0.0) continue;
    g.jumps.push_back({*l, 2.0 * w});
    g.dvec += w * diag_dagger_product(*l);
  }

  g.energies = Eigen::VectorXd::Zero(n);
  g.energies += 0.5 * p.detuning * diag_dagger_product(ops.sigma_minus);  // +Delta/2 on excited
  g.energies.array() -= 0.5 * p.detuning * diag_dagger_product(ops.sigma_plus).array();
  for (int k = 0; k < spectrum.size(); ++k)
    g.energies += spectrum.omegas[k] * diag_dagger_product(ops.annihilate[k]);

  if (need_dense) {
    g.h_static = CMatrix::Zero(n, n);
    g.h_static += g.energies.cast<Complex>().asDiagonal();
    for (size_t i = 1; i < g.terms.size(); ++i)
      g.h_static += g.terms[i].amp * (g.terms[i].op.dense() + g.terms[i].op_dag.dense());
    g.h_drive = 0.5 * ops.sigma_x.dense();
  }
  return g;
}

// d rho = -i [H, rho] + dissipators; the commutator uses (H rho)^dag = rho H.
void rhs_interaction(const Generator& g, double t, const CMatrix& rho,
                     CMatrix& out, CMatrix& w) {
  w.setZero();
  for (const auto& term : g.terms) {
    const double amp = term.drive
        ? 0.5 * modulation::drive_amplitude(t, g.p.rabi_amplitude, g.p.modulation_freqs)
        : term.amp;
    if (amp == 0.0) continue;
    const Complex c = amp * std::exp(kI * (term.nu * t));
    term.op.apply_left(c, rho, w);
    term.op_dag.apply_left(std::conj(c), rho, w);
  }
  out = -kI * (w - w.adjoint());
  for (const auto& jump : g.jumps) jump.op.sandwich(jump.weight2, rho, out);
  const long n = rho.rows();
  for (long j = 0; j < n; ++j)
    out.col(j).array() -= (g.dvec.array() + g.dvec(j)) * rho.col(j).array();
}

void rhs_lab(const Generator& g, double t, const CMatrix& rho,
             CMatrix& out, CMatrix& w) {
  const double omega = modulation::drive_amplitude(t, g.p.rabi_amplitude,
                                                   g.p.modulation_freqs);
  w.noalias() = g.h_static * rho;
  if (omega != 0.0) w.noalias() += omega * (g.h_drive * rho);
  out = -kI * (w - w.adjoint());
  for (const auto& jump : g.jumps) jump.op.sandwich(jump.weight2, rho, out);
  const long n = rho.rows();
  for (long j = 0; j < n; ++j)
    out.col(j).array() -= (g.dvec.array() + g.dvec(j)) * rho.col(j).array();
}

CMatrix to_lab_frame(const Generator& g, double t, const CMatrix& rho_int) {
  const long n = rho_int.rows();
  Eigen::VectorXcd phase(n);
  for (long i = 0; i < n; ++i) phase(i) = std::exp(-kI * (g.energies(i) * t));
  return phase.asDiagonal() * rho_int * phase.conjugate().asDiagonal();
}

}  // namespace

CMatrix build_hamiltonian(double t, const params::SystemParams& p,
                          const params::ModeSpectrum& spectrum,
                          const HilbertLayout& layout) {
  const Generator g = make_generator(p, spectrum, layout, true);
  const double omega = modulation::drive_amplitude(t, p.rabi_amplitude,
                                                   p.modulation_freqs);
  return g.h_static + omega * g.h_drive;
}

CMatrix lindblad_rhs(const DensityMatrix& rho, double t,
                     const params::SystemParams& p,
                     const params::ModeSpectrum& spectrum) {
  const Generator g = make_generator(p, spectrum, rho.layout, true);
  CMatrix out(rho.rho.rows(), rho.rho.cols()), w(rho.rho.rows(), rho.rho.cols());
  rhs_lab(g, t, rho.rho, out, w);
  return out;
}

DensityMatrix ground_state(const HilbertLayout& layout) {
  layout.validate();
  const long n = layout.dim();
  DensityMatrix rho{CMatrix::Zero(n, n), layout};
  rho.rho(0, 0) = 1.0;
  return rho;
}

StateCheck check_density_matrix(const DensityMatrix& rho, double herm_tol,
                                double trace_tol, double positivity_tol) {
  StateCheck c{};
  c.hermiticity_defect = (rho.rho - rho.rho.adjoint()).cwiseAbs().maxCoeff();
  c.trace_defect = std::abs(rho.rho.trace() - Complex{1.0, 0.0});
  const CMatrix herm = 0.5 * (rho.rho + rho.rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
  c.min_eigenvalue = es.eigenvalues()(0);
  c.ok = c.hermiticity_defect < herm_tol && c.trace_defect < trace_tol &&
         c.min_eigenvalue > -positivity_tol;
  return c;
}

namespace {

// Dormand-Prince 5(4) tableau
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kE[7] = {35.0 / 384 - 5179.0 / 57600,
                          0.0,
                          500.0 / 1113 - 7571.0 / 16695,
                          125.0 / 192 - 393.0 / 640,
                          -2187.0 / 6784 + 92097.0 / 339200,
                          11.0 / 84 - 187.0 / 2100,
                          -1.0 / 40};

double initial_step(const Generator& g, Frame frame) {
  double nu = std::abs(g.p.detuning) + g.p.qubit_decay;
  for (double w : g.p.modulation_freqs) nu = std::max(nu, std::abs(g.p.detuning) + w);
  if (frame == Frame::Lab)
    for (double w : g.spectrum.omegas) nu = std::max(nu, w);
  if (g.dvec.size() > 0) nu = std::max(nu, 2.0 * g.dvec.maxCoeff());
  return 1e-2 / std::max(nu, 1e-300);
}

}  // namespace

EvolveStats evolve(DensityMatrix& rho, const params::SystemParams& p,
                   const params::ModeSpectrum& spectrum, double t_end,
                   const std::vector<double>& sample_times,
                   const SnapshotFn& on_sample, const EvolveOptions& opt) {
  rho.layout.validate();
  const Generator gen = make_generator(p, spectrum, rho.layout,
                                       opt.frame == Frame::Lab);
  const bool interaction = opt.frame == Frame::Interaction;
  const long n = rho.rho.rows();

  std::vector<double> samples = sample_times;
  std::sort(samples.begin(), samples.end());
  for (double s : samples)
    if (s < 0.0 || s > t_end * (1.0 + 1e-12))
      throw std::invalid_argument("evolve: sample time outside [0, t_end]");

  auto rhs = [&](double t, const CMatrix& y, CMatrix& out, CMatrix& w) {
    if (interaction)
      rhs_interaction(gen, t, y, out, w);
    else
      rhs_lab(gen, t, y, out, w);
  };

  CMatrix y = rho.rho;  // interaction and lab frames coincide at t = 0
  CMatrix k[7], ytmp(n, n), w(n, n), ynew(n, n);
  for (auto& m : k) m.resize(n, n);

  EvolveStats stats;
  size_t next = 0;
  auto emit = [&](double t) {
    while (next < samples.size() && samples[next] <= t + 1e-12 * std::max(t, 1.0)) {
      if (on_sample) {
        DensityMatrix snap{interaction ? to_lab_frame(gen, samples[next], y) : y,
                           rho.layout};
        on_sample(samples[next], snap);
      }
      ++next;
    }
  };
  emit(0.0);
  if (t_end <= 0.0) {
    return stats;
  }

  double t = 0.0;
  double dt = opt.dt_init > 0.0 ? opt.dt_init : initial_step(gen, opt.frame);
  dt = std::min(dt, t_end);
  stats.min_dt = stats.max_dt = dt;
  bool have_k1 = false;

  while (t < t_end * (1.0 - 1e-15)) {
    double h = std::min(dt, t_end - t);
    if (next < samples.size() && samples[next] > t && samples[next] < t + h)
      h = samples[next] - t;

    if (!have_k1) rhs(t, y, k[0], w);
    for (int s = 1; s < 7; ++s) {
      ytmp = y;
      for (int q = 0; q < s; ++q)
        if (kA[s][q] != 0.0) ytmp.noalias() += (h * kA[s][q]) * k[q];
      rhs(t + kC[s] * h, ytmp, k[s], w);
    }
    // stage 7 already evaluates at the 5th-order solution (FSAL)
    ynew = y;
    for (int s = 0; s < 6; ++s)
      if (kA[6][s] != 0.0) ynew.noalias() += (h * kA[6][s]) * k[s];

    ytmp.setZero();
    for (int s = 0; s < 7; ++s)
      if (kE[s] != 0.0) ytmp.noalias() += (h * kE[s]) * k[s];
    const Eigen::ArrayXXd sc =
        opt.atol + opt.rtol * y.cwiseAbs().cwiseMax(ynew.cwiseAbs()).array();
    const double err = std::sqrt((ytmp.cwiseAbs().array() / sc).square().mean());

    if (err <= 1.0) {
      t += h;
      y.swap(ynew);
      const double tr = y.trace().real();
      const double drift = std::abs(tr - 1.0);
      stats.max_trace_drift = std::max(stats.max_trace_drift, drift);
      if (drift > opt.trace_drift_tol) {
        std::ostringstream msg;
        msg << "evolve: trace drift " << drift << " at t = " << t
            << " exceeds tolerance " << opt.trace_drift_tol;
        throw std::runtime_error(msg.str());
      }
      y /= tr;
      k[0].swap(k[6]);
      have_k1 = true;  // FSAL (renormalization perturbs it only at the drift level)
      ++stats.accepted;
      stats.min_dt = std::min(stats.min_dt, h);
      stats.max_dt = std::max(stats.max_dt, h);
      emit(t);
    } else {
      ++stats.rejected;
      have_k1 = true;  // k1 still valid at unchanged (t, y)
    }
    const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-12), -0.2), 0.2, 5.0);
    dt = h * fac;
    if (stats.accepted + stats.rejected > opt.max_steps)
      throw std::runtime_error("evolve: step limit exceeded (tolerance failure?)");
  }
  emit(t_end);

  rho.rho = interaction ? to_lab_frame(gen, t_end, y) : y;
  return stats;
}

std::vector<TrajectoryPoint> evolve_trajectory(const DensityMatrix& rho0,
                                               const params::SystemParams& p,
                                               const params::ModeSpectrum& spectrum,
                                               double t_end,
                                               const std::vector<double>& sample_times,
                                               const EvolveOptions& opt) {
  DensityMatrix rho = rho0;
  std::vector<TrajectoryPoint> out;
  evolve(rho, p, spectrum, t_end, sample_times,
         [&](double t, const DensityMatrix& snap) { out.push_back({t, snap}); },
         opt);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set empty");
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  const int nf = rho.layout.n_factors();
  for (int s : sorted)
    if (s < 0 || s >= nf) throw std::invalid_argument("partial_trace: bad factor index");

  std::vector<long> stride(nf, 1);
  for (int s = nf - 2; s >= 0; --s) stride[s] = stride[s + 1] * rho.layout.dims[s + 1];

  HilbertLayout out_layout;
  for (int s : sorted) out_layout.dims.push_back(rho.layout.dims[s]);
  const long n = rho.layout.dim();
  const long m = out_layout.dim();

  // linearized kept / traced sub-indices per global index
  std::vector<long> kept(n), traced(n);
  for (long i = 0; i < n; ++i) {
    long kv = 0, tv = 0;
    size_t ks = 0;
    for (int s = 0; s < nf; ++s) {
      const long idx = (i / stride[s]) % rho.layout.dims[s];
      if (ks < sorted.size() && sorted[ks] == s) {
        kv = kv * rho.layout.dims[s] + idx;
        ++ks;
      } else {
        tv = tv * rho.layout.dims[s] + idx;
      }
    }
    kept[i] = kv;
    traced[i] = tv;
  }

  DensityMatrix out{CMatrix::Zero(m, m), out_layout};
  for (long j = 0; j < n; ++j)
    for (long i = 0; i < n; ++i)
      if (traced[i] == traced[j]) out.rho(kept[i], kept[j]) += rho.rho(i, j);
  return out;
}

gaussian::CovarianceMatrix covariance_from_rho(const DensityMatrix& rho) {
  const int m = rho.layout.n_factors();
  const long n = rho.layout.dim();
  std::vector<CMatrix> u(2 * m);
  for (int k = 0; k < m; ++k) {
    const CMatrix b = lift(rho.layout, k, local_annihilation(rho.layout.dims[k])).dense();
    const CMatrix bd = b.adjoint();
    u[2 * k] = (b + bd) / std::sqrt(2.0);
    u[2 * k + 1] = (b - bd) / (kI * std::sqrt(2.0));
  }
  Eigen::VectorXd mean(2 * m);
  std::vector<CMatrix> urho(2 * m);
  for (int i = 0; i < 2 * m; ++i) {
    urho[i].noalias() = u[i] * rho.rho;
    mean(i) = urho[i].trace().real();
  }
  gaussian::CovarianceMatrix v{Eigen::MatrixXd(2 * m, 2 * m)};
  for (int i = 0; i < 2 * m; ++i)
    for (int j = 0; j <= i; ++j) {
      // tr(u_i u_j rho) via element products, no extra gemm
      const Complex uij = (u[i].array() * urho[j].transpose().array()).sum();
      const Complex uji = (u[j].array() * urho[i].transpose().array()).sum();
      v.v(i, j) = v.v(j, i) = 0.5 * (uij + uji).real() - mean(i) * mean(j);
    }
  (void)n;
  return v;
}

Complex expectation_complex(const LadderOp& op, const DensityMatrix& rho) {
  // tr(O rho) = sum_i val[i] rho(col[i], i)
  Complex s{};
  for (long i = 0; i < op.dim(); ++i)
    if (op.col[i] >= 0) s += op.val[i] * rho.rho(op.col[i], i);
  return s;
}

double expectation(const LadderOp& op, const DensityMatrix& rho) {
  return expectation_complex(op, rho).real();
}

void write_density_matrix(const std::string& path, const DensityMatrix& rho) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_density_matrix: cannot open " + path);
  const int64_t nf = rho.layout.n_factors();
  f.write(reinterpret_cast<const char*>(&nf), sizeof(nf));
  for (int d : rho.layout.dims) {
    const int64_t dd = d;
    f.write(reinterpret_cast<const char*>(&dd), sizeof(dd));
  }
  const long n = rho.layout.dim();
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const double pair[2] = {rho.rho(i, j).real(), rho.rho(i, j).imag()};
      f.write(reinterpret_cast<const char*>(pair), sizeof(pair));
    }
  if (!f) throw std::runtime_error("write_density_matrix: write failed: " + path);
}

DensityMatrix read_density_matrix(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_density_matrix: cannot open " + path);
  int64_t nf = 0;
  f.read(reinterpret_cast<char*>(&nf), sizeof(nf));
  HilbertLayout layout;
  for (int64_t s = 0; s < nf; ++s) {
    int64_t d = 0;
    f.read(reinterpret_cast<char*>(&d), sizeof(d));
    layout.dims.push_back(static_cast<int>(d));
  }
  layout.validate();
  const long n = layout.dim();
  DensityMatrix rho{CMatrix(n, n), layout};
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      double pair[2];
      f.read(reinterpret_cast<char*>(pair), sizeof(pair));
      rho.rho(i, j) = Complex(pair[0], pair[1]);
    }
  if (!f) throw std::runtime_error("read_density_matrix: truncated file: " + path);
  return rho;
}

}  // namespace phononet::fock
