#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "phononet/gaussian.hpp"
#include "phononet/params.hpp"

namespace phononet::fock {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Tensor-factor layout, order fixed as (TLS, mode 1, ..., mode M) for the
// full model; reduced states may drop factors.
struct HilbertLayout {
  std::vector<int> dims;

  long dim() const;
  int n_factors() const { return static_cast<int>(dims.size()); }
  // byte footprint of one dense density matrix must stay under the ceiling
  void validate(long memory_ceiling_bytes = kDefaultMemoryCeiling) const;

  static constexpr long kDefaultMemoryCeiling = 2L << 30;
};

struct DensityMatrix {
  CMatrix rho;
  HilbertLayout layout;
};

// At most one nonzero per row: row i holds val[i] at column col[i]
// (col[i] < 0 for an empty row). Every lifted ladder/spin operator and
// every product of them has this shape, which keeps the generator
// application at O(dim^2) per term.
struct LadderOp {
  std::vector<long> col;
  std::vector<Complex> val;

  long dim() const { return static_cast<long>(col.size()); }
  CMatrix dense() const;

  // out += alpha * (*this) * rho
  void apply_left(Complex alpha, const CMatrix& rho, CMatrix& out) const;
  // out += alpha * rho * (*this)^dagger
  void apply_right_dagger(Complex alpha, const CMatrix& rho, CMatrix& out) const;
  // out += alpha * (*this) * rho * (*this)^dagger
  void sandwich(double alpha, const CMatrix& rho, CMatrix& out) const;

  LadderOp dagger() const;
};

LadderOp compose(const LadderOp& a, const LadderOp& b);  // a * b
LadderOp lift(const HilbertLayout& layout, int factor, const LadderOp& local);

LadderOp local_identity(int d);
LadderOp local_annihilation(int d);
LadderOp local_creation(int d);
// TLS basis: index 0 = ground, 1 = excited; sigma_z = diag(-1, +1)
LadderOp local_sigma_z();
LadderOp local_sigma_x();
LadderOp local_sigma_plus();
LadderOp local_sigma_minus();

struct OperatorSet {
  HilbertLayout layout;
  LadderOp sigma_x, sigma_z, sigma_plus, sigma_minus;
  std::vector<LadderOp> annihilate;  // b_k
  std::vector<LadderOp> create;      // b_k^dagger
};

OperatorSet build_operators(const HilbertLayout& layout);

// H(t) = (1/2)(Delta sigma_z + Omega(t) sigma_x)
//        + sum_k [ w_k b^dag b + (1/2) g_k sigma_z (b + b^dag)]
CMatrix build_hamiltonian(double t, const params::SystemParams& p,
                          const params::ModeSpectrum& spectrum,
                          const HilbertLayout& layout);

// Master-equation right-hand side in the lab frame.
CMatrix lindblad_rhs(const DensityMatrix& rho, double t,
                     const params::SystemParams& p,
                     const params::ModeSpectrum& spectrum);

DensityMatrix ground_state(const HilbertLayout& layout);

struct StateCheck {
  double hermiticity_defect;  // max |rho - rho^dag|
  double trace_defect;        // |tr rho - 1|
  double min_eigenvalue;
  bool ok;
};
StateCheck check_density_matrix(const DensityMatrix& rho,
                                double herm_tol = 1e-10,
                                double trace_tol = 1e-8,
                                double positivity_tol = 1e-8);

enum class Frame {
  // Propagate in the interaction picture of the diagonal free Hamiltonian;
  // the dissipators are invariant and the stiffness of the w_k rotations
  // drops out. Snapshots are always reported back in the lab frame.
  Interaction,
  Lab,  // direct integration; cross-validation and small problems only
};

struct EvolveOptions {
  double rtol = 1e-8;
  double atol = 1e-12;
  double dt_init = 0.0;  // <= 0 picks a heuristic from the fastest frequency
  Frame frame = Frame::Interaction;
  double trace_drift_tol = 1e-8;  // per accepted step, before renormalization
  long max_steps = 200'000'000;
};

struct EvolveStats {
  long accepted = 0;
  long rejected = 0;
  double max_trace_drift = 0.0;
  double min_dt = 0.0, max_dt = 0.0;
};

using SnapshotFn = std::function<void(double t, const DensityMatrix& rho)>;

// Adaptive Dormand-Prince 5(4) on the master equation; rho is advanced in
// place to t_end and on_sample is invoked at each requested time.
EvolveStats evolve(DensityMatrix& rho, const params::SystemParams& p,
                   const params::ModeSpectrum& spectrum, double t_end,
                   const std::vector<double>& sample_times,
                   const SnapshotFn& on_sample, const EvolveOptions& opt = {});

struct TrajectoryPoint {
  double t;
  DensityMatrix rho;
};

// Convenience wrapper storing every snapshot (small problems only).
std::vector<TrajectoryPoint> evolve_trajectory(const DensityMatrix& rho0,
                                               const params::SystemParams& p,
                                               const params::ModeSpectrum& spectrum,
                                               double t_end,
                                               const std::vector<double>& sample_times,
                                               const EvolveOptions& opt = {});

// Reduced density matrix on the kept factors (0-based, ascending).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Second moments of x_k = (b + b^dag)/sqrt(2), p_k = (b - b^dag)/(i sqrt(2))
// for a state on a mode-only layout, with first moments subtracted.
gaussian::CovarianceMatrix covariance_from_rho(const DensityMatrix& rho);

double expectation(const LadderOp& op, const DensityMatrix& rho);
Complex expectation_complex(const LadderOp& op, const DensityMatrix& rho);

// Binary dump: int64 factor count, int64 dims..., then row-major
// (real, imag) double pairs. read_density_matrix inverts it.
void write_density_matrix(const std::string& path, const DensityMatrix& rho);
DensityMatrix read_density_matrix(const std::string& path);

}  // namespace phononet::fock
