#pragma once

#include <Eigen/Dense>
#include <vector>

#include "phononet/fock.hpp"
#include "phononet/gaussian.hpp"

namespace phononet::measures {

enum class Method { GaussianCM, DensityMatrix };

// Ordered disjoint mode groups; focus selects the party held out in
// residual (monogamy) decompositions.
struct PartitionSpec {
  std::vector<std::vector<int>> parties;
  int focus = 0;

  void validate(int n_modes) const;
};

struct EntanglementReport {
  double value = 0.0;
  PartitionSpec partition;
  Method method = Method::GaussianCM;
  bool floored = false;  // a negative residual was clamped to zero
};

// E_N = sum over symplectic eigenvalues nu of the partially transposed CM
// with 2 nu < 1 of -ln(2 nu); party_a lists the transposed modes (0-based).
double log_negativity_gaussian(const gaussian::CovarianceMatrix& v,
                               const std::vector<int>& party_a);

// E_N = ln ||rho^{T_A}||_1 on a mode-only layout; party_a lists factors.
double negativity_density(const fock::DensityMatrix& rho,
                          const std::vector<int>& party_a);

// Residual contangle (squared log-negativity) decomposition, minimized over
// the focus choice; >= 3 parties.
EntanglementReport genuine_multipartite(const gaussian::CovarianceMatrix& v,
                                        const PartitionSpec& parties);
EntanglementReport genuine_multipartite(const fock::DensityMatrix& rho,
                                        const PartitionSpec& parties);

// F_Q = 2 sum_{k,l} |<k|O|l>|^2 (l_k - l_l)^2 / (l_k + l_l), pairs with
// l_k + l_l below the cutoff dropped.
double qfi(const fock::DensityMatrix& rho, const fock::CMatrix& observable,
           double cutoff = 1e-12);

// X_M = sum_k x_k on a mode-only layout.
fock::CMatrix collective_quadrature(const fock::HilbertLayout& layout);

// F_Q[rho, X_M] / M
double normalized_qfi(const fock::DensityMatrix& rho);
// max over snapshots; throws on an empty trajectory
double normalized_qfi_max(const std::vector<fock::TrajectoryPoint>& trajectory);

double von_neumann_entropy(const fock::DensityMatrix& rho);

// delta_NG = S(rho_G) - S(rho), rho_G the Gaussian state sharing rho's
// first and second moments.
double non_gaussianity(const fock::DensityMatrix& rho);

}  // namespace phononet::measures
