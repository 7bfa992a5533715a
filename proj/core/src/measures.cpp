#include "phononet/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace phononet::measures {

void PartitionSpec::validate(int n_modes) const {
  if (parties.size() < 2) throw std::invalid_argument("PartitionSpec: need >= 2 parties");
  if (focus < 0 || focus >= static_cast<int>(parties.size()))
    throw std::invalid_argument("PartitionSpec: focus out of range");
  std::set<int> seen;
  for (const auto& party : parties) {
    if (party.empty()) throw std::invalid_argument("PartitionSpec: empty party");
    for (int m : party) {
      if (m < 0 || m >= n_modes)
        throw std::invalid_argument("PartitionSpec: mode index out of range");
      if (!seen.insert(m).second)
        throw std::invalid_argument("PartitionSpec: parties overlap");
    }
  }
}

double log_negativity_gaussian(const gaussian::CovarianceMatrix& v,
                               const std::vector<int>& party_a) {
  const auto nus = gaussian::symplectic_eigenvalues(v);
  if (nus.front() < 0.5 - 1e-6)
    throw gaussian::PhysicalityError("log_negativity_gaussian: unphysical covariance matrix");
  const auto vt = gaussian::partial_transpose_cm(v, party_a);
  double e = 0.0;
  for (double nu : gaussian::symplectic_eigenvalues(vt))
    if (2.0 * nu < 1.0) e -= std::log(2.0 * nu);
  return e;
}

double negativity_density(const fock::DensityMatrix& rho,
                          const std::vector<int>& party_a) {
  const int nf = rho.layout.n_factors();
  std::vector<bool> in_a(nf, false);
  for (int s : party_a) {
    if (s < 0 || s >= nf)
      throw std::invalid_argument("negativity_density: bad factor index");
    in_a[s] = true;
  }
  std::vector<long> stride(nf, 1);
  for (int s = nf - 2; s >= 0; --s) stride[s] = stride[s + 1] * rho.layout.dims[s + 1];

  const long n = rho.layout.dim();
  fock::CMatrix pt(n, n);
  for (long j = 0; j < n; ++j)
    for (long i = 0; i < n; ++i) {
      // swap the party-A sub-indices between row and column
      long ip = i, jp = j;
      for (int s = 0; s < nf; ++s) {
        if (!in_a[s]) continue;
        const long is = (i / stride[s]) % rho.layout.dims[s];
        const long js = (j / stride[s]) % rho.layout.dims[s];
        ip += (js - is) * stride[s];
        jp += (is - js) * stride[s];
      }
      pt(ip, jp) = rho.rho(i, j);
    }

  Eigen::SelfAdjointEigenSolver<fock::CMatrix> es(0.5 * (pt + pt.adjoint()),
                                                  Eigen::EigenvaluesOnly);
  const double trace_norm = es.eigenvalues().cwiseAbs().sum();
  return std::max(0.0, std::log(trace_norm));
}

namespace {

// residual(focus) = contangle(focus | all others) minus every lower-order
// residual involving the focus, computed by subset recursion over the
// other parties (Moebius inversion of the monogamy ledger).
double residual_from_contangle(int n_others,
                               const std::function<double(unsigned)>& contangle) {
  const unsigned full = (1u << n_others) - 1u;
  std::vector<double> r(full + 1, 0.0);
  for (unsigned mask = 1; mask <= full; ++mask) {
    double val = contangle(mask);
    for (unsigned sub = (mask - 1u) & mask; sub != 0; sub = (sub - 1u) & mask)
      val -= r[sub];
    r[mask] = val;
  }
  return r[full];
}

// Shared min-over-focus scaffolding; contangle_for(focus) yields the
// mask -> squared-negativity function over that focus's other parties.
EntanglementReport genuine_scan(
    const PartitionSpec& spec, Method method,
    const std::function<std::function<double(unsigned)>(int)>& contangle_for) {
  const int np = static_cast<int>(spec.parties.size());
  if (np < 3)
    throw std::invalid_argument("genuine_multipartite: need >= 3 parties");

  double best = std::numeric_limits<double>::infinity();
  int best_focus = 0;
  bool floored = false;
  for (int f = 0; f < np; ++f) {
    double res = residual_from_contangle(np - 1, contangle_for(f));
    if (res < 0.0) {
      floored = true;
      res = 0.0;
    }
    if (res < best) {
      best = res;
      best_focus = f;
    }
  }

  EntanglementReport rep;
  rep.value = best;
  rep.partition = spec;
  rep.partition.focus = best_focus;
  rep.method = method;
  rep.floored = floored;
  return rep;
}

std::vector<int> others_of(int focus, int np) {
  std::vector<int> others;
  for (int i = 0; i < np; ++i)
    if (i != focus) others.push_back(i);
  return others;
}

}  // namespace

EntanglementReport genuine_multipartite(const gaussian::CovarianceMatrix& v,
                                        const PartitionSpec& spec) {
  spec.validate(v.modes());
  const int np = static_cast<int>(spec.parties.size());
  auto contangle_for = [&](int f) {
    return std::function<double(unsigned)>([&, f](unsigned mask) {
      const auto others = others_of(f, np);
      std::vector<int> modes = spec.parties[f];
      for (size_t b = 0; b < others.size(); ++b)
        if (mask & (1u << b))
          modes.insert(modes.end(), spec.parties[others[b]].begin(),
                       spec.parties[others[b]].end());
      const auto sub = gaussian::reduce_cm(v, modes);
      std::vector<int> party_a(spec.parties[f].size());
      std::iota(party_a.begin(), party_a.end(), 0);  // focus block leads
      const double e = log_negativity_gaussian(sub, party_a);
      return e * e;
    });
  };
  return genuine_scan(spec, Method::GaussianCM, contangle_for);
}

EntanglementReport genuine_multipartite(const fock::DensityMatrix& rho,
                                        const PartitionSpec& spec) {
  spec.validate(rho.layout.n_factors());
  const int np = static_cast<int>(spec.parties.size());
  auto contangle_for = [&](int f) {
    return std::function<double(unsigned)>([&, f](unsigned mask) {
      const auto others = others_of(f, np);
      std::vector<int> keep = spec.parties[f];
      for (size_t b = 0; b < others.size(); ++b)
        if (mask & (1u << b))
          keep.insert(keep.end(), spec.parties[others[b]].begin(),
                      spec.parties[others[b]].end());
      std::sort(keep.begin(), keep.end());  // partial_trace order
      const fock::DensityMatrix sub = fock::partial_trace(rho, keep);
      std::vector<int> party_a;  // positions of the focus factors after reduction
      for (size_t q = 0; q < keep.size(); ++q)
        if (std::find(spec.parties[f].begin(), spec.parties[f].end(), keep[q]) !=
            spec.parties[f].end())
          party_a.push_back(static_cast<int>(q));
      const double e = negativity_density(sub, party_a);
      return e * e;
    });
  };
  return genuine_scan(spec, Method::DensityMatrix, contangle_for);
}

double qfi(const fock::DensityMatrix& rho, const fock::CMatrix& observable,
           double cutoff) {
  if ((observable - observable.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("qfi: observable not Hermitian");
  Eigen::SelfAdjointEigenSolver<fock::CMatrix> es(0.5 * (rho.rho + rho.rho.adjoint()));
  const Eigen::VectorXd lam = es.eigenvalues();
  const fock::CMatrix b = es.eigenvectors().adjoint() * observable * es.eigenvectors();
  const long n = lam.size();
  double f = 0.0;
  for (long k = 0; k < n; ++k)
    for (long l = 0; l < n; ++l) {
      const double sum = lam(k) + lam(l);
      if (sum <= cutoff) continue;
      const double diff = lam(k) - lam(l);
      f += 2.0 * std::norm(b(k, l)) * diff * diff / sum;
    }
  return f;
}

fock::CMatrix collective_quadrature(const fock::HilbertLayout& layout) {
  const long n = layout.dim();
  fock::CMatrix x = fock::CMatrix::Zero(n, n);
  for (int k = 0; k < layout.n_factors(); ++k) {
    const fock::CMatrix b =
        fock::lift(layout, k, fock::local_annihilation(layout.dims[k])).dense();
    x += (b + b.adjoint()) / std::sqrt(2.0);
  }
  return x;
}

double normalized_qfi(const fock::DensityMatrix& rho) {
  return qfi(rho, collective_quadrature(rho.layout)) / rho.layout.n_factors();
}

double normalized_qfi_max(const std::vector<fock::TrajectoryPoint>& trajectory) {
  if (trajectory.empty())
    throw std::invalid_argument("normalized_qfi_max: empty trajectory");
  double best = 0.0;
  for (const auto& pt : trajectory) best = std::max(best, normalized_qfi(pt.rho));
  return best;
}

double von_neumann_entropy(const fock::DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<fock::CMatrix> es(0.5 * (rho.rho + rho.rho.adjoint()),
                                                  Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (long i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam > 1e-14) s -= lam * std::log(lam);
  }
  return s;
}

double non_gaussianity(const fock::DensityMatrix& rho) {
  const gaussian::CovarianceMatrix v = fock::covariance_from_rho(rho);
  return gaussian::gaussian_entropy(v) - von_neumann_entropy(rho);
}

}  // namespace phononet::measures
