#include "ruc/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ruc {

namespace {

VectorXd clip_spectrum(VectorXd lam, double tol) {
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < 0.0) {
      if (lam(i) < -tol)
        throw std::domain_error("negative eigenvalue " + std::to_string(lam(i)) +
                                " beyond tolerance");
      lam(i) = 0.0;
    }
  }
  return lam;
}

// Index maps between the global mixed-radix index and the (kept, traced)
// pair, built with an incremental counter so no divisions appear in the
// per-amplitude loop.
struct SplitMap {
  std::size_t dim_keep = 1;
  std::size_t dim_rest = 1;
  std::vector<std::size_t> keep_index;  // global -> kept subsystem index
  std::vector<std::size_t> rest_index;  // global -> traced subsystem index
};

SplitMap build_split(const std::vector<int>& dims,
                     const std::vector<int>& keep_sites) {
  const int n = static_cast<int>(dims.size());
  std::vector<int> role(static_cast<size_t>(n), -1);  // position within keep
  for (size_t k = 0; k < keep_sites.size(); ++k) {
    const int s = keep_sites[k];
    if (s < 0 || s >= n) throw std::invalid_argument("subsystem site out of range");
    if (role[static_cast<size_t>(s)] != -1)
      throw std::invalid_argument("duplicate site in subsystem");
    role[static_cast<size_t>(s)] = static_cast<int>(k);
  }

  SplitMap m;
  std::vector<std::size_t> keep_stride(keep_sites.size());
  {
    std::size_t s = 1;
    for (int k = static_cast<int>(keep_sites.size()) - 1; k >= 0; --k) {
      keep_stride[static_cast<size_t>(k)] = s;
      s *= static_cast<std::size_t>(dims[static_cast<size_t>(keep_sites[static_cast<size_t>(k)])]);
    }
    m.dim_keep = s;
  }
  std::size_t dim_total = 1;
  for (int d : dims) dim_total *= static_cast<std::size_t>(d);
  m.dim_rest = dim_total / m.dim_keep;

  // Per-site contribution to the kept / traced index.
  std::vector<std::size_t> site_keep_stride(static_cast<size_t>(n), 0);
  std::vector<std::size_t> site_rest_stride(static_cast<size_t>(n), 0);
  {
    std::size_t s = 1;
    for (int i = n - 1; i >= 0; --i) {
      if (role[static_cast<size_t>(i)] < 0) {
        site_rest_stride[static_cast<size_t>(i)] = s;
        s *= static_cast<std::size_t>(dims[static_cast<size_t>(i)]);
      }
    }
    for (int i = 0; i < n; ++i)
      if (role[static_cast<size_t>(i)] >= 0)
        site_keep_stride[static_cast<size_t>(i)] =
            keep_stride[static_cast<size_t>(role[static_cast<size_t>(i)])];
  }

  m.keep_index.resize(dim_total);
  m.rest_index.resize(dim_total);
  std::vector<int> digits(static_cast<size_t>(n), 0);
  std::size_t ik = 0, ir = 0;
  for (std::size_t idx = 0;; ++idx) {
    m.keep_index[idx] = ik;
    m.rest_index[idx] = ir;
    if (idx + 1 == dim_total) break;
    for (int s = n - 1; s >= 0; --s) {
      const bool kept = role[static_cast<size_t>(s)] >= 0;
      const std::size_t str = kept ? site_keep_stride[static_cast<size_t>(s)]
                                   : site_rest_stride[static_cast<size_t>(s)];
      if (++digits[static_cast<size_t>(s)] < dims[static_cast<size_t>(s)]) {
        (kept ? ik : ir) += str;
        break;
      }
      (kept ? ik : ir) -= str * static_cast<std::size_t>(dims[static_cast<size_t>(s)] - 1);
      digits[static_cast<size_t>(s)] = 0;
    }
  }
  return m;
}

// Reshape of a pure state into a (kept x traced) matrix.
MatrixXcd split_matrix(const StateVector& psi, const std::vector<int>& sites) {
  const auto m = build_split(psi.geometry().site_dims, sites);
  MatrixXcd out(static_cast<Eigen::Index>(m.dim_keep),
                static_cast<Eigen::Index>(m.dim_rest));
  const std::complex<double>* a = psi.data();
  for (std::size_t idx = 0; idx < psi.dim(); ++idx)
    out(static_cast<Eigen::Index>(m.keep_index[idx]),
        static_cast<Eigen::Index>(m.rest_index[idx])) = a[idx];
  return out;
}

std::vector<int> complement_sites(const CircuitGeometry& g,
                                  const std::vector<int>& sites) {
  std::vector<bool> in(static_cast<size_t>(g.sites()), false);
  for (int s : sites) in[static_cast<size_t>(s)] = true;
  std::vector<int> out;
  for (int s = 0; s < g.sites(); ++s)
    if (!in[static_cast<size_t>(s)]) out.push_back(s);
  return out;
}

std::size_t sites_dim(const CircuitGeometry& g, const std::vector<int>& sites) {
  std::size_t d = 1;
  for (int s : sites) d *= static_cast<std::size_t>(g.site_dims[static_cast<size_t>(s)]);
  return d;
}

}  // namespace

DensityOperator::DensityOperator(MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw std::invalid_argument("density operator must be square");
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermTol)
    throw std::domain_error("density operator not Hermitian: defect " +
                            std::to_string(herm));
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw std::domain_error("density operator trace " + std::to_string(tr) +
                            " differs from 1");
}

const VectorXd& DensityOperator::eigenvalues() const {
  if (!eigs_) eigs_ = clip_spectrum(hermitian_eigenvalues(m_), kEigTol);
  return *eigs_;
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
  return DensityOperator(MatrixXcd::Identity(dim, dim) / dim);
}

double purity_of_spectrum(const VectorXd& lam) { return lam.squaredNorm(); }

double renyi2_of_spectrum(const VectorXd& lam) {
  return -std::log(purity_of_spectrum(lam));
}

double von_neumann_of_spectrum(const VectorXd& lam) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    double p = lam(i);
    if (p < 0.0) {
      if (p < -DensityOperator::kEigTol)
        throw std::domain_error("von Neumann entropy of non-PSD spectrum");
      p = 0.0;
    }
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

DensityOperator reduce(const StateVector& psi, const std::vector<int>& sites) {
  const MatrixXcd m = split_matrix(psi, sites);
  return DensityOperator(m * m.adjoint());
}

DensityOperator reduce(const StateVector& psi, const IntervalSpec& interval) {
  return reduce(psi, interval.sites(psi.geometry()));
}

VectorXd subsystem_spectrum(const StateVector& psi,
                            const std::vector<int>& sites) {
  const auto& g = psi.geometry();
  const std::vector<int> small =
      sites_dim(g, sites) * sites_dim(g, sites) <= psi.dim()
          ? sites
          : complement_sites(g, sites);
  const VectorXd sv = singular_values(split_matrix(psi, small));
  return sv.array().square();
}

double subsystem_purity(const StateVector& psi, const std::vector<int>& sites) {
  const auto& g = psi.geometry();
  const std::vector<int> small =
      sites_dim(g, sites) * sites_dim(g, sites) <= psi.dim()
          ? sites
          : complement_sites(g, sites);
  const MatrixXcd m = split_matrix(psi, small);
  return (m * m.adjoint()).squaredNorm();
}

double subsystem_von_neumann(const StateVector& psi,
                             const std::vector<int>& sites) {
  if (sites.empty()) return 0.0;
  return von_neumann_of_spectrum(subsystem_spectrum(psi, sites));
}

double purity(const DensityOperator& rho) { return rho.matrix().squaredNorm(); }

double renyi2(const DensityOperator& rho) { return -std::log(purity(rho)); }

double von_neumann(const DensityOperator& rho) {
  return von_neumann_of_spectrum(rho.eigenvalues());
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  const VectorXd ev = hermitian_eigenvalues(rho.matrix() - sigma.matrix());
  return 0.5 * ev.cwiseAbs().sum();
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");
  const MatrixXcd prod = hermitian_sqrt(rho.matrix(), DensityOperator::kEigTol) *
                         hermitian_sqrt(sigma.matrix(), DensityOperator::kEigTol);
  return singular_values(prod).sum();
}

double mutual_information(const StateVector& psi, const std::vector<int>& a,
                          const std::vector<int>& b) {
  for (int sa : a)
    for (int sb : b)
      if (sa == sb)
        throw std::invalid_argument("mutual_information: regions overlap");
  if (a.empty() || b.empty()) return 0.0;
  std::vector<int> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  return subsystem_von_neumann(psi, a) + subsystem_von_neumann(psi, b) -
         subsystem_von_neumann(psi, ab);
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& dims,
                              const std::vector<int>& keep) {
  std::size_t total = 1;
  for (int d : dims) total *= static_cast<std::size_t>(d);
  if (total != static_cast<std::size_t>(rho.dim()))
    throw std::invalid_argument("partial_trace: dims do not match operator");
  const auto m = build_split(dims, keep);
  MatrixXcd out = MatrixXcd::Zero(static_cast<Eigen::Index>(m.dim_keep),
                                  static_cast<Eigen::Index>(m.dim_keep));
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      if (m.rest_index[i] == m.rest_index[j])
        out(static_cast<Eigen::Index>(m.keep_index[i]),
            static_cast<Eigen::Index>(m.keep_index[j])) += rho.matrix()(
            static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return DensityOperator(std::move(out));
}

double mutual_information(const DensityOperator& rho,
                          const std::vector<int>& dims,
                          const std::vector<int>& a, const std::vector<int>& b) {
  for (int sa : a)
    for (int sb : b)
      if (sa == sb)
        throw std::invalid_argument("mutual_information: regions overlap");
  if (a.empty() || b.empty()) return 0.0;
  std::vector<int> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  const double s_a = von_neumann(partial_trace(rho, dims, a));
  const double s_b = von_neumann(partial_trace(rho, dims, b));
  const double s_ab = von_neumann(partial_trace(rho, dims, ab));
  return s_a + s_b - s_ab;
}

}  // namespace ruc
