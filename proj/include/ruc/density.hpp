#pragma once

#include <optional>
#include <vector>

#include "ruc/circuit.hpp"
#include "ruc/linalg.hpp"

namespace ruc {

// Hermitian, PSD, trace-one matrix with a cached spectrum. Eigenvalues in
// [-1e-10, 0) are treated as roundoff and clipped to zero; anything more
// negative is an error rather than noise.
class DensityOperator {
 public:
  static constexpr double kHermTol = 1e-10;
  static constexpr double kEigTol = 1e-10;
  static constexpr double kTraceTol = 1e-8;

  explicit DensityOperator(MatrixXcd m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const MatrixXcd& matrix() const { return m_; }
  // Ascending, clipped to be nonnegative.
  const VectorXd& eigenvalues() const;

  static DensityOperator maximally_mixed(int dim);

 private:
  MatrixXcd m_;
  mutable std::optional<VectorXd> eigs_;
};

// --- spectrum-level helpers -------------------------------------------------

double purity_of_spectrum(const VectorXd& lam);
double renyi2_of_spectrum(const VectorXd& lam);
// Natural log; 0 log 0 = 0. Negative entries beyond -1e-10 throw.
double von_neumann_of_spectrum(const VectorXd& lam);

// --- reductions of a pure state ---------------------------------------------

// Exact reduced density matrix on the given sites (their order fixes the
// subsystem index order).
DensityOperator reduce(const StateVector& psi, const std::vector<int>& sites);
DensityOperator reduce(const StateVector& psi, const IntervalSpec& interval);

// Nonzero Schmidt spectrum of the cut (sites | complement), computed from
// the smaller side. Values are squared singular values, descending.
VectorXd subsystem_spectrum(const StateVector& psi,
                            const std::vector<int>& sites);

// Tr rho^2 of the reduced state, via the smaller-side Gram matrix.
double subsystem_purity(const StateVector& psi, const std::vector<int>& sites);

double subsystem_von_neumann(const StateVector& psi,
                             const std::vector<int>& sites);

// --- scalar functionals -----------------------------------------------------

double purity(const DensityOperator& rho);
double renyi2(const DensityOperator& rho);
double von_neumann(const DensityOperator& rho);

// (1/2) ||rho - sigma||_1
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);
// Tr sqrt(sqrt(rho) sigma sqrt(rho)) = ||sqrt(rho) sqrt(sigma)||_1
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);

// S(A) + S(B) - S(AB) for disjoint site sets of a pure state.
double mutual_information(const StateVector& psi, const std::vector<int>& a,
                          const std::vector<int>& b);

// --- mixed-state partial trace ----------------------------------------------

// Partial trace of a density matrix over the sites not in `keep`; `dims`
// lists all subsystem dimensions in index order.
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& dims,
                              const std::vector<int>& keep);

// Mutual information between subsystem groups of a (possibly mixed) state.
double mutual_information(const DensityOperator& rho,
                          const std::vector<int>& dims,
                          const std::vector<int>& a, const std::vector<int>& b);

}  // namespace ruc
