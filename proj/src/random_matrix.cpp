#include "ruc/random_matrix.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ruc {

namespace {

MatrixXcd ginibre(int rows, int cols, RngStream& rng) {
  MatrixXcd g(rows, cols);
  // Column-major fill so the draw order is part of the stream contract.
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i)
      g(i, j) = std::complex<double>(rng.normal(), rng.normal());
  return g;
}

// QR with the phase fix Lambda = diag(r_ii / |r_ii|); Q*Lambda is Haar.
MatrixXcd haar_from_ginibre(const MatrixXcd& g) {
  Eigen::HouseholderQR<MatrixXcd> qr(g);
  MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(g.rows(), g.cols());
  const MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < g.cols(); ++j) {
    const std::complex<double> rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

}  // namespace

MatrixXcd sample_haar_unitary(int dim, RngStream& rng) {
  if (dim < 1) throw std::invalid_argument("sample_haar_unitary: dim must be >= 1");
  if (dim == 1) {
    // U(1) is a pure phase.
    const double theta = 2.0 * M_PI * rng.uniform();
    MatrixXcd u(1, 1);
    u(0, 0) = std::polar(1.0, theta);
    return u;
  }
  return haar_from_ginibre(ginibre(dim, dim, rng));
}

MatrixXcd sample_haar_isometry(int dim, int rank, RngStream& rng) {
  if (rank < 1 || rank > dim)
    throw std::invalid_argument("sample_haar_isometry: need 1 <= rank <= dim");
  return haar_from_ginibre(ginibre(dim, rank, rng));
}

MatrixXcd sample_projector(int dim, int rank, RngStream& rng) {
  if (rank < 1 || rank > dim)
    throw std::invalid_argument("sample_projector: need 1 <= rank <= dim");
  if (rank == dim) return MatrixXcd::Identity(dim, dim);
  const MatrixXcd a = sample_haar_isometry(dim, rank, rng);
  return a * a.adjoint();
}

Rational chi2_moment_exact(long m, long k) {
  if (m < 1) throw std::invalid_argument("chi2_moment_exact: m must be >= 1");
  if (k < 0) throw std::invalid_argument("chi2_moment_exact: k must be >= 0");
  Rational result = 1;
  for (long j = 0; j < k; ++j) result *= Rational(m + j, m);
  return result;
}

double overlap_sample(int d, int p, int q, RngStream& rng) {
  if (p < 1 || q < 1 || p > d || q > d)
    throw std::invalid_argument("overlap_sample: need 1 <= p, q <= d");
  // With P, Q diagonal, Tr(U P U^dagger Q) = sum_{i<q, j<p} |U_ij|^2.
  const MatrixXcd u = sample_haar_unitary(d, rng);
  double tr = 0.0;
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < q; ++i) tr += std::norm(u(i, j));
  return tr * static_cast<double>(d) / (static_cast<double>(p) * q);
}

std::vector<double> overlap_samples(int d, int p, int q, long trials,
                                    std::uint64_t master_seed, int workers) {
  std::vector<double> out(static_cast<size_t>(trials));
  parallel_for(trials, workers, [&](long i) {
    RngStream rng(master_seed, static_cast<std::uint64_t>(i));
    out[static_cast<size_t>(i)] = overlap_sample(d, p, q, rng);
  });
  return out;
}

EnsembleEstimate projector_overlap_moment_mc(int d, int p, int q, int k,
                                             long trials,
                                             std::uint64_t master_seed,
                                             int workers) {
  if (k < 1) throw std::invalid_argument("projector_overlap_moment_mc: k >= 1");
  if (trials < 1) throw std::invalid_argument("projector_overlap_moment_mc: trials >= 1");
  std::vector<double> vals = overlap_samples(d, p, q, trials, master_seed, workers);
  for (double& v : vals) v = std::pow(v, k);
  return summarize(vals, master_seed);
}

double tail_bound(double z, int p, int q) {
  if (!(z > -1.0)) throw std::domain_error("tail_bound: need z > -1");
  if (p < 1 || q < 1) throw std::invalid_argument("tail_bound: ranks must be >= 1");
  const double f = z - std::log1p(z);
  return std::exp(-static_cast<double>(p) * q * f);
}

}  // namespace ruc
