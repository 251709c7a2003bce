#pragma once

#include <cstdint>
#include <vector>

#include "ruc/estimate.hpp"
#include "ruc/exact.hpp"
#include "ruc/linalg.hpp"
#include "ruc/rng.hpp"

namespace ruc {

// Haar-distributed unitary on U(d). Complex Ginibre matrix, QR, then the
// Q factor's columns are rephased by the signs of R's diagonal; without that
// correction the QR output is orthonormal but not Haar.
MatrixXcd sample_haar_unitary(int dim, RngStream& rng);

// Rank-r projector U diag(1^r, 0^(d-r)) U^dagger with U Haar.
MatrixXcd sample_projector(int dim, int rank, RngStream& rng);

// d x r isometry whose columns are the first r columns of a Haar unitary;
// the projector onto its range is sample_projector's output. Cheaper when
// only the range matters.
MatrixXcd sample_haar_isometry(int dim, int rank, RngStream& rng);

// E[((1/m) sum_{i=1}^{2m} x_i^2)^k] for x_i ~ N(0, 1/2), as an exact
// rational: prod_{j=0}^{k-1} (1 + j/m). Note the variance convention:
// each Gaussian has variance 1/2, so sum of 2m squares has mean m.
Rational chi2_moment_exact(long m, long k);

// One draw of (d/(p q)) Tr(U P U^dagger Q) with U Haar and P, Q diagonal
// projectors of ranks p, q.
double overlap_sample(int d, int p, int q, RngStream& rng);

// Monte Carlo estimate of the k-th moment of the normalized overlap above.
EnsembleEstimate projector_overlap_moment_mc(int d, int p, int q, int k,
                                             long trials,
                                             std::uint64_t master_seed,
                                             int workers = 0);

// Batch of overlap samples (trial i uses stream index i); lets callers test
// several moments or tail frequencies against one sample set.
std::vector<double> overlap_samples(int d, int p, int q, long trials,
                                    std::uint64_t master_seed,
                                    int workers = 0);

// Tail probability bound exp(-p q f(z)) with f(z) = z - ln(1+z).
// Bounds Pr[overlap >= 1+z] for z > 0 and Pr[overlap <= 1+z] for
// z in (-1, 0).
double tail_bound(double z, int p, int q);

}  // namespace ruc
