#pragma once

#include <cstdint>
#include <vector>

#include "ruc/estimate.hpp"
#include "ruc/linalg.hpp"
#include "ruc/rng.hpp"

namespace ruc {

// Fidelity statistics of normalized random projectors sigma = pi / r with
// pi = U diag(1^r, 0^(d-r)) U^dagger, U Haar. Everything is phrased in
// w = r/d. The fidelity of a pair equals the nuclear norm of the r x r
// overlap block between the two range isometries divided by r, which keeps
// the cost at O(d^2 r) instead of a d x d diagonalization.

// E(F) = (2/pi) ( sqrt((1-w)/w) - ((1-2w)/w) arcsin(sqrt(w)) ), 0 < w <= 1/2.
double fidelity_mean_analytic(double w);
// Small-w asymptote (8 / 3 pi) sqrt(w).
double fidelity_mean_small_w(double w);
// Var(F) = 2 w (1-w) / (pi^2 r^2).
double fidelity_variance_analytic(double w, long r);

// Moments of the limiting eigenvalue density of pi1 pi2 pi1 on its range,
//   rho(lambda) = (1/(2 pi w)) sqrt(a - lambda) / (sqrt(lambda)(1 - lambda)),
// supported on [0, a], a = 4w(1-w). Quadrature with lambda = a sin^2(theta),
// which removes both endpoint singularities. n may be fractional; the n=1/2
// moment is E(F). Requires 0 < w < 1/2.
double eigen_density_moment(double w, double n);

// Quadratic (Gaussian) approximation to the log of the fidelity large-
// deviation probability: -r^2 pi^2 / (4 w (1-w)) (F - E(F))^2. Cubic and
// higher orders are not modeled.
double log_prob_fidelity(double f, double w, long r);

struct FidelitySample {
  int d = 0;
  int r = 0;
  double fidelity = 0.0;
  VectorXd eigenvalues;  // the r nonzero eigenvalues of pi1 pi2 pi1, descending
};

FidelitySample sample_fidelity_pair(int d, int r, RngStream& rng);

// Pair i uses stream index i.
std::vector<FidelitySample> fidelity_samples(int d, int r, long pairs,
                                             std::uint64_t master_seed,
                                             int workers = 0);

struct PackingResult {
  int d = 0;
  int r = 0;
  double eps = 0.0;
  int accepted = 0;
  long draws = 0;
  std::uint64_t seed = 0;
  bool verified = false;  // final full pairwise re-check
  double max_pair_fidelity = 0.0;
};

// Rejection packing: draw random rank-r states, keep one iff its fidelity to
// every kept state is below eps. Sequential by construction.
PackingResult greedy_packing(int d, int r, double eps, long max_draws,
                             std::uint64_t seed);

struct DisplacementReport {
  long trials = 0;
  double max_violation = 0.0;  // max over trials of rhs - lhs
  bool ok = false;             // holds within 1e-8 slack on every trial
};

// Checks ||U P U^dagger - P||_1 >= 2 Tr(U P U^dagger (1 - P)) on Haar samples.
DisplacementReport displacement_distance_check(int d, int r, long trials,
                                               std::uint64_t seed,
                                               int workers = 0);

}  // namespace ruc
