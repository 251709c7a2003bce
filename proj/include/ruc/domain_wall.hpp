#pragma once

#include <utility>
#include <vector>

#include "ruc/exact.hpp"

namespace ruc {

// Exact ensemble-averaged purity of an interval of even length ell after T
// brickwork layers on the infinite chain, evaluated by counting domain-wall
// configurations. Two synchronized walkers start at (ell/2, 0) and
// (0, ell/2) on a square lattice and move up or right one step per time
// unit; a configuration's weight is eta^(wall length) with
// eta = q / (q^2 + 1). Walkers that meet merge and stop. Everything here is
// exact integer/rational arithmetic.

// Number of walker pairs that meet for the first time at (x, y):
// binom(tau-1, y-1) binom(tau-1, x-1) - binom(tau-1, y) binom(tau-1, x),
// tau = x + y - ell/2 (reflection counting). Zero when x or y < ell/2.
// For ell = 0 the only configuration is the empty one at the origin.
BigInt n_merge(long x, long y, long ell);

// Sum of n_merge over x + y = z. Zero for z < ell; n_z(ell, ell) = 1.
BigInt n_z(long z, long ell);

// Count of walker-pair configurations truncated at T steps: pairs of T-step
// up/right walks that do not coincide at any step strictly before T.
// Coincidence exactly at step T is a merger on the truncation boundary and
// is allowed. Equals 4^T when T <= ell/2.
BigInt j_paths(long T, long ell);

// Same count restricted to final l1-separation r between the two walker
// endpoints (r even; r = 0 means they merged at the final step).
BigInt j_paths_sep(long r, long T, long ell);

// Full separation profile: index d holds the count with r = 2d.
std::vector<BigInt> j_paths_by_sep(long T, long ell);

// Exact purity plus a floating rendering.
struct PurityValue {
  Rational exact;
  double value = 0.0;
};

// eta = q / (q^2 + 1)
Rational eta_exact(long q);

// P(T; ell) = J(T; ell) eta^(2T) + sum_{z < T + ell/2} N(z; ell) eta^(2z - ell)
PurityValue purity_exact(long q, long ell, long T);

// Truncation of sum_{x,y} N(x,y;ell) eta^(2x+2y-ell) over z = x+y <= z_max.
// Monotone nondecreasing in z_max and bounded by q^-ell, which it converges
// to; the tail beyond z_max is at most sum_{z>z_max} (2 eta)^(2(z-ell/2)).
PurityValue merged_sum_truncated(long q, long ell, long z_max);

// Q(ell) = sum_z N(z;ell) eta^(2(z-ell)) truncated at z <= z_max, floating
// eta. Satisfies Q(0) = 1, Q(ell)Q(2) = Q(ell+2), Q(2) = (1 + q^-2)^2.
double merge_generating_function(long ell, double eta, long z_max);

struct MergeGfResiduals {
  double at_zero_minus_one;     // Q(0) - 1
  double multiplicativity;      // Q(ell+2) - Q(ell) Q(2)
  double closed_form_residual;  // Q(2) - (1 + q^-2)^2
};
MergeGfResiduals merge_gf_identities(double q, long ell, long z_max);

// Two-sided bound on P(T; ell) - q^-ell:
//   (1 - q^-2)/(T+1) binom(2T, T) eta^(2T)  <=  .  <=  (2 eta)^(2T)
std::pair<Rational, Rational> purity_gap_bounds_exact(long q, long ell, long T);
std::pair<double, double> purity_gap_bounds(long q, long ell, long T);

}  // namespace ruc
