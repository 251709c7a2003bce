#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ruc/linalg.hpp"

namespace ruc {

// Closed-form evaluators. Entropic quantities are in natural-log units
// unless noted; counting bounds are returned in log scale since the linear
// values overflow doubles at interesting parameters.

// min(2T, x) + min(2T, ell-x) - min(2T, ell), in units of log q.
double mi_profile_limit(double x, double depth, double ell);

// Area under the profile: 2T(ell - 2T), clipped at zero for T >= ell/2.
double trapezoid_area(double depth, double ell);

// The profile sampled on the even grid x = 0, 2, ..., ell. Symmetric under
// x <-> ell - x, zero at the ends, peak min(2T, ell - 2T, ell/2).
struct TrapezoidProfile {
  int ell = 0;
  double depth = 0.0;
  std::vector<std::pair<int, double>> samples;
};
TrapezoidProfile trapezoid_profile(double depth, int ell);

// max(0, ((ell - 2T) T - 5 eps ell^2) / 4); requires eps in (0, 1/2).
double complexity_lower_bound(double depth, double ell, double eps);

// 4 m log q + 5 eps ell log(q / eps)
double mi_gate_bound(double m, double q, double eps, double ell);

// 10 eps log(d_min / eps), valid for eps < 1/2.
double mi_continuity(double eps, double d_min);

// ell/2 (1 + 3 log2/log q) + 3 log(1/eps)/log q
double thermalization_time(double q, double ell, double eps);

// (1+eps)/((1-delta)^(2k) q^(k(2 ell - L))) min(exp(k^2 q^-(L-ell)), k!),
// in log scale. Meaningful (possibly below 1) only when ell > L/2; the
// report flags that.
struct OverlapProbBound {
  double log_value = 0.0;
  bool meaningful_regime = false;  // ell > L/2
};
OverlapProbBound prob_overlap_bound(long k, double eps_design, double delta,
                                    long ell, long big_l, double q);

// Piecewise growth formulas. At the transition T = ell/2 the late-time
// branch is returned; both one-sided values are exposed separately.
struct PiecewiseValue {
  double value = 0.0;       // late branch at the transition point
  double before = 0.0;      // T -> (ell/2)^- branch value
  double after = 0.0;       // T -> (ell/2)^+ branch value
  bool at_transition = false;
};
PiecewiseValue holographic_complexity(double ell, double big_l, double depth,
                                      double s, double beta, bool larger_region);
PiecewiseValue holographic_entropy(double ell, double depth, double s);

// Named bound evaluation with per-precondition validity flags. Out-of-range
// inputs are flagged, not silently extrapolated.
struct BoundReport {
  std::string name;
  std::map<std::string, double> inputs;
  double value = 0.0;
  std::vector<std::pair<std::string, bool>> validity;

  bool valid() const {
    for (const auto& [cond, ok] : validity)
      if (!ok) return false;
    return true;
  }
};

// log N > -log 15 + k log(2 - beta/alpha); needs beta <= 2 alpha, and the
// design regime k < d, eps_design < 1 when d is supplied.
BoundReport packing_design_bound(double k, double alpha, double beta,
                                 double eps_design,
                                 std::optional<double> d = std::nullopt);
// log N0 >= (1 - beta/alpha)^2 d^2 / 16, needs beta < alpha.
BoundReport packing_full_bound(double d, double alpha, double beta);
// log N >= (eps - r/d)^2 r d / 2, needs r < eps d.
BoundReport packing_rank_bound(double r, double d, double eps);
// log N = (pi^2/4) eps^2 r d, flagged unless sqrt(r/d) < eps < 1.
BoundReport packing_fidelity_count(double r, double d, double eps);

// Extremal spectra realizing the 1-norm/2-norm and fidelity/overlap
// conversion factors. The ratio is evaluated numerically from the explicit
// diagonal construction and must match the closed form.
struct ExtremalResult {
  double ratio = 0.0;
  double closed_form = 0.0;
  bool degenerate = false;
};
// ||a-b||_1^2 / ||a-b||_2^2 = 4r(1 - r/d) with a uniform rank-r state.
ExtremalResult norm_extremal_onetwo(int r, int d, double eps);
// ||sqrt(rho) sqrt(sigma)||_1^2 / Tr(rho sigma) = d.
ExtremalResult fidelity_extremal(int d, double eps);

}  // namespace ruc
