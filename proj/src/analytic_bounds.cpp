#include "ruc/analytic_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ruc {

namespace {

double log_factorial(long k) {
  return std::lgamma(static_cast<double>(k) + 1.0);
}

}  // namespace

double mi_profile_limit(double x, double depth, double ell) {
  if (x < 0.0 || x > ell)
    throw std::invalid_argument("mi_profile: need 0 <= x <= ell");
  if (depth < 0.0) throw std::invalid_argument("mi_profile: depth >= 0");
  const double t2 = 2.0 * depth;
  return std::min(t2, x) + std::min(t2, ell - x) - std::min(t2, ell);
}

double trapezoid_area(double depth, double ell) {
  if (depth < 0.0) throw std::invalid_argument("trapezoid_area: depth >= 0");
  return std::max(0.0, 2.0 * depth * (ell - 2.0 * depth));
}

TrapezoidProfile trapezoid_profile(double depth, int ell) {
  if (ell < 0 || ell % 2 != 0)
    throw std::invalid_argument("trapezoid_profile: ell must be even and >= 0");
  TrapezoidProfile p;
  p.ell = ell;
  p.depth = depth;
  for (int x = 0; x <= ell; x += 2)
    p.samples.emplace_back(x, mi_profile_limit(x, depth, ell));
  return p;
}

double complexity_lower_bound(double depth, double ell, double eps) {
  if (!(eps > 0.0 && eps < 0.5))
    throw std::invalid_argument("complexity_lower_bound: eps must be in (0, 1/2)");
  if (depth < 0.0 || depth > ell / 2.0)
    throw std::invalid_argument("complexity_lower_bound: need 0 <= T <= ell/2");
  return std::max(0.0, ((ell - 2.0 * depth) * depth - 5.0 * eps * ell * ell) / 4.0);
}

double mi_gate_bound(double m, double q, double eps, double ell) {
  if (!(eps > 0.0 && eps < 0.5))
    throw std::invalid_argument("mi_gate_bound: eps must be in (0, 1/2)");
  if (m < 0.0 || ell < 0.0)
    throw std::invalid_argument("mi_gate_bound: m, ell must be >= 0");
  return 4.0 * m * std::log(q) + 5.0 * eps * ell * std::log(q / eps);
}

double mi_continuity(double eps, double d_min) {
  if (!(eps > 0.0 && eps < 0.5))
    throw std::invalid_argument("mi_continuity: eps must be in (0, 1/2)");
  return 10.0 * eps * std::log(d_min / eps);
}

double thermalization_time(double q, double ell, double eps) {
  if (q < 2.0) throw std::invalid_argument("thermalization_time: q must be >= 2");
  if (!(eps > 0.0 && eps <= 1.0))
    throw std::invalid_argument("thermalization_time: eps must be in (0, 1]");
  const double lq = std::log(q);
  return ell / 2.0 * (1.0 + 3.0 * std::log(2.0) / lq) + 3.0 * std::log(1.0 / eps) / lq;
}

OverlapProbBound prob_overlap_bound(long k, double eps_design, double delta,
                                    long ell, long big_l, double q) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("prob_overlap_bound: delta must be in (0, 1)");
  if (k < 0 || ell > big_l || ell < 0)
    throw std::invalid_argument("prob_overlap_bound: need k >= 0, 0 <= ell <= L");
  if (eps_design < 0.0)
    throw std::invalid_argument("prob_overlap_bound: eps_design must be >= 0");
  const double lq = std::log(q);
  const double kk = static_cast<double>(k);
  const double min_term = std::min(
      kk * kk * std::exp(-static_cast<double>(big_l - ell) * lq), log_factorial(k));
  OverlapProbBound out;
  out.log_value = std::log1p(eps_design) - 2.0 * kk * std::log1p(-delta) -
                  kk * static_cast<double>(2 * ell - big_l) * lq + min_term;
  out.meaningful_regime = 2 * ell > big_l;
  return out;
}

PiecewiseValue holographic_complexity(double ell, double big_l, double depth,
                                      double s, double beta, bool larger_region) {
  if (!(s > 0.0 && beta > 0.0))
    throw std::invalid_argument("holographic_complexity: s, beta must be > 0");
  if (ell > big_l)
    throw std::invalid_argument("holographic_complexity: need ell <= L");
  const double rate = s / beta;
  PiecewiseValue out;
  const double early = larger_region ? rate * (big_l - ell) * depth : rate * ell * depth;
  const double late = larger_region ? rate * big_l * depth : 0.0;
  out.before = early;
  out.after = late;
  out.at_transition = depth == ell / 2.0;
  out.value = depth < ell / 2.0 ? early : late;
  return out;
}

PiecewiseValue holographic_entropy(double ell, double depth, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("holographic_entropy: s must be > 0");
  PiecewiseValue out;
  out.before = s * 2.0 * depth;
  out.after = s * ell;
  out.at_transition = depth == ell / 2.0;
  out.value = depth < ell / 2.0 ? out.before : out.after;
  return out;
}

BoundReport packing_design_bound(double k, double alpha, double beta,
                                 double eps_design, std::optional<double> d) {
  BoundReport r;
  r.name = "packing_design_bound";
  r.inputs = {{"k", k}, {"alpha", alpha}, {"beta", beta}, {"eps_design", eps_design}};
  if (d) r.inputs["d"] = *d;
  r.validity.emplace_back("beta <= 2*alpha", beta <= 2.0 * alpha);
  r.validity.emplace_back("eps_design < 1", eps_design < 1.0);
  if (d) r.validity.emplace_back("k < d", k < *d);
  const double sep = 2.0 - beta / alpha;
  r.value = -std::log(15.0) + k * std::log(sep);  // -inf when beta = 2 alpha
  r.validity.emplace_back("bound nonvacuous (log N > 0)", r.value > 0.0);
  return r;
}

BoundReport packing_full_bound(double d, double alpha, double beta) {
  BoundReport r;
  r.name = "packing_full_bound";
  r.inputs = {{"d", d}, {"alpha", alpha}, {"beta", beta}};
  r.validity.emplace_back("beta < alpha", beta < alpha);
  const double u = 1.0 - beta / alpha;
  r.value = u * u / 16.0 * d * d;
  return r;
}

BoundReport packing_rank_bound(double r_rank, double d, double eps) {
  BoundReport r;
  r.name = "packing_rank_bound";
  r.inputs = {{"r", r_rank}, {"d", d}, {"eps", eps}};
  r.validity.emplace_back("r < eps*d", r_rank < eps * d);
  const double u = eps - r_rank / d;
  r.value = 0.5 * u * u * r_rank * d;
  return r;
}

BoundReport packing_fidelity_count(double r_rank, double d, double eps) {
  BoundReport r;
  r.name = "packing_fidelity_count";
  r.inputs = {{"r", r_rank}, {"d", d}, {"eps", eps}};
  r.validity.emplace_back("sqrt(r/d) < eps", std::sqrt(r_rank / d) < eps);
  r.validity.emplace_back("eps < 1", eps < 1.0);
  r.value = M_PI * M_PI / 4.0 * eps * eps * r_rank * d;
  return r;
}

ExtremalResult norm_extremal_onetwo(int r, int d, double eps) {
  if (r < 1 || r > d) throw std::invalid_argument("norm_extremal: need 1 <= r <= d");
  ExtremalResult out;
  out.closed_form = 4.0 * r * (1.0 - static_cast<double>(r) / d);
  if (r == d) {
    out.degenerate = true;  // no tail to absorb the shifted weight
    out.ratio = out.closed_form;
    return out;
  }
  const double a_r = 1.0 / r;  // uniform rank-r spectrum
  const double tail = r * eps / static_cast<double>(d - r);
  if (!(eps > 0.0) || eps >= a_r || a_r - eps < tail)
    throw std::invalid_argument("norm_extremal: eps too large for this (r, d)");
  VectorXd a = VectorXd::Zero(d), b = VectorXd::Zero(d);
  for (int i = 0; i < r; ++i) {
    a(i) = a_r;
    b(i) = a_r - eps;
  }
  for (int i = r; i < d; ++i) b(i) = tail;
  const VectorXd diff = a - b;
  const double one = diff.cwiseAbs().sum();
  const double two2 = diff.squaredNorm();
  out.ratio = one * one / two2;
  return out;
}

ExtremalResult fidelity_extremal(int d, double eps) {
  if (d < 1) throw std::invalid_argument("fidelity_extremal: d must be >= 1");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("fidelity_extremal: eps must be in (0, 1)");
  // rho = diag(1-eps, eps/d ... eps/d, 0), sigma reversed, dimension d+2.
  VectorXd rho = VectorXd::Zero(d + 2), sig = VectorXd::Zero(d + 2);
  rho(0) = 1.0 - eps;
  sig(d + 1) = 1.0 - eps;
  for (int i = 1; i <= d; ++i) {
    rho(i) = eps / d;
    sig(i) = eps / d;
  }
  double overlap_one = 0.0, tr_prod = 0.0;
  for (int i = 0; i < d + 2; ++i) {
    overlap_one += std::sqrt(rho(i) * sig(i));
    tr_prod += rho(i) * sig(i);
  }
  ExtremalResult out;
  out.ratio = overlap_one * overlap_one / tr_prod;
  out.closed_form = static_cast<double>(d);
  return out;
}

}  // namespace ruc
