#include "ruc/domain_wall.hpp"

#include <cmath>
#include <stdexcept>

namespace ruc {

namespace {

void require_even(long v, const char* what) {
  if (v < 0 || (v % 2) != 0)
    throw std::invalid_argument(std::string(what) + " must be even and >= 0");
}

// Row of binomial coefficients binom(n, 0..n). One row serves a whole
// antidiagonal z = x + y since tau depends only on z.
std::vector<BigInt> binomial_row(long n) {
  std::vector<BigInt> row(static_cast<size_t>(n) + 1);
  row[0] = 1;
  for (long k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

BigInt row_at(const std::vector<BigInt>& row, long k) {
  if (k < 0 || k >= static_cast<long>(row.size())) return 0;
  return row[static_cast<size_t>(k)];
}

}  // namespace

BigInt n_merge(long x, long y, long ell) {
  require_even(ell, "ell");
  if (x < 0 || y < 0) throw std::invalid_argument("n_merge: x, y must be >= 0");
  if (ell == 0) return (x == 0 && y == 0) ? 1 : 0;
  const long half = ell / 2;
  if (x < half || y < half) return 0;
  const long tau = x + y - half;
  const auto row = binomial_row(tau - 1);
  return row_at(row, y - 1) * row_at(row, x - 1) -
         row_at(row, y) * row_at(row, x);
}

BigInt n_z(long z, long ell) {
  require_even(ell, "ell");
  if (z < 0) return 0;
  if (ell == 0) return z == 0 ? 1 : 0;
  const long half = ell / 2;
  if (z < ell) return 0;  // both walkers need >= ell/2 in each coordinate
  const long tau = z - half;
  const auto row = binomial_row(tau - 1);
  BigInt total = 0;
  for (long x = half; x <= z - half; ++x) {
    const long y = z - x;
    total += row_at(row, y - 1) * row_at(row, x - 1) -
             row_at(row, y) * row_at(row, x);
  }
  return total;
}

std::vector<BigInt> j_paths_by_sep(long T, long ell) {
  require_even(ell, "ell");
  if (ell < 2) throw std::invalid_argument("j_paths: ell must be >= 2");
  if (T < 0) throw std::invalid_argument("j_paths: T must be >= 0");
  // DP over the walker separation d = x_A - x_B >= 0 (r = 2d). Per step the
  // separation moves by -1 (one way), 0 (two ways), or +1 (one way).
  // Separation 0 before the final step means the walkers merged earlier;
  // those configurations belong to the merged sum and are dropped here.
  const long half = ell / 2;
  const size_t width = static_cast<size_t>(half + T) + 1;
  std::vector<BigInt> dp(width), next(width);
  dp[static_cast<size_t>(half)] = 1;
  for (long step = 1; step <= T; ++step) {
    for (auto& v : next) v = 0;
    for (size_t d = 0; d < width; ++d) {
      if (dp[d] == 0) continue;
      if (d > 0) next[d - 1] += dp[d];
      next[d] += 2 * dp[d];
      if (d + 1 < width) next[d + 1] += dp[d];
    }
    if (step < T) next[0] = 0;
    dp.swap(next);
  }
  return dp;
}

BigInt j_paths_sep(long r, long T, long ell) {
  if (r < 0 || (r % 2) != 0)
    throw std::invalid_argument("j_paths_sep: r must be even and >= 0");
  const auto profile = j_paths_by_sep(T, ell);
  const size_t d = static_cast<size_t>(r / 2);
  return d < profile.size() ? profile[d] : 0;
}

BigInt j_paths(long T, long ell) {
  BigInt total = 0;
  for (const auto& c : j_paths_by_sep(T, ell)) total += c;
  return total;
}

Rational eta_exact(long q) {
  if (q < 1) throw std::invalid_argument("eta: q must be >= 1");
  return Rational(q, q * q + 1);
}

PurityValue purity_exact(long q, long ell, long T) {
  require_even(ell, "ell");
  if (ell < 2) throw std::invalid_argument("purity_exact: ell must be >= 2");
  if (q < 1 || T < 0) throw std::invalid_argument("purity_exact: bad q or T");
  const Rational eta = eta_exact(q);
  Rational p = Rational(j_paths(T, ell)) * rational_pow(eta, 2 * T);
  for (long z = ell; z < T + ell / 2; ++z)
    p += Rational(n_z(z, ell)) * rational_pow(eta, 2 * z - ell);
  return PurityValue{p, to_double(p)};
}

PurityValue merged_sum_truncated(long q, long ell, long z_max) {
  require_even(ell, "ell");
  if (q < 1) throw std::invalid_argument("merged_sum_truncated: q must be >= 1");
  if (z_max < ell)
    throw std::invalid_argument("merged_sum_truncated: z_max must be >= ell");
  if (ell == 0) return PurityValue{1, 1.0};
  const Rational eta = eta_exact(q);
  Rational sum = 0;
  for (long z = ell; z <= z_max; ++z)
    sum += Rational(n_z(z, ell)) * rational_pow(eta, 2 * z - ell);
  return PurityValue{sum, to_double(sum)};
}

double merge_generating_function(long ell, double eta, long z_max) {
  require_even(ell, "ell");
  if (!(eta > 0.0) || !(eta <= 0.5))
    throw std::invalid_argument("merge_generating_function: need 0 < eta <= 1/2");
  if (ell == 0) return 1.0;
  double sum = 0.0;
  for (long z = ell; z <= z_max; ++z)
    sum += to_double(n_z(z, ell)) * std::pow(eta, 2.0 * (z - ell));
  return sum;
}

MergeGfResiduals merge_gf_identities(double q, long ell, long z_max) {
  if (q < 1.0) throw std::invalid_argument("merge_gf_identities: q >= 1");
  const double eta = q / (q * q + 1.0);
  const double q0 = merge_generating_function(0, eta, z_max);
  const double q2 = merge_generating_function(2, eta, z_max);
  const double ql = merge_generating_function(ell, eta, z_max);
  const double ql2 = merge_generating_function(ell + 2, eta, z_max);
  const double closed = (1.0 + 1.0 / (q * q)) * (1.0 + 1.0 / (q * q));
  return MergeGfResiduals{q0 - 1.0, ql2 - ql * q2, q2 - closed};
}

std::pair<Rational, Rational> purity_gap_bounds_exact(long q, long ell, long T) {
  require_even(ell, "ell");
  if (q < 1 || T < 0 || ell < 2)
    throw std::invalid_argument("purity_gap_bounds: bad arguments");
  const Rational eta = eta_exact(q);
  const Rational eta2t = rational_pow(eta, 2 * T);
  Rational lower = Rational(q * q - 1, q * q) / (T + 1);
  lower *= Rational(binomial(2 * T, T));
  lower *= eta2t;
  const Rational upper = rational_pow(2 * eta, 2 * T);
  return {lower, upper};
}

std::pair<double, double> purity_gap_bounds(long q, long ell, long T) {
  const auto [lo, hi] = purity_gap_bounds_exact(q, ell, T);
  return {to_double(lo), to_double(hi)};
}

}  // namespace ruc
