#include "ruc/projector_stats.hpp"

#include <cmath>
#include <stdexcept>

#include "ruc/random_matrix.hpp"

namespace ruc {

namespace {

void require_w(double w, bool allow_half) {
  const bool ok = w > 0.0 && (allow_half ? w <= 0.5 : w < 0.5);
  if (!ok)
    throw std::invalid_argument(
        allow_half ? "w must be in (0, 1/2]" : "w must be in (0, 1/2)");
}

}  // namespace

double fidelity_mean_analytic(double w) {
  require_w(w, true);
  return 2.0 / M_PI *
         (std::sqrt((1.0 - w) / w) -
          (1.0 - 2.0 * w) / w * std::asin(std::sqrt(w)));
}

double fidelity_mean_small_w(double w) {
  require_w(w, true);
  return 8.0 / (3.0 * M_PI) * std::sqrt(w);
}

double fidelity_variance_analytic(double w, long r) {
  require_w(w, true);
  if (r < 1) throw std::invalid_argument("fidelity_variance: r must be >= 1");
  return 2.0 * w * (1.0 - w) / (M_PI * M_PI * static_cast<double>(r) * r);
}

double eigen_density_moment(double w, double n) {
  require_w(w, false);
  if (n < 0.0) throw std::invalid_argument("eigen_density_moment: n must be >= 0");
  const double a = 4.0 * w * (1.0 - w);
  // lambda = a sin^2(theta):
  //   integrand = (a / (pi w)) cos^2(theta) (a sin^2 theta)^n / (1 - a sin^2 theta)
  const auto f = [&](double theta) {
    const double s2 = std::sin(theta) * std::sin(theta);
    const double c2 = 1.0 - s2;
    const double lam = a * s2;
    const double p = n == 0.0 ? 1.0 : std::pow(lam, n);
    return a / (M_PI * w) * c2 * p / (1.0 - lam);
  };
  // Composite Simpson; refine once to certify convergence.
  const auto simpson = [&](long panels) {
    const double h = (M_PI / 2.0) / static_cast<double>(panels);
    double sum = f(0.0) + f(M_PI / 2.0);
    for (long i = 1; i < panels; ++i)
      sum += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
  };
  const double coarse = simpson(1 << 12);
  const double fine = simpson(1 << 13);
  if (std::abs(fine - coarse) > 1e-9 * std::max(1.0, std::abs(fine)))
    throw std::runtime_error("eigen_density_moment: quadrature did not converge");
  return fine;
}

double log_prob_fidelity(double f, double w, long r) {
  require_w(w, true);
  if (r < 1) throw std::invalid_argument("log_prob_fidelity: r must be >= 1");
  const double dev = f - fidelity_mean_analytic(w);
  return -static_cast<double>(r) * r * M_PI * M_PI /
         (4.0 * w * (1.0 - w)) * dev * dev;
}

FidelitySample sample_fidelity_pair(int d, int r, RngStream& rng) {
  if (r < 1 || 2 * r > d)
    throw std::invalid_argument("sample_fidelity_pair: need 1 <= r <= d/2");
  const MatrixXcd a1 = sample_haar_isometry(d, r, rng);
  const MatrixXcd a2 = sample_haar_isometry(d, r, rng);
  const VectorXd sv = singular_values(a1.adjoint() * a2);
  FidelitySample s;
  s.d = d;
  s.r = r;
  s.eigenvalues = sv.array().square();
  s.fidelity = sv.sum() / static_cast<double>(r);
  return s;
}

std::vector<FidelitySample> fidelity_samples(int d, int r, long pairs,
                                             std::uint64_t master_seed,
                                             int workers) {
  std::vector<FidelitySample> out(static_cast<size_t>(pairs));
  parallel_for(pairs, workers, [&](long i) {
    RngStream rng(master_seed, static_cast<std::uint64_t>(i));
    out[static_cast<size_t>(i)] = sample_fidelity_pair(d, r, rng);
  });
  return out;
}

PackingResult greedy_packing(int d, int r, double eps, long max_draws,
                             std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("greedy_packing: eps must be in (0, 1)");
  if (r < 1 || 2 * r > d)
    throw std::invalid_argument("greedy_packing: need 1 <= r <= d/2");
  RngStream rng(seed, 0);
  std::vector<MatrixXcd> kept;
  const auto pair_fidelity = [&](const MatrixXcd& a, const MatrixXcd& b) {
    return singular_values(a.adjoint() * b).sum() / static_cast<double>(r);
  };
  PackingResult res;
  res.d = d;
  res.r = r;
  res.eps = eps;
  res.seed = seed;
  for (long draw = 0; draw < max_draws; ++draw) {
    ++res.draws;
    MatrixXcd cand = sample_haar_isometry(d, r, rng);
    bool ok = true;
    for (const auto& k : kept) {
      if (pair_fidelity(cand, k) >= eps) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(std::move(cand));
  }
  res.accepted = static_cast<int>(kept.size());
  // Postcondition audit: re-verify every pair once.
  res.verified = true;
  for (size_t i = 0; i < kept.size(); ++i) {
    for (size_t j = i + 1; j < kept.size(); ++j) {
      const double f = pair_fidelity(kept[i], kept[j]);
      res.max_pair_fidelity = std::max(res.max_pair_fidelity, f);
      if (f >= eps) res.verified = false;
    }
  }
  return res;
}

DisplacementReport displacement_distance_check(int d, int r, long trials,
                                               std::uint64_t seed, int workers) {
  if (r < 1 || r > d)
    throw std::invalid_argument("displacement_distance_check: need 1 <= r <= d");
  std::vector<double> violation(static_cast<size_t>(trials));
  parallel_for(trials, workers, [&](long i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    const MatrixXcd u = sample_haar_unitary(d, rng);
    MatrixXcd p = MatrixXcd::Zero(d, d);
    for (int k = 0; k < r; ++k) p(k, k) = 1.0;
    const MatrixXcd moved = u * p * u.adjoint();
    const double lhs = hermitian_eigenvalues(moved - p).cwiseAbs().sum();
    double inside = 0.0;  // Tr(U P U^dagger P)
    for (int k = 0; k < r; ++k) inside += moved(k, k).real();
    const double rhs = 2.0 * (static_cast<double>(r) - inside);
    violation[static_cast<size_t>(i)] = rhs - lhs;
  });
  DisplacementReport rep;
  rep.trials = trials;
  for (double v : violation) rep.max_violation = std::max(rep.max_violation, v);
  rep.ok = rep.max_violation <= 1e-8;
  return rep;
}

}  // namespace ruc
