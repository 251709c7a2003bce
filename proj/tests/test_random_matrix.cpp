#include <doctest.h>

#include <cmath>

#include "ruc/random_matrix.hpp"

using namespace ruc;

TEST_CASE("haar samples are unitary") {
  for (int d : {1, 2, 4, 8, 16}) {
    RngStream rng(7, static_cast<std::uint64_t>(d));
    for (int rep = 0; rep < 5; ++rep) {
      const MatrixXcd u = sample_haar_unitary(d, rng);
      CAPTURE(d);
      CHECK(unitarity_defect(u) < 1e-10);
    }
  }
  RngStream rng(3, 0);
  const MatrixXcd u1 = sample_haar_unitary(1, rng);
  CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-12);
  CHECK_THROWS_AS(sample_haar_unitary(0, rng), std::invalid_argument);
}

TEST_CASE("identical streams give identical matrices") {
  RngStream a(42, 9), b(42, 9), c(42, 10);
  const MatrixXcd ua = sample_haar_unitary(6, a);
  const MatrixXcd ub = sample_haar_unitary(6, b);
  const MatrixXcd uc = sample_haar_unitary(6, c);
  CHECK((ua - ub).cwiseAbs().maxCoeff() == 0.0);
  CHECK((ua - uc).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("haar first moment: E|U_00|^2 = 1/d") {
  const int d = 8;
  const long trials = 100000;
  std::vector<double> vals(trials);
  parallel_for(trials, 0, [&](long i) {
    RngStream rng(11, static_cast<std::uint64_t>(i));
    const MatrixXcd u = sample_haar_unitary(d, rng);
    vals[static_cast<size_t>(i)] = std::norm(u(0, 0));
  });
  const auto est = summarize(vals, 11);
  CHECK(std::abs(est.mean - 1.0 / d) < 4.0 * est.stderr_of_mean);
}

TEST_CASE("projectors: structure and rank") {
  RngStream rng(5, 0);
  for (auto [d, r] : std::vector<std::pair<int, int>>{{4, 2}, {9, 3}, {16, 5}}) {
    const MatrixXcd p = sample_projector(d, r, rng);
    CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((p - p.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(p.trace().real() - r) < 1e-8);
  }
  const MatrixXcd full = sample_projector(3, 3, rng);
  CHECK((full - MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(sample_projector(4, 5, rng), std::invalid_argument);
}

TEST_CASE("projector pair overlap: E Tr(P1 P2) = r^2/d") {
  const int d = 16, r = 4;
  const long trials = 10000;
  std::vector<double> vals(trials);
  parallel_for(trials, 0, [&](long i) {
    RngStream rng(21, static_cast<std::uint64_t>(i));
    const MatrixXcd a = sample_haar_isometry(d, r, rng);
    const MatrixXcd b = sample_haar_isometry(d, r, rng);
    vals[static_cast<size_t>(i)] = (a.adjoint() * b).squaredNorm();
  });
  const auto est = summarize(vals, 21);
  const double expected = static_cast<double>(r) * r / d;  // = 1
  CHECK(std::abs(est.mean - expected) < 4.0 * est.stderr_of_mean);
}

TEST_CASE("gaussian quadratic moments, exact") {
  CHECK(chi2_moment_exact(5, 0) == 1);
  CHECK(chi2_moment_exact(1, 2) == 2);
  CHECK(chi2_moment_exact(4, 3) == Rational(15, 8));
  for (long m : {1L, 2L, 7L, 64L}) CHECK(chi2_moment_exact(m, 1) == 1);
  CHECK_THROWS_AS(chi2_moment_exact(0, 2), std::invalid_argument);
}

TEST_CASE("gaussian quadratic moments vs Monte Carlo") {
  // x_i ~ N(0, 1/2); mean of ((1/m) sum_{2m} x^2)^k over 10^6 draws
  // within 1% of the exact product.
  const long draws = 1000000;
  for (auto [m, k] : std::vector<std::pair<long, long>>{{1, 2}, {4, 3}}) {
    std::vector<double> vals(draws);
    parallel_for(draws, 0, [&](long i) {
      RngStream rng(static_cast<std::uint64_t>(100 + m), static_cast<std::uint64_t>(i));
      double s = 0.0;
      for (long j = 0; j < 2 * m; ++j) {
        const double x = rng.normal() / std::sqrt(2.0);
        s += x * x;
      }
      vals[static_cast<size_t>(i)] = std::pow(s / static_cast<double>(m), k);
    });
    const auto est = summarize(vals, 0);
    const double exact = to_double(chi2_moment_exact(m, k));
    CAPTURE(m); CAPTURE(k);
    CHECK(std::abs(est.mean - exact) / exact < 0.01);
  }
}

TEST_CASE("normalized overlap moments obey the gaussian-moment bound") {
  // k-th Haar moment of (d/pq) Tr(U P U^dag Q) <= prod_{j<k} (1 + j/(pq)).
  const long trials = 10000;
  for (auto [d, p, q] : std::vector<std::array<int, 3>>{{16, 8, 8}, {32, 4, 8}}) {
    const auto samples = overlap_samples(d, p, q, trials, 77);
    for (int k = 1; k <= 6; ++k) {
      std::vector<double> powed(samples.size());
      for (size_t i = 0; i < samples.size(); ++i)
        powed[i] = std::pow(samples[i], k);
      const auto est = summarize(powed, 77);
      const double cap = to_double(chi2_moment_exact(static_cast<long>(p) * q, k));
      CAPTURE(d); CAPTURE(k);
      CHECK(est.mean <= cap + 4.0 * est.stderr_of_mean);
    }
  }
}

TEST_CASE("overlap mean is 1") {
  const auto est = projector_overlap_moment_mc(2, 1, 1, 1, 4000, 13);
  CHECK(std::abs(est.mean - 1.0) < 4.0 * est.stderr_of_mean);
  const auto est2 = projector_overlap_moment_mc(16, 8, 8, 2, 10000, 13);
  const double cap = to_double(chi2_moment_exact(64, 2));  // 65/64
  CHECK(est2.mean <= cap + 4.0 * est2.stderr_of_mean);
}

TEST_CASE("tail bound values") {
  CHECK(tail_bound(0.0, 3, 5) == 1.0);
  CHECK(std::abs(tail_bound(1.0, 1, 1) - std::exp(-(1.0 - std::log(2.0)))) < 1e-15);
  CHECK_THROWS_AS(tail_bound(-1.0, 1, 1), std::domain_error);
  CHECK_THROWS_AS(tail_bound(-2.0, 1, 1), std::domain_error);
}

TEST_CASE("empirical exceedance stays under the tail bound") {
  const int d = 32, p = 4, q = 4;
  const long trials = 100000;
  const auto samples = overlap_samples(d, p, q, trials, 99);
  for (double z : {0.25, 0.5, 1.0}) {
    long count = 0;
    for (double s : samples)
      if (s >= 1.0 + z) ++count;
    const double freq = static_cast<double>(count) / static_cast<double>(trials);
    const double bound = tail_bound(z, p, q);
    const double binom_se = std::sqrt(std::max(freq * (1.0 - freq),
                                               1.0 / static_cast<double>(trials)) /
                                      static_cast<double>(trials));
    CAPTURE(z);
    CHECK(freq <= bound + 4.0 * binom_se);
  }
}
