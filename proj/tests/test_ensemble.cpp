#include <doctest.h>

#include <cmath>

#include "ruc/domain_wall.hpp"
#include "ruc/ensemble.hpp"

using namespace ruc;

TEST_CASE("depth zero gives exact purity one") {
  const auto g = CircuitGeometry::uniform(2, 8);
  EnsembleOptions opt;
  opt.trials = 16;
  opt.seed = 1;
  const auto est = ensemble_average(Metric::purity, g, {0, 2}, 0, opt);
  CHECK(est.mean == 1.0);
  CHECK(est.stderr_of_mean == 0.0);
}

TEST_CASE("trials must be positive") {
  const auto g = CircuitGeometry::uniform(2, 8);
  EnsembleOptions opt;
  opt.trials = 0;
  CHECK_THROWS_AS(ensemble_average(Metric::purity, g, {1, 2}, 1, opt),
                  std::invalid_argument);
}

TEST_CASE("lightcone-free Monte Carlo purity matches the exact oracle") {
  EnsembleOptions opt;
  opt.trials = 1200;
  opt.seed = 5;
  // interval 2, depth 1 on an 8-ring: exact mean 4 eta^2 = 16/25
  const auto g = CircuitGeometry::uniform(2, 8);
  const auto est = ensemble_average(Metric::purity, g, {1, 2}, 1, opt);
  const double exact = purity_exact(2, 2, 1).value;
  CHECK(std::abs(est.mean - exact) < 4.0 * est.stderr_of_mean);
  // interval 4, depth 1: same closed form (2q/(q^2+1))^2 = 0.64
  const auto g2 = CircuitGeometry::uniform(2, 10);
  const auto est2 = ensemble_average(Metric::purity, g2, {1, 4}, 1, opt);
  CHECK(std::abs(est2.mean - 0.64) < 4.0 * est2.stderr_of_mean);
}

TEST_CASE("interval statistics do not depend on the ring size") {
  // lightcone-free equivalence: L = 10 and L = 12 draws agree
  EnsembleOptions opt;
  opt.trials = 800;
  opt.seed = 6;
  const auto a = ensemble_average(Metric::purity,
                                  CircuitGeometry::uniform(2, 10), {0, 2}, 2, opt);
  opt.seed = 7;
  const auto b = ensemble_average(Metric::purity,
                                  CircuitGeometry::uniform(2, 12), {0, 2}, 2, opt);
  const double joint = std::hypot(a.stderr_of_mean, b.stderr_of_mean);
  CHECK(std::abs(a.mean - b.mean) < 4.0 * joint);
}

TEST_CASE("estimates are reproducible and worker-independent") {
  const auto g = CircuitGeometry::uniform(2, 8);
  EnsembleOptions opt;
  opt.trials = 40;
  opt.seed = 9;
  opt.workers = 1;
  std::vector<double> v1, v2;
  opt.per_trial = &v1;
  const auto a = ensemble_average(Metric::renyi2, g, {1, 2}, 1, opt);
  opt.workers = 4;
  opt.per_trial = &v2;
  const auto b = ensemble_average(Metric::renyi2, g, {1, 2}, 1, opt);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_of_mean == b.stderr_of_mean);
  REQUIRE(v1.size() == v2.size());
  for (size_t i = 0; i < v1.size(); ++i) CHECK(v1[i] == v2[i]);
}

TEST_CASE("trace distance metric includes the padded zero spectrum") {
  // depth 0: rho is a pure projector; distance to I/4 is 2*(3/4)/2 = 3/4
  const auto g = CircuitGeometry::uniform(2, 8);
  EnsembleOptions opt;
  opt.trials = 4;
  opt.seed = 2;
  const auto est = ensemble_average(
      Metric::trace_distance_to_maximally_mixed, g, {0, 2}, 0, opt);
  CHECK(est.mean == doctest::Approx(0.75));
}

TEST_CASE("mutual information profile experiment") {
  const auto g = CircuitGeometry::uniform(2, 8);
  EnsembleOptions opt;
  opt.trials = 60;
  opt.seed = 3;
  SUBCASE("depth zero is identically zero") {
    const auto rows = mi_profile_experiment(g, {0, 4}, 0, opt);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
      CHECK(r.vn.mean == 0.0);
      CHECK(r.renyi2.mean == 0.0);
      CHECK(r.trapezoid == 0.0);
    }
  }
  SUBCASE("profile is symmetric in the cut") {
    const auto rows = mi_profile_experiment(g, {1, 4}, 1, opt);
    REQUIRE(rows.size() == 3);
    CHECK(rows.front().vn.mean == 0.0);
    CHECK(rows.back().vn.mean == 0.0);
    CHECK(rows[0].trapezoid == 0.0);
    CHECK(rows[1].trapezoid == 2.0);
    // the x and ell-x estimates are correlated but must agree statistically
    const double joint = std::hypot(rows[0].vn.stderr_of_mean,
                                    rows[2].vn.stderr_of_mean);
    CHECK(std::abs(rows[0].vn.mean - rows[2].vn.mean) <= 4.0 * joint + 1e-12);
  }
}

TEST_CASE("mi metric at a cut agrees with the profile") {
  const auto g = CircuitGeometry::uniform(2, 8);
  EnsembleOptions opt;
  opt.trials = 50;
  opt.seed = 4;
  opt.cut_x = 2;
  const auto est = ensemble_average(Metric::mi_at_cut, g, {1, 4}, 1, opt);
  const auto rows = mi_profile_experiment(g, {1, 4}, 1, opt);
  CHECK(est.mean == doctest::Approx(rows[1].vn.mean));
}
