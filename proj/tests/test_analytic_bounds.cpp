#include <doctest.h>

#include <cmath>

#include "ruc/analytic_bounds.hpp"

using namespace ruc;

TEST_CASE("mutual information profile") {
  for (double x : {0.0, 2.0, 4.0, 6.0}) CHECK(mi_profile_limit(x, 0, 6) == 0.0);
  CHECK(mi_profile_limit(5.0, 2.5, 10.0) == 5.0);  // triangle tip ell/2 at T=ell/4
  CHECK(mi_profile_limit(2, 3, 10) == 2.0);
  CHECK(mi_profile_limit(0, 3, 10) == 0.0);
  CHECK(mi_profile_limit(10, 3, 10) == 0.0);
  CHECK_THROWS_AS(mi_profile_limit(-1, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(mi_profile_limit(11, 1, 10), std::invalid_argument);
}

TEST_CASE("profile symmetry in depth: I(x;T,l) = I(x;l/2-T,l)") {
  for (int ell = 2; ell <= 16; ell += 2)
    for (int t = 0; 2 * t <= ell; ++t)
      for (int x = 0; x <= ell; x += 2) {
        CAPTURE(ell); CAPTURE(t); CAPTURE(x);
        CHECK(mi_profile_limit(x, t, ell) ==
              mi_profile_limit(x, ell / 2.0 - t, ell));
      }
}

TEST_CASE("sampled trapezoid profile") {
  const auto p = trapezoid_profile(3, 12);
  REQUIRE(p.samples.size() == 7);
  CHECK(p.samples.front().second == 0.0);
  CHECK(p.samples.back().second == 0.0);
  double peak = 0.0;
  for (size_t i = 0; i < p.samples.size(); ++i) {
    const auto [x, v] = p.samples[i];
    CHECK(v == p.samples[p.samples.size() - 1 - i].second);  // symmetric
    peak = std::max(peak, v);
  }
  CHECK(peak == 6.0);  // min(2T, ell-2T, ell/2)
}

TEST_CASE("discrete profile sum equals the area formula") {
  for (int ell = 2; ell <= 40; ell += 2)
    for (int t = 0; 2 * t <= ell; ++t) {
      double acc = 0.0;
      for (int x = 0; x < ell; x += 2)
        acc += mi_profile_limit(x, t, ell) + mi_profile_limit(x + 2, t, ell);
      CAPTURE(ell); CAPTURE(t);
      CHECK(acc == trapezoid_area(t, ell));  // exact on the even grid
    }
  CHECK(trapezoid_area(0, 12) == 0.0);
  CHECK(trapezoid_area(3, 12) == 36.0);  // T = ell/4 gives ell^2/4
  CHECK(trapezoid_area(7, 12) == 0.0);   // clipped past ell/2
}

TEST_CASE("complexity lower bound") {
  CHECK(complexity_lower_bound(25, 100, 0.001) == 300.0);
  CHECK(complexity_lower_bound(50, 100, 0.001) == 0.0);   // T = ell/2
  CHECK(complexity_lower_bound(10, 100, 0.4) == 0.0);     // clipped negative
  CHECK_THROWS_AS(complexity_lower_bound(10, 100, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(complexity_lower_bound(10, 100, 0.0), std::invalid_argument);
}

TEST_CASE("gate-count and continuity bounds") {
  const double expected = 12.0 * std::log(2.0) + 0.5 * std::log(200.0);
  CHECK(std::abs(mi_gate_bound(3, 2, 0.01, 10) - expected) < 1e-12);
  CHECK(mi_gate_bound(0, 2, 1e-9, 0) == 0.0);
  CHECK(std::abs(mi_continuity(0.1, 4) - std::log(40.0)) < 1e-12);
  CHECK_THROWS_AS(mi_continuity(0.5, 4), std::invalid_argument);
}

TEST_CASE("thermalization threshold") {
  const double expected = 2.0 * 4.0 + 3.0 * std::log(10.0) / std::log(2.0);
  CHECK(std::abs(thermalization_time(2, 4, 0.1) - expected) < 1e-12);
  CHECK(std::abs(expected - 17.9658) < 1e-3);
  // log(1/eps) term vanishes at eps = 1
  CHECK(std::abs(thermalization_time(3, 6, 1.0) -
                 3.0 * (1.0 + 3.0 * std::log(2.0) / std::log(3.0))) < 1e-12);
  // corrections vanish like 1/log q: |T - ell/2| <= (3 ell/2 log2 + 3 log(1/eps))/log q
  for (double q : {1e2, 1e6, 1e12, 1e100})
    CHECK(std::abs(thermalization_time(q, 4, 0.5) - 2.0) <= 7.0 / std::log(q));
  CHECK_THROWS_AS(thermalization_time(1.5, 4, 0.1), std::invalid_argument);
}

TEST_CASE("overlap probability estimate") {
  // k = 0: empty product leaves only 1 + eps_design.
  const auto b0 = prob_overlap_bound(0, 0.25, 0.9, 6, 10, 2);
  CHECK(std::abs(b0.log_value - std::log(1.25)) < 1e-12);
  // delta=0.9, k=4, ell=6, L=10, q=2:
  //   0.1^-8 * 2^-8 * min(e^(16/16), 24) = 1e8 / 256 * e
  const auto b = prob_overlap_bound(4, 0.0, 0.9, 6, 10, 2);
  const double expected = std::log(1e8 / 256.0) + 1.0;
  CHECK(std::abs(b.log_value - expected) < 1e-10);
  CHECK(b.meaningful_regime);
  CHECK_FALSE(prob_overlap_bound(4, 0.0, 0.9, 5, 10, 2).meaningful_regime);
  // nonincreasing in q when 2 ell > L
  double prev = prob_overlap_bound(3, 0.0, 0.5, 7, 10, 2).log_value;
  for (double q : {3.0, 5.0, 9.0, 17.0}) {
    const double cur = prob_overlap_bound(3, 0.0, 0.5, 7, 10, q).log_value;
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }
  // k = 1 with eps = 0 reduces to (1-delta)^-2 q^(L-2 ell) (1 + q^-(L-ell))
  // once the min picks the exponential branch to first order; at L-ell = 45
  // the two readings agree to 1e-12.
  const auto b1 = prob_overlap_bound(1, 0.0, 0.9, 50, 95, 2);
  const double reduced = -2.0 * std::log(0.1) - 5.0 * std::log(2.0) +
                         std::log1p(std::pow(2.0, -45.0));
  CHECK(std::abs(b1.log_value - reduced) < 1e-12);
  CHECK_THROWS_AS(prob_overlap_bound(1, 0.0, 1.0, 6, 10, 2), std::invalid_argument);
}

TEST_CASE("holographic growth formulas") {
  const auto c0 = holographic_complexity(8, 20, 0, 1.0, 2.0, false);
  CHECK(c0.value == 0.0);
  const auto e0 = holographic_entropy(8, 0, 1.0);
  CHECK(e0.value == 0.0);
  // small region: ell*T before ell/2, zero after
  const auto cs = holographic_complexity(8, 20, 3.9, 1.0, 2.0, false);
  CHECK(cs.value == doctest::Approx(0.5 * 8 * 3.9));
  const auto cs2 = holographic_complexity(8, 20, 4.1, 1.0, 2.0, false);
  CHECK(cs2.value == 0.0);
  // larger region: (L-ell)T then LT
  const auto cl = holographic_complexity(8, 20, 5.0, 1.0, 2.0, true);
  CHECK(cl.value == doctest::Approx(0.5 * 20 * 5.0));
  CHECK(cl.before == doctest::Approx(0.5 * 12 * 5.0));
  // at the transition the late branch is returned and both sides exposed
  const auto ct = holographic_complexity(8, 20, 4.0, 1.0, 2.0, false);
  CHECK(ct.at_transition);
  CHECK(ct.value == 0.0);
  CHECK(ct.before == doctest::Approx(16.0));
  // entropy: 2sT then s*ell
  CHECK(holographic_entropy(8, 3, 2.0).value == doctest::Approx(12.0));
  CHECK(holographic_entropy(8, 5, 2.0).value == doctest::Approx(16.0));
}

TEST_CASE("packing bounds and validity flags") {
  // beta = 2 alpha saturates the diameter: log(0) with a -log 15 offset
  const auto sat = packing_design_bound(5, 0.3, 0.6, 0.0);
  CHECK(std::isinf(sat.value));
  CHECK(sat.value < 0);
  CHECK_FALSE(sat.valid());
  // beta = alpha: k log(1) leaves -log 15; vacuous
  const auto vac = packing_design_bound(100, 0.3, 0.3, 0.0);
  CHECK(std::abs(vac.value + std::log(15.0)) < 1e-12);
  CHECK_FALSE(vac.valid());
  // a genuinely useful regime
  const auto ok = packing_design_bound(50, 0.4, 0.2, 0.5, 1024.0);
  CHECK(ok.valid());
  CHECK(std::abs(ok.value - (-std::log(15.0) + 50.0 * std::log(1.5))) < 1e-12);

  const auto full = packing_full_bound(64, 0.4, 0.2);
  CHECK(full.valid());
  CHECK(std::abs(full.value - 0.25 / 16.0 * 64.0 * 64.0) < 1e-12);
  CHECK_FALSE(packing_full_bound(64, 0.2, 0.4).valid());

  const auto rank = packing_rank_bound(2, 64, 0.5);
  CHECK(rank.valid());
  CHECK(std::abs(rank.value - 0.5 * std::pow(0.5 - 2.0 / 64.0, 2) * 2 * 64) < 1e-12);
  CHECK_FALSE(packing_rank_bound(40, 64, 0.5).valid());

  const auto fid = packing_fidelity_count(2, 32, 0.5);
  CHECK(fid.valid());
  CHECK(std::abs(fid.value - M_PI * M_PI / 4.0 * 0.25 * 64.0) < 1e-12);
  CHECK(fid.value == doctest::Approx(39.478).epsilon(1e-4));
  CHECK_FALSE(packing_fidelity_count(8, 32, 0.3).valid());  // eps below sqrt(r/d)
}

TEST_CASE("extremal spectra reach the conversion constants") {
  const auto a = norm_extremal_onetwo(4, 64, 1e-3);
  CHECK(std::abs(a.ratio - 15.0) < 1e-6);
  CHECK(std::abs(a.ratio - a.closed_form) < 1e-6);
  for (int d : {8, 16, 64})
    for (int r : {1, 2, 4}) {
      const auto e = norm_extremal_onetwo(r, d, 1e-4 / r);
      CAPTURE(r); CAPTURE(d);
      CHECK(std::abs(e.ratio - e.closed_form) < 1e-6);
      CHECK(std::abs(e.ratio - 4.0 * r * (1.0 - static_cast<double>(r) / d)) < 1e-6);
    }
  CHECK(norm_extremal_onetwo(4, 4, 1e-3).degenerate);
  CHECK_THROWS_AS(norm_extremal_onetwo(4, 64, 0.5), std::invalid_argument);

  const auto f = fidelity_extremal(10, 0.2);
  CHECK(std::abs(f.ratio - 10.0) < 1e-6);
  for (int d : {1, 7, 33, 64}) {
    const auto g = fidelity_extremal(d, 0.37);
    CHECK(std::abs(g.ratio - d) < 1e-6);
  }
  CHECK_THROWS_AS(fidelity_extremal(10, 0.0), std::invalid_argument);
}
