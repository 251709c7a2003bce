#include <doctest.h>

#include <cmath>

#include "oracle_utils.hpp"
#include "ruc/domain_wall.hpp"

using namespace ruc;

TEST_CASE("merge counts: frozen values") {
  // ell=4, x=y=2: binom(1,1)^2 - binom(1,2)^2 = 1
  CHECK(n_merge(2, 2, 4) == 1);
  // below the reachable region
  CHECK(n_merge(1, 0, 2) == 0);
  CHECK(n_merge(0, 1, 2) == 0);
  // ell=2, meet at (2,2): three walker pairs
  CHECK(n_merge(2, 2, 2) == 3);
  // ell=0 point mass
  CHECK(n_merge(0, 0, 0) == 1);
  CHECK(n_merge(1, 0, 0) == 0);
  CHECK_THROWS_AS(n_merge(2, 2, 3), std::invalid_argument);
}

TEST_CASE("merge counts match brute-force enumeration") {
  for (long ell = 2; ell <= 8; ell += 2)
    for (long x = 0; x <= ell / 2 + 5; ++x)
      for (long y = 0; y <= ell / 2 + 5; ++y) {
        if (x + y - ell / 2 > 9) continue;  // keep the enumeration bounded
        CAPTURE(x); CAPTURE(y); CAPTURE(ell);
        CHECK(n_merge(x, y, ell) == oracle::first_meet_count(x, y, ell));
      }
}

TEST_CASE("diagonal sums") {
  CHECK(n_z(1, 2) == 0);
  for (long ell = 2; ell <= 10; ell += 2) {
    CHECK(n_z(ell, ell) == 1);       // only (ell/2, ell/2) contributes
    CHECK(n_z(ell / 2, ell) == 0);   // the reflection formula vanishes below z=ell
    CHECK(n_z(ell - 1, ell) == 0);
  }
  for (long ell = 2; ell <= 6; ell += 2)
    for (long z = 0; z <= ell / 2 + 8; ++z) {
      CAPTURE(z); CAPTURE(ell);
      CHECK(n_z(z, ell) == oracle::first_meet_diagonal(z, ell));
    }
}

TEST_CASE("truncated configurations: frozen values and free regime") {
  CHECK(j_paths(1, 2) == 4);  // one merged-at-boundary pair, three survivors
  for (long ell = 2; ell <= 8; ell += 2)
    for (long T = 0; 2 * T <= ell; ++T) {
      BigInt four_t = 1;
      for (long i = 0; i < T; ++i) four_t *= 4;
      CHECK(j_paths(T, ell) == four_t);
    }
  CHECK_THROWS_AS(j_paths_sep(3, 2, 4), std::invalid_argument);
}

TEST_CASE("truncated configurations match brute force") {
  for (long ell = 2; ell <= 8; ell += 2)
    for (long T = 0; T <= 6; ++T) {
      const auto expected = oracle::j_by_sep(T, ell);
      const auto got = j_paths_by_sep(T, ell);
      BigInt total_expected = 0;
      for (long d = 0; d < static_cast<long>(got.size()); ++d) {
        const auto it = expected.find(2 * d);
        const long want = it == expected.end() ? 0 : it->second;
        CAPTURE(T); CAPTURE(ell); CAPTURE(d);
        CHECK(got[static_cast<size_t>(d)] == want);
      }
      for (const auto& [r, c] : expected) total_expected += c;
      CHECK(j_paths(T, ell) == total_expected);
    }
}

TEST_CASE("boundary separation closed form") {
  // j_paths_sep(ell, T, ell) = binom(2T, T) - binom(2T, T + ell)
  for (long ell = 2; ell <= 6; ell += 2)
    for (long T = 0; T <= 8; ++T) {
      CAPTURE(T); CAPTURE(ell);
      CHECK(j_paths_sep(ell, T, ell) ==
            binomial(2 * T, T) - binomial(2 * T, T + ell));
    }
}

TEST_CASE("exact purity: frozen values") {
  CHECK(purity_exact(2, 4, 0).exact == 1);
  CHECK(purity_exact(2, 2, 1).exact == Rational(16, 25));
  CHECK(purity_exact(2, 4, 1).exact == Rational(16, 25));
  CHECK_THROWS_AS(purity_exact(2, 3, 1), std::invalid_argument);
}

TEST_CASE("exact purity: closed form below the merge horizon") {
  for (long q : {2L, 3L, 5L})
    for (long ell = 2; ell <= 12; ell += 2)
      for (long T = 0; 2 * T < ell; ++T) {
        const Rational expected = rational_pow(Rational(2 * q, q * q + 1), 2 * T);
        CAPTURE(q); CAPTURE(ell); CAPTURE(T);
        CHECK(purity_exact(q, ell, T).exact == expected);
      }
}

TEST_CASE("exact purity: monotone in depth and above the floor") {
  for (long q : {2L, 3L})
    for (long ell = 2; ell <= 6; ell += 2) {
      Rational prev = 2;
      for (long T = 0; T <= 9; ++T) {
        const Rational p = purity_exact(q, ell, T).exact;
        CHECK(p <= prev);
        CHECK(p >= rational_pow(Rational(1, q), ell));
        CHECK(p <= 1);
        prev = p;
      }
    }
}

TEST_CASE("two-sided purity bound sandwich, exact rationals") {
  for (long q : {2L, 3L, 5L})
    for (long ell = 2; ell <= 8; ell += 2)
      for (long T = 0; T <= 9; ++T) {
        const auto [lo, hi] = purity_gap_bounds_exact(q, ell, T);
        const Rational gap =
            purity_exact(q, ell, T).exact - rational_pow(Rational(1, q), ell);
        CAPTURE(q); CAPTURE(ell); CAPTURE(T);
        CHECK(gap >= lo);
        CHECK(gap <= hi);
      }
  // T=0 endpoints: lower = 1 - q^-2, upper = 1
  const auto [lo0, hi0] = purity_gap_bounds_exact(2, 4, 0);
  CHECK(lo0 == Rational(3, 4));
  CHECK(hi0 == 1);
}

TEST_CASE("infinite sum truncation approaches q^-ell") {
  for (long q : {2L, 3L}) {
    for (long ell : {2L, 4L}) {
      const auto s = merged_sum_truncated(q, ell, 200);
      const double target = std::pow(static_cast<double>(q), -static_cast<double>(ell));
      CHECK(s.value <= target + 1e-15);
      CHECK(std::abs(s.value - target) < 1e-6);
      // monotone in the cutoff
      CHECK(merged_sum_truncated(q, ell, 40).exact <=
            merged_sum_truncated(q, ell, 60).exact);
    }
  }
  CHECK(merged_sum_truncated(5, 0, 0).exact == 1);
  CHECK_THROWS_AS(merged_sum_truncated(2, 4, 2), std::invalid_argument);
}

TEST_CASE("generating function identities") {
  CHECK(merge_generating_function(0, 0.4, 10) == 1.0);
  for (double q : {2.0, 3.0, 1.5}) {  // real q >= 1 is allowed here
    const auto res = merge_gf_identities(q, 4, 300);
    CAPTURE(q);
    CHECK(std::abs(res.at_zero_minus_one) == 0.0);
    CHECK(std::abs(res.closed_form_residual) < 1e-8);
    CHECK(std::abs(res.multiplicativity) < 1e-6);
  }
}

TEST_CASE("separation profile reproduces the tail of the merged sum") {
  // sum_{z >= T + ell/2} N(z;ell) eta^(2z-ell)
  //   = eta^(2T) sum_r J(r;T;ell) q^-r, checked by truncation.
  for (long q : {2L, 3L})
    for (long ell : {2L, 4L})
      for (long T : {1L, 2L, 3L, 5L}) {
        const double eta = static_cast<double>(q) / (q * q + 1);
        double lhs = 0.0;
        for (long z = T + ell / 2; z <= T + ell / 2 + 120; ++z)
          lhs += to_double(n_z(z, ell)) * std::pow(eta, 2.0 * z - ell);
        const auto profile = j_paths_by_sep(T, ell);
        double rhs = 0.0;
        for (size_t d = 0; d < profile.size(); ++d)
          rhs += to_double(profile[d]) *
                 std::pow(static_cast<double>(q), -2.0 * static_cast<double>(d));
        rhs *= std::pow(eta, 2.0 * T);
        CAPTURE(q); CAPTURE(ell); CAPTURE(T);
        CHECK(std::abs(lhs - rhs) < 1e-8);
      }
}
