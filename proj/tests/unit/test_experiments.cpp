#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "amod/classnum.hpp"
#include "amod/experiments.hpp"

using namespace amod;

TEST_CASE("t sequence") {
  std::vector<u64> got;
  for (u64 n = 1; n <= 10; ++n) got.push_back(t_sequence(n));
  CHECK(got == std::vector<u64>{1, 1, 2, 1, 2, 3, 1, 2, 3, 4});
  // Unrolled reference.
  u64 n = 1;
  for (u64 block = 1; block <= 200; ++block)
    for (u64 j = 1; j <= block; ++j, ++n) CHECK(t_sequence(n) == j);
}

TEST_CASE("isqrt") {
  for (u64 n = 0; n < 100000; ++n) {
    const u64 r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt(~u64{0}) == 4294967295ULL);
}

TEST_CASE("builders") {
  CHECK(floor_log_element({2, 100}).at(7) == 1);
  CHECK(floor_sqrt_element({2, 200}).at(101) == 10);
  CHECK(t_pi_element({2, 100}).at(11) == 2);
  CHECK(pi_p_element({2, 100}).at(29) == 10);
  CHECK(index_element(2, {3, 100}).at(7) == 2);
  const auto lg = log_element(2, {3, 10000});
  std::vector<u64> zeros;
  for (std::size_t i = 0; i < lg.size(); ++i)
    if (lg.residue(i) == 0) zeros.push_back(lg.prime(i));
  CHECK(zeros == std::vector<u64>{1093, 3511});
  CHECK(log_element(2, {2, 50}).bad_primes() == std::vector<u64>{2});
}

TEST_CASE("AF criterion audit") {
  std::vector<i64> b10;
  for (i64 i = 1; i <= 10; ++i) b10.push_back(i);
  CHECK(af_criterion_audit(t_pi_element({2, 10000}), b10, 3).verdict == AuditVerdict::Consistent);
  CHECK(af_criterion_audit(constant_element({2, 1000}, 5), {1, 2, 3}, 1).verdict == AuditVerdict::Inconsistent);
  std::vector<i64> b8(b10.begin(), b10.begin() + 8);
  const auto fl = af_criterion_audit(floor_log_element({2, 10000}), b8, 1);
  CHECK(fl.verdict == AuditVerdict::Consistent);
  CHECK(fl.measurements.size() == 8);
  CHECK_THROWS_AS(af_criterion_audit(t_pi_element({2, 100}), {3, 2}, 1), Error);
}

TEST_CASE("growth audit") {
  CHECK(growth_audit(floor_log_values(10000), 4).verdict == AuditVerdict::Consistent);
  CHECK(growth_audit(floor_sqrt_values(10000), 2).verdict == AuditVerdict::Inconsistent);
  CHECK(growth_audit(constant_values(10000, 3), 2).verdict == AuditVerdict::Inconsistent);
  const auto wide = growth_audit(floor_log_values(100000), 4);
  CHECK(wide.verdict == AuditVerdict::Consistent);
  CHECK(wide.window.hi == 100000);
  CHECK(wide.measurements.size() == 4 * 5);
  CHECK_THROWS_AS(growth_audit(floor_log_values(90), 2), Error);
  const auto v = floor_log_values(100);
  CHECK(v.front() == std::pair<u64, i64>{2, 0});
  CHECK(v.back() == std::pair<u64, i64>{97, 4});
}

TEST_CASE("LZ2 audit") {
  const PrimePredicate all = [](u64) { return true; };
  const PrimeFunction fsqrt = [](u64 p) { return static_cast<double>(isqrt(p)); };
  CHECK(lz2_audit(all, fsqrt, 0.6, 0.8, 100000).verdict == AuditVerdict::Consistent);
  CHECK(lz2_audit(all, fsqrt, 0.4, 0.8, 100000).verdict == AuditVerdict::Inconsistent);
  const PrimePredicate three = [](u64 p) { return p % 4 == 3; };
  const PrimeFunction hb = [](u64 p) {
    return static_cast<double>(class_number_forms(FundamentalDiscriminant(-static_cast<i64>(p))));
  };
  CHECK(lz2_audit(three, hb, 0.7, 0.8, 100000).verdict == AuditVerdict::Consistent);
}

TEST_CASE("LZ1 partition counts") {
  const auto c = lz1_counts(2, 3, 1, 1, 10000);
  CHECK(c.P >= 1);
  CHECK(c.P <= c.P1 + c.P2 + c.P3);
  CHECK(lz1_partition_count(2, 3, 1, 1, 10000).verdict == AuditVerdict::Consistent);

  // p = 4 mod 5 forces 5 not dividing ord, and P is empty.
  const auto d = lz1_counts(2, 5, 4, 5, 10000);
  CHECK(d.r_divides_ord == 0);
  CHECK(d.P == 0);
  CHECK(lz1_partition_count(2, 5, 4, 5, 10000).verdict == AuditVerdict::Inconclusive);

  for (u64 r : {3ULL, 5ULL, 7ULL})
    for (auto [cc, N] : std::vector<std::pair<u64, u64>>{{1, 1}, {1, 4}, {3, 4}, {2, 3}})
      for (u64 X : {2000ULL, 20000ULL}) {
        const auto k = lz1_counts(3, r, cc, N, X);
        CHECK(k.P <= k.P1 + k.P2 + k.P3);
        CHECK(k.P <= k.candidates);
      }
  CHECK_THROWS_AS(lz1_counts(2, 3, 2, 4, 1000), Error);
}

TEST_CASE("root equidistribution") {
  const IntPolynomial f({1, 0, 1});
  const auto half = root_equidist(f, 100000, 0.0, 0.5);
  CHECK(half.ratio >= 0.45);
  CHECK(half.ratio <= 0.55);
  const auto full = root_equidist(f, 100000, 0.0, 1.0);
  CHECK(full.ratio == doctest::Approx(1.0).epsilon(0.05));
  CHECK(root_equidist(f, 1000, 0.3, 0.3).count == 0);
  const IntPolynomial g({1, 1, 1});
  for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 0.5}, {0.25, 0.75}, {0.1, 0.3}}) {
    CHECK(std::abs(root_equidist(f, 100000, a, b).ratio - (b - a)) <= 0.05);
    CHECK(std::abs(root_equidist(g, 100000, a, b).ratio - (b - a)) <= 0.05);
  }
  // Exact count on a small range by brute force.
  u64 brute = 0;
  for (u64 p : primes_in({2, 2000}))
    for (u64 nu = 0; nu < p; ++nu)
      if ((nu * nu + 1) % p == 0 && static_cast<double>(nu) / static_cast<double>(p) < 0.5) ++brute;
  CHECK(root_equidist(f, 2000, 0.0, 0.5).count == brute);
  CHECK_THROWS_AS(root_equidist(IntPolynomial({-1, 0, 1}), 1000, 0, 1), Error);
}

TEST_CASE("smooth scan") {
  const auto s = smooth_scan(IntPolynomial({1, 0, 1}), 0.99, 100);
  CHECK(std::find(s.begin(), s.end(), 7) != s.end());
  const auto lin = smooth_scan(IntPolynomial({0, 1}), 0.5, 1000);
  CHECK(std::find(lin.begin(), lin.end(), 4) != lin.end());
  for (u64 n = 2; n <= 1000; ++n) {
    u64 big = 1;
    for (auto [q, e] : factor_trial(n)) big = std::max(big, q);
    const bool smooth = static_cast<double>(big) <= std::pow(static_cast<double>(n), 0.5) + 1e-9;
    CHECK((std::find(lin.begin(), lin.end(), n) != lin.end()) == smooth);
  }
  CHECK_THROWS_AS(smooth_scan(IntPolynomial({0, 1}), 0.5, kMaxSmoothN + 1), Error);
}

TEST_CASE("property: b pi(p) = a mod p only while b pi(p) - a leaves (0, p)") {
  for (i64 a = -50; a <= 50; a += 5)
    for (i64 b = 1; b <= 50; b += 7)
      for (u64 p : pi_linear_hits(a, b, {2, 100000})) {
        const i64 v = b * static_cast<i64>(prime_count(p)) - a;
        CHECK((v <= 0 || v >= static_cast<i64>(p)));
      }
  CHECK(pi_linear_hits(10, 1, {2, 100}) == std::vector<u64>{29});
}

TEST_CASE("Wieferich scan") {
  CHECK(wieferich_scan(2, 0, 10000) == std::vector<u64>{1093, 3511});
  CHECK(wieferich_scan(2, 1, 10000) == std::vector<u64>{3, 29, 37, 3373});
  CHECK(wieferich_scan(1, 1, 10000).empty());
  CHECK(wieferich_scan(1, 0, 100) == primes_in({2, 100}));
}

TEST_CASE("log rational disproof") {
  CHECK(*log_rational_disproof(2, 1, 1, 1000).witness == 5);
  CHECK(*log_rational_disproof(2, 0, 1, 1000).witness == 3);
  const auto r = log_rational_disproof(4, 2, 1, 1000);
  CHECK(r.witness.has_value());
  CHECK_THROWS_AS(log_rational_disproof(-1, 1, 1, 100), Error);
  CHECK_THROWS_AS(log_rational_disproof(2, 2, 4, 100), Error);
}

TEST_CASE("PhiEll analysis") {
  const auto r = phi_ell_analysis(2, 1, 5, 1, 1);
  CHECK(r.phi == 31);
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].p == 31);
  CHECK(r.factors[0].t_p == 1);
  CHECK(r.T_ell == 6);
  CHECK(r.complete);

  const auto s = phi_ell_analysis(2, 1, 11, 1, 1);
  CHECK(s.phi == 2047);
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0].p == 23);
  CHECK(s.factors[1].p == 89);

  for (u64 ell : {5ULL, 7ULL, 11ULL, 13ULL, 29ULL, 61ULL}) {
    const auto t = phi_ell_analysis(2, 1, ell, 1, 1);
    CHECK(t.complete);
    CHECK(t.all_one_mod_ell);
    CHECK(t.product_matches);
    CHECK(t.diff_congruence);
    for (const auto& f : t.factors) CHECK(f.p % ell == 1);
  }
  for (auto [u, v] : std::vector<std::pair<u64, u64>>{{3, 1}, {3, 2}, {5, 2}, {7, 3}}) {
    const auto t = phi_ell_analysis(u, v, 13, 1, 2);
    CHECK(t.all_one_mod_ell);
    CHECK(t.product_matches);
    CHECK(t.diff_congruence);
  }
  CHECK_THROWS_AS(phi_ell_analysis(2, 1, 6, 1, 1), Error);
  CHECK_THROWS_AS(phi_ell_analysis(4, 2, 5, 1, 1), Error);
}
