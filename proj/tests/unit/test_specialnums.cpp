#include <doctest.h>

#include "../oracles.hpp"
#include "amod/specialnums.hpp"

using namespace amod;

TEST_CASE("exact Bernoulli numbers") {
  CHECK(bernoulli_exact(0) == 1);
  CHECK(bernoulli_exact(1) == BigRational(1, 2));
  CHECK(bernoulli_exact(2) == BigRational(1, 6));
  CHECK(bernoulli_exact(12) == BigRational(-691, 2730));
  for (unsigned n = 3; n <= 64; n += 2) CHECK(bernoulli_exact(n) == 0);
  const auto at = oracle::bernoulli_at(64);
  for (unsigned n = 0; n <= 64; ++n) CHECK(bernoulli_exact(n) == at[n]);
  CHECK_THROWS_AS(bernoulli_exact(65), Error);
}

TEST_CASE("property: Bernoulli defining recurrence") {
  for (unsigned n = 0; n <= 40; ++n) {
    BigRational s = 0;
    BigInt c = 1;  // C(n+1, j)
    for (unsigned j = 0; j <= n; ++j) {
      s += BigRational(c) * bernoulli_exact(j);
      c = c * (n + 1 - j) / (j + 1);
    }
    CHECK(s == n + 1);
  }
}

TEST_CASE("exact Euler numbers") {
  CHECK(euler_exact(0) == 1);
  CHECK(euler_exact(2) == -1);
  CHECK(euler_exact(4) == 5);
  CHECK(euler_exact(6) == -61);
  CHECK(euler_exact(3) == 0);
  const auto seidel = oracle::euler_seidel(64);
  for (unsigned n = 0; n <= 64; ++n) CHECK(euler_exact(n) == seidel[n]);
}

TEST_CASE("exact Gregory numbers") {
  CHECK(gregory_exact(0) == 1);
  CHECK(gregory_exact(1) == BigRational(1, 2));
  CHECK(gregory_exact(2) == BigRational(-1, 12));
  CHECK(gregory_exact(3) == BigRational(1, 24));
  CHECK(gregory_exact(4) == BigRational(-19, 720));
  for (unsigned n = 0; n <= 30; ++n) CHECK(gregory_exact(n) == oracle::gregory_integral(n));
  for (unsigned n = 2; n <= 64; ++n) CHECK(((gregory_exact(n) > 0) == (n % 2 == 1)));
}

TEST_CASE("Bernoulli mod p") {
  CHECK(bernoulli_mod(2, 7).value == 6);
  CHECK(bernoulli_mod(9, 101).value == 0);
  CHECK(bernoulli_mod(12, 11).value == 1);  // Kummer: B_12/12 = B_2/2
  CHECK(bernoulli_mod(12, 11).value == reduce_rational(BigRational(-691, 2730), 11));
  CHECK(bernoulli_mod(4, 7).value == 3);
  CHECK_THROWS_AS(bernoulli_mod(6, 7), Error);
  CHECK_THROWS_AS(bernoulli_mod(4, 3), Error);
  try {
    bernoulli_mod(10, 11);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Pole);
  }
}

TEST_CASE("property: exact and modular special numbers agree") {
  for (u64 p : primes_in({5, 200}))
    for (unsigned n = 0; n <= 50; ++n) {
      const bool pole = n >= 2 && n % 2 == 0 && n % (p - 1) == 0;
      if (pole) {
        CHECK_THROWS_AS(bernoulli_mod(n, p), Error);
      } else {
        CHECK(bernoulli_mod(n, p).value == reduce_rational(bernoulli_exact(n), p));
      }
      CHECK(euler_mod(n, p).value == reduce_rational(BigRational(euler_exact(n)), p));
      if (n + 2 <= p) CHECK(gregory_mod(n, p).value == reduce_rational(gregory_exact(n), p));
    }
}

TEST_CASE("Euler and Gregory mod p") {
  CHECK(euler_mod(2, 5).value == 4);
  CHECK(euler_mod(7, 5).value == 0);
  CHECK(gregory_mod(2, 7).value == 4);
  for (u64 p : {11ULL, 13ULL, 101ULL})
    for (u64 n = 0; n + 2 <= p && n <= 30; ++n) CHECK(gregory_poly_mod(n, 0, p) == gregory_mod(n, p));
  for (u64 p : {13ULL, 29ULL})
    for (unsigned n = 0; n + 2 <= p && n <= 12; ++n)
      for (i64 x : {-7, -1, 0, 1, 2, 5})
        CHECK(gregory_poly_mod(n, x, p).value == oracle::mod(oracle::gregory_poly_exact(n, x), p));
  CHECK_THROWS_AS(gregory_poly_mod(12, 0, 13), Error);
}

TEST_CASE("zeta-like elements") {
  CHECK(is_zero_element(z_A(2, {11, 500})));
  CHECK(is_zero_element(z_A(4, {11, 500})));
  CHECK(!nonzero_positions(z_A(3, {11, 200})).empty());
  const auto z3 = z_A(3, {11, 200});
  for (std::size_t i = 0; i < z3.size(); ++i) {
    const u64 p = z3.prime(i);
    CHECK(z3.residue(i) == reduce_rational(bernoulli_exact(static_cast<unsigned>(p - 3)) / 3, p));
    if (p > 64) break;
  }
  CHECK(z_A(3, {2, 20}).bad_primes() == std::vector<u64>{2, 3, 5});
}

TEST_CASE("script B and E") {
  const PrimeWindow w(7, 500);
  const auto B = script_B(w), E = script_E(w);
  CHECK(B.at(7) == 3);
  for (std::size_t i = 0; i < B.size(); ++i) {
    const u64 p = B.prime(i);
    if (p % 4 == 1) CHECK(B.residue(i) == 0);
    if (p % 4 == 3) CHECK(E.residue(i) == 0);
  }
  CHECK(is_zero_element(B * E));

  std::vector<u64> three_mod_4;
  for (u64 p : primes_in({7, 200}))
    if (p % 4 == 3) three_mod_4.push_back(p);
  CHECK(nonzero_positions(script_B({7, 200})) == three_mod_4);
  CHECK(script_B({2, 20}).bad_primes() == std::vector<u64>{2, 3});
}

TEST_CASE("property: b B + e E never vanishes identically") {
  const PrimeWindow w(7, 500);
  const auto B = script_B(w), E = script_E(w);
  for (i64 b = -20; b <= 20; ++b)
    for (i64 e = -20; e <= 20; ++e) {
      if (b == 0 && e == 0) continue;
      CHECK(!nonzero_positions(b * B + e * E).empty());
    }
}

TEST_CASE("g_A two paths") {
  {
    const auto [a, b] = g_A(2, 0, {11, 11});
    CHECK(a.at(11) == 9);
    CHECK(b.at(11) == 9);
    CHECK(reduce_rational(gregory_exact(9), 11) == 9);
  }
  for (unsigned k : {2u, 3u, 4u})
    for (i64 x : {0, 1, 2, 5}) {
      const auto [a, b] = g_A(k, x, {17, 500});
      CHECK(a.bad_primes() == b.bad_primes());
      CHECK(nonzero_positions(a - b).empty());
    }
  const auto [a, b] = g_A(3, 1, {13, 300});
  CHECK(nonzero_positions(a - b).empty());
  CHECK_THROWS_AS(g_A(2, -1, {17, 100}), Error);
  CHECK_THROWS_AS(g_A(2, -3, {17, 100}), Error);
  // x = 20 puts x + j + 1 = 21, 22, 23 in play: 23 is bad.
  CHECK(g_A(2, 20, {17, 100}).first.bad_primes() == std::vector<u64>{23});
}
