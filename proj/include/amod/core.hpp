#pragma once

// Prime generation and exact modular arithmetic.
//
// Width contract: every modulus is below 2^62 and products are formed in
// 128-bit intermediates, so mul_mod is exact for all admissible moduli.
// Fermat quotients lift to p^2 and are therefore limited to p < 2^31.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "amod/error.hpp"

namespace amod {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u64 kSweepCeiling = 10'000'000;
inline constexpr u64 kModulusLimit = u64{1} << 62;
inline constexpr u64 kFermatPrimeLimit = u64{1} << 31;

// Closed range [lo, hi] of candidate primes. A lower end below 2 is clamped
// to 2 since there are no primes below it.
struct PrimeWindow {
  u64 lo = 2;
  u64 hi = 2;

  PrimeWindow() = default;
  PrimeWindow(u64 lo_, u64 hi_);

  bool contains(u64 p) const { return lo <= p && p <= hi; }
  friend bool operator==(const PrimeWindow&, const PrimeWindow&) = default;
};

// u/v with gcd(|u|, v) = 1 and v >= 1; zero is 0/1.
class ReducedRational {
 public:
  ReducedRational() = default;
  ReducedRational(i64 num);  // NOLINT(google-explicit-constructor): integers are rationals
  ReducedRational(i64 num, i64 den);

  // Accepts "u", "-u" or "u/v".
  static ReducedRational parse(const std::string& text);

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  ReducedRational inverse() const;
  ReducedRational operator-() const { return {-num_, den_}; }
  friend ReducedRational operator*(const ReducedRational& a, const ReducedRational& b);
  friend bool operator==(const ReducedRational&, const ReducedRational&) = default;

  // p divides neither numerator nor denominator.
  bool is_unit_at(u64 p) const;

  std::string to_string() const;

 private:
  i64 num_ = 0;
  i64 den_ = 1;
};

struct Residue {
  u64 value = 0;
  u64 modulus = 1;

  friend bool operator==(const Residue&, const Residue&) = default;
};

// Immutable table of all primes up to `limit`, built by a segmented sieve
// over odd numbers.
class PrimeTable {
 public:
  explicit PrimeTable(u64 limit);

  u64 limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }

  // Number of primes <= x, for x <= limit().
  u64 count_upto(u64 x) const;
  bool contains(u64 n) const;

 private:
  u64 limit_;
  std::vector<std::uint32_t> primes_;
};

// Process-wide table covering at least `limit`. Grows on demand, never past
// `ceiling`; the returned table is read-only and safe to share across threads.
std::shared_ptr<const PrimeTable> shared_primes(u64 limit, u64 ceiling = kSweepCeiling);

std::vector<u64> primes_in(PrimeWindow w, u64 ceiling = kSweepCeiling);
u64 prime_count(u64 x, u64 ceiling = kSweepCeiling);
u64 nth_prime(u64 n, u64 ceiling = kSweepCeiling);

// Deterministic Miller-Rabin, exact for all 64-bit n.
bool is_prime(u64 n);

// Prime factorization by trial division; fine for n up to ~10^14.
std::vector<std::pair<u64, unsigned>> factor_trial(u64 n);

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

// Canonical representative of a in [0, m).
u64 reduce(i64 a, u64 m);
u64 pow_mod_u(u64 base, u64 exp, u64 m);
Residue pow_mod(i64 base, u64 exp, u64 m);
std::optional<u64> inv_mod(u64 a, u64 m);

// a * b^-1 mod m for a rational a/b; BadPrime error when gcd(b, m) != 1.
u64 rational_mod(const ReducedRational& q, u64 m);

// Legendre symbol (a/p) for an odd prime p.
int legendre(i64 a, u64 p);

// All x in [0, p) with x^2 = a (mod p), ascending (Tonelli-Shanks).
std::vector<Residue> sqrt_mod(i64 a, u64 p);

// Order of q mod p. p - 1 is factored by trial division and the exponent is
// stripped prime by prime.
u64 mult_order(const ReducedRational& q, u64 p);

// I_p(q) = (p - 1) / ord_p(q).
u64 group_index(const ReducedRational& q, u64 p);

// q_p(alpha) = (alpha^(p-1) - 1) / p mod p, computed by lifting to p^2.
Residue fermat_quotient(const ReducedRational& alpha, u64 p);

namespace detail {
// Unchecked variants for inner loops fed by sieve output.
int legendre_unchecked(u64 a, u64 p);
u64 order_of_unit(u64 x, u64 p, std::span<const std::pair<u64, unsigned>> factors_of_p_minus_1);
u64 fermat_quotient_unchecked(const ReducedRational& alpha, u64 p);
}  // namespace detail

}  // namespace amod
