#pragma once

// Bernoulli, Euler and Gregory numbers.
//
// Conventions follow the generating functions
//   t e^t / (e^t - 1) = sum B_n t^n / n!     (so B_1 = +1/2)
//   sech t            = sum E_n t^n / n!
//   t (1+t)^x / log(1+t) = sum G_n(x) t^n,   G_n = G_n(0).
// Even-index Bernoulli numbers agree with the usual B_1 = -1/2 convention.

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "amod/adele.hpp"
#include "amod/core.hpp"

namespace amod {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr unsigned kExactIndexCap = 64;

enum class SeqKind { Bernoulli, Euler, Gregory };

struct ExactRationalSeq {
  SeqKind kind;
  std::vector<BigRational> values;  // indices 0..kExactIndexCap
};

// Memoized on first use; read-only afterwards.
const ExactRationalSeq& exact_sequence(SeqKind kind);

BigRational bernoulli_exact(unsigned n);
BigInt euler_exact(unsigned n);
BigRational gregory_exact(unsigned n);

// Residue of an exact rational; Pole error when p divides the denominator.
u64 reduce_rational(const BigRational& value, u64 p);

// B_n mod p for p > 3. Pole error when n >= 2 is even and (p-1) | n.
// Uses the mod-p convolution recurrence for n <= p-2 and Kummer's congruence
// B_n / n = B_m / m (m = n mod (p-1)) beyond that.
Residue bernoulli_mod(u64 n, u64 p);

Residue euler_mod(u64 n, u64 p);

// G_n mod p for n <= p-2; larger n fall back to the exact value when
// n <= kExactIndexCap.
Residue gregory_mod(u64 n, u64 p);
Residue gregory_poly_mod(u64 n, i64 x, u64 p);

// Z(k) = (B_{p-k} / k mod p)_p; primes p <= k+2 are bad.
TruncatedAdele z_A(unsigned k, PrimeWindow window);

// (B_{(p+1)/2} mod p)_p and (E_{(p-1)/2} mod p)_p; primes below 5 are bad.
TruncatedAdele script_B(PrimeWindow window);
TruncatedAdele script_E(PrimeWindow window);

// (G_{p-k}(x) mod p)_p two ways: directly from Gregory polynomials (first)
// and from the Fermat-quotient expansion
//   (-1)^(k-1) sum_j (-1)^j C(k,j) (x+j+1) q_p(x+j+1)   (second).
// Domain error for x in [-k-1, -1]. Primes dividing some x+j+1, and primes
// p <= k+2, are bad in both.
std::pair<TruncatedAdele, TruncatedAdele> g_A(unsigned k, i64 x, PrimeWindow window);

}  // namespace amod
