#pragma once

// q-Pochhammer symbols, Gaussian binomials, Schur's q-Fibonacci polynomials
// and Bressoud polynomials evaluated at a rational q modulo p, with verifiers
// for the Anzawa-Funakura and Bressoud congruences.

#include <vector>

#include "amod/adele.hpp"
#include "amod/core.hpp"
#include "amod/report.hpp"

namespace amod {

// q reduced mod p; p must divide neither numerator nor denominator of q.
class QContext {
 public:
  QContext(const ReducedRational& q, u64 p);

  const ReducedRational& q() const { return q_; }
  u64 p() const { return p_; }
  Residue qres() const { return {qmod_, p_}; }
  u64 qmod() const { return qmod_; }

  u64 order() const { return mult_order(q_, p_); }
  u64 index() const { return group_index(q_, p_); }

 private:
  ReducedRational q_;
  u64 p_;
  u64 qmod_;
};

// (q)_n = (1-q)(1-q^2)...(1-q^n)
Residue q_pochhammer(const QContext& ctx, u64 n);

// Gaussian binomial by the q-Pascal rule
//   [n, k] = [n-1, k-1] + q^k [n-1, k],
// never dividing by (q)_k, which vanishes once k >= ord_p(q).
// q = 1 is routed to the classical binomial.
Residue q_binomial(u64 n, u64 k, const QContext& ctx);

// [n, 0..kmax] in one pass.
std::vector<u64> q_binomial_row(u64 n, u64 kmax, const QContext& ctx);

// Classical C(n, k) mod p via Lucas' theorem.
Residue binomial_mod(u64 n, u64 k, u64 p);

Residue q_fibonacci(u64 n, const QContext& ctx);

// Exact F_n(q) for integer q and n <= 40; Capacity error on overflow.
i64 q_fibonacci_exact(unsigned n, i64 q);

// Classical F_n mod m by fast doubling.
Residue fibonacci_mod(u64 n, u64 m);

struct BressoudValue {
  Residue by_recurrence;
  Residue by_sum;
  bool agree() const { return by_recurrence == by_sum; }
};

// D_n(q) from the three-term recurrence and from sum_k q^(k^2) [n, k].
BressoudValue bressoud(u64 n, const QContext& ctx);

// F_p(q) vs F_{I_p(q) + (ord_p(q) / 5)}; skipped when 5 | ord_p(q).
CongruenceReport verify_af_congruence(const ReducedRational& q, u64 p);

// [p-1, k]_q vs C(I_p(q), k / ord_p(q)) if ord_p(q) | k, else 0.
CongruenceReport verify_qbinom_congruence(const ReducedRational& q, u64 p, u64 k);

// D_{p-1}(q) vs 2^{I_p(q)}. Internal error if the two evaluation paths of
// D_{p-1}(q) disagree.
CongruenceReport verify_bressoud_congruence(const ReducedRational& q, u64 p);

CongruenceSweep sweep_af(const ReducedRational& q, PrimeWindow window);
CongruenceSweep sweep_bressoud(const ReducedRational& q, PrimeWindow window);

// (F_p(q) mod p)_p and (D_{p-1}(q) mod p)_p; primes dividing q are bad.
TruncatedAdele fib_element(const ReducedRational& q, PrimeWindow window);
TruncatedAdele bressoud_element(const ReducedRational& q, PrimeWindow window);

}  // namespace amod
