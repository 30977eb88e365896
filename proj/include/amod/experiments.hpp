#pragma once

// Element builders for the transcendence criteria, finite-window audits of
// their hypotheses, and the log / pi(p) experiments.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amod/adele.hpp"
#include "amod/core.hpp"
#include "amod/specialnums.hpp"

namespace amod {

// --- builders --------------------------------------------------------------

TruncatedAdele floor_log_element(PrimeWindow window);   // floor(ln p)
TruncatedAdele floor_sqrt_element(PrimeWindow window);  // floor(sqrt p)
TruncatedAdele index_element(const ReducedRational& q, PrimeWindow window);
TruncatedAdele t_pi_element(PrimeWindow window);        // t_{pi(p)}
TruncatedAdele pi_p_element(PrimeWindow window);        // pi(p)
TruncatedAdele log_element(const ReducedRational& alpha, PrimeWindow window);  // q_p(alpha)

// 1, 1,2, 1,2,3, 1,2,3,4, ...  (n >= 1)
u64 t_sequence(u64 n);
u64 isqrt(u64 n);

// --- audits ----------------------------------------------------------------

enum class AuditVerdict { Consistent, Inconsistent, Inconclusive };
const char* to_string(AuditVerdict v);

struct Measurement {
  std::string series;
  u64 X;  // scale, or the sequence term for per-term counts
  double value;
};

struct CriterionAuditReport {
  std::string criterion;
  PrimeWindow window{2, 2};
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Measurement> measurements;
  AuditVerdict verdict = AuditVerdict::Inconclusive;
};

// For each b_n: number of good primes with a_p = b_n mod p and b_n < p.
// Consistent iff every count reaches min_hits.
CriterionAuditReport af_criterion_audit(const TruncatedAdele& alpha, const std::vector<i64>& b, u64 min_hits);

using PrimeValues = std::vector<std::pair<u64, i64>>;  // (p, a_p), ascending p

PrimeValues floor_log_values(u64 X);
PrimeValues floor_sqrt_values(u64 X);
PrimeValues constant_values(u64 X, i64 c);

// Block maxima of a_p^d / p over p in (X/10, X] for X = 10^2, 10^3, ... up to
// the first power of ten covering the largest p, and block means of a_p. Consistent iff the means strictly increase and, for
// every d <= d_max, the maxima strictly decrease.
CriterionAuditReport growth_audit(const PrimeValues& values, unsigned d_max);

using PrimePredicate = std::function<bool(u64)>;
using PrimeFunction = std::function<double(u64)>;

// At X = 10^3, 10^4, ... up to X_max: block maxima of b_p / p^eps over S in
// (X/10, X], and #(S cap [2, X]) / X^eps'. Consistent iff the maxima never
// increase and the last density ratio is at least half the first.
CriterionAuditReport lz2_audit(const PrimePredicate& S, const PrimeFunction& b, double eps, double eps_prime,
                               u64 X_max);

// P = {p in [X, 2X] : p = 1 mod r, p = c mod N, ord_p(q) | (p-1)/r}, split by
// ord_p(q) <= sqrt(X)/log X (P1), I_p(q) <= sqrt(X)/log X (P2) and neither (P3).
struct Lz1Counts {
  u64 P = 0, P1 = 0, P2 = 0, P3 = 0, overlap = 0;
  u64 r_divides_ord = 0;  // primes = c mod N in [X, 2X] with r | ord_p(q)
  u64 candidates = 0;     // primes = c mod N in [X, 2X], p not dividing q
  double reference = 0;   // X / log X
};
Lz1Counts lz1_counts(const ReducedRational& q, u64 r, u64 c, u64 N, u64 X);
CriterionAuditReport lz1_partition_count(const ReducedRational& q, u64 r, u64 c, u64 N, u64 X);

// --- pi(p) experiments -----------------------------------------------------

struct EquidistReport {
  u64 X;
  double alpha, beta;
  u64 count;        // pairs (p, nu) with f(nu) = 0 mod p and alpha <= nu/p < beta
  u64 prime_count;  // pi(X)
  double ratio;
};

// f of degree 2 with non-square discriminant.
EquidistReport root_equidist(const IntPolynomial& f, u64 X, double alpha, double beta);

inline constexpr u64 kMaxSmoothN = 100'000;
// n in [1, Nmax] with every prime factor of f(n) at most n^theta; f(n) = 0 is skipped.
std::vector<u64> smooth_scan(const IntPolynomial& f, double theta, u64 Nmax);

// Window primes with b pi(p) = a mod p.
std::vector<u64> pi_linear_hits(i64 a, i64 b, PrimeWindow window);

// --- log experiments -------------------------------------------------------

std::vector<u64> wieferich_scan(const ReducedRational& alpha, i64 target, u64 X);

struct DisproofResult {
  std::optional<u64> witness;  // empty when every prime up to X agreed
  u64 checked = 0;
};
DisproofResult log_rational_disproof(const ReducedRational& alpha, i64 a, i64 b, u64 X);

struct PhiEllFactor {
  BigInt p;
  unsigned multiplicity;
  BigInt t_p;         // Phi / p
  BigInt contra_mod;  // ((u-v) b t_p + a l v^l) mod p
};

struct PhiEllReport {
  u64 u, v, ell;
  i64 a, b;
  BigInt phi;
  std::vector<PhiEllFactor> factors;
  bool complete = true;           // false when factoring ran out of budget
  BigInt cofactor = 1;            // unfactored part when incomplete
  bool all_one_mod_ell = true;
  bool squarefree = true;
  bool product_matches = true;
  bool diff_congruence = true;    // Phi = l v^(l-1) mod (u-v)
  BigInt T_ell;
};

PhiEllReport phi_ell_analysis(u64 u, u64 v, u64 ell, i64 a, i64 b);

}  // namespace amod
