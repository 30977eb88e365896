#pragma once

// Elliptic curves y^2 = x^3 + a x + b over Q reduced modulo primes:
// Frobenius traces, Sato-Tate angles and the residue vector of traces.

#include <string>
#include <vector>

#include "amod/adele.hpp"
#include "amod/core.hpp"

namespace amod {

inline constexpr u64 kMaxTracePrime = 1'000'000;

class ShortWeierstrassCurve {
 public:
  // Domain error if 4a^3 + 27b^2 = 0.
  ShortWeierstrassCurve(i64 a, i64 b);
  static ShortWeierstrassCurve parse(const std::string& text);  // "a,b"

  i64 a() const { return a_; }
  i64 b() const { return b_; }
  // 4a^3 + 27b^2, exact.
  i128 discriminant() const;
  std::string to_string() const;

  bool operator==(const ShortWeierstrassCurve&) const = default;

 private:
  i64 a_, b_;
};

// False for p in {2, 3} and for p dividing 4a^3 + 27b^2.
bool good_reduction(const ShortWeierstrassCurve& E, u64 p);

// a_p = -sum_x (x^3+ax+b / p); BadPrime error at bad reduction. The Hasse
// bound is checked on every result.
i64 ap_trace(const ShortWeierstrassCurve& E, u64 p);

// #E(F_p) including the point at infinity, by enumerating all (x, y).
u64 count_points_naive(const ShortWeierstrassCurve& E, u64 p);

struct TraceRecord {
  u64 p;
  i64 ap;
  double theta;  // arccos(ap / 2 sqrt p), in [0, pi]
};

// Traces at the good primes of the window, ascending.
std::vector<TraceRecord> trace_sweep(const ShortWeierstrassCurve& E, PrimeWindow window);

// (a_p mod p)_p with bad-reduction primes marked bad.
TruncatedAdele alpha_E(const ShortWeierstrassCurve& E, PrimeWindow window);

struct SatoTateHistogram {
  u64 X;
  std::vector<double> edges;       // bins + 1 edges over [0, pi]
  std::vector<u64> counts;
  std::vector<double> mass;        // counts / total
  std::vector<double> semicircle;  // (2/pi) int sin^2
  std::vector<double> cm;          // delta_I / 2 + |I| / (2 pi)
  double tv_semicircle = 0.0;
  double tv_cm = 0.0;
  std::string closer;  // "semicircle" or "cm"
  u64 total = 0;
};

SatoTateHistogram sato_tate_histogram(const std::vector<TraceRecord>& traces, u64 X, unsigned bins);
SatoTateHistogram sato_tate_histogram(const ShortWeierstrassCurve& E, u64 X, unsigned bins);

// Fraction of traces with theta in [lo, hi].
double angle_mass(const std::vector<TraceRecord>& traces, double lo, double hi);

// (a d^2, b d^3); Domain error unless d is squarefree and nonzero.
ShortWeierstrassCurve quadratic_twist(const ShortWeierstrassCurve& E, i64 d);

struct TwistCheck {
  u64 checked = 0;
  std::vector<u64> mismatches;  // primes where a_p(E^d) != (d/p) a_p(E)
  bool ok() const { return mismatches.empty(); }
};

TwistCheck twist_trace_check(const ShortWeierstrassCurve& E, i64 d, PrimeWindow window);

}  // namespace amod
