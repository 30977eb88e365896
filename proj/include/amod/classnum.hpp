#pragma once

// Class numbers of imaginary quadratic fields and the Cauchy / Carlitz
// congruences linking them to Bernoulli and Euler numbers.

#include "amod/core.hpp"
#include "amod/report.hpp"

namespace amod {

inline constexpr i64 kMaxClassDiscriminant = 1'000'000;

class FundamentalDiscriminant {
 public:
  // Domain error unless D < 0 is fundamental.
  explicit FundamentalDiscriminant(i64 D);
  static bool is_fundamental(i64 D);

  i64 value() const { return d_; }

 private:
  i64 d_;
};

// Kronecker symbol (a/n) for n >= 1.
int kronecker(i64 a, i64 n);

// Counts reduced primitive forms ax^2+bxy+cy^2 of discriminant D.
u64 class_number_forms(const FundamentalDiscriminant& D);

// -(1/|D|) sum_{0<a<|D|} (D/a) a, valid for D < -4; D in {-3,-4} falls back
// to the forms count.
u64 class_number_charsum(const FundamentalDiscriminant& D);

// -2 B_{(p+1)/2} vs h(-p) for p = 3 mod 4, p > 3.
CongruenceReport verify_cauchy(u64 p);
// E_{(p-1)/2} / 2 vs h(-4p) for p = 1 mod 4.
CongruenceReport verify_carlitz(u64 p);

CongruenceSweep sweep_cauchy(PrimeWindow window);
CongruenceSweep sweep_carlitz(PrimeWindow window);

struct ClassGrowth {
  i64 X;
  u64 max_h;
  i64 argmax;        // discriminant attaining max_h
  double fitted_c;   // max_h / X^0.6
};

// Largest h(D) over fundamental -X < D < 0.
ClassGrowth class_growth(i64 X);

}  // namespace amod
