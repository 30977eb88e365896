#include "amod/classnum.hpp"

#include <cmath>
#include <numeric>

#include "amod/parallel.hpp"
#include "amod/specialnums.hpp"

namespace amod {

namespace {

bool squarefree(u64 n) {
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
    if (n % d == 0) n /= d;
  }
  return true;
}

}  // namespace

bool FundamentalDiscriminant::is_fundamental(i64 D) {
  if (D >= 0) return false;
  const u64 m = static_cast<u64>(-D);
  const i64 r = ((D % 4) + 4) % 4;
  if (r == 1) return squarefree(m);
  if (r != 0) return false;
  const i64 k = D / 4;
  const i64 kr = ((k % 4) + 4) % 4;
  return (kr == 2 || kr == 3) && squarefree(m / 4);
}

FundamentalDiscriminant::FundamentalDiscriminant(i64 D) : d_(D) {
  if (!is_fundamental(D)) fail(ErrorKind::Domain, std::to_string(D) + " is not a negative fundamental discriminant");
  if (-D > kMaxClassDiscriminant) fail(ErrorKind::Capacity, "|D| exceeds " + std::to_string(kMaxClassDiscriminant));
}

int kronecker(i64 a, i64 n) {
  if (n <= 0) fail(ErrorKind::Domain, "kronecker: n must be positive");
  int t = 1;
  // (a/2) is 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
  while (n % 2 == 0) {
    n /= 2;
    const i64 r = ((a % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) t = -t;
  }
  i64 x = ((a % n) + n) % n;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const i64 r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) t = -t;
    x %= n;
  }
  return n == 1 ? t : 0;
}

u64 class_number_forms(const FundamentalDiscriminant& disc) {
  const i64 D = disc.value();
  // Reduced means |b| <= a <= c. The forms (a, b, c) and (a, -b, c) are
  // equivalent when b = 0, |b| = a or a = c, so those count once (b >= 0);
  // otherwise both signs of b are distinct classes.
  u64 h = 0;
  for (i64 b = (D & 1); 3 * b * b <= -D; b += 2) {
    const i64 n = (b * b - D) / 4;  // a c
    for (i64 a = std::max<i64>(b, 1); a * a <= n; ++a) {
      if (n % a) continue;
      const i64 c = n / a;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      h += (b == 0 || b == a || a == c) ? 1 : 2;
    }
  }
  return h;
}

u64 class_number_charsum(const FundamentalDiscriminant& disc) {
  const i64 D = disc.value();
  if (D >= -4) return class_number_forms(disc);
  const i64 m = -D;
  i64 s = 0;
  for (i64 a = 1; a < m; ++a) s += kronecker(D, a) * a;
  if (s >= 0 || (-s) % m)
    fail(ErrorKind::Internal, "character sum for D=" + std::to_string(D) + " is not a positive multiple of |D|");
  return static_cast<u64>(-s / m);
}

CongruenceReport verify_cauchy(u64 p) {
  if (p <= 3 || p % 4 != 3) return skipped("", p, "needs p > 3 and p = 3 mod 4");
  CongruenceReport r;
  r.p = p;
  r.lhs = reduce(-2 * static_cast<i64>(bernoulli_mod((p + 1) / 2, p).value), p);
  r.rhs = class_number_forms(FundamentalDiscriminant(-static_cast<i64>(p))) % p;
  settle(r);
  return r;
}

CongruenceReport verify_carlitz(u64 p) {
  if (p % 4 != 1) return skipped("", p, "needs p = 1 mod 4");
  CongruenceReport r;
  r.p = p;
  r.lhs = mul_mod(euler_mod((p - 1) / 2, p).value, *inv_mod(2, p), p);
  r.rhs = class_number_forms(FundamentalDiscriminant(-4 * static_cast<i64>(p))) % p;
  settle(r);
  return r;
}

namespace {

template <class Verify>
CongruenceSweep sweep(std::string name, PrimeWindow window, Verify verify) {
  const auto primes = primes_in(window);
  CongruenceSweep out{std::move(name), std::vector<CongruenceReport>(primes.size())};
  parallel_for(primes.size(), [&](std::size_t i) { out.rows[i] = verify(primes[i]); }, 1);
  return out;
}

}  // namespace

CongruenceSweep sweep_cauchy(PrimeWindow window) { return sweep("cauchy", window, verify_cauchy); }
CongruenceSweep sweep_carlitz(PrimeWindow window) { return sweep("carlitz", window, verify_carlitz); }

ClassGrowth class_growth(i64 X) {
  if (X < 4 || X > kMaxClassDiscriminant) fail(ErrorKind::Domain, "class_growth: X out of range");
  ClassGrowth g{X, 0, 0, 0.0};
  for (i64 D = -3; D > -X; --D) {
    if (!FundamentalDiscriminant::is_fundamental(D)) continue;
    const u64 h = class_number_forms(FundamentalDiscriminant(D));
    if (h > g.max_h) {
      g.max_h = h;
      g.argmax = D;
    }
  }
  g.fitted_c = static_cast<double>(g.max_h) / std::pow(static_cast<double>(X), 0.6);
  return g;
}

}  // namespace amod
