#pragma once

// Slow, independent reference implementations used only by the tests.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool is_prime_td(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<u64> primes_td(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 n = lo; n <= hi; ++n)
    if (is_prime_td(n)) out.push_back(n);
  return out;
}

inline u64 mod(i64 a, u64 m) {
  const i64 r = a % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

inline u64 mod(const BigInt& a, u64 m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r.convert_to<u64>();
}

inline u64 inv_brute(u64 a, u64 p) {
  for (u64 x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

inline u64 mod(const BigRational& r, u64 p) {
  return mod(numerator(r), p) * inv_brute(mod(denominator(r), p), p) % p;
}

inline u64 order_brute(u64 a, u64 p) {
  u64 x = a % p;
  for (u64 d = 1; d < p; ++d, x = x * a % p)
    if (x == 1) return d;
  return 0;
}

inline std::vector<u64> sqrt_brute(i64 a, u64 p) {
  std::vector<u64> out;
  for (u64 x = 0; x < p; ++x)
    if (x * x % p == mod(a, p)) out.push_back(x);
  return out;
}

// (u/v)^(p-1) - 1 over p, exactly, then reduced mod p.
inline u64 fermat_quotient_exact(i64 u, i64 v, u64 p) {
  const BigInt up = pow(BigInt(u), static_cast<unsigned>(p - 1));
  const BigInt vp = pow(BigInt(v), static_cast<unsigned>(p - 1));
  const BigInt num = up - vp;  // divisible by p
  return mod(BigInt(num / p), p) * inv_brute(mod(vp, p), p) % p;
}

// Integer polynomials in q, constant term first.
using Poly = std::vector<BigInt>;

inline Poly padd(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline Poly shift(const Poly& a, std::size_t k) {
  Poly r(k, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

inline u64 eval(const Poly& a, i64 q, u64 p) {
  u64 acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = (acc * mod(q, p) + mod(a[i], p)) % p;
  return acc;
}

inline BigInt eval_exact(const Poly& a, i64 q) {
  BigInt acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * q + a[i];
  return acc;
}

// Gaussian binomial as a polynomial, by products of q-integers.
inline Poly gauss_poly(unsigned n, unsigned k) {
  std::vector<std::vector<Poly>> t(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    t[m].resize(m + 1);
    t[m][0] = t[m][m] = Poly{1};
    for (unsigned j = 1; j < m; ++j) t[m][j] = padd(t[m - 1][j - 1], shift(t[m - 1][j], j));
  }
  return t[n][k];
}

inline Poly q_fib_poly(unsigned n) {
  Poly f0{}, f1{1};
  if (n == 0) return f0;
  for (unsigned i = 0; i + 1 < n; ++i) {
    Poly f2 = padd(f1, shift(f0, i));
    f0 = f1;
    f1 = f2;
  }
  return f1;
}

inline Poly bressoud_poly(unsigned n) {
  Poly d{};
  for (unsigned k = 0; k <= n; ++k) d = padd(d, shift(gauss_poly(n, k), k * k));
  return d;
}

// Akiyama-Tanigawa; yields B_1 = +1/2.
inline std::vector<BigRational> bernoulli_at(unsigned n) {
  std::vector<BigRational> out, a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = BigRational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

// Seidel boustrophedon for secant numbers; E_{2k} = (-1)^k S_{2k}.
inline std::vector<BigInt> euler_seidel(unsigned n) {
  std::vector<BigInt> zig(n + 1);
  std::vector<BigInt> row{1};
  zig[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1);
    next[0] = 0;
    for (unsigned j = 1; j <= m; ++j) next[j] = next[j - 1] + row[m - j];
    row = next;
    zig[m] = row[m];
  }
  std::vector<BigInt> e(n + 1, 0);
  for (unsigned m = 0; m <= n; m += 2) e[m] = (m / 2) % 2 ? BigInt(-zig[m]) : zig[m];
  return e;
}

// G_n = integral over [0, 1] of C(x, n).
inline BigRational gregory_integral(unsigned n) {
  std::vector<BigRational> c{1};  // coefficients of x(x-1)...(x-n+1)/n!
  for (unsigned j = 0; j < n; ++j) {
    std::vector<BigRational> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * j;
    }
    for (auto& x : next) x /= (j + 1);
    c = next;
  }
  BigRational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] / BigRational(i + 1);
  return s;
}

// G_n(x) = sum_m G_{n-m} C(x, m), exact.
inline BigRational gregory_poly_exact(unsigned n, i64 x) {
  BigRational s = 0, binom = 1;
  for (unsigned m = 0; m <= n; ++m) {
    if (m > 0) binom = binom * (x - static_cast<i64>(m) + 1) / m;
    s += gregory_integral(n - m) * binom;
  }
  return s;
}

inline u64 points_brute(i64 a, i64 b, u64 p) {
  u64 n = 1;
  for (u64 x = 0; x < p; ++x)
    for (u64 y = 0; y < p; ++y)
      if ((y * y) % p == mod(static_cast<i64>((x * x % p) * x % p) + a * static_cast<i64>(x) + b, p)) ++n;
  return n;
}

// Reduced forms by scanning a and b directly.
inline u64 class_number_brute(i64 D) {
  u64 h = 0;
  for (i64 a = 1; 3 * a * a <= -D; ++a)
    for (i64 b = -a + 1; b <= a; ++b) {
      const i64 num = b * b - D;
      if (num % (4 * a)) continue;
      const i64 c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++h;
    }
  return h;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed);
  return g;
}

inline i64 uniform(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng()); }

}  // namespace oracle
