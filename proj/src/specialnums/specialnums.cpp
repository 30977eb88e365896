#include "amod/specialnums.hpp"

#include <mutex>

namespace amod {

namespace {

BigInt binomial_big(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<BigRational> compute_bernoulli() {
  // sum_{j=0}^{n} C(n+1, j) B_j = n + 1
  std::vector<BigRational> b(kExactIndexCap + 1);
  for (unsigned n = 0; n <= kExactIndexCap; ++n) {
    BigRational acc = n + 1;
    for (unsigned j = 0; j < n; ++j) acc -= BigRational(binomial_big(n + 1, j)) * b[j];
    b[n] = acc / (n + 1);
  }
  return b;
}

std::vector<BigRational> compute_euler() {
  // sech * cosh = 1: sum_{k, n-k even} C(n, k) E_k = [n == 0]
  std::vector<BigRational> e(kExactIndexCap + 1);
  for (unsigned n = 0; n <= kExactIndexCap; ++n) {
    if (n == 0) {
      e[n] = 1;
      continue;
    }
    BigRational acc = 0;
    for (unsigned k = n % 2; k < n; k += 2) acc -= BigRational(binomial_big(n, k)) * e[k];
    e[n] = acc;
  }
  return e;
}

std::vector<BigRational> compute_gregory() {
  // (t / log(1+t)) * (log(1+t) / t) = 1 with log(1+t)/t = sum (-1)^m t^m / (m+1)
  std::vector<BigRational> g(kExactIndexCap + 1);
  g[0] = 1;
  for (unsigned n = 1; n <= kExactIndexCap; ++n) {
    BigRational acc = 0;
    for (unsigned k = 0; k < n; ++k) {
      BigRational term = g[k] / (n - k + 1);
      acc += ((n - k) % 2 ? -term : term);
    }
    g[n] = -acc;
  }
  return g;
}

void require_large_prime(u64 p, const char* who) {
  if (p <= 3 || !is_prime(p))
    fail(ErrorKind::Domain, std::string(who) + ": modulus " + std::to_string(p) + " must be a prime > 3");
}

// Factorials and inverse factorials mod p up to n < p.
struct FactorialTable {
  std::vector<u64> fact, inv_fact;
  FactorialTable(u64 n, u64 p) : fact(n + 1), inv_fact(n + 1) {
    fact[0] = 1 % p;
    for (u64 i = 1; i <= n; ++i) fact[i] = mul_mod(fact[i - 1], i, p);
    inv_fact[n] = *inv_mod(fact[n], p);
    for (u64 i = n; i > 0; --i) inv_fact[i - 1] = mul_mod(inv_fact[i], i, p);
  }
  u64 choose(u64 n, u64 k, u64 p) const { return mul_mod(fact[n], mul_mod(inv_fact[k], inv_fact[n - k], p), p); }
};

// B_0..B_n mod p by the convolution recurrence; needs n + 1 < p.
std::vector<u64> bernoulli_table_mod(u64 n, u64 p) {
  const FactorialTable f(n + 1, p);
  std::vector<u64> b(n + 1, 0);
  b[0] = 1 % p;
  if (n >= 1) b[1] = *inv_mod(2, p);
  for (u64 m = 2; m <= n; m += 2) {
    u64 acc = (m + 1) % p;
    for (u64 j = 0; j < m; ++j) {
      if (j >= 3 && (j & 1)) continue;
      acc = sub_mod(acc, mul_mod(f.choose(m + 1, j, p), b[j], p), p);
    }
    b[m] = mul_mod(acc, *inv_mod(m + 1, p), p);
  }
  return b;
}

// G_0..G_n mod p; needs n + 1 < p.
std::vector<u64> gregory_table_mod(u64 n, u64 p) {
  std::vector<u64> inv(n + 2, 0);
  for (u64 i = 1; i <= n + 1; ++i) inv[i] = *inv_mod(i, p);
  std::vector<u64> g(n + 1, 0);
  g[0] = 1 % p;
  for (u64 m = 1; m <= n; ++m) {
    u64 acc = 0;
    for (u64 k = 0; k < m; ++k) {
      const u64 term = mul_mod(g[k], inv[m - k + 1], p);
      acc = (m - k) % 2 ? sub_mod(acc, term, p) : add_mod(acc, term, p);
    }
    g[m] = acc == 0 ? 0 : p - acc;
  }
  return g;
}

}  // namespace

const ExactRationalSeq& exact_sequence(SeqKind kind) {
  static std::once_flag once[3];
  static ExactRationalSeq seqs[3];
  const auto i = static_cast<std::size_t>(kind);
  std::call_once(once[i], [&] {
    switch (kind) {
      case SeqKind::Bernoulli: seqs[i] = {kind, compute_bernoulli()}; break;
      case SeqKind::Euler: seqs[i] = {kind, compute_euler()}; break;
      case SeqKind::Gregory: seqs[i] = {kind, compute_gregory()}; break;
    }
  });
  return seqs[i];
}

namespace {
void check_cap(unsigned n) {
  if (n > kExactIndexCap)
    fail(ErrorKind::Capacity, "exact index " + std::to_string(n) + " exceeds cap " + std::to_string(kExactIndexCap));
}
}  // namespace

BigRational bernoulli_exact(unsigned n) {
  check_cap(n);
  return exact_sequence(SeqKind::Bernoulli).values[n];
}

BigInt euler_exact(unsigned n) {
  check_cap(n);
  return numerator(exact_sequence(SeqKind::Euler).values[n]);
}

BigRational gregory_exact(unsigned n) {
  check_cap(n);
  return exact_sequence(SeqKind::Gregory).values[n];
}

u64 reduce_rational(const BigRational& value, u64 p) {
  const BigInt bp = p;
  BigInt num = numerator(value) % bp;
  if (num < 0) num += bp;
  const BigInt den = denominator(value) % bp;
  if (den == 0) fail(ErrorKind::Pole, std::to_string(p) + " divides the denominator");
  return mul_mod(num.convert_to<u64>(), *inv_mod(den.convert_to<u64>(), p), p);
}

Residue bernoulli_mod(u64 n, u64 p) {
  require_large_prime(p, "bernoulli_mod");
  if (n == 0) return {1, p};
  if (n == 1) return {*inv_mod(2, p), p};
  if (n & 1) return {0, p};
  if (n % (p - 1) == 0)
    fail(ErrorKind::Pole, "B_" + std::to_string(n) + " has " + std::to_string(p) + " in its denominator");
  if (n <= p - 2) return {bernoulli_table_mod(n, p)[n], p};
  const u64 m = n % (p - 1);
  const u64 bm = bernoulli_table_mod(m, p)[m];
  return {mul_mod(mul_mod(n % p, bm, p), *inv_mod(m, p), p), p};
}

Residue euler_mod(u64 n, u64 p) {
  if (p < 2 || !is_prime(p)) fail(ErrorKind::Domain, "euler_mod: modulus must be prime");
  if (n & 1) return {0, p};
  // Rolling Pascal row keeps this valid for n >= p as well.
  std::vector<u64> row{1 % p};  // C(m, .)
  std::vector<u64> e(n + 1, 0);
  e[0] = 1 % p;
  for (u64 m = 1; m <= n; ++m) {
    row.push_back(0);
    for (u64 k = m; k >= 1; --k) row[k] = add_mod(row[k], row[k - 1], p);
    if (m & 1) continue;
    u64 acc = 0;
    for (u64 k = 0; k < m; k += 2) acc = add_mod(acc, mul_mod(row[k], e[k], p), p);
    e[m] = acc == 0 ? 0 : p - acc;
  }
  return {e[n], p};
}

Residue gregory_mod(u64 n, u64 p) {
  if (p < 2 || !is_prime(p)) fail(ErrorKind::Domain, "gregory_mod: modulus must be prime");
  if (n + 2 <= p) return {gregory_table_mod(n, p)[n], p};
  if (n <= kExactIndexCap) return {reduce_rational(gregory_exact(static_cast<unsigned>(n)), p), p};
  fail(ErrorKind::Domain, "gregory_mod requires n <= p - 2");
}

Residue gregory_poly_mod(u64 n, i64 x, u64 p) {
  if (p < 2 || !is_prime(p)) fail(ErrorKind::Domain, "gregory_poly_mod: modulus must be prime");
  if (n + 2 > p) fail(ErrorKind::Domain, "gregory_poly_mod requires n <= p - 2");
  const auto g = gregory_table_mod(n, p);
  // G_n(x) = sum_m G_{n-m} C(x, m), C(x, m) = C(x, m-1) (x - m + 1) / m
  const u64 xr = reduce(x, p);
  u64 binom = 1 % p, acc = 0;
  for (u64 m = 0; m <= n; ++m) {
    if (m > 0) binom = mul_mod(mul_mod(binom, sub_mod(xr, (m - 1) % p, p), p), *inv_mod(m, p), p);
    acc = add_mod(acc, mul_mod(g[n - m], binom, p), p);
  }
  return {acc, p};
}

TruncatedAdele z_A(unsigned k, PrimeWindow window) {
  if (k < 2) fail(ErrorKind::Domain, "z_A needs k >= 2");
  return build(
      window,
      [k](u64 p) -> std::optional<i64> {
        if (p <= k + 2) return std::nullopt;
        const u64 b = bernoulli_mod(p - k, p).value;
        return static_cast<i64>(mul_mod(b, *inv_mod(k % p, p), p));
      },
      "Z(" + std::to_string(k) + ")");
}

TruncatedAdele script_B(PrimeWindow window) {
  return build(
      window,
      [](u64 p) -> std::optional<i64> {
        if (p < 5) return std::nullopt;
        return static_cast<i64>(bernoulli_mod((p + 1) / 2, p).value);
      },
      "scriptB");
}

TruncatedAdele script_E(PrimeWindow window) {
  return build(
      window,
      [](u64 p) -> std::optional<i64> {
        if (p < 5) return std::nullopt;
        return static_cast<i64>(euler_mod((p - 1) / 2, p).value);
      },
      "scriptE");
}

std::pair<TruncatedAdele, TruncatedAdele> g_A(unsigned k, i64 x, PrimeWindow window) {
  if (k < 2) fail(ErrorKind::Domain, "g_A needs k >= 2");
  if (x >= -static_cast<i64>(k) - 1 && x <= -1)
    fail(ErrorKind::Domain, "g_A: x=" + std::to_string(x) + " lies in [-k-1, -1]");
  auto excluded = [k, x](u64 p) {
    if (p <= k + 2) return true;
    for (unsigned j = 0; j <= k; ++j)
      if (reduce(x + j + 1, p) == 0) return true;
    return false;
  };
  const std::string tag = "G(" + std::to_string(k) + ";" + std::to_string(x) + ")";

  auto direct = build(
      window,
      [&](u64 p) -> std::optional<i64> {
        if (excluded(p)) return std::nullopt;
        return static_cast<i64>(gregory_poly_mod(p - k, x, p).value);
      },
      tag + " direct");

  auto via_log = build(
      window,
      [&](u64 p) -> std::optional<i64> {
        if (excluded(p)) return std::nullopt;
        u64 acc = 0, c = 1 % p;  // C(k, j)
        for (unsigned j = 0; j <= k; ++j) {
          if (j > 0) c = mul_mod(mul_mod(c, k - j + 1, p), *inv_mod(j, p), p);
          const i64 y = x + j + 1;
          const u64 term = mul_mod(mul_mod(c, reduce(y, p), p), fermat_quotient(ReducedRational(y), p).value, p);
          acc = j % 2 ? sub_mod(acc, term, p) : add_mod(acc, term, p);
        }
        if ((k - 1) % 2) acc = acc == 0 ? 0 : p - acc;
        return static_cast<i64>(acc);
      },
      tag + " via log");

  return {std::move(direct), std::move(via_log)};
}

}  // namespace amod
