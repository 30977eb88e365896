#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "amod/core.hpp"

namespace amod {

namespace {

i64 checked_abs(i64 v) {
  if (v == std::numeric_limits<i64>::min()) fail(ErrorKind::Capacity, "integer magnitude exceeds 63 bits");
  return v < 0 ? -v : v;
}

void require_odd_prime(u64 p, const char* who) {
  if (p < 3 || (p & 1) == 0 || !is_prime(p))
    fail(ErrorKind::Domain, std::string(who) + ": modulus " + std::to_string(p) + " is not an odd prime");
}

void require_modulus(u64 m) {
  if (m < 1 || m >= kModulusLimit) fail(ErrorKind::Capacity, "modulus outside the 62-bit width contract");
}

}  // namespace

// ---------------------------------------------------------------------------
// ReducedRational

ReducedRational::ReducedRational(i64 num) : num_(num), den_(1) {}

ReducedRational::ReducedRational(i64 num, i64 den) {
  if (den == 0) fail(ErrorKind::Domain, "zero denominator");
  if (den < 0) {
    num = num < 0 ? checked_abs(num) : -num;
    den = checked_abs(den);
  }
  const i64 g = std::gcd(checked_abs(num), den);
  num_ = num / g;
  den_ = den / g;
  if (num_ == 0) den_ = 1;
}

ReducedRational ReducedRational::parse(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      const i64 n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n};
    }
    const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    const i64 n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const i64 d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {n, d};
  } catch (const std::logic_error&) {
    fail(ErrorKind::Domain, "cannot parse rational '" + text + "'");
  }
}

ReducedRational ReducedRational::inverse() const {
  if (num_ == 0) fail(ErrorKind::Domain, "inverse of zero");
  return {den_, num_};
}

ReducedRational operator*(const ReducedRational& a, const ReducedRational& b) {
  const i64 g1 = std::gcd(checked_abs(a.num_), b.den_);
  const i64 g2 = std::gcd(checked_abs(b.num_), a.den_);
  i64 n = 0, d = 0;
  if (__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &n) || __builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &d))
    fail(ErrorKind::Capacity, "rational product overflows 64 bits");
  return {n, d};
}

bool ReducedRational::is_unit_at(u64 p) const {
  return reduce(num_, p) != 0 && static_cast<u64>(den_) % p != 0;
}

std::string ReducedRational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------------
// Residue arithmetic

u64 reduce(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  const u64 r = static_cast<u64>(-(a + 1)) % m;  // avoids overflow at INT64_MIN
  return m - 1 - r;
}

u64 pow_mod_u(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

Residue pow_mod(i64 base, u64 exp, u64 m) {
  require_modulus(m);
  return {pow_mod_u(reduce(base, m), exp, m), m};
}

std::optional<u64> inv_mod(u64 a, u64 m) {
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) return std::nullopt;
  i128 inv = old_s % static_cast<i128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

u64 rational_mod(const ReducedRational& q, u64 m) {
  const u64 num = reduce(q.num(), m);
  const auto den_inv = inv_mod(static_cast<u64>(q.den()) % m, m);
  if (!den_inv)
    fail(ErrorKind::BadPrime, "denominator of " + q.to_string() + " is not invertible mod " + std::to_string(m));
  return mul_mod(num, *den_inv, m);
}

int detail::legendre_unchecked(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return pow_mod_u(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre(i64 a, u64 p) {
  require_odd_prime(p, "legendre");
  return detail::legendre_unchecked(reduce(a, p), p);
}

std::vector<Residue> sqrt_mod(i64 a_signed, u64 p) {
  require_odd_prime(p, "sqrt_mod");
  const u64 a = reduce(a_signed, p);
  if (a == 0) return {{0, p}};
  if (detail::legendre_unchecked(a, p) != 1) return {};

  u64 root = 0;
  if (p % 4 == 3) {
    root = pow_mod_u(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    u64 z = 2;
    while (detail::legendre_unchecked(z, p) != -1) ++z;
    u64 c = pow_mod_u(z, q, p);
    u64 t = pow_mod_u(a, q, p);
    root = pow_mod_u(a, (q + 1) / 2, p);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      u64 t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      u64 b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
      root = mul_mod(root, b, p);
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      m = i;
    }
  }
  const u64 other = p - root;
  if (other == root) return {{root, p}};
  return {{std::min(root, other), p}, {std::max(root, other), p}};
}

u64 detail::order_of_unit(u64 x, u64 p, std::span<const std::pair<u64, unsigned>> factors) {
  u64 order = p - 1;
  for (const auto& [ell, e] : factors) {
    for (unsigned k = 0; k < e; ++k) {
      if (pow_mod_u(x, order / ell, p) != 1) break;
      order /= ell;
    }
  }
  return order;
}

u64 mult_order(const ReducedRational& q, u64 p) {
  if (p < 2) fail(ErrorKind::Domain, "modulus must be prime");
  if (!q.is_unit_at(p))
    fail(ErrorKind::BadPrime, std::to_string(p) + " divides numerator or denominator of " + q.to_string());
  if (p == 2) return 1;
  const u64 x = rational_mod(q, p);
  const auto factors = factor_trial(p - 1);
  return detail::order_of_unit(x, p, factors);
}

u64 group_index(const ReducedRational& q, u64 p) { return (p - 1) / mult_order(q, p); }

u64 detail::fermat_quotient_unchecked(const ReducedRational& alpha, u64 p) {
  const u64 p2 = p * p;
  const u64 num = pow_mod_u(reduce(alpha.num(), p2), p - 1, p2);
  const u64 den = pow_mod_u(static_cast<u64>(alpha.den()) % p2, p - 1, p2);
  const u64 r = mul_mod(num, *inv_mod(den, p2), p2);
  // r = 1 (mod p), so (r - 1) / p is exact.
  return ((r + p2 - 1) % p2) / p;
}

Residue fermat_quotient(const ReducedRational& alpha, u64 p) {
  if (p < 2) fail(ErrorKind::Domain, "modulus must be prime");
  if (p >= kFermatPrimeLimit) fail(ErrorKind::Capacity, "p^2 exceeds the width contract");
  if (!alpha.is_unit_at(p))
    fail(ErrorKind::BadPrime, std::to_string(p) + " divides numerator or denominator of " + alpha.to_string());
  return {detail::fermat_quotient_unchecked(alpha, p), p};
}

}  // namespace amod
