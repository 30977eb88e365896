#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "amod/core.hpp"

namespace amod {

namespace {

constexpr std::size_t kSegmentOdds = 1 << 16;

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void check_ceiling(u64 needed, u64 ceiling) {
  if (needed > ceiling)
    fail(ErrorKind::Capacity,
         "sieve limit " + std::to_string(needed) + " exceeds ceiling " + std::to_string(ceiling));
}

}  // namespace

PrimeWindow::PrimeWindow(u64 lo_, u64 hi_) : lo(std::max<u64>(lo_, 2)), hi(hi_) {
  if (hi_ < lo_)
    fail(ErrorKind::Domain, "window [" + std::to_string(lo_) + "," + std::to_string(hi_) + "] is empty");
}

PrimeTable::PrimeTable(u64 limit) : limit_(limit) {
  if (limit_ >= (u64{1} << 32)) fail(ErrorKind::Capacity, "prime table limited to 32-bit primes");
  if (limit_ < 2) return;
  primes_.push_back(2);
  if (limit_ < 3) return;

  // Base primes up to sqrt(limit) with a plain sieve.
  const u64 root = isqrt(limit_);
  std::vector<std::uint8_t> small(root + 1, 1);
  std::vector<u64> base;
  for (u64 i = 3; i <= root; i += 2) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += 2 * i) small[j] = 0;
  }

  // Segment s covers odd numbers 2*k+1 for k in [k0, k0 + kSegmentOdds).
  std::vector<std::uint8_t> seg(kSegmentOdds);
  std::vector<u64> next_k(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) next_k[i] = (base[i] * base[i]) / 2;

  const u64 k_end = (limit_ - 1) / 2 + 1;  // odd numbers 1, 3, ..., <= limit
  for (u64 k0 = 1; k0 < k_end; k0 += kSegmentOdds) {
    const u64 k1 = std::min<u64>(k0 + kSegmentOdds, k_end);
    std::fill(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(k1 - k0), 1);
    for (std::size_t i = 0; i < base.size(); ++i) {
      const u64 p = base[i];
      u64 k = next_k[i];
      for (; k < k1; k += p) seg[k - k0] = 0;
      next_k[i] = k;
    }
    for (u64 k = k0; k < k1; ++k)
      if (seg[k - k0]) primes_.push_back(static_cast<std::uint32_t>(2 * k + 1));
  }
}

u64 PrimeTable::count_upto(u64 x) const {
  return static_cast<u64>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

bool PrimeTable::contains(u64 n) const { return std::binary_search(primes_.begin(), primes_.end(), n); }

std::shared_ptr<const PrimeTable> shared_primes(u64 limit, u64 ceiling) {
  check_ceiling(limit, ceiling);
  static std::mutex mutex;
  static std::shared_ptr<const PrimeTable> table;
  std::lock_guard lock(mutex);
  if (!table || table->limit() < limit) {
    const u64 doubled = table ? 2 * table->limit() : u64{1} << 16;
    const u64 grown = std::max(limit, std::min(doubled, ceiling));
    table = std::make_shared<const PrimeTable>(grown);
  }
  return table;
}

std::vector<u64> primes_in(PrimeWindow w, u64 ceiling) {
  if (w.hi < w.lo) return {};
  auto table = shared_primes(w.hi, ceiling);
  auto all = table->primes();
  auto first = std::lower_bound(all.begin(), all.end(), w.lo);
  auto last = std::upper_bound(all.begin(), all.end(), w.hi);
  return {first, last};
}

u64 prime_count(u64 x, u64 ceiling) {
  if (x < 2) return 0;
  return shared_primes(x, ceiling)->count_upto(x);
}

u64 nth_prime(u64 n, u64 ceiling) {
  if (n == 0) fail(ErrorKind::Domain, "nth_prime is 1-based");
  // Rosser: p_n < n (ln n + ln ln n) for n >= 6.
  u64 bound = 15;
  if (n >= 6) {
    const double ln = std::log(static_cast<double>(n));
    bound = static_cast<u64>(static_cast<double>(n) * (ln + std::log(ln))) + 1;
  }
  bound = std::min(bound, ceiling);
  auto table = shared_primes(bound, ceiling);
  if (n > table->primes().size())
    fail(ErrorKind::Capacity, "prime number " + std::to_string(n) + " lies beyond the sieve ceiling");
  return table->primes()[n - 1];
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod_u(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factor_trial(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  if (n < 2) return out;
  auto strip = [&](u64 d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  };
  strip(2);
  strip(3);
  for (u64 d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace amod
