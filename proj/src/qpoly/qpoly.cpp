#include "amod/qpoly.hpp"

#include "amod/parallel.hpp"

namespace amod {

namespace {

bool is_one(const ReducedRational& q) { return q.num() == 1 && q.den() == 1; }

std::string label(const ReducedRational& q) { return q.to_string(); }

u64 bressoud_by_recurrence(u64 n, u64 q, u64 p) {
  u64 prev = 1 % p;                 // D_0
  if (n == 0) return prev;
  u64 cur = add_mod(1 % p, q, p);  // D_1
  const u64 q2 = mul_mod(q, q, p);
  u64 qm_1 = q;     // q^(m-1)
  u64 q2m_1 = q;    // q^(2m-1), advanced before use
  for (u64 m = 2; m <= n; ++m) {
    const u64 qm = mul_mod(qm_1, q, p);
    q2m_1 = mul_mod(q2m_1, q2, p);
    const u64 a = sub_mod(add_mod(add_mod(1 % p, q, p), q2m_1, p), qm, p);
    const u64 b = mul_mod(q, sub_mod(1 % p, qm_1, p), p);
    const u64 next = sub_mod(mul_mod(a, cur, p), mul_mod(b, prev, p), p);
    prev = cur;
    cur = next;
    qm_1 = qm;
  }
  return cur;
}

u64 bressoud_by_sum(u64 n, const QContext& ctx) {
  const u64 p = ctx.p(), q = ctx.qmod();
  const auto row = q_binomial_row(n, n, ctx);
  u64 sum = 0, qk2 = 1 % p, q2k1 = q;  // q^(k^2), q^(2k+1)
  const u64 q2 = mul_mod(q, q, p);
  for (u64 k = 0; k <= n; ++k) {
    sum = add_mod(sum, mul_mod(qk2, row[k], p), p);
    qk2 = mul_mod(qk2, q2k1, p);
    q2k1 = mul_mod(q2k1, q2, p);
  }
  return sum;
}

}  // namespace

QContext::QContext(const ReducedRational& q, u64 p) : q_(q), p_(p) {
  if (p < 2) fail(ErrorKind::Domain, "modulus must be prime");
  if (!q.is_unit_at(p)) fail(ErrorKind::BadPrime, std::to_string(p) + " divides " + q.to_string());
  qmod_ = rational_mod(q, p);
}

Residue q_pochhammer(const QContext& ctx, u64 n) {
  const u64 p = ctx.p();
  u64 acc = 1 % p, qi = 1 % p;
  for (u64 i = 1; i <= n && acc != 0; ++i) {
    qi = mul_mod(qi, ctx.qmod(), p);
    acc = mul_mod(acc, sub_mod(1 % p, qi, p), p);
  }
  return {acc, p};
}

std::vector<u64> q_binomial_row(u64 n, u64 kmax, const QContext& ctx) {
  const u64 p = ctx.p();
  kmax = std::min(kmax, n);
  std::vector<u64> qpow(kmax + 1);
  qpow[0] = 1 % p;
  for (u64 k = 1; k <= kmax; ++k) qpow[k] = mul_mod(qpow[k - 1], ctx.qmod(), p);

  std::vector<u64> row(kmax + 1, 0);
  row[0] = 1 % p;
  if (p < (u64{1} << 32)) {
    // Products of two residues fit in 64 bits.
    for (u64 m = 1; m <= n; ++m) {
      for (u64 k = std::min(m, kmax); k >= 1; --k) {
        u64 v = row[k - 1] + qpow[k] * row[k] % p;
        row[k] = v >= p ? v - p : v;
      }
    }
  } else {
    for (u64 m = 1; m <= n; ++m)
      for (u64 k = std::min(m, kmax); k >= 1; --k) row[k] = add_mod(row[k - 1], mul_mod(qpow[k], row[k], p), p);
  }
  return row;
}

Residue binomial_mod(u64 n, u64 k, u64 p) {
  if (k > n) return {0, p};
  // Lucas: C(n, k) = prod C(n_i, k_i) over base-p digits.
  u64 acc = 1 % p;
  while (k > 0 || n > 0) {
    const u64 ni = n % p, ki = k % p;
    if (ki > ni) return {0, p};
    u64 num = 1 % p, den = 1 % p;
    for (u64 i = 0; i < ki; ++i) {
      num = mul_mod(num, ni - i, p);
      den = mul_mod(den, i + 1, p);
    }
    acc = mul_mod(acc, mul_mod(num, *inv_mod(den, p), p), p);
    n /= p;
    k /= p;
  }
  return {acc, p};
}

Residue q_binomial(u64 n, u64 k, const QContext& ctx) {
  if (k > n) fail(ErrorKind::Domain, "q_binomial: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (is_one(ctx.q())) return binomial_mod(n, k, ctx.p());
  return {q_binomial_row(n, k, ctx)[k], ctx.p()};
}

Residue q_fibonacci(u64 n, const QContext& ctx) {
  const u64 p = ctx.p();
  if (n == 0) return {0, p};
  u64 f0 = 0, f1 = 1 % p, qi = 1 % p;  // F_i, F_{i+1}, q^i
  for (u64 i = 0; i + 1 < n; ++i) {
    const u64 f2 = add_mod(f1, mul_mod(qi, f0, p), p);
    f0 = f1;
    f1 = f2;
    qi = mul_mod(qi, ctx.qmod(), p);
  }
  return {f1, p};
}

i64 q_fibonacci_exact(unsigned n, i64 q) {
  if (n > 40) fail(ErrorKind::Domain, "exact q-Fibonacci limited to n <= 40");
  if (n == 0) return 0;
  i64 f0 = 0, f1 = 1, qi = 1;
  for (unsigned i = 0; i + 1 < n; ++i) {
    i64 t = 0, f2 = 0;
    if (__builtin_mul_overflow(qi, f0, &t) || __builtin_add_overflow(f1, t, &f2))
      fail(ErrorKind::Capacity, "F_" + std::to_string(n) + "(" + std::to_string(q) + ") overflows 64 bits");
    f0 = f1;
    f1 = f2;
    // q^i is only needed while another step follows.
    if (i + 2 < n && __builtin_mul_overflow(qi, q, &qi))
      fail(ErrorKind::Capacity, "F_" + std::to_string(n) + "(" + std::to_string(q) + ") overflows 64 bits");
  }
  return f1;
}

Residue fibonacci_mod(u64 n, u64 m) {
  if (m < 1 || m >= kModulusLimit) fail(ErrorKind::Capacity, "modulus outside the width contract");
  u64 a = 0, b = 1 % m;  // F_k, F_{k+1}
  for (int bit = 63; bit >= 0; --bit) {
    // F_2k = F_k (2 F_{k+1} - F_k), F_2k+1 = F_k^2 + F_{k+1}^2
    const u64 c = mul_mod(a, sub_mod(add_mod(b, b, m), a, m), m);
    const u64 d = add_mod(mul_mod(a, a, m), mul_mod(b, b, m), m);
    if ((n >> bit) & 1) {
      a = d;
      b = add_mod(c, d, m);
    } else {
      a = c;
      b = d;
    }
  }
  return {a, m};
}

BressoudValue bressoud(u64 n, const QContext& ctx) {
  return {{bressoud_by_recurrence(n, ctx.qmod(), ctx.p()), ctx.p()}, {bressoud_by_sum(n, ctx), ctx.p()}};
}

CongruenceReport verify_af_congruence(const ReducedRational& q, u64 p) {
  if (!q.is_unit_at(p)) return skipped(label(q), p, "p divides q");
  CongruenceReport r;
  r.q = label(q);
  r.p = p;
  if (is_one(q)) {
    // Integer path: F_p = (p/5) mod p.
    r.ord = 1;
    r.index = p - 1;
    r.lhs = fibonacci_mod(p, p).value;
    r.rhs = reduce(legendre(static_cast<i64>(p), 5), p);
    settle(r);
    return r;
  }
  const QContext ctx(q, p);
  const u64 ord = ctx.order();
  r.ord = ord;
  r.index = (p - 1) / ord;
  if (ord % 5 == 0) {
    r.verdict = Verdict::Skip;
    r.skip_reason = "5 divides ord_p(q)";
    return r;
  }
  const int chi = legendre(static_cast<i64>(ord), 5);
  r.lhs = q_fibonacci(p, ctx).value;
  r.rhs = fibonacci_mod(static_cast<u64>(static_cast<i64>(*r.index) + chi), p).value;
  settle(r);
  return r;
}

CongruenceReport verify_qbinom_congruence(const ReducedRational& q, u64 p, u64 k) {
  if (p < 2 || k > p - 1) fail(ErrorKind::Domain, "k must lie in [0, p-1]");
  if (!q.is_unit_at(p)) return skipped(label(q), p, "p divides q");
  const QContext ctx(q, p);
  CongruenceReport r;
  r.q = label(q);
  r.p = p;
  const u64 ord = ctx.order();
  r.ord = ord;
  r.index = (p - 1) / ord;
  r.lhs = q_binomial(p - 1, k, ctx).value;
  r.rhs = k % ord == 0 ? binomial_mod(*r.index, k / ord, p).value : 0;
  settle(r);
  return r;
}

CongruenceReport verify_bressoud_congruence(const ReducedRational& q, u64 p) {
  if (!q.is_unit_at(p)) return skipped(label(q), p, "p divides q");
  const QContext ctx(q, p);
  CongruenceReport r;
  r.q = label(q);
  r.p = p;
  const u64 ord = ctx.order();
  r.ord = ord;
  r.index = (p - 1) / ord;
  const auto d = bressoud(p - 1, ctx);
  if (!d.agree())
    fail(ErrorKind::Internal, "Bressoud recurrence and sum disagree at q=" + r.q + ", p=" + std::to_string(p));
  r.lhs = d.by_recurrence.value;
  r.rhs = pow_mod_u(2, *r.index, p);
  settle(r);
  return r;
}

namespace {

template <class Verify>
CongruenceSweep sweep(std::string name, PrimeWindow window, Verify verify) {
  const auto primes = primes_in(window);
  CongruenceSweep out{std::move(name), std::vector<CongruenceReport>(primes.size())};
  parallel_for(primes.size(), [&](std::size_t i) { out.rows[i] = verify(primes[i]); });
  return out;
}

}  // namespace

CongruenceSweep sweep_af(const ReducedRational& q, PrimeWindow window) {
  return sweep("af", window, [&](u64 p) { return verify_af_congruence(q, p); });
}

CongruenceSweep sweep_bressoud(const ReducedRational& q, PrimeWindow window) {
  return sweep("bressoud", window, [&](u64 p) { return verify_bressoud_congruence(q, p); });
}

TruncatedAdele fib_element(const ReducedRational& q, PrimeWindow window) {
  return build(
      window,
      [&](u64 p) -> std::optional<i64> {
        if (!q.is_unit_at(p)) return std::nullopt;
        if (is_one(q)) return static_cast<i64>(fibonacci_mod(p, p).value);
        return static_cast<i64>(q_fibonacci(p, QContext(q, p)).value);
      },
      "F(" + q.to_string() + ")");
}

TruncatedAdele bressoud_element(const ReducedRational& q, PrimeWindow window) {
  return build(
      window,
      [&](u64 p) -> std::optional<i64> {
        if (!q.is_unit_at(p)) return std::nullopt;
        const QContext ctx(q, p);
        return static_cast<i64>(bressoud_by_recurrence(p - 1, ctx.qmod(), p));
      },
      "D(" + q.to_string() + ")");
}

}  // namespace amod
