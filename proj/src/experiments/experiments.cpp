#include "amod/experiments.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace amod {

namespace {

double floor_log(u64 p) { return std::floor(std::log(static_cast<double>(p))); }

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

}  // namespace

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 t_sequence(u64 n) {
  if (n == 0) fail(ErrorKind::Domain, "t_n is indexed from 1");
  // Block m covers positions T(m-1)+1 .. T(m), T(m) = m(m+1)/2.
  u64 m = (isqrt(8 * n + 1) - 1) / 2;  // largest m with T(m) <= n
  const u64 Tm = m * (m + 1) / 2;
  return Tm == n ? m : n - Tm;
}

TruncatedAdele floor_log_element(PrimeWindow window) {
  return build(window, [](u64 p) -> std::optional<i64> { return static_cast<i64>(floor_log(p)); }, "floorlog");
}

TruncatedAdele floor_sqrt_element(PrimeWindow window) {
  return build(window, [](u64 p) -> std::optional<i64> { return static_cast<i64>(isqrt(p)); }, "floorsqrt");
}

TruncatedAdele index_element(const ReducedRational& q, PrimeWindow window) {
  return build(
      window,
      [&](u64 p) -> std::optional<i64> {
        if (!q.is_unit_at(p)) return std::nullopt;
        return static_cast<i64>(group_index(q, p));
      },
      "I(" + q.to_string() + ")");
}

TruncatedAdele t_pi_element(PrimeWindow window) {
  return build(window, [](u64 p) -> std::optional<i64> { return static_cast<i64>(t_sequence(prime_count(p))); },
               "t_pi");
}

TruncatedAdele pi_p_element(PrimeWindow window) {
  return build(window, [](u64 p) -> std::optional<i64> { return static_cast<i64>(prime_count(p)); }, "pi");
}

TruncatedAdele log_element(const ReducedRational& alpha, PrimeWindow window) {
  if (alpha.is_zero()) fail(ErrorKind::Domain, "log of zero");
  return build(
      window,
      [&](u64 p) -> std::optional<i64> {
        if (!alpha.is_unit_at(p)) return std::nullopt;
        return static_cast<i64>(fermat_quotient(alpha, p).value);
      },
      "log(" + alpha.to_string() + ")");
}

const char* to_string(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::Consistent: return "consistent";
    case AuditVerdict::Inconsistent: return "inconsistent";
    case AuditVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

CriterionAuditReport af_criterion_audit(const TruncatedAdele& alpha, const std::vector<i64>& b, u64 min_hits) {
  for (std::size_t i = 1; i < b.size(); ++i)
    if (b[i] <= b[i - 1]) fail(ErrorKind::Domain, "b must be strictly increasing");
  CriterionAuditReport rep;
  rep.criterion = "af";
  rep.window = alpha.window();
  rep.params = {{"element", alpha.provenance()}, {"min_hits", std::to_string(min_hits)}, {"terms", std::to_string(b.size())}};
  bool all = !b.empty();
  for (i64 bn : b) {
    u64 hits = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const u64 p = alpha.prime(i);
      if (alpha.is_bad(i) || bn < 0 || static_cast<u64>(bn) >= p) continue;
      hits += alpha.residue(i) == static_cast<u64>(bn);
    }
    rep.measurements.push_back({"hits b=" + std::to_string(bn), static_cast<u64>(bn < 0 ? 0 : bn), static_cast<double>(hits)});
    all = all && hits >= min_hits;
  }
  rep.verdict = all ? AuditVerdict::Consistent : AuditVerdict::Inconsistent;
  return rep;
}

PrimeValues floor_log_values(u64 X) {
  PrimeValues v;
  for (u64 p : primes_in(PrimeWindow(2, X))) v.emplace_back(p, static_cast<i64>(floor_log(p)));
  return v;
}

PrimeValues floor_sqrt_values(u64 X) {
  PrimeValues v;
  for (u64 p : primes_in(PrimeWindow(2, X))) v.emplace_back(p, static_cast<i64>(isqrt(p)));
  return v;
}

PrimeValues constant_values(u64 X, i64 c) {
  PrimeValues v;
  for (u64 p : primes_in(PrimeWindow(2, X))) v.emplace_back(p, c);
  return v;
}

CriterionAuditReport growth_audit(const PrimeValues& values, unsigned d_max) {
  if (d_max < 1 || d_max > 16) fail(ErrorKind::Domain, "growth_audit: d_max must be in [1, 16]");
  const u64 top = values.empty() ? 0 : values.back().first;
  std::vector<u64> scales;
  for (u64 X = 100; X / 10 < top; X *= 10) scales.push_back(X);
  if (scales.size() < 2) fail(ErrorKind::Domain, "growth_audit needs values past 1000");
  CriterionAuditReport rep;
  rep.criterion = "growth";
  rep.window = PrimeWindow(2, scales.back());
  rep.params = {{"d_max", std::to_string(d_max)}};

  std::vector<double> means;
  std::vector<std::vector<double>> maxima(d_max);
  bool empty_block = false;
  for (u64 X : scales) {
    double sum = 0;
    u64 n = 0;
    std::vector<double> mx(d_max, 0.0);
    for (const auto& [p, a] : values) {
      if (p <= X / 10 || p > X) continue;
      sum += static_cast<double>(a);
      ++n;
      for (unsigned d = 1; d <= d_max; ++d)
        mx[d - 1] = std::max(mx[d - 1], std::pow(std::abs(static_cast<double>(a)), d) / static_cast<double>(p));
    }
    empty_block = empty_block || n == 0;
    means.push_back(n ? sum / n : 0.0);
    rep.measurements.push_back({"mean a_p", X, means.back()});
    for (unsigned d = 1; d <= d_max; ++d) {
      maxima[d - 1].push_back(mx[d - 1]);
      rep.measurements.push_back({"max a_p^" + std::to_string(d) + "/p", X, mx[d - 1]});
    }
  }
  if (empty_block) {
    rep.verdict = AuditVerdict::Inconclusive;
    return rep;
  }
  bool ok = true;
  for (std::size_t i = 1; i < means.size(); ++i) ok = ok && means[i] > means[i - 1];
  for (const auto& m : maxima)
    for (std::size_t i = 1; i < m.size(); ++i) ok = ok && m[i] < m[i - 1];
  rep.verdict = ok ? AuditVerdict::Consistent : AuditVerdict::Inconsistent;
  return rep;
}

CriterionAuditReport lz2_audit(const PrimePredicate& S, const PrimeFunction& b, double eps, double eps_prime,
                               u64 X_max) {
  if (X_max < 1000) fail(ErrorKind::Domain, "lz2_audit needs X >= 1000");
  CriterionAuditReport rep;
  rep.criterion = "lz2";
  rep.window = PrimeWindow(2, X_max);
  rep.params = {{"eps", fmt(eps)}, {"eps_prime", fmt(eps_prime)}, {"X", std::to_string(X_max)}};

  const auto primes = primes_in(rep.window);
  std::vector<double> maxima, ratios;
  std::size_t idx = 0;
  u64 in_s = 0;
  for (u64 X = 1000; X <= X_max; X *= 10) {
    double mx = 0;
    bool any = false;
    for (; idx < primes.size() && primes[idx] <= X; ++idx) {
      const u64 p = primes[idx];
      if (!S(p)) continue;
      ++in_s;
      if (p <= X / 10) continue;
      any = true;
      mx = std::max(mx, b(p) / std::pow(static_cast<double>(p), eps));
    }
    if (!any) {
      rep.verdict = AuditVerdict::Inconclusive;
      return rep;
    }
    maxima.push_back(mx);
    ratios.push_back(static_cast<double>(in_s) / std::pow(static_cast<double>(X), eps_prime));
    rep.measurements.push_back({"max b_p/p^eps", X, mx});
    rep.measurements.push_back({"#S/X^eps'", X, ratios.back()});
    if (X > X_max / 10) break;
  }
  bool ok = ratios.back() >= ratios.front() / 2;
  for (std::size_t i = 1; i < maxima.size(); ++i) ok = ok && maxima[i] <= maxima[i - 1];
  rep.verdict = ok ? AuditVerdict::Consistent : AuditVerdict::Inconsistent;
  return rep;
}

Lz1Counts lz1_counts(const ReducedRational& q, u64 r, u64 c, u64 N, u64 X) {
  if (r == 0 || r % 2 == 0) fail(ErrorKind::Domain, "r must be odd and positive");
  if (N == 0 || std::gcd(N, c) != 1) fail(ErrorKind::Domain, "N and c must be coprime");
  if (X < 2 || X > 500'000) fail(ErrorKind::Capacity, "lz1: X must lie in [2, 500000]");
  Lz1Counts out;
  const double logX = std::log(static_cast<double>(X));
  const double bound = std::sqrt(static_cast<double>(X)) / logX;
  out.reference = static_cast<double>(X) / logX;
  for (u64 p : primes_in(PrimeWindow(X, 2 * X))) {
    if (p % N != c % N || !q.is_unit_at(p)) continue;
    ++out.candidates;
    const u64 ord = mult_order(q, p);
    out.r_divides_ord += ord % r == 0;
    if ((p - 1) % r != 0 || ((p - 1) / r) % ord != 0) continue;
    ++out.P;
    const bool small_ord = static_cast<double>(ord) <= bound;
    const bool small_idx = static_cast<double>((p - 1) / ord) <= bound;
    out.P1 += small_ord;
    out.P2 += small_idx;
    out.overlap += small_ord && small_idx;
    out.P3 += !small_ord && !small_idx;
  }
  return out;
}

CriterionAuditReport lz1_partition_count(const ReducedRational& q, u64 r, u64 c, u64 N, u64 X) {
  const auto k = lz1_counts(q, r, c, N, X);
  CriterionAuditReport rep;
  rep.criterion = "lz1";
  rep.window = PrimeWindow(X, 2 * X);
  rep.params = {{"q", q.to_string()}, {"r", std::to_string(r)}, {"c", std::to_string(c)},
                {"N", std::to_string(N)}, {"X", std::to_string(X)}};
  rep.measurements = {{"P", X, double(k.P)},
                      {"P1", X, double(k.P1)},
                      {"P2", X, double(k.P2)},
                      {"P3", X, double(k.P3)},
                      {"P1&P2", X, double(k.overlap)},
                      {"r|ord", X, double(k.r_divides_ord)},
                      {"candidates", X, double(k.candidates)},
                      {"X/logX", X, k.reference}};
  const bool cover = k.P <= k.P1 + k.P2 + k.P3 && k.P == k.P1 + k.P2 - k.overlap + k.P3;
  if (!cover)
    rep.verdict = AuditVerdict::Inconsistent;
  else
    rep.verdict = k.P == 0 ? AuditVerdict::Inconclusive : AuditVerdict::Consistent;
  return rep;
}

EquidistReport root_equidist(const IntPolynomial& f, u64 X, double alpha, double beta) {
  if (f.degree() != 2) fail(ErrorKind::Domain, "root_equidist needs a quadratic");
  if (!(0 <= alpha && alpha <= beta && beta <= 1)) fail(ErrorKind::Domain, "need 0 <= alpha <= beta <= 1");
  const i64 c2 = f.coeff(2), c1 = f.coeff(1), c0 = f.coeff(0);
  i64 disc;
  {
    i128 d = static_cast<i128>(c1) * c1 - static_cast<i128>(4) * c2 * c0;
    if (d > INT64_MAX || d < INT64_MIN) fail(ErrorKind::Capacity, "discriminant overflows 64 bits");
    disc = static_cast<i64>(d);
  }
  if (disc >= 0 && isqrt(static_cast<u64>(disc)) * isqrt(static_cast<u64>(disc)) == static_cast<u64>(disc))
    fail(ErrorKind::Domain, "quadratic is reducible (square discriminant)");

  EquidistReport rep{X, alpha, beta, 0, 0, 0.0};
  const auto primes = primes_in(PrimeWindow(2, X));
  rep.prime_count = primes.size();
  auto count_root = [&](u64 nu, u64 p) {
    const double t = static_cast<double>(nu) / static_cast<double>(p);
    rep.count += t >= alpha && t < beta;
  };
  for (u64 p : primes) {
    if (p == 2 || reduce(c2, p) == 0) {
      for (u64 nu = 0; nu < p; ++nu)
        if (f.eval_mod(nu, p) == 0) count_root(nu, p);
      continue;
    }
    const u64 inv2a = *inv_mod(mul_mod(2, reduce(c2, p), p), p);
    const u64 mb = reduce(-c1, p);
    for (const auto& s : sqrt_mod(disc, p)) count_root(mul_mod(add_mod(mb, s.value, p), inv2a, p), p);
    // sqrt_mod lists each square root once; a double root appears once.
  }
  rep.ratio = rep.prime_count ? static_cast<double>(rep.count) / rep.prime_count : 0.0;
  return rep;
}

std::vector<u64> smooth_scan(const IntPolynomial& f, double theta, u64 Nmax) {
  if (f.degree() < 1) fail(ErrorKind::Domain, "smooth_scan needs a nonconstant polynomial");
  if (!(theta > 0 && theta < 1)) fail(ErrorKind::Domain, "theta must lie in (0, 1)");
  if (Nmax > kMaxSmoothN) fail(ErrorKind::Capacity, "Nmax above " + std::to_string(kMaxSmoothN));
  const auto table = shared_primes(std::max<u64>(Nmax, 2));
  const auto primes = table->primes();
  std::vector<u64> out;
  for (u64 n = 1; n <= Nmax; ++n) {
    const i64 v = f.eval(static_cast<i64>(n));
    if (v == 0) continue;
    u64 m = v < 0 ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v);
    const u64 y = static_cast<u64>(std::floor(std::pow(static_cast<double>(n), theta) + 1e-9));
    for (u64 p : primes) {
      if (p > y || m == 1) break;
      if (static_cast<u128>(p) * p > m) {
        if (m <= y) m = 1;  // remaining cofactor is a prime <= y
        break;
      }
      while (m % p == 0) m /= p;
    }
    if (m == 1) out.push_back(n);
  }
  return out;
}

std::vector<u64> pi_linear_hits(i64 a, i64 b, PrimeWindow window) {
  std::vector<u64> hits;
  const auto primes = primes_in(window);
  u64 pi = prime_count(window.lo > 2 ? window.lo - 1 : 1);
  for (u64 p : primes) {
    ++pi;
    const u64 lhs = mul_mod(reduce(b, p), pi % p, p);
    if (lhs == reduce(a, p)) hits.push_back(p);
  }
  return hits;
}

std::vector<u64> wieferich_scan(const ReducedRational& alpha, i64 target, u64 X) {
  if (X >= kFermatPrimeLimit) fail(ErrorKind::Capacity, "Fermat quotients need p < 2^31");
  std::vector<u64> out;
  for (u64 p : primes_in(PrimeWindow(2, X))) {
    if (!alpha.is_unit_at(p)) continue;
    if (detail::fermat_quotient_unchecked(alpha, p) == reduce(target, p)) out.push_back(p);
  }
  return out;
}

DisproofResult log_rational_disproof(const ReducedRational& alpha, i64 a, i64 b, u64 X) {
  if (b <= 0 || std::gcd(a, b) != 1) fail(ErrorKind::Domain, "need b > 0 and gcd(a, b) = 1");
  if (alpha.is_zero() || (alpha.den() == 1 && (alpha.num() == 1 || alpha.num() == -1)))
    fail(ErrorKind::Domain, "alpha must not be 0 or +-1");
  if (X >= kFermatPrimeLimit) fail(ErrorKind::Capacity, "Fermat quotients need p < 2^31");
  DisproofResult res;
  for (u64 p : primes_in(PrimeWindow(2, X))) {
    if (!alpha.is_unit_at(p) || b % static_cast<i64>(p) == 0) continue;
    ++res.checked;
    const u64 rhs = mul_mod(reduce(a, p), *inv_mod(reduce(b, p), p), p);
    if (detail::fermat_quotient_unchecked(alpha, p) != rhs) {
      res.witness = p;
      break;
    }
  }
  return res;
}

namespace {

constexpr u64 kTrialLimit = 1'000'000;
constexpr u64 kRhoBudget = 2'000'000;

bool probable_prime(const BigInt& n) { return boost::multiprecision::miller_rabin_test(n, 30); }

BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& n) { return (a * b) % n; }

// Brent's variant of Pollard rho; empty result when the budget runs out.
std::optional<BigInt> rho(const BigInt& n, u64& budget) {
  if (n % 2 == 0) return BigInt(2);
  for (unsigned c = 1; c < 64 && budget > 0; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    const u64 m = 128;
    u64 r = 1;
    while (g == 1 && budget > 0) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        const u64 steps = std::min(m, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += steps;
        budget = budget > steps ? budget - steps : 0;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return std::nullopt;
}

void factor_big(const BigInt& n, std::map<BigInt, unsigned>& out, BigInt& cofactor, u64& budget) {
  if (n == 1) return;
  if (probable_prime(n)) {
    out[n]++;
    return;
  }
  const auto d = rho(n, budget);
  if (!d) {
    cofactor *= n;
    return;
  }
  factor_big(*d, out, cofactor, budget);
  factor_big(n / *d, out, cofactor, budget);
}

}  // namespace

PhiEllReport phi_ell_analysis(u64 u, u64 v, u64 ell, i64 a, i64 b) {
  if (!(u > v && v >= 1) || std::gcd(u, v) != 1) fail(ErrorKind::Domain, "need coprime u > v >= 1");
  if (b <= 0) fail(ErrorKind::Domain, "need b > 0");
  const u64 abs_a = static_cast<u64>(a < 0 ? -a : a);
  if (!is_prime(ell) || ell <= std::max({u, abs_a, static_cast<u64>(b)}))
    fail(ErrorKind::Domain, "ell must be a prime exceeding u, |a| and b");
  if (ell > 5000) fail(ErrorKind::Capacity, "ell above 5000");

  PhiEllReport rep{u, v, ell, a, b, 0, {}, true, 1, true, true, true, true, 0};
  const BigInt U = u, V = v;
  BigInt phi = 0, up = 1;
  for (u64 i = 0; i < ell; ++i) {
    phi += up * pow(V, static_cast<unsigned>(ell - 1 - i));
    up *= U;
  }
  rep.phi = phi;

  std::map<BigInt, unsigned> fac;
  BigInt rest = phi;
  for (u64 p : primes_in(PrimeWindow(2, kTrialLimit))) {
    if (BigInt(p) * p > rest) break;
    while (rest % p == 0) {
      fac[BigInt(p)]++;
      rest /= p;
    }
  }
  u64 budget = kRhoBudget;
  BigInt cofactor = 1;
  if (rest > 1) {
    if (BigInt(kTrialLimit) * kTrialLimit > rest)
      fac[rest]++;
    else
      factor_big(rest, fac, cofactor, budget);
  }
  rep.complete = cofactor == 1;
  rep.cofactor = cofactor;

  const BigInt vl = pow(V, static_cast<unsigned>(ell));
  const BigInt al_vl = BigInt(a) * ell * vl;
  BigInt sum = 0, product = cofactor;
  for (const auto& [p, e] : fac) {
    PhiEllFactor f{p, e, phi / p, 0};
    BigInt cm = (BigInt(u - v) * b * f.t_p + al_vl) % p;
    if (cm < 0) cm += p;
    f.contra_mod = cm;
    rep.all_one_mod_ell = rep.all_one_mod_ell && p % ell == 1;
    rep.squarefree = rep.squarefree && e == 1;
    sum += f.t_p;
    product *= pow(p, e);
    rep.factors.push_back(std::move(f));
  }
  rep.product_matches = product == phi;
  rep.T_ell = BigInt(u - v) * b * sum + al_vl;
  const BigInt diff = u - v;
  rep.diff_congruence = (phi - BigInt(ell) * pow(V, static_cast<unsigned>(ell - 1))) % diff == 0;
  return rep;
}

}  // namespace amod
