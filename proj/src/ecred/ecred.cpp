#include "amod/ecred.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "amod/parallel.hpp"

namespace amod {

namespace {

bool squarefree(u64 n) {
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
    if (n % d == 0) n /= d;
  }
  return true;
}

i64 checked_mul(i64 x, i64 y) {
  i64 r;
  if (__builtin_mul_overflow(x, y, &r)) fail(ErrorKind::Capacity, "curve coefficient overflows 64 bits");
  return r;
}

double angle(i64 ap, u64 p) {
  const double c = static_cast<double>(ap) / (2.0 * std::sqrt(static_cast<double>(p)));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

ShortWeierstrassCurve::ShortWeierstrassCurve(i64 a, i64 b) : a_(a), b_(b) {
  if (discriminant() == 0) fail(ErrorKind::Domain, "singular curve: 4a^3 + 27b^2 = 0");
}

ShortWeierstrassCurve ShortWeierstrassCurve::parse(const std::string& text) {
  std::istringstream in(text);
  i64 a, b;
  char comma;
  if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof())
    fail(ErrorKind::Domain, "curve must be given as a,b: '" + text + "'");
  return {a, b};
}

i128 ShortWeierstrassCurve::discriminant() const {
  const i128 a = a_, b = b_;
  return 4 * a * a * a + 27 * b * b;
}

std::string ShortWeierstrassCurve::to_string() const { return std::to_string(a_) + "," + std::to_string(b_); }

bool good_reduction(const ShortWeierstrassCurve& E, u64 p) {
  if (p == 2 || p == 3) return false;
  return E.discriminant() % static_cast<i128>(p) != 0;
}

i64 ap_trace(const ShortWeierstrassCurve& E, u64 p) {
  if (p > kMaxTracePrime) fail(ErrorKind::Capacity, "trace prime above " + std::to_string(kMaxTracePrime));
  if (!good_reduction(E, p)) fail(ErrorKind::BadPrime, "bad reduction at " + std::to_string(p));

  // chi[r] = (r / p)
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (u64 x = 1, sq = 1; x <= (p - 1) / 2; ++x) {
    chi[sq] = 1;
    sq += 2 * x + 1;
    while (sq >= p) sq -= p;
  }

  // f(x) = x^3 + a x + b by forward differences:
  // f(x+1) - f(x) = 3x^2 + 3x + 1 + a, second difference 6x + 6, third 6.
  const u64 a = reduce(E.a(), p);
  u64 f = reduce(E.b(), p);
  u64 d1 = (1 + a) % p;
  u64 d2 = 6 % p;
  const u64 d3 = 6 % p;
  i64 sum = 0;
  for (u64 x = 0; x < p; ++x) {
    sum += chi[f];
    f += d1;
    if (f >= p) f -= p;
    d1 += d2;
    if (d1 >= p) d1 -= p;
    d2 += d3;
    if (d2 >= p) d2 -= p;
  }
  const i64 ap = -sum;
  if (static_cast<double>(ap) * static_cast<double>(ap) > 4.0 * static_cast<double>(p))
    fail(ErrorKind::Internal, "Hasse bound violated at p=" + std::to_string(p));
  return ap;
}

u64 count_points_naive(const ShortWeierstrassCurve& E, u64 p) {
  u64 n = 1;
  for (u64 x = 0; x < p; ++x) {
    const u64 rhs = add_mod(add_mod(mul_mod(mul_mod(x, x, p), x, p), mul_mod(reduce(E.a(), p), x, p), p),
                            reduce(E.b(), p), p);
    for (u64 y = 0; y < p; ++y) n += mul_mod(y, y, p) == rhs;
  }
  return n;
}

std::vector<TraceRecord> trace_sweep(const ShortWeierstrassCurve& E, PrimeWindow window) {
  std::vector<u64> good;
  for (u64 p : primes_in(window))
    if (good_reduction(E, p)) good.push_back(p);
  std::vector<TraceRecord> out(good.size());
  parallel_for(good.size(), [&](std::size_t i) {
    const i64 ap = ap_trace(E, good[i]);
    out[i] = {good[i], ap, angle(ap, good[i])};
  });
  return out;
}

TruncatedAdele alpha_E(const ShortWeierstrassCurve& E, PrimeWindow window) {
  return build(
      window,
      [&](u64 p) -> std::optional<i64> {
        if (!good_reduction(E, p)) return std::nullopt;
        return ap_trace(E, p);
      },
      "alpha(E:" + E.to_string() + ")");
}

SatoTateHistogram sato_tate_histogram(const std::vector<TraceRecord>& traces, u64 X, unsigned bins) {
  if (bins < 4) fail(ErrorKind::Domain, "need at least 4 bins");
  constexpr double pi = std::numbers::pi;
  SatoTateHistogram h;
  h.X = X;
  h.edges.resize(bins + 1);
  for (unsigned i = 0; i <= bins; ++i) h.edges[i] = pi * i / bins;
  h.counts.assign(bins, 0);
  for (const auto& t : traces) {
    if (t.p > X) continue;
    auto i = static_cast<unsigned>(t.theta / pi * bins);
    h.counts[std::min(i, bins - 1)]++;
    ++h.total;
  }
  // Non-CM: (2/pi) sin^2 integrates to (1/pi)(t - sin(2t)/2).
  // CM: half the mass sits at pi/2, the rest is uniform.
  auto semicircle_cdf = [&](double t) { return (t - std::sin(2 * t) / 2) / pi; };
  for (unsigned i = 0; i < bins; ++i) {
    const double lo = h.edges[i], hi = h.edges[i + 1];
    h.mass.push_back(h.total ? static_cast<double>(h.counts[i]) / h.total : 0.0);
    h.semicircle.push_back(semicircle_cdf(hi) - semicircle_cdf(lo));
    const bool atom = lo <= pi / 2 && (pi / 2 < hi || (i + 1 == bins && pi / 2 <= hi));
    h.cm.push_back((atom ? 0.5 : 0.0) + (hi - lo) / (2 * pi));
    h.tv_semicircle += std::abs(h.mass[i] - h.semicircle[i]) / 2;
    h.tv_cm += std::abs(h.mass[i] - h.cm[i]) / 2;
  }
  h.closer = h.tv_cm < h.tv_semicircle ? "cm" : "semicircle";
  return h;
}

SatoTateHistogram sato_tate_histogram(const ShortWeierstrassCurve& E, u64 X, unsigned bins) {
  return sato_tate_histogram(trace_sweep(E, PrimeWindow(2, X)), X, bins);
}

double angle_mass(const std::vector<TraceRecord>& traces, double lo, double hi) {
  if (traces.empty()) return 0.0;
  std::size_t n = 0;
  for (const auto& t : traces) n += t.theta >= lo && t.theta <= hi;
  return static_cast<double>(n) / traces.size();
}

ShortWeierstrassCurve quadratic_twist(const ShortWeierstrassCurve& E, i64 d) {
  if (d == 0 || !squarefree(static_cast<u64>(d < 0 ? -d : d)))
    fail(ErrorKind::Domain, "twist parameter must be squarefree and nonzero");
  const i64 d2 = checked_mul(d, d);
  return {checked_mul(E.a(), d2), checked_mul(E.b(), checked_mul(d2, d))};
}

TwistCheck twist_trace_check(const ShortWeierstrassCurve& E, i64 d, PrimeWindow window) {
  const auto T = quadratic_twist(E, d);
  TwistCheck out;
  for (u64 p : primes_in(window)) {
    if (!good_reduction(E, p) || !good_reduction(T, p)) continue;
    ++out.checked;
    if (ap_trace(T, p) != legendre(d, p) * ap_trace(E, p)) out.mismatches.push_back(p);
  }
  return out;
}

}  // namespace amod
