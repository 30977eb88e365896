#include <numeric>

#include "amod/adele.hpp"

namespace amod {

namespace {

// 0, -1, 1, -2, 2, ..., -h, h
std::vector<i64> coefficient_order(i64 h) {
  std::vector<i64> out{0};
  for (i64 c = 1; c <= h; ++c) {
    out.push_back(-c);
    out.push_back(c);
  }
  return out;
}

void check_bounds(const ScanBounds& b, int degree_cap) {
  if (b.max_degree < 0 || b.max_degree > degree_cap)
    fail(ErrorKind::Capacity, "scan degree " + std::to_string(b.max_degree) + " outside [0," +
                                  std::to_string(degree_cap) + "]");
  if (b.max_height < 1 || b.max_height > kMaxScanHeight)
    fail(ErrorKind::Capacity, "scan height " + std::to_string(b.max_height) + " outside [1," +
                                  std::to_string(kMaxScanHeight) + "]");
}

// Number of candidates with a positive leading coefficient on each of
// `slots` possible leading positions: sum_k h (2h+1)^k.
u64 candidate_count(std::size_t slots, i64 h) {
  long double total = 0, power = 1;
  for (std::size_t k = 0; k < slots; ++k) {
    total += static_cast<long double>(h) * power;
    power *= static_cast<long double>(2 * h + 1);
  }
  if (total > static_cast<long double>(kMaxScanCandidates))
    fail(ErrorKind::Capacity, "relation scan box exceeds " + std::to_string(kMaxScanCandidates) + " candidates");
  return static_cast<u64>(total);
}

// Good coordinates with the value of every monomial precomputed. Monomial
// values are below 2^32 and coefficients at most 64 in magnitude, so a
// candidate's value accumulates exactly in i64 for up to 10 monomials.
struct MonomialTable {
  std::vector<u64> primes;
  std::vector<std::vector<i64>> values;  // values[k][m]: monomial m at good prime k
};

// Visits every coefficient vector over `slots` monomials with a positive
// leading coefficient and content 1, in the documented order, calling
// test(coeffs) for each. Returns the number of candidates visited.
template <class Test>
u64 enumerate(std::size_t slots, i64 h, Test&& test) {
  const auto order = coefficient_order(h);
  const std::size_t base = order.size();
  u64 visited = 0;
  std::vector<i64> coeffs(slots, 0);
  std::vector<std::size_t> idx;
  for (std::size_t lead = 0; lead < slots; ++lead) {
    for (i64 lc = 1; lc <= h; ++lc) {
      idx.assign(lead, 0);
      std::fill(coeffs.begin(), coeffs.end(), 0);
      coeffs[lead] = lc;
      for (;;) {
        i64 g = lc;
        for (std::size_t m = 0; m < lead; ++m) g = std::gcd(g, coeffs[m]);
        if (g == 1) {
          ++visited;
          test(coeffs, lead);
        }
        // Odometer: slot 0 (lowest monomial) turns fastest.
        std::size_t pos = 0;
        while (pos < lead) {
          if (++idx[pos] < base) {
            coeffs[pos] = order[idx[pos]];
            break;
          }
          idx[pos] = 0;
          coeffs[pos] = 0;
          ++pos;
        }
        if (pos == lead) break;
      }
    }
  }
  return visited;
}

std::vector<u64> exceptions_of(const MonomialTable& table, const std::vector<i64>& coeffs, std::size_t used,
                               std::size_t max_exceptions, bool& within) {
  std::vector<u64> exceptions;
  within = true;
  for (std::size_t k = 0; k < table.primes.size(); ++k) {
    const auto& mono = table.values[k];
    i64 acc = 0;
    for (std::size_t m = 0; m < used; ++m) acc += coeffs[m] * mono[m];
    if (reduce(acc, table.primes[k]) != 0) {
      exceptions.push_back(table.primes[k]);
      if (exceptions.size() > max_exceptions) {
        within = false;
        break;
      }
    }
  }
  return exceptions;
}

}  // namespace

RelationScanReport relation_scan(const TruncatedAdele& a, ScanBounds bounds) {
  check_bounds(bounds, kMaxScanDegree);
  const auto slots = static_cast<std::size_t>(bounds.max_degree + 1);
  RelationScanReport report{a.window(), bounds, candidate_count(slots, bounds.max_height), {}};

  MonomialTable table;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.is_bad(i)) continue;
    const u64 p = a.prime(i);
    std::vector<i64> pw(slots);
    u64 v = 1 % p;
    for (std::size_t m = 0; m < slots; ++m) {
      pw[m] = static_cast<i64>(v);
      v = mul_mod(v, a.residue(i), p);
    }
    table.primes.push_back(p);
    table.values.push_back(std::move(pw));
  }

  enumerate(slots, bounds.max_height, [&](const std::vector<i64>& coeffs, std::size_t lead) {
    bool within = false;
    auto exc = exceptions_of(table, coeffs, lead + 1, bounds.max_exceptions, within);
    if (within)
      report.hits.push_back(
          {IntPolynomial(std::vector<i64>(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead + 1))),
           std::move(exc)});
  });
  return report;
}

// ---------------------------------------------------------------------------
// Bivariate

std::vector<std::pair<int, int>> BivariatePolynomial::monomials(int total_degree) {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t <= total_degree; ++t)
    for (int i = 0; i <= t; ++i) out.emplace_back(i, t - i);
  return out;
}

BivariatePolynomial::BivariatePolynomial(int total_degree, std::vector<i64> coeffs)
    : total_degree_(total_degree), coeffs_(std::move(coeffs)) {
  coeffs_.resize(monomials(total_degree_).size(), 0);
}

i64 BivariatePolynomial::coeff(int i, int j) const {
  const auto mons = monomials(total_degree_);
  for (std::size_t m = 0; m < mons.size(); ++m)
    if (mons[m] == std::pair{i, j}) return coeffs_[m];
  return 0;
}

u64 BivariatePolynomial::eval_mod(u64 x, u64 y, u64 p) const {
  const auto mons = monomials(total_degree_);
  u64 acc = 0;
  for (std::size_t m = 0; m < mons.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    const u64 term = mul_mod(pow_mod_u(x, static_cast<u64>(mons[m].first), p),
                             pow_mod_u(y, static_cast<u64>(mons[m].second), p), p);
    acc = add_mod(acc, mul_mod(reduce(coeffs_[m], p), term, p), p);
  }
  return acc;
}

std::string BivariatePolynomial::to_string() const {
  const auto mons = monomials(total_degree_);
  std::string out;
  for (std::size_t k = mons.size(); k-- > 0;) {
    const i64 c = coeffs_[k];
    if (c == 0) continue;
    const auto [i, j] = mons[k];
    const i64 mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    std::string mono;
    if (i >= 1) mono += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j >= 1) mono += (mono.empty() ? "" : "*") + (j == 1 ? std::string("y") : "y^" + std::to_string(j));
    if (mag != 1 || mono.empty()) out += std::to_string(mag) + (mono.empty() ? "" : "*");
    out += mono;
  }
  return out.empty() ? "0" : out;
}

BivariateScanReport relation_scan2(const TruncatedAdele& a, const TruncatedAdele& b, ScanBounds bounds) {
  if (!(a.window() == b.window()) || a.size() != b.size()) fail(ErrorKind::Structural, "window mismatch");
  check_bounds(bounds, kMaxScanTotalDegree2);
  const auto mons = BivariatePolynomial::monomials(bounds.max_degree);
  BivariateScanReport report{a.window(), bounds, candidate_count(mons.size(), bounds.max_height), {}};

  MonomialTable table;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.is_bad(i) || b.is_bad(i)) continue;
    const u64 p = a.prime(i);
    std::vector<i64> values;
    for (const auto& [ex, ey] : mons)
      values.push_back(static_cast<i64>(mul_mod(pow_mod_u(a.residue(i), static_cast<u64>(ex), p),
                                                pow_mod_u(b.residue(i), static_cast<u64>(ey), p), p)));
    table.primes.push_back(p);
    table.values.push_back(std::move(values));
  }

  enumerate(mons.size(), bounds.max_height, [&](const std::vector<i64>& coeffs, std::size_t lead) {
    bool within = false;
    auto exc = exceptions_of(table, coeffs, lead + 1, bounds.max_exceptions, within);
    if (within) report.hits.push_back({BivariatePolynomial(bounds.max_degree, coeffs), std::move(exc)});
  });
  return report;
}

}  // namespace amod
