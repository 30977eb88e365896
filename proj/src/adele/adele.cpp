#include "amod/adele.hpp"

#include <algorithm>
#include <sstream>

namespace amod {

namespace {

void require_same_window(const TruncatedAdele& a, const TruncatedAdele& b) {
  if (!(a.window() == b.window()) || a.size() != b.size())
    fail(ErrorKind::Structural, "window mismatch: [" + std::to_string(a.window().lo) + "," +
                                    std::to_string(a.window().hi) + "] vs [" + std::to_string(b.window().lo) + "," +
                                    std::to_string(b.window().hi) + "]");
}

template <class Op>
TruncatedAdele combine(const TruncatedAdele& a, const TruncatedAdele& b, Op op, const char* name) {
  require_same_window(a, b);
  std::vector<u64> res(a.size());
  std::vector<bool> bad(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    bad[i] = a.is_bad(i) || b.is_bad(i);
    res[i] = bad[i] ? 0 : op(a.residue(i), b.residue(i), a.prime(i));
  }
  return {a.window(), a.primes(), std::move(res), std::move(bad),
          "(" + a.provenance() + ")" + name + "(" + b.provenance() + ")"};
}

template <class Op>
TruncatedAdele map(const TruncatedAdele& a, Op op, std::string provenance) {
  std::vector<u64> res(a.size());
  std::vector<bool> bad(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    bad[i] = a.is_bad(i);
    res[i] = bad[i] ? 0 : op(a.residue(i), a.prime(i));
  }
  return {a.window(), a.primes(), std::move(res), std::move(bad), std::move(provenance)};
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<i64> constant_first) : coeffs_(std::move(constant_first)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_highest_first(std::span<const i64> coeffs) {
  return IntPolynomial(std::vector<i64>(coeffs.rbegin(), coeffs.rend()));
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
  std::vector<i64> high_first;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      high_first.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      fail(ErrorKind::Domain, "cannot parse polynomial coefficient '" + item + "'");
    }
  }
  if (high_first.empty()) fail(ErrorKind::Domain, "empty polynomial");
  return from_highest_first(high_first);
}

u64 IntPolynomial::eval_mod(u64 x, u64 p) const {
  u64 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = add_mod(mul_mod(acc, x, p), reduce(*it, p), p);
  return acc;
}

i64 IntPolynomial::eval(i64 x) const {
  i64 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (__builtin_mul_overflow(acc, x, &acc) || __builtin_add_overflow(acc, *it, &acc))
      fail(ErrorKind::Capacity, "polynomial value overflows 64 bits");
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const i64 c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const i64 mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (mag != 1 || i == 0) out += std::to_string(mag);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// TruncatedAdele

TruncatedAdele::TruncatedAdele(PrimeWindow window, std::vector<u64> primes, std::vector<u64> residues,
                               std::vector<bool> bad, std::string provenance)
    : window_(window),
      primes_(std::move(primes)),
      residues_(std::move(residues)),
      bad_(std::move(bad)),
      provenance_(std::move(provenance)) {
  if (residues_.size() != primes_.size() || bad_.size() != primes_.size())
    fail(ErrorKind::Structural, "entry arrays differ in length");
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!bad_[i] && residues_[i] >= primes_[i])
      fail(ErrorKind::Structural, "residue " + std::to_string(residues_[i]) + " not reduced mod " +
                                      std::to_string(primes_[i]));
    if (bad_[i]) residues_[i] = 0;
  }
}

std::vector<u64> TruncatedAdele::bad_primes() const {
  std::vector<u64> out;
  for (std::size_t i = 0; i < primes_.size(); ++i)
    if (bad_[i]) out.push_back(primes_[i]);
  return out;
}

std::optional<u64> TruncatedAdele::at(u64 p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return std::nullopt;
  const auto i = static_cast<std::size_t>(it - primes_.begin());
  if (bad_[i]) return std::nullopt;
  return residues_[i];
}

TruncatedAdele build(PrimeWindow window, const ResidueRule& rule, std::string provenance, std::size_t max_bad) {
  auto primes = primes_in(window);
  std::vector<u64> res(primes.size());
  std::vector<bool> bad(primes.size());
  std::size_t bad_count = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const u64 p = primes[i];
    std::optional<i64> value;
    try {
      value = rule(p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Internal) throw;
      value.reset();
    }
    if (value) {
      res[i] = reduce(*value, p);
    } else {
      bad[i] = true;
      if (++bad_count > max_bad)
        fail(ErrorKind::Structural, provenance + ": more than " + std::to_string(max_bad) + " bad primes in window");
    }
  }
  return {window, std::move(primes), std::move(res), std::move(bad), std::move(provenance)};
}

TruncatedAdele constant_element(PrimeWindow window, i64 c) {
  return build(window, [c](u64) { return std::optional<i64>(c); }, std::to_string(c));
}

TruncatedAdele add(const TruncatedAdele& a, const TruncatedAdele& b) {
  return combine(a, b, [](u64 x, u64 y, u64 p) { return add_mod(x, y, p); }, "+");
}

TruncatedAdele sub(const TruncatedAdele& a, const TruncatedAdele& b) {
  return combine(a, b, [](u64 x, u64 y, u64 p) { return sub_mod(x, y, p); }, "-");
}

TruncatedAdele mul(const TruncatedAdele& a, const TruncatedAdele& b) {
  return combine(a, b, [](u64 x, u64 y, u64 p) { return mul_mod(x, y, p); }, "*");
}

TruncatedAdele negate(const TruncatedAdele& a) {
  return map(a, [](u64 x, u64 p) { return x == 0 ? 0 : p - x; }, "-(" + a.provenance() + ")");
}

TruncatedAdele scalar_mul(i64 c, const TruncatedAdele& a) {
  return map(a, [c](u64 x, u64 p) { return mul_mod(reduce(c, p), x, p); },
             std::to_string(c) + "*(" + a.provenance() + ")");
}

TruncatedAdele eval_poly(const IntPolynomial& f, const TruncatedAdele& a) {
  return map(a, [&f](u64 x, u64 p) { return f.eval_mod(x, p); }, f.to_string() + " at (" + a.provenance() + ")");
}

std::vector<u64> nonzero_positions(const TruncatedAdele& a) {
  std::vector<u64> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a.is_bad(i) && a.residue(i) != 0) out.push_back(a.prime(i));
  return out;
}

}  // namespace amod
