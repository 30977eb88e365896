#pragma once

// Finite-window stand-ins for elements of the ring prod Z/pZ / (+) Z/pZ.
//
// A TruncatedAdele stores one residue per prime of its window. Coordinates the
// defining rule cannot produce (poles, bad reduction, p dividing a parameter)
// are flagged bad; since the ring ignores finitely many coordinates, the bad
// set is recorded rather than treated as an error, up to a cap.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amod/core.hpp"

namespace amod {

// Integer polynomial, constant term first; trailing zeros are dropped so the
// zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<i64> constant_first);

  static IntPolynomial from_highest_first(std::span<const i64> coeffs);
  // "c_d,...,c_1,c_0", highest degree first.
  static IntPolynomial parse(const std::string& text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<i64>& coeffs() const { return coeffs_; }
  i64 coeff(int i) const { return i < 0 || i > degree() ? 0 : coeffs_[static_cast<std::size_t>(i)]; }
  i64 leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  u64 eval_mod(u64 x, u64 p) const;
  // Exact value; Capacity error if it leaves 64 bits.
  i64 eval(i64 x) const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<i64> coeffs_;
};

class TruncatedAdele {
 public:
  TruncatedAdele() = default;
  // Validates that `primes` are exactly the primes of `window` and residues
  // are reduced. Residues at bad positions are stored as 0.
  TruncatedAdele(PrimeWindow window, std::vector<u64> primes, std::vector<u64> residues,
                 std::vector<bool> bad, std::string provenance);

  const PrimeWindow& window() const { return window_; }
  std::size_t size() const { return primes_.size(); }
  const std::vector<u64>& primes() const { return primes_; }
  const std::vector<u64>& residues() const { return residues_; }
  u64 prime(std::size_t i) const { return primes_[i]; }
  u64 residue(std::size_t i) const { return residues_[i]; }
  bool is_bad(std::size_t i) const { return bad_[i]; }
  std::vector<u64> bad_primes() const;
  std::optional<u64> at(u64 p) const;  // nullopt for bad or out-of-window p

  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string text) { provenance_ = std::move(text); }

 private:
  PrimeWindow window_;
  std::vector<u64> primes_;
  std::vector<u64> residues_;
  std::vector<bool> bad_;
  std::string provenance_;
};

inline constexpr std::size_t kDefaultMaxBad = 32;

// Per-prime rule; nullopt (or a thrown amod::Error) marks the prime bad.
// The returned integer is reduced mod p by build().
using ResidueRule = std::function<std::optional<i64>(u64 p)>;

TruncatedAdele build(PrimeWindow window, const ResidueRule& rule, std::string provenance,
                     std::size_t max_bad = kDefaultMaxBad);

TruncatedAdele constant_element(PrimeWindow window, i64 c);

TruncatedAdele add(const TruncatedAdele& a, const TruncatedAdele& b);
TruncatedAdele sub(const TruncatedAdele& a, const TruncatedAdele& b);
TruncatedAdele mul(const TruncatedAdele& a, const TruncatedAdele& b);
TruncatedAdele negate(const TruncatedAdele& a);
TruncatedAdele scalar_mul(i64 c, const TruncatedAdele& a);

inline TruncatedAdele operator+(const TruncatedAdele& a, const TruncatedAdele& b) { return add(a, b); }
inline TruncatedAdele operator-(const TruncatedAdele& a, const TruncatedAdele& b) { return sub(a, b); }
inline TruncatedAdele operator*(const TruncatedAdele& a, const TruncatedAdele& b) { return mul(a, b); }
inline TruncatedAdele operator-(const TruncatedAdele& a) { return negate(a); }
inline TruncatedAdele operator*(i64 c, const TruncatedAdele& a) { return scalar_mul(c, a); }

TruncatedAdele eval_poly(const IntPolynomial& f, const TruncatedAdele& a);

// Non-bad primes with nonzero residue, ascending.
std::vector<u64> nonzero_positions(const TruncatedAdele& a);
inline bool is_zero_element(const TruncatedAdele& a) { return nonzero_positions(a).empty(); }

// ---------------------------------------------------------------------------
// Relation scanning

inline constexpr int kMaxScanDegree = 6;
inline constexpr i64 kMaxScanHeight = 64;
inline constexpr int kMaxScanTotalDegree2 = 3;
inline constexpr u64 kMaxScanCandidates = 200'000'000;

struct ScanBounds {
  int max_degree = 2;
  i64 max_height = 3;
  std::size_t max_exceptions = 3;

  bool operator==(const ScanBounds&) const = default;
};

struct RelationHit {
  IntPolynomial poly;
  std::vector<u64> exceptions;  // non-bad primes where poly(a) != 0
};

struct RelationScanReport {
  PrimeWindow window;
  ScanBounds bounds;
  u64 candidates = 0;
  std::vector<RelationHit> hits;
};

// Exhaustive search over nonzero f with deg f <= max_degree, coefficients in
// [-h, h], content 1 and positive leading coefficient. Candidates are visited
// by degree, then leading coefficient, then lower coefficients from the top
// down in the order 0, -1, 1, -2, 2, ...; hits are reported in that order.
RelationScanReport relation_scan(const TruncatedAdele& a, ScanBounds bounds);

// Bivariate polynomial over monomials x^i y^j (i + j <= total degree) in
// ascending degree-lexicographic order with x > y: 1, y, x, y^2, xy, x^2, y^3, ...
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  BivariatePolynomial(int total_degree, std::vector<i64> coeffs);

  static std::vector<std::pair<int, int>> monomials(int total_degree);

  int total_degree() const { return total_degree_; }
  const std::vector<i64>& coeffs() const { return coeffs_; }
  i64 coeff(int i, int j) const;
  u64 eval_mod(u64 x, u64 y, u64 p) const;
  std::string to_string() const;

 private:
  int total_degree_ = 0;
  std::vector<i64> coeffs_;
};

struct BivariateHit {
  BivariatePolynomial poly;
  std::vector<u64> exceptions;
};

struct BivariateScanReport {
  PrimeWindow window;
  ScanBounds bounds;  // max_degree is the total degree
  u64 candidates = 0;
  std::vector<BivariateHit> hits;
};

// Same contract as relation_scan, over F(x, y) with total degree <= 3; the
// leading coefficient is the one on the last nonzero monomial.
BivariateScanReport relation_scan2(const TruncatedAdele& a, const TruncatedAdele& b, ScanBounds bounds);

}  // namespace amod
