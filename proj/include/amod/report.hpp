#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amod/core.hpp"

namespace amod {

enum class Verdict { Ok, Violation, Skip };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::Violation: return "violation";
    case Verdict::Skip: return "skip";
  }
  return "?";
}

// One prime's outcome in a congruence sweep. ord/index are filled by the
// q-sequence verifiers; lhs/rhs are absent only when the row is skipped
// before either side could be formed.
struct CongruenceReport {
  std::string q;  // parameter label ("2", "3/2"); empty when not applicable
  u64 p = 0;
  std::optional<u64> ord;
  std::optional<u64> index;
  std::optional<u64> lhs;
  std::optional<u64> rhs;
  Verdict verdict = Verdict::Skip;
  std::string skip_reason;
};

inline CongruenceReport skipped(std::string q, u64 p, std::string reason) {
  CongruenceReport r;
  r.q = std::move(q);
  r.p = p;
  r.verdict = Verdict::Skip;
  r.skip_reason = std::move(reason);
  return r;
}

inline void settle(CongruenceReport& r) { r.verdict = (*r.lhs == *r.rhs) ? Verdict::Ok : Verdict::Violation; }

// Rows of one sweep in ascending prime order.
struct CongruenceSweep {
  std::string name;
  std::vector<CongruenceReport> rows;

  std::size_t count(Verdict v) const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.verdict == v;
    return n;
  }
  std::size_t violations() const { return count(Verdict::Violation); }
};

}  // namespace amod
