#pragma once

#include <stdexcept>
#include <string>

namespace amod {

enum class ErrorKind {
  Domain,      // precondition on an argument violated
  BadPrime,    // prime divides a numerator/denominator that must be a unit
  Pole,        // exact value has p in its denominator
  Capacity,    // sieve ceiling, width contract or combinatorial guardrail
  Structural,  // window mismatch, too many bad coordinates, malformed input
  Internal,    // two independent computations disagree
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::BadPrime: return "bad-prime";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Structural: return "structural";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace amod
