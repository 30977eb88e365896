#pragma once

// Flat key=value run configuration. Lines starting with '#' are comments.
//
//   lo=7
//   hi=2000
//   q=2,3,5
//   curves=1,0;-1,1
//   dmax=2
//   hmax=3
//   max_exceptions=3
//   format=csv
//   out=report.csv

#include <string>
#include <vector>

#include "amod/adele.hpp"

namespace amod {

struct RunConfig {
  u64 lo = 2;
  u64 hi = 1000;
  std::vector<std::string> q_list;
  std::vector<std::string> curves;  // "a,b"
  ScanBounds bounds;
  std::string format = "csv";
  std::string out;  // empty: stdout

  static RunConfig parse(const std::string& text);
  static RunConfig load(const std::string& path);
  std::string to_string() const;
  // Domain / Capacity errors for values outside the module guardrails.
  void validate() const;

  bool operator==(const RunConfig&) const = default;
};

}  // namespace amod
