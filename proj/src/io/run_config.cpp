#include "amod/run_config.hpp"

#include <fstream>
#include <sstream>

#include "amod/ecred.hpp"

namespace amod {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? std::string(1, sep) : "") + items[i];
  return out;
}

u64 to_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const unsigned long long x = std::stoull(v, &used);
    if (used != v.size() || v.front() == '-') throw std::invalid_argument(v);
    return x;
  } catch (const std::logic_error&) {
    fail(ErrorKind::Domain, "config: " + key + " expects a nonnegative integer, got '" + v + "'");
  }
}

}  // namespace

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::Domain, "config line " + std::to_string(lineno) + ": missing '='");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "lo") c.lo = to_u64(key, value);
    else if (key == "hi") c.hi = to_u64(key, value);
    else if (key == "q") c.q_list = split(value, ',');
    else if (key == "curves") c.curves = split(value, ';');
    else if (key == "dmax") c.bounds.max_degree = static_cast<int>(to_u64(key, value));
    else if (key == "hmax") c.bounds.max_height = static_cast<i64>(to_u64(key, value));
    else if (key == "max_exceptions") c.bounds.max_exceptions = to_u64(key, value);
    else if (key == "format") c.format = value;
    else if (key == "out") c.out = value;
    else fail(ErrorKind::Domain, "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Domain, "cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string RunConfig::to_string() const {
  std::ostringstream o;
  o << "lo=" << lo << '\n'
    << "hi=" << hi << '\n'
    << "q=" << join(q_list, ',') << '\n'
    << "curves=" << join(curves, ';') << '\n'
    << "dmax=" << bounds.max_degree << '\n'
    << "hmax=" << bounds.max_height << '\n'
    << "max_exceptions=" << bounds.max_exceptions << '\n'
    << "format=" << format << '\n'
    << "out=" << out << '\n';
  return o.str();
}

void RunConfig::validate() const {
  if (hi < lo) fail(ErrorKind::Domain, "config: hi < lo");
  if (hi > kSweepCeiling) fail(ErrorKind::Capacity, "config: hi above the sweep ceiling");
  if (format != "csv" && format != "json") fail(ErrorKind::Domain, "config: format must be csv or json");
  if (bounds.max_degree < 1 || bounds.max_degree > kMaxScanDegree)
    fail(ErrorKind::Capacity, "config: dmax outside [1, " + std::to_string(kMaxScanDegree) + "]");
  if (bounds.max_height < 1 || bounds.max_height > kMaxScanHeight)
    fail(ErrorKind::Capacity, "config: hmax outside [1, " + std::to_string(kMaxScanHeight) + "]");
  for (const auto& q : q_list) {
    if (q.find_first_of("\n=") != std::string::npos || q.empty()) fail(ErrorKind::Domain, "config: bad q entry");
    ReducedRational::parse(q);
  }
  for (const auto& e : curves) ShortWeierstrassCurve::parse(e);
  if (out.find('\n') != std::string::npos) fail(ErrorKind::Domain, "config: bad out path");
}

}  // namespace amod
