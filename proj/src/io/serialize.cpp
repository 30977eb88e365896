#include "amod/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace amod {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

template <class T>
std::string opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

// Quotes a CSV field only when needed.
std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

Json window_json(const PrimeWindow& w) { return {{"lo", w.lo}, {"hi", w.hi}}; }

Json bounds_json(const ScanBounds& b) {
  return {{"max_degree", b.max_degree}, {"max_height", b.max_height}, {"max_exceptions", b.max_exceptions}};
}

std::string big(const BigInt& x) { return x.str(); }

}  // namespace

Json to_json(const TruncatedAdele& a) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json e = {{"prime", a.prime(i)}};
    e["residue"] = a.is_bad(i) ? Json(nullptr) : Json(a.residue(i));
    e["flag"] = a.is_bad(i) ? "bad" : "ok";
    entries.push_back(std::move(e));
  }
  return {{"window", window_json(a.window())}, {"entries", std::move(entries)}, {"provenance", a.provenance()}};
}

TruncatedAdele adele_from_json(const Json& j) {
  try {
    const PrimeWindow w(j.at("window").at("lo").get<u64>(), j.at("window").at("hi").get<u64>());
    std::vector<u64> primes, residues;
    std::vector<bool> bad;
    for (const auto& e : j.at("entries")) {
      primes.push_back(e.at("prime").get<u64>());
      const std::string flag = e.at("flag").get<std::string>();
      if (flag != "ok" && flag != "bad") fail(ErrorKind::Structural, "unknown flag '" + flag + "'");
      bad.push_back(flag == "bad");
      residues.push_back(flag == "bad" ? 0 : e.at("residue").get<u64>());
    }
    return {w, std::move(primes), std::move(residues), std::move(bad), j.value("provenance", std::string())};
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Structural, std::string("malformed element JSON: ") + e.what());
  }
}

void write_csv(std::ostream& out, const TruncatedAdele& a) {
  out << "prime,residue,flag\n";
  for (std::size_t i = 0; i < a.size(); ++i)
    out << a.prime(i) << ',' << (a.is_bad(i) ? std::string() : std::to_string(a.residue(i))) << ','
        << (a.is_bad(i) ? "bad" : "ok") << '\n';
}

TruncatedAdele adele_from_csv(std::istream& in, std::string provenance) {
  std::string line;
  if (!std::getline(in, line) || line != "prime,residue,flag") fail(ErrorKind::Structural, "missing CSV header");
  std::vector<u64> primes, residues;
  std::vector<bool> bad;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string p, r, f;
    if (!std::getline(row, p, ',') || !std::getline(row, r, ',') || !std::getline(row, f))
      fail(ErrorKind::Structural, "bad CSV row: " + line);
    try {
      primes.push_back(std::stoull(p));
      bad.push_back(f == "bad");
      if (f != "ok" && f != "bad") fail(ErrorKind::Structural, "unknown flag in row: " + line);
      residues.push_back(f == "bad" ? 0 : std::stoull(r));
    } catch (const std::logic_error&) {
      fail(ErrorKind::Structural, "bad CSV row: " + line);
    }
  }
  if (primes.empty()) fail(ErrorKind::Structural, "CSV element has no rows");
  return {PrimeWindow(primes.front(), primes.back()), std::move(primes), std::move(residues), std::move(bad),
          std::move(provenance)};
}

TruncatedAdele load_adele(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Domain, "cannot open " + path);
  in >> std::ws;
  if (in.peek() == '{') {
    Json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::Structural, path + ": " + e.what());
    }
    return adele_from_json(j);
  }
  return adele_from_csv(in, path);
}

void write_csv(std::ostream& out, const CongruenceSweep& s) {
  out << "q,p,ord,index,lhs,rhs,verdict,skip_reason\n";
  for (const auto& r : s.rows)
    out << field(r.q) << ',' << r.p << ',' << opt(r.ord) << ',' << opt(r.index) << ',' << opt(r.lhs) << ','
        << opt(r.rhs) << ',' << to_string(r.verdict) << ',' << field(r.skip_reason) << '\n';
}

Json to_json(const CongruenceSweep& s) {
  Json rows = Json::array();
  auto o = [](const std::optional<u64>& v) { return v ? Json(*v) : Json(nullptr); };
  for (const auto& r : s.rows)
    rows.push_back({{"q", r.q},
                    {"p", r.p},
                    {"ord", o(r.ord)},
                    {"index", o(r.index)},
                    {"lhs", o(r.lhs)},
                    {"rhs", o(r.rhs)},
                    {"verdict", to_string(r.verdict)},
                    {"skip_reason", r.skip_reason}});
  return {{"sweep", s.name},
          {"ok", s.count(Verdict::Ok)},
          {"violations", s.violations()},
          {"skips", s.count(Verdict::Skip)},
          {"rows", std::move(rows)}};
}

void write_trace_csv(std::ostream& out, const ShortWeierstrassCurve& E, PrimeWindow window,
                     const std::vector<TraceRecord>& traces) {
  out << "p,ap,theta,flag\n";
  std::size_t k = 0;
  for (u64 p : primes_in(window)) {
    if (k < traces.size() && traces[k].p == p) {
      out << p << ',' << traces[k].ap << ',' << num(traces[k].theta) << ",ok\n";
      ++k;
    } else {
      out << p << ",,," << (good_reduction(E, p) ? "missing" : "bad") << '\n';
    }
  }
}

Json to_json(const SatoTateHistogram& h) {
  Json bins = Json::array();
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    bins.push_back({{"lo", h.edges[i]},
                    {"hi", h.edges[i + 1]},
                    {"count", h.counts[i]},
                    {"mass", h.mass[i]},
                    {"semicircle", h.semicircle[i]},
                    {"cm", h.cm[i]}});
  return {{"X", h.X},
          {"total", h.total},
          {"bins", std::move(bins)},
          {"tv_semicircle", h.tv_semicircle},
          {"tv_cm", h.tv_cm},
          {"closer", h.closer}};
}

void write_csv(std::ostream& out, const SatoTateHistogram& h) {
  out << "lo,hi,count,mass,semicircle,cm\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    out << num(h.edges[i]) << ',' << num(h.edges[i + 1]) << ',' << h.counts[i] << ',' << num(h.mass[i]) << ','
        << num(h.semicircle[i]) << ',' << num(h.cm[i]) << '\n';
}

Json to_json(const RelationScanReport& r) {
  Json hits = Json::array();
  for (const auto& h : r.hits)
    hits.push_back({{"poly", h.poly.to_string()}, {"coeffs", h.poly.coeffs()}, {"exceptions", h.exceptions}});
  return {{"window", window_json(r.window)},
          {"bounds", bounds_json(r.bounds)},
          {"candidates", r.candidates},
          {"hits", std::move(hits)}};
}

Json to_json(const BivariateScanReport& r) {
  Json hits = Json::array();
  for (const auto& h : r.hits)
    hits.push_back({{"poly", h.poly.to_string()}, {"coeffs", h.poly.coeffs()}, {"exceptions", h.exceptions}});
  return {{"window", window_json(r.window)},
          {"bounds", bounds_json(r.bounds)},
          {"candidates", r.candidates},
          {"hits", std::move(hits)}};
}

Json to_json(const CriterionAuditReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json ms = Json::array();
  for (const auto& m : r.measurements) ms.push_back({{"series", m.series}, {"X", m.X}, {"value", m.value}});
  return {{"criterion", r.criterion},
          {"window", window_json(r.window)},
          {"params", std::move(params)},
          {"measurements", std::move(ms)},
          {"verdict", to_string(r.verdict)}};
}

Json to_json(const EquidistReport& r) {
  return {{"X", r.X},   {"alpha", r.alpha}, {"beta", r.beta}, {"count", r.count}, {"prime_count", r.prime_count},
          {"ratio", r.ratio}};
}

Json to_json(const PhiEllReport& r) {
  Json fs = Json::array();
  for (const auto& f : r.factors)
    fs.push_back({{"p", big(f.p)},
                  {"multiplicity", f.multiplicity},
                  {"t_p", big(f.t_p)},
                  {"contra_mod_p", big(f.contra_mod)}});
  return {{"u", r.u},
          {"v", r.v},
          {"ell", r.ell},
          {"a", r.a},
          {"b", r.b},
          {"phi", big(r.phi)},
          {"factors", std::move(fs)},
          {"complete", r.complete},
          {"cofactor", big(r.cofactor)},
          {"all_one_mod_ell", r.all_one_mod_ell},
          {"squarefree", r.squarefree},
          {"product_matches", r.product_matches},
          {"diff_congruence", r.diff_congruence},
          {"T_ell", big(r.T_ell)}};
}

}  // namespace amod
