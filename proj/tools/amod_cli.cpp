// amod: sweeps, element builders, relation scans and audits from the shell.
//
// Exit codes: 0 ok, 1 violation / inconsistent audit, 2 usage or input
// error, 3 capacity or guardrail error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "amod/classnum.hpp"
#include "amod/ecred.hpp"
#include "amod/experiments.hpp"
#include "amod/qpoly.hpp"
#include "amod/run_config.hpp"
#include "amod/serialize.hpp"
#include "amod/specialnums.hpp"

using namespace amod;

namespace {

constexpr int kExitOk = 0, kExitViolation = 1, kExitUsage = 2, kExitCapacity = 3;

struct Options {
  std::string config;
  u64 lo = 2, hi = 1000;
  std::string format, out;
  std::vector<std::string> q{"2"};
  std::string curve = "1,0";
  unsigned hist = 0;

  std::string name;
  unsigned k = 2;
  i64 x = 0;
  std::string path = "A";
  std::string alpha = "2";

  std::string in, in2;
  int dmax = 2;
  i64 hmax = 3;
  std::size_t max_exceptions = 3;

  std::vector<i64> b;
  u64 min_hits = 3;
  std::string values = "floorlog";
  std::string set = "all";
  std::string bfun = "floorsqrt";
  double eps = 0.6, eps_prime = 0.8;
  u64 r = 3, c = 1, N = 1, X = 10000;

  i64 target = 0;
  std::string rat = "1";
  u64 u = 2, v = 1, ell = 5;

  std::string f;
  double lo_frac = 0.0, hi_frac = 1.0, theta = 0.5;
  u64 n = 100;
};

Options opt;
CLI::App* active = nullptr;

bool given(const char* name) {
  const auto* o = active ? active->get_option_no_throw(name) : nullptr;
  return o && o->count() > 0;
}

// Config values fill any option the command line left unset.
void apply_config() {
  if (opt.config.empty()) return;
  const auto cfg = RunConfig::load(opt.config);
  if (!given("--lo")) opt.lo = cfg.lo;
  if (!given("--hi")) opt.hi = cfg.hi;
  if (!given("--q") && !cfg.q_list.empty()) opt.q = cfg.q_list;
  if (!given("--curve") && !cfg.curves.empty()) opt.curve = cfg.curves.front();
  if (!given("--dmax")) opt.dmax = cfg.bounds.max_degree;
  if (!given("--hmax")) opt.hmax = cfg.bounds.max_height;
  if (!given("--max-exceptions")) opt.max_exceptions = cfg.bounds.max_exceptions;
  if (!given("--format")) opt.format = cfg.format;
  if (!given("--out")) opt.out = cfg.out;
}

bool json_output() {
  if (!opt.format.empty()) return opt.format == "json";
  return opt.out.size() >= 5 && opt.out.compare(opt.out.size() - 5, 5, ".json") == 0;
}

void emit(const std::string& text) {
  if (opt.out.empty() || opt.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) fail(ErrorKind::Domain, "cannot write " + opt.out);
  f << text;
}

void emit(const Json& j) { emit(j.dump(2) + "\n"); }

PrimeWindow window() { return PrimeWindow(opt.lo, opt.hi); }

ReducedRational parse_q(const std::string& s) { return ReducedRational::parse(s); }

std::pair<i64, i64> parse_rat(const std::string& s) {
  const auto r = ReducedRational::parse(s);
  return {r.num(), r.den()};
}

TruncatedAdele make_element(const std::string& name) {
  const auto w = window();
  if (name == "fib") return fib_element(parse_q(opt.q.front()), w);
  if (name == "bressoud") return bressoud_element(parse_q(opt.q.front()), w);
  if (name == "zA") return z_A(opt.k, w);
  if (name == "scriptB") return script_B(w);
  if (name == "scriptE") return script_E(w);
  if (name == "gA") {
    auto [a, b] = g_A(opt.k, opt.x, w);
    if (opt.path == "A") return a;
    if (opt.path == "B") return b;
    fail(ErrorKind::Domain, "--path must be A or B");
  }
  if (name == "alphaE") return alpha_E(ShortWeierstrassCurve::parse(opt.curve), w);
  if (name == "floorlog") return floor_log_element(w);
  if (name == "floorsqrt") return floor_sqrt_element(w);
  if (name == "index") return index_element(parse_q(opt.q.front()), w);
  if (name == "tpi") return t_pi_element(w);
  if (name == "pip") return pi_p_element(w);
  if (name == "logA") return log_element(parse_q(opt.alpha), w);
  fail(ErrorKind::Domain, "unknown element '" + name + "'");
}

int sweep_rows(std::vector<CongruenceSweep> sweeps) {
  std::size_t violations = 0;
  if (json_output()) {
    Json all = Json::array();
    for (const auto& s : sweeps) {
      violations += s.violations();
      all.push_back(to_json(s));
    }
    emit(sweeps.size() == 1 ? all.front() : all);
  } else {
    CongruenceSweep merged{sweeps.front().name, {}};
    for (auto& s : sweeps) {
      violations += s.violations();
      merged.rows.insert(merged.rows.end(), s.rows.begin(), s.rows.end());
    }
    std::ostringstream o;
    write_csv(o, merged);
    emit(o.str());
  }
  return violations ? kExitViolation : kExitOk;
}

int run_sweep(const std::string& kind) {
  std::vector<CongruenceSweep> sweeps;
  if (kind == "fib" || kind == "bressoud") {
    for (const auto& q : opt.q)
      sweeps.push_back(kind == "fib" ? sweep_af(parse_q(q), window()) : sweep_bressoud(parse_q(q), window()));
  } else if (kind == "bernoulli") {
    sweeps.push_back(sweep_cauchy(window()));
  } else {
    sweeps.push_back(sweep_carlitz(window()));
  }
  return sweep_rows(std::move(sweeps));
}

int run_sweep_ec() {
  const auto E = ShortWeierstrassCurve::parse(opt.curve);
  const auto traces = trace_sweep(E, window());
  if (json_output()) {
    Json rows = Json::array();
    for (const auto& t : traces) rows.push_back({{"p", t.p}, {"ap", t.ap}, {"theta", t.theta}});
    Json j = {{"curve", E.to_string()}, {"window", {{"lo", opt.lo}, {"hi", opt.hi}}}, {"traces", rows}};
    if (opt.hist) j["histogram"] = to_json(sato_tate_histogram(traces, opt.hi, opt.hist));
    emit(j);
  } else {
    std::ostringstream o;
    if (opt.hist)
      write_csv(o, sato_tate_histogram(traces, opt.hi, opt.hist));
    else
      write_trace_csv(o, E, window(), traces);
    emit(o.str());
  }
  return kExitOk;
}

int run_element() {
  const auto a = make_element(opt.name);
  if (json_output()) {
    emit(to_json(a));
  } else {
    std::ostringstream o;
    write_csv(o, a);
    emit(o.str());
  }
  return kExitOk;
}

ScanBounds bounds() { return {opt.dmax, opt.hmax, opt.max_exceptions}; }

int run_scan() {
  const auto a = load_adele(opt.in);
  if (opt.in2.empty()) {
    const auto rep = relation_scan(a, bounds());
    if (json_output()) {
      emit(to_json(rep));
    } else {
      std::ostringstream o;
      o << "poly,exceptions\n";
      for (const auto& h : rep.hits) {
        std::string ex;
        for (u64 p : h.exceptions) ex += (ex.empty() ? "" : " ") + std::to_string(p);
        o << h.poly.to_string() << ',' << ex << '\n';
      }
      emit(o.str());
    }
    return kExitOk;
  }
  const auto rep = relation_scan2(a, load_adele(opt.in2), bounds());
  if (json_output()) {
    emit(to_json(rep));
  } else {
    std::ostringstream o;
    o << "poly,exceptions\n";
    for (const auto& h : rep.hits) {
      std::string ex;
      for (u64 p : h.exceptions) ex += (ex.empty() ? "" : " ") + std::to_string(p);
      o << '"' << h.poly.to_string() << "\"," << ex << '\n';
    }
    emit(o.str());
  }
  return kExitOk;
}

int emit_audit(const CriterionAuditReport& rep) {
  if (json_output()) {
    emit(to_json(rep));
  } else {
    std::ostringstream o;
    o << "criterion,series,X,value,verdict\n";
    for (const auto& m : rep.measurements)
      o << rep.criterion << ',' << m.series << ',' << m.X << ',' << m.value << ',' << to_string(rep.verdict) << '\n';
    emit(o.str());
  }
  return rep.verdict == AuditVerdict::Inconsistent ? kExitViolation : kExitOk;
}

PrimeValues audit_values(const std::string& name, u64 X) {
  if (name == "floorlog") return floor_log_values(X);
  if (name == "floorsqrt") return floor_sqrt_values(X);
  if (name.rfind("const:", 0) == 0) return constant_values(X, std::stoll(name.substr(6)));
  fail(ErrorKind::Domain, "--values must be floorlog, floorsqrt or const:C");
}

int run_audit(const std::string& kind) {
  if (kind == "af") {
    const auto a = opt.in.empty() ? make_element(opt.name) : load_adele(opt.in);
    return emit_audit(af_criterion_audit(a, opt.b, opt.min_hits));
  }
  if (kind == "growth") {
    const u64 X = given("--X") ? opt.X : 100000;
    return emit_audit(growth_audit(audit_values(opt.values, X), static_cast<unsigned>(opt.dmax)));
  }
  if (kind == "lz1") return emit_audit(lz1_partition_count(parse_q(opt.q.front()), opt.r, opt.c, opt.N, opt.X));

  PrimePredicate S;
  if (opt.set == "all") S = [](u64) { return true; };
  else if (opt.set == "3mod4") S = [](u64 p) { return p % 4 == 3; };
  else if (opt.set == "1mod4") S = [](u64 p) { return p % 4 == 1; };
  else fail(ErrorKind::Domain, "--set must be all, 3mod4 or 1mod4");
  PrimeFunction b;
  if (opt.bfun == "floorsqrt") b = [](u64 p) { return static_cast<double>(isqrt(p)); };
  else if (opt.bfun == "floorlog") b = [](u64 p) { return std::floor(std::log(static_cast<double>(p))); };
  else if (opt.bfun == "classno")
    b = [](u64 p) -> double {
      const i64 D = p % 4 == 3 ? -static_cast<i64>(p) : -4 * static_cast<i64>(p);
      if (!FundamentalDiscriminant::is_fundamental(D)) return 0.0;
      return static_cast<double>(class_number_forms(FundamentalDiscriminant(D)));
    };
  else fail(ErrorKind::Domain, "--b-fun must be floorsqrt, floorlog or classno");
  return emit_audit(lz2_audit(S, b, opt.eps, opt.eps_prime, opt.hi));
}

int run_log(const std::string& kind) {
  if (kind == "wieferich") {
    const auto primes = wieferich_scan(parse_q(opt.alpha), opt.target, opt.hi);
    if (json_output()) {
      emit(Json{{"alpha", opt.alpha}, {"target", opt.target}, {"X", opt.hi}, {"primes", primes}});
    } else {
      std::ostringstream o;
      o << "p\n";
      for (u64 p : primes) o << p << '\n';
      emit(o.str());
    }
    return kExitOk;
  }
  if (kind == "disprove") {
    const auto [a, b] = parse_rat(opt.rat);
    const auto res = log_rational_disproof(parse_q(opt.alpha), a, b, opt.hi);
    if (json_output()) {
      emit(Json{{"alpha", opt.alpha},
                {"rat", opt.rat},
                {"X", opt.hi},
                {"witness", res.witness ? Json(*res.witness) : Json(nullptr)},
                {"checked", res.checked},
                {"status", res.witness ? "witness" : "exhausted"}});
    } else {
      std::ostringstream o;
      o << "alpha,rat,X,witness,checked,status\n"
        << opt.alpha << ',' << opt.rat << ',' << opt.hi << ',' << (res.witness ? std::to_string(*res.witness) : "")
        << ',' << res.checked << ',' << (res.witness ? "witness" : "exhausted") << '\n';
      emit(o.str());
    }
    return kExitOk;
  }
  const auto [a, b] = parse_rat(opt.rat);
  const auto rep = phi_ell_analysis(opt.u, opt.v, opt.ell, a, b);
  if (json_output()) {
    emit(to_json(rep));
  } else {
    std::ostringstream o;
    o << "p,multiplicity,t_p,contra_mod_p\n";
    for (const auto& f : rep.factors) o << f.p << ',' << f.multiplicity << ',' << f.t_p << ',' << f.contra_mod << '\n';
    emit(o.str());
  }
  const bool ok = rep.all_one_mod_ell && rep.product_matches && rep.diff_congruence;
  return ok ? kExitOk : kExitViolation;
}

int run_exp(const std::string& kind) {
  const auto f = IntPolynomial::parse(opt.f);
  if (kind == "equidist") {
    const auto rep = root_equidist(f, opt.hi, opt.lo_frac, opt.hi_frac);
    if (json_output()) {
      emit(to_json(rep));
    } else {
      std::ostringstream o;
      o << "X,alpha,beta,count,prime_count,ratio\n"
        << rep.X << ',' << rep.alpha << ',' << rep.beta << ',' << rep.count << ',' << rep.prime_count << ','
        << rep.ratio << '\n';
      emit(o.str());
    }
    return kExitOk;
  }
  const auto ns = smooth_scan(f, opt.theta, opt.n);
  if (json_output()) {
    emit(Json{{"f", f.to_string()}, {"theta", opt.theta}, {"N", opt.n}, {"n", ns}});
  } else {
    std::ostringstream o;
    o << "n\n";
    for (u64 n : ns) o << n << '\n';
    emit(o.str());
  }
  return kExitOk;
}

void add_io(CLI::App* s, bool with_window = true) {
  s->add_option("--config", opt.config, "flat key=value run configuration");
  s->add_option("--format", opt.format, "csv or json (default: json if --out ends in .json, else csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  s->add_option("--out", opt.out, "output file (default stdout)");
  if (with_window) {
    s->add_option("--lo", opt.lo, "window lower end");
    s->add_option("--hi", opt.hi, "window upper end");
  }
}

void add_element_params(CLI::App* s) {
  s->add_option("--q", opt.q, "q parameter(s), integer or u/v")->delimiter(',');
  s->add_option("--k", opt.k, "index k for zA / gA");
  s->add_option("--x", opt.x, "argument x for gA");
  s->add_option("--path", opt.path, "gA evaluation path: A (Gregory) or B (Fermat quotients)");
  s->add_option("--curve", opt.curve, "curve a,b");
  s->add_option("--alpha", opt.alpha, "argument of logA");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amod: truncated residue vectors over prime windows"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* sweep = app.add_subcommand("sweep", "congruence sweeps and trace tables")->require_subcommand(1);
  for (const char* kind : {"fib", "bressoud", "bernoulli", "euler"}) {
    auto* s = sweep->add_subcommand(kind, std::string("sweep the ") + kind + " congruence");
    add_io(s);
    if (std::string(kind) == "fib" || std::string(kind) == "bressoud")
      s->add_option("--q", opt.q, "q values, comma separated")->delimiter(',');
    s->callback([s, kind, &action] {
      active = s;
      action = [kind] { return run_sweep(kind); };
    });
  }
  {
    auto* s = sweep->add_subcommand("ec", "Frobenius traces and Sato-Tate histogram");
    add_io(s);
    s->add_option("--curve", opt.curve, "curve a,b for y^2 = x^3 + ax + b");
    s->add_option("--hist", opt.hist, "histogram bins (>= 4); emits the histogram instead of traces in CSV mode");
    s->callback([s, &action] {
      active = s;
      action = run_sweep_ec;
    });
  }

  auto* element = app.add_subcommand("element", "residue vectors")->require_subcommand(1);
  {
    auto* s = element->add_subcommand("build", "build an element");
    add_io(s);
    s->add_option("name", opt.name,
                  "fib, bressoud, zA, scriptB, scriptE, gA, alphaE, floorlog, floorsqrt, index, tpi, pip, logA")
        ->required();
    add_element_params(s);
    s->callback([s, &action] {
      active = s;
      action = run_element;
    });
  }

  auto* scan = app.add_subcommand("scan", "polynomial relation search")->require_subcommand(1);
  {
    auto* s = scan->add_subcommand("relation", "exhaustive integer relation scan");
    add_io(s, false);
    s->add_option("--in", opt.in, "element file (JSON or CSV)")->required();
    s->add_option("--in2", opt.in2, "second element for a bivariate scan");
    s->add_option("--dmax", opt.dmax, "max degree (total degree when bivariate)");
    s->add_option("--hmax", opt.hmax, "max coefficient height");
    s->add_option("--max-exceptions", opt.max_exceptions, "tolerated exceptional primes");
    s->callback([s, &action] {
      active = s;
      action = run_scan;
    });
  }

  auto* audit = app.add_subcommand("audit", "finite-window criterion audits")->require_subcommand(1);
  {
    auto* s = audit->add_subcommand("af", "count primes with a_p = b_n mod p");
    add_io(s);
    s->add_option("--in", opt.in, "element file");
    s->add_option("--element", opt.name, "element name, built over --lo/--hi when --in is absent");
    add_element_params(s);
    s->add_option("--b", opt.b, "strictly increasing b_n, comma separated")->delimiter(',')->required();
    s->add_option("--min-hits", opt.min_hits, "required hits per term");
    s->callback([s, &action] {
      active = s;
      action = [] { return run_audit("af"); };
    });
  }
  {
    auto* s = audit->add_subcommand("growth", "a_p -> infinity and a_p^d = o(p)");
    add_io(s, false);
    s->add_option("--values", opt.values, "floorlog, floorsqrt or const:C");
    s->add_option("--dmax", opt.dmax, "largest exponent d");
    s->add_option("--X", opt.X, "largest prime considered (default 100000)");
    s->callback([s, &action] {
      active = s;
      action = [] { return run_audit("growth"); };
    });
  }
  {
    auto* s = audit->add_subcommand("lz1", "partition counts P, P1, P2, P3");
    add_io(s, false);
    s->add_option("--q", opt.q, "q")->delimiter(',');
    s->add_option("--r", opt.r, "odd r");
    s->add_option("--c", opt.c, "residue c mod N");
    s->add_option("--N", opt.N, "modulus N");
    s->add_option("--X", opt.X, "primes in [X, 2X]");
    s->callback([s, &action] {
      active = s;
      action = [] { return run_audit("lz1"); };
    });
  }
  {
    auto* s = audit->add_subcommand("lz2", "b_p = O(p^eps) on a set of density >> X^eps'");
    add_io(s);
    s->add_option("--set", opt.set, "all, 3mod4 or 1mod4");
    s->add_option("--b-fun", opt.bfun, "floorsqrt, floorlog or classno");
    s->add_option("--eps", opt.eps, "exponent eps");
    s->add_option("--eps-prime", opt.eps_prime, "exponent eps'");
    s->callback([s, &action] {
      active = s;
      action = [] { return run_audit("lz2"); };
    });
  }

  auto* log = app.add_subcommand("log", "Fermat quotient experiments")->require_subcommand(1);
  {
    auto* s = log->add_subcommand("wieferich", "primes with q_p(alpha) = target mod p");
    add_io(s);
    s->add_option("--alpha", opt.alpha, "alpha, integer or u/v");
    s->add_option("--target", opt.target, "target residue");
    s->callback([s, &action] {
      active = s;
      action = [] { return run_log("wieferich"); };
    });
  }
  {
    auto* s = log->add_subcommand("disprove", "first prime where q_p(alpha) != a/b");
    add_io(s);
    s->add_option("--alpha", opt.alpha, "alpha");
    s->add_option("--rat", opt.rat, "candidate value a/b");
    s->callback([s, &action] {
      active = s;
      action = [] { return run_log("disprove"); };
    });
  }
  {
    auto* s = log->add_subcommand("phiell", "factor Phi_l(u, v) = (u^l - v^l)/(u - v)");
    add_io(s, false);
    s->add_option("--u", opt.u, "u");
    s->add_option("--v", opt.v, "v");
    s->add_option("--ell", opt.ell, "prime l");
    s->add_option("--rat", opt.rat, "hypothesized a/b");
    s->callback([s, &action] {
      active = s;
      action = [] { return run_log("phiell"); };
    });
  }

  auto* exp = app.add_subcommand("exp", "pi(p) experiments")->require_subcommand(1);
  {
    auto* s = exp->add_subcommand("equidist", "root equidistribution of a quadratic");
    add_io(s);
    s->add_option("--f", opt.f, "coefficients, highest degree first: c2,c1,c0")->required();
    s->add_option("--lo-frac", opt.lo_frac, "interval start in [0, 1]");
    s->add_option("--hi-frac", opt.hi_frac, "interval end in [0, 1]");
    s->callback([s, &action] {
      active = s;
      action = [] { return run_exp("equidist"); };
    });
  }
  {
    auto* s = exp->add_subcommand("smooth", "n with f(n) n^theta-smooth");
    add_io(s, false);
    s->add_option("--f", opt.f, "coefficients, highest degree first")->required();
    s->add_option("--theta", opt.theta, "exponent in (0, 1)");
    s->add_option("--n", opt.n, "largest n");
    s->callback([s, &action] {
      active = s;
      action = [] { return run_exp("smooth"); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_config();
    return action();
  } catch (const Error& e) {
    std::cerr << "amod: " << to_string(e.kind()) << ": " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Capacity: return kExitCapacity;
      case ErrorKind::Internal: return kExitViolation;
      default: return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "amod: " << e.what() << '\n';
    return kExitUsage;
  }
}
