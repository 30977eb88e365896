#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "amod/classnum.hpp"
#include "amod/ecred.hpp"
#include "amod/experiments.hpp"
#include "amod/qpoly.hpp"
#include "amod/serialize.hpp"
#include "amod/specialnums.hpp"

namespace py = pybind11;
using namespace amod;

namespace {

// Accepts int, "u/v" strings and anything with numerator/denominator (Fraction).
ReducedRational to_rational(const py::handle& h) {
  if (py::isinstance<py::bool_>(h)) throw py::type_error("expected a rational, got bool");
  if (py::isinstance<py::int_>(h)) return ReducedRational(h.cast<i64>());
  if (py::isinstance<py::str>(h)) return ReducedRational::parse(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return ReducedRational(h.attr("numerator").cast<i64>(), h.attr("denominator").cast<i64>());
  throw py::type_error("expected int, str or Fraction");
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object big(const BigInt& v) { return py::int_(py::str(v.str())); }

py::object big(const BigRational& v) {
  return py::module_::import("fractions").attr("Fraction")(big(numerator(v)), big(denominator(v)));
}

py::dict report(const CongruenceReport& r) {
  py::dict d;
  d["q"] = r.q;
  d["p"] = r.p;
  d["ord"] = r.ord;
  d["index"] = r.index;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["verdict"] = to_string(r.verdict);
  d["skip_reason"] = r.skip_reason;
  return d;
}

py::list sweep(const CongruenceSweep& s) {
  py::list out;
  for (const auto& r : s.rows) out.append(report(r));
  return out;
}

PrimeWindow win(u64 lo, u64 hi) { return PrimeWindow(lo, hi); }

}  // namespace

PYBIND11_MODULE(_amod, m) {
  m.doc() = "Residue vectors over prime windows and the number-theoretic sequences behind them";

  static py::exception<Error> exc(m, "AmodError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(exc.ptr())(py::str(e.what()));
      err.attr("kind") = to_string(e.kind());
      PyErr_SetObject(exc.ptr(), err.ptr());
    }
  });

  // core
  m.def("primes_in", [](u64 lo, u64 hi) { return primes_in(win(lo, hi)); }, py::arg("lo"), py::arg("hi"));
  m.def("prime_count", [](u64 x) { return prime_count(x); });
  m.def("nth_prime", [](u64 n) { return nth_prime(n); });
  m.def("is_prime", &is_prime);
  m.def("pow_mod", [](i64 b, u64 e, u64 mod) { return pow_mod(b, e, mod).value; });
  m.def("legendre", &legendre);
  m.def("sqrt_mod", [](i64 a, u64 p) {
    std::vector<u64> out;
    for (auto r : sqrt_mod(a, p)) out.push_back(r.value);
    return out;
  });
  m.def("mult_order", [](py::object q, u64 p) { return mult_order(to_rational(q), p); });
  m.def("group_index", [](py::object q, u64 p) { return group_index(to_rational(q), p); });
  m.def("fermat_quotient", [](py::object a, u64 p) { return fermat_quotient(to_rational(a), p).value; });

  // elements
  py::class_<TruncatedAdele>(m, "TruncatedAdele")
      .def_property_readonly("window", [](const TruncatedAdele& a) { return py::make_tuple(a.window().lo, a.window().hi); })
      .def_property_readonly("primes", &TruncatedAdele::primes)
      .def_property_readonly("residues", [](const TruncatedAdele& a) {
        py::list out;
        for (std::size_t i = 0; i < a.size(); ++i)
          out.append(a.is_bad(i) ? py::object(py::none()) : py::object(py::int_(a.residue(i))));
        return out;
      })
      .def_property_readonly("bad_primes", &TruncatedAdele::bad_primes)
      .def_property_readonly("provenance", &TruncatedAdele::provenance)
      .def("at", &TruncatedAdele::at)
      .def("nonzero_positions", [](const TruncatedAdele& a) { return nonzero_positions(a); })
      .def("is_zero", [](const TruncatedAdele& a) { return is_zero_element(a); })
      .def("to_json", [](const TruncatedAdele& a) { return to_json(a).dump(); })
      .def("to_csv", [](const TruncatedAdele& a) {
        std::ostringstream o;
        write_csv(o, a);
        return o.str();
      })
      .def("__len__", &TruncatedAdele::size)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def("__rmul__", [](const TruncatedAdele& a, i64 c) { return c * a; })
      .def("__repr__", [](const TruncatedAdele& a) {
        return "<TruncatedAdele " + a.provenance() + " on [" + std::to_string(a.window().lo) + "," +
               std::to_string(a.window().hi) + "]>";
      });

  m.def("adele_from_json", [](const std::string& text) { return adele_from_json(Json::parse(text)); });
  m.def("constant_element", [](u64 lo, u64 hi, i64 c) { return constant_element(win(lo, hi), c); });
  m.def("eval_poly", [](const std::vector<i64>& highest_first, const TruncatedAdele& a) {
    return eval_poly(IntPolynomial::from_highest_first(highest_first), a);
  }, py::arg("coeffs"), py::arg("element"));
  m.def("relation_scan", [](const TruncatedAdele& a, int dmax, i64 hmax, std::size_t max_exceptions) {
    return to_py(to_json(relation_scan(a, {dmax, hmax, max_exceptions})));
  }, py::arg("element"), py::arg("dmax") = 2, py::arg("hmax") = 3, py::arg("max_exceptions") = 3);
  m.def("relation_scan2", [](const TruncatedAdele& a, const TruncatedAdele& b, int dmax, i64 hmax, std::size_t mx) {
    return to_py(to_json(relation_scan2(a, b, {dmax, hmax, mx})));
  }, py::arg("x"), py::arg("y"), py::arg("dmax") = 2, py::arg("hmax") = 1, py::arg("max_exceptions") = 3);

  // q-sequences
  m.def("q_binomial", [](u64 n, u64 k, py::object q, u64 p) { return q_binomial(n, k, QContext(to_rational(q), p)).value; });
  m.def("q_fibonacci", [](u64 n, py::object q, u64 p) { return q_fibonacci(n, QContext(to_rational(q), p)).value; });
  m.def("q_fibonacci_exact", &q_fibonacci_exact);
  m.def("fibonacci_mod", [](u64 n, u64 mod) { return fibonacci_mod(n, mod).value; });
  m.def("bressoud", [](u64 n, py::object q, u64 p) {
    const auto v = bressoud(n, QContext(to_rational(q), p));
    return py::make_tuple(v.by_recurrence.value, v.by_sum.value);
  });
  m.def("verify_af_congruence", [](py::object q, u64 p) { return report(verify_af_congruence(to_rational(q), p)); });
  m.def("verify_qbinom_congruence",
        [](py::object q, u64 p, u64 k) { return report(verify_qbinom_congruence(to_rational(q), p, k)); });
  m.def("verify_bressoud_congruence",
        [](py::object q, u64 p) { return report(verify_bressoud_congruence(to_rational(q), p)); });
  m.def("sweep_af", [](py::object q, u64 lo, u64 hi) { return sweep(sweep_af(to_rational(q), win(lo, hi))); });
  m.def("sweep_bressoud", [](py::object q, u64 lo, u64 hi) { return sweep(sweep_bressoud(to_rational(q), win(lo, hi))); });
  m.def("fib_element", [](py::object q, u64 lo, u64 hi) { return fib_element(to_rational(q), win(lo, hi)); });
  m.def("bressoud_element", [](py::object q, u64 lo, u64 hi) { return bressoud_element(to_rational(q), win(lo, hi)); });

  // special numbers
  m.def("bernoulli_exact", [](unsigned n) { return big(bernoulli_exact(n)); });
  m.def("euler_exact", [](unsigned n) { return big(euler_exact(n)); });
  m.def("gregory_exact", [](unsigned n) { return big(gregory_exact(n)); });
  m.def("bernoulli_mod", [](u64 n, u64 p) { return bernoulli_mod(n, p).value; });
  m.def("euler_mod", [](u64 n, u64 p) { return euler_mod(n, p).value; });
  m.def("gregory_mod", [](u64 n, u64 p) { return gregory_mod(n, p).value; });
  m.def("gregory_poly_mod", [](u64 n, i64 x, u64 p) { return gregory_poly_mod(n, x, p).value; });
  m.def("z_A", [](unsigned k, u64 lo, u64 hi) { return z_A(k, win(lo, hi)); });
  m.def("script_B", [](u64 lo, u64 hi) { return script_B(win(lo, hi)); });
  m.def("script_E", [](u64 lo, u64 hi) { return script_E(win(lo, hi)); });
  m.def("g_A", [](unsigned k, i64 x, u64 lo, u64 hi) { return g_A(k, x, win(lo, hi)); });

  // class numbers
  m.def("class_number", [](i64 D) { return class_number_forms(FundamentalDiscriminant(D)); });
  m.def("class_number_charsum", [](i64 D) { return class_number_charsum(FundamentalDiscriminant(D)); });
  m.def("is_fundamental", &FundamentalDiscriminant::is_fundamental);
  m.def("verify_cauchy", [](u64 p) { return report(verify_cauchy(p)); });
  m.def("verify_carlitz", [](u64 p) { return report(verify_carlitz(p)); });

  // elliptic curves
  m.def("ap_trace", [](i64 a, i64 b, u64 p) { return ap_trace(ShortWeierstrassCurve(a, b), p); });
  m.def("trace_sweep", [](i64 a, i64 b, u64 lo, u64 hi) {
    py::list out;
    for (const auto& t : trace_sweep(ShortWeierstrassCurve(a, b), win(lo, hi))) out.append(py::make_tuple(t.p, t.ap, t.theta));
    return out;
  });
  m.def("alpha_E", [](i64 a, i64 b, u64 lo, u64 hi) { return alpha_E(ShortWeierstrassCurve(a, b), win(lo, hi)); });
  m.def("sato_tate_histogram", [](i64 a, i64 b, u64 X, unsigned bins) {
    return to_py(to_json(sato_tate_histogram(ShortWeierstrassCurve(a, b), X, bins)));
  }, py::arg("a"), py::arg("b"), py::arg("X"), py::arg("bins") = 12);
  m.def("twist_trace_check", [](i64 a, i64 b, i64 d, u64 lo, u64 hi) {
    return twist_trace_check(ShortWeierstrassCurve(a, b), d, win(lo, hi)).mismatches;
  });

  // experiments
  m.def("wieferich_scan", [](py::object alpha, i64 target, u64 X) { return wieferich_scan(to_rational(alpha), target, X); });
  m.def("log_rational_disproof", [](py::object alpha, i64 a, i64 b, u64 X) {
    return log_rational_disproof(to_rational(alpha), a, b, X).witness;
  });
  m.def("phi_ell_analysis", [](u64 u, u64 v, u64 ell, i64 a, i64 b) { return to_py(to_json(phi_ell_analysis(u, v, ell, a, b))); },
        py::arg("u"), py::arg("v"), py::arg("ell"), py::arg("a") = 1, py::arg("b") = 1);
  m.def("root_equidist", [](const std::vector<i64>& highest_first, u64 X, double alpha, double beta) {
    return to_py(to_json(root_equidist(IntPolynomial::from_highest_first(highest_first), X, alpha, beta)));
  });
  m.def("growth_audit", [](const std::string& values, u64 X, unsigned d_max) {
    if (values == "floorlog") return to_py(to_json(growth_audit(floor_log_values(X), d_max)));
    if (values == "floorsqrt") return to_py(to_json(growth_audit(floor_sqrt_values(X), d_max)));
    throw py::value_error("values must be 'floorlog' or 'floorsqrt'");
  });
  m.def("lz1_partition_count", [](py::object q, u64 r, u64 c, u64 N, u64 X) {
    return to_py(to_json(lz1_partition_count(to_rational(q), r, c, N, X)));
  });
  m.def("t_sequence", &t_sequence);
}
