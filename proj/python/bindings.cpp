// Python bindings for the exact power-sum / hyper-sum library.
//
// Rationals cross the boundary as apsum.Rational objects; arguments
// accept Python ints, "num/den" strings, fractions.Fraction, or Rational.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apsum/bernoulli.hpp"
#include "apsum/hypersum.hpp"
#include "apsum/jsonio.hpp"
#include "apsum/powersum.hpp"
#include "apsum/series.hpp"
#include "apsum/stirling.hpp"
#include "apsum/verify.hpp"

namespace py = pybind11;

using apsum::Integer;
using apsum::Rational;
using apsum::SumQuery;
using apsum::TruncatedSeries;

namespace {

Rational to_rational(py::handle obj) {
    if (py::isinstance<Rational>(obj))
        return obj.cast<Rational>();
    if (py::isinstance<py::int_>(obj))
        return Rational(Integer(py::str(obj).cast<std::string>(), 10));
    if (py::isinstance<py::str>(obj))
        return Rational::parse(obj.cast<std::string>());
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
        const Integer num(py::str(obj.attr("numerator")).cast<std::string>(), 10);
        const Integer den(py::str(obj.attr("denominator")).cast<std::string>(), 10);
        return Rational(num, den);
    }
    throw py::type_error("expected int, str, fractions.Fraction or apsum.Rational");
}

py::object to_py_int(const Integer& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

std::vector<Rational> series_coeffs(const TruncatedSeries& s) { return s.coeffs(); }

Rational power_sum(long p, py::handle a, py::handle d, long n, const std::string& method) {
    const SumQuery q(p, to_rational(a), to_rational(d), n);
    if (method == "direct")
        return apsum::powersum_direct(q);
    if (method == "stirling")
        return apsum::powersum_stirling(q);
    if (method == "bernoulli-diff")
        return apsum::powersum_bernoulli_diff(q);
    if (method == "bernoulli-sum")
        return apsum::powersum_bernoulli_sum(q);
    if (method == "rstirling")
        return apsum::powersum_rstirling(q);
    if (method == "whitney")
        return apsum::powersum_whitney(q);
    throw py::value_error("unknown method \"" + method + "\"");
}

py::dict power_sum_all(long p, py::handle a, py::handle d, long n) {
    const SumQuery q(p, to_rational(a), to_rational(d), n);
    py::dict out;
    out["direct"] = apsum::powersum_direct(q);
    out["stirling"] = apsum::powersum_stirling(q);
    out["bernoulli-diff"] = apsum::powersum_bernoulli_diff(q);
    out["bernoulli-sum"] = apsum::powersum_bernoulli_sum(q);
    out["rstirling"] = apsum::rstirling_applicability(q).applicable
                           ? py::cast(apsum::powersum_rstirling(q))
                           : py::none();
    out["whitney"] = apsum::whitney_applicability(q).applicable
                         ? py::cast(apsum::powersum_whitney(q))
                         : py::none();
    return out;
}

Rational hyper_sum(long p, py::handle a, py::handle d, long n, long r,
                   const std::string& method) {
    const SumQuery q(p, to_rational(a), to_rational(d), n, r);
    if (method == "recursive")
        return apsum::hypersum_recursive(q);
    if (method == "binomial")
        return apsum::hypersum_binomial(q);
    if (method == "genbernoulli")
        return apsum::hypersum_genbernoulli(q);
    throw py::value_error("unknown method \"" + method + "\"");
}

py::dict hyper_sum_all(long p, py::handle a, py::handle d, long n, long r) {
    const SumQuery q(p, to_rational(a), to_rational(d), n, r);
    py::dict out;
    out["recursive"] = apsum::hypersum_recursive(q);
    out["binomial"] = apsum::hypersum_binomial(q);
    out["genbernoulli"] = apsum::hypersum_genbernoulli(q);
    return out;
}

std::vector<Rational> hyper_sum_egf(py::handle a, py::handle d, long n, long r, int order,
                                    const std::string& kind) {
    const Rational aa = to_rational(a), dd = to_rational(d);
    if (kind == "direct")
        return series_coeffs(apsum::hypersum_egf_direct(aa, dd, n, r, order));
    if (kind == "2f1")
        return series_coeffs(apsum::hypersum_egf_hypergeom(aa, dd, n, r, order));
    if (kind == "laurent")
        return series_coeffs(apsum::hypersum_egf_laurent(aa, dd, n, r, order));
    throw py::value_error("unknown EGF kind \"" + kind + "\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact power sums and hyper-sums of arithmetic progressions";

    py::register_exception<apsum::NotApplicableError>(m, "NotApplicableError",
                                                      PyExc_ValueError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](py::handle v) { return to_rational(v); }), py::arg("value"))
        .def(py::init([](py::handle num, py::handle den) {
                 return to_rational(num) / to_rational(den);
             }),
             py::arg("numerator"), py::arg("denominator"))
        .def_property_readonly(
            "numerator", [](const Rational& r) { return to_py_int(r.numerator()); })
        .def_property_readonly(
            "denominator", [](const Rational& r) { return to_py_int(r.denominator()); })
        .def("__str__", &Rational::str)
        .def("__repr__",
             [](const Rational& r) { return "Rational(\"" + r.str() + "\")"; })
        .def("__hash__",
             [](const Rational& r) { return py::hash(py::str(r.str())); })
        .def("__eq__",
             [](const Rational& a, py::handle b) {
                 try {
                     return a == to_rational(b);
                 } catch (const std::exception&) {
                     return false;
                 }
             })
        .def("__lt__", [](const Rational& a, py::handle b) { return a < to_rational(b); })
        .def("__le__", [](const Rational& a, py::handle b) { return a <= to_rational(b); })
        .def("__gt__", [](const Rational& a, py::handle b) { return a > to_rational(b); })
        .def("__ge__", [](const Rational& a, py::handle b) { return a >= to_rational(b); })
        .def("__add__", [](const Rational& a, py::handle b) { return a + to_rational(b); })
        .def("__radd__", [](const Rational& a, py::handle b) { return to_rational(b) + a; })
        .def("__sub__", [](const Rational& a, py::handle b) { return a - to_rational(b); })
        .def("__rsub__", [](const Rational& a, py::handle b) { return to_rational(b) - a; })
        .def("__mul__", [](const Rational& a, py::handle b) { return a * to_rational(b); })
        .def("__rmul__", [](const Rational& a, py::handle b) { return to_rational(b) * a; })
        .def("__truediv__",
             [](const Rational& a, py::handle b) { return a / to_rational(b); })
        .def("__rtruediv__",
             [](const Rational& a, py::handle b) { return to_rational(b) / a; })
        .def("__neg__", [](const Rational& a) { return -a; });

    m.def("binomial", [](long n, long k) { return to_py_int(apsum::binomial(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("factorial", [](long n) { return to_py_int(apsum::factorial(n)); }, py::arg("n"));
    m.def("pochhammer",
          [](py::handle x, long n) { return apsum::pochhammer(to_rational(x), n); },
          py::arg("x"), py::arg("n"));

    m.def("power_sum", &power_sum, py::arg("p"), py::arg("a"), py::arg("d"), py::arg("n"),
          py::arg("method") = "direct",
          "S_{p,(a,d)}(n) = sum of (a+s*d)^p for s = 0..n");
    m.def("power_sum_all", &power_sum_all, py::arg("p"), py::arg("a"), py::arg("d"),
          py::arg("n"), "every method's value; None where not applicable");
    m.def("hyper_sum", &hyper_sum, py::arg("p"), py::arg("a"), py::arg("d"), py::arg("n"),
          py::arg("r"), py::arg("method") = "recursive",
          "the r-fold cumulative power sum S^{(r)}_{p,(a,d)}(n)");
    m.def("hyper_sum_all", &hyper_sum_all, py::arg("p"), py::arg("a"), py::arg("d"),
          py::arg("n"), py::arg("r"));

    m.def("weighted_stirling",
          [](long n, long i, py::handle x) {
              return apsum::weighted_stirling(n, i, to_rational(x));
          },
          py::arg("n"), py::arg("i"), py::arg("x"));
    m.def("stirling2", [](long n, long k) { return to_py_int(apsum::stirling2(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("r_stirling2",
          [](long n, long k, long r) { return to_py_int(apsum::r_stirling2(n, k, r)); },
          py::arg("n"), py::arg("k"), py::arg("r"));
    m.def("whitney",
          [](long m_, long r, long n, long i) {
              return to_py_int(apsum::whitney(m_, r, n, i));
          },
          py::arg("m"), py::arg("r"), py::arg("n"), py::arg("i"));

    m.def("bernoulli",
          [](long n, py::handle x, long alpha) {
              return apsum::gen_bernoulli(alpha, n, to_rational(x));
          },
          py::arg("n"), py::arg("x"), py::arg("alpha") = 1,
          "B_n^{(alpha)}(x), exact");
    m.def("bernoulli_polynomial",
          [](long n, long alpha) {
              return apsum::gen_bernoulli_poly(alpha, n).coeffs();
          },
          py::arg("n"), py::arg("alpha") = 1,
          "monomial coefficients of B_n^{(alpha)}(x), constant term first");
    m.def("bernoulli_via_stirling",
          [](long n, py::handle x) {
              return apsum::bernoulli_via_stirling(n, to_rational(x));
          },
          py::arg("n"), py::arg("x"));

    m.def("power_sum_egf",
          [](py::handle a, py::handle d, long n, int order) {
              return series_coeffs(apsum::powersum_egf(to_rational(a), to_rational(d), n,
                                                       order));
          },
          py::arg("a"), py::arg("d"), py::arg("n"), py::arg("order"));
    m.def("hyper_sum_egf", &hyper_sum_egf, py::arg("a"), py::arg("d"), py::arg("n"),
          py::arg("r"), py::arg("order"), py::arg("kind") = "direct");

    m.def("verify_json",
          [](const std::string& grid) {
              return apsum::to_json(apsum::run_verify(grid)).dump(2);
          },
          py::arg("grid") = "small",
          "run the cross-formula verification suite, returning the JSON report");

    m.attr("__version__") = "0.1.0";
}
