// Copyright 2026 The egfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "egfkit/bernoulli.hpp"
#include "egfkit/calculus.hpp"
#include "egfkit/fwd_diff.hpp"
#include "egfkit/seq.hpp"
#include "egfkit/verify.hpp"
#include "egfkit/zeta_series.hpp"
#include "egfkit/zeta_special.hpp"

namespace py = pybind11;

namespace {

using egfkit::BigComplex;
using egfkit::BigReal;
using egfkit::EgfSeq;
using egfkit::Rational;

py::object fraction_type() {
  return py::module_::import("fractions").attr("Fraction");
}

py::object to_py(const Rational& r) {
  return fraction_type()(r.str());
}

Rational to_rational(py::handle h) {
  if (py::isinstance<py::float_>(h)) {
    throw py::type_error("exact rational required; pass int, Fraction or \"p/q\"");
  }
  return Rational::from_string(py::str(h).cast<std::string>());
}

std::vector<Rational> to_rationals(const py::sequence& seq) {
  std::vector<Rational> out;
  out.reserve(py::len(seq));
  for (py::handle h : seq) {
    out.push_back(to_rational(h));
  }
  return out;
}

py::list to_py_list(const std::vector<Rational>& values) {
  py::list out;
  for (const Rational& v : values) {
    out.append(to_py(v));
  }
  return out;
}

py::list seq_to_py(const EgfSeq& s) {
  return to_py_list(s.coeffs());
}

EgfSeq seq_from_py(const py::sequence& seq) {
  return EgfSeq(to_rationals(seq));
}

BigComplex complex_from_py(py::handle h, mpfr_prec_t prec) {
  if (py::isinstance<py::str>(h)) {
    return egfkit::parse_complex(h.cast<std::string>(), prec);
  }
  if (py::isinstance<py::int_>(h)) {
    return BigComplex(BigReal::from_string(py::str(h).cast<std::string>(), prec));
  }
  if (py::isinstance<py::float_>(h)) {
    return BigComplex(BigReal(h.cast<double>(), prec));
  }
  PyObject* ptr = h.ptr();
  if (PyComplex_Check(ptr)) {
    return {BigReal(PyComplex_RealAsDouble(ptr), prec),
            BigReal(PyComplex_ImagAsDouble(ptr), prec)};
  }
  throw py::type_error("s must be int, float, complex or a string");
}

py::dict complex_to_py(const BigComplex& z) {
  py::dict d;
  d["re"] = z.real().str();
  d["im"] = z.imag().str();
  return d;
}

py::dict report_to_py(const egfkit::ZetaReport& report, bool trace) {
  py::dict d;
  d["value"] = report.final.real().str();
  d["im"] = report.final.imag().str();
  d["precision_bits"] = static_cast<long>(report.final.precision());
  d["terms"] = report.terms_used;
  d["reference"] = complex_to_py(report.reference);
  d["abs_error"] = report.abs_error.str();
  if (trace) {
    py::list sums;
    for (const BigComplex& t : report.partial_sums) {
      sums.append(complex_to_py(t));
    }
    py::list errors;
    for (const BigReal& e : egfkit::partial_sum_errors(report)) {
      errors.append(e.str());
    }
    d["partial_sums"] = sums;
    d["errors"] = errors;
  }
  return d;
}

py::dict suite_to_py(const egfkit::verify::SuiteResult& r) {
  py::dict d;
  d["name"] = r.name;
  d["cases"] = r.cases;
  d["failures"] = r.failures;
  d["passed"] = r.passed();
  d["messages"] = r.messages;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Bernoulli/zeta sequence algebra over EGF coefficient vectors";

  // sequence algebra
  m.def("star", [](const py::sequence& a, const py::sequence& b) {
    return seq_to_py(egfkit::star(seq_from_py(a), seq_from_py(b)));
  }, py::arg("a"), py::arg("b"), "Binomial convolution of two coefficient sequences.");
  m.def("hadamard", [](const py::sequence& a, const py::sequence& b) {
    return seq_to_py(egfkit::hadamard(seq_from_py(a), seq_from_py(b)));
  }, py::arg("a"), py::arg("b"));
  m.def("add", [](const py::sequence& a, const py::sequence& b) {
    return seq_to_py(egfkit::add(seq_from_py(a), seq_from_py(b)));
  }, py::arg("a"), py::arg("b"));
  m.def("scale", [](py::handle lam, const py::sequence& a) {
    return seq_to_py(egfkit::scale(to_rational(lam), seq_from_py(a)));
  }, py::arg("lam"), py::arg("a"));
  m.def("inverse", [](const py::sequence& a) {
    return seq_to_py(egfkit::inverse(seq_from_py(a)));
  }, py::arg("a"), "Star-inverse; requires a nonzero leading coefficient.");
  m.def("identity", [](std::size_t K) { return seq_to_py(egfkit::identity(K)); }, py::arg("K"));
  m.def("geometric", [](py::handle j, std::size_t K) {
    return seq_to_py(egfkit::geometric(to_rational(j), K));
  }, py::arg("j"), py::arg("K"));
  m.def("shift_left", [](const py::sequence& a) {
    return seq_to_py(egfkit::shift_left(seq_from_py(a)));
  }, py::arg("a"));
  m.def("shift_right", [](const py::sequence& a) {
    return seq_to_py(egfkit::shift_right(seq_from_py(a)));
  }, py::arg("a"));

  // Bernoulli data
  m.def("h_seq", [](std::size_t K) { return seq_to_py(egfkit::H_seq(K)); }, py::arg("K"));
  m.def("bernoulli_numbers", [](std::size_t K) {
    return seq_to_py(egfkit::bernoulli_numbers(K));
  }, py::arg("K"));
  m.def("bernoulli_number", [](std::size_t n) {
    return to_py(egfkit::bernoulli_number(n));
  }, py::arg("n"));
  m.def("bernoulli_poly", [](std::size_t n) {
    return to_py_list(egfkit::bernoulli_poly(n).coeffs());
  }, py::arg("n"), "Coefficients of B_n(x), ascending powers.");
  m.def("bernoulli_poly_seq", [](py::handle x, std::size_t K) {
    return seq_to_py(egfkit::bernoulli_poly_seq(to_rational(x), K));
  }, py::arg("x"), py::arg("K"));
  m.def("faulhaber_sum", [](unsigned long n, unsigned long m) {
    return to_py(egfkit::faulhaber_sum(n, m));
  }, py::arg("n"), py::arg("m"));
  m.def("power_sum_bruteforce", [](unsigned long n, unsigned long m) {
    return to_py(egfkit::power_sum_bruteforce(n, m));
  }, py::arg("n"), py::arg("m"));
  m.def("s_poly", [](std::size_t n) {
    return to_py_list(egfkit::s_poly(n).coeffs());
  }, py::arg("n"), "Coefficients of the power-sum polynomial S_n, ascending powers.");

  // zeta special values
  m.def("zeta_neg", [](std::size_t n) { return to_py(egfkit::zeta_neg(n)); }, py::arg("n"),
        "Exact zeta(-n).");
  m.def("hurwitz_neg", [](std::size_t n, py::handle a) {
    return to_py(egfkit::hurwitz_neg(n, to_rational(a)));
  }, py::arg("n"), py::arg("a"), "Exact zeta(-n, a) for 0 < a <= 1.");
  m.def("zeta_neg_vector", [](std::size_t K) {
    return seq_to_py(egfkit::zeta_neg_vector(K));
  }, py::arg("K"));
  m.def("theorem21_check", [](std::size_t m) {
    const auto pair = egfkit::theorem21_check(m);
    return py::make_tuple(to_py(pair.lhs), to_py(pair.rhs));
  }, py::arg("m"));
  m.def("theorem23_check", [](std::size_t m, py::handle a) {
    const auto pair = egfkit::theorem23_check(m, to_rational(a));
    return py::make_tuple(to_py(pair.lhs), to_py(pair.rhs));
  }, py::arg("m"), py::arg("a"));

  // forward differences
  m.def("forward_diff", [](const py::sequence& values, std::size_t n) {
    return to_py(egfkit::forward_diff(egfkit::ValueTable<Rational>{to_rationals(values)}, n));
  }, py::arg("values"), py::arg("n"));
  m.def("diff_table_recursive", [](const py::sequence& values) {
    return to_py_list(
        egfkit::diff_table_recursive(egfkit::ValueTable<Rational>{to_rationals(values)}).values);
  }, py::arg("values"));
  m.def("diff_seq_via_star", [](const py::sequence& values) {
    return seq_to_py(egfkit::diff_seq_via_star(egfkit::ValueTable<Rational>{to_rationals(values)}));
  }, py::arg("values"));

  // shifted-basis calculus
  m.def("s_poly_shifted", [](std::size_t n) {
    return to_py_list(egfkit::s_poly_shifted(n).coeffs());
  }, py::arg("n"), "Coefficients against the (x-1)^k/k! basis.");
  m.def("definite_integral_01", [](const py::sequence& coeffs) {
    return to_py(egfkit::definite_integral_01(egfkit::ShiftedSeq(to_rationals(coeffs))));
  }, py::arg("coeffs"));
  m.def("integrate_shifted", [](const py::sequence& coeffs) {
    return to_py_list(egfkit::integrate_shifted(egfkit::ShiftedSeq(to_rationals(coeffs))).coeffs());
  }, py::arg("coeffs"));

  // numerical zeta
  m.def("zeta_eval", [](py::handle s, std::size_t terms, long prec, bool report) {
    const auto prec_bits = static_cast<mpfr_prec_t>(prec);
    return report_to_py(
        egfkit::zeta_via_differences(complex_from_py(s, prec_bits), terms, prec_bits), report);
  }, py::arg("s"), py::arg("terms") = 40, py::arg("prec") = 128, py::arg("report") = false,
        "Evaluate zeta(s) by the forward-difference double series.");
  m.def("zeta_reference", [](py::handle s, long prec) {
    const auto prec_bits = static_cast<mpfr_prec_t>(prec);
    return complex_to_py(egfkit::zeta_reference(complex_from_py(s, prec_bits), prec_bits));
  }, py::arg("s"), py::arg("prec") = 128);

  // identity suites
  m.def("suite_names", [] { return egfkit::verify::suite_names(); });
  m.def("verify_suite", [](const std::string& name, std::size_t max_order, py::object seed) {
    egfkit::verify::Options opts;
    opts.max_order = max_order;
    if (!seed.is_none()) {
      opts.seed = seed.cast<std::uint64_t>();
    }
    return suite_to_py(egfkit::verify::run_suite(name, opts));
  }, py::arg("name"), py::arg("max_order") = 0, py::arg("seed") = py::none());
}
