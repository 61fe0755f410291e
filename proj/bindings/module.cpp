/*
   Copyright 2026 The chebx authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Python bindings. Arbitrary-precision values cross the boundary as
// native Python ints and fractions.Fraction, both unbounded, via their
// decimal string forms.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "chebx/chebyshev.hpp"
#include "chebx/identities.hpp"
#include "chebx/quadext.hpp"
#include "chebx/rational_roots.hpp"
#include "chebx/roots.hpp"

namespace py = pybind11;
using namespace chebx;

namespace {

py::object int_to_py(const Int& v) {
    PyObject* raw = PyLong_FromString(to_decimal(v).c_str(), nullptr, 10);
    if (!raw) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(raw);
}

Int py_to_int(const py::handle& obj) {
    if (!py::isinstance<py::int_>(obj)) {
        throw py::type_error("expected int, got " + std::string(py::str(py::type::of(obj))));
    }
    return Int(std::string(py::str(obj)), 10);
}

py::object rat_to_py(const Rat& r) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(int_to_py(r.num()), int_to_py(r.den()));
}

Rat py_to_rat(const py::handle& obj) {
    if (py::isinstance<py::float_>(obj)) {
        throw py::type_error("floats are not accepted; pass int, Fraction or 'p/q' string");
    }
    try {
        return Rat::parse(std::string(py::str(obj)));
    } catch (const std::invalid_argument& e) {
        throw py::value_error(e.what());
    }
}

py::list poly_to_py(const IntPoly& p) {
    py::list out;
    for (const Int& c : p.coeffs()) out.append(int_to_py(c));
    return out;
}

IntPoly py_to_poly(const py::sequence& coeffs) {
    std::vector<Int> c;
    c.reserve(py::len(coeffs));
    for (const py::handle& v : coeffs) c.push_back(py_to_int(v));
    return IntPoly(std::move(c));
}

ChebKind kind_arg(const std::string& s) {
    if (s == "T") return ChebKind::FirstKind;
    if (s == "U") return ChebKind::SecondKind;
    if (s == "Tstar") return ChebKind::ShiftedFirstKind;
    throw py::value_error("kind must be 'T', 'U' or 'Tstar'");
}

py::dict interval_to_py(const IsolInterval& iv) {
    py::dict d;
    d["lo"] = rat_to_py(iv.lo);
    d["hi"] = rat_to_py(iv.hi);
    d["exact"] = iv.is_exact() ? rat_to_py(*iv.exact) : py::none().cast<py::object>();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Chebyshev polynomial kernel (integer arithmetic only)";

    py::register_exception<Error>(m, "ChebxError", PyExc_ValueError);

    m.def(
        "gen",
        [](const std::string& kind, unsigned long n, const std::string& method) {
            const ChebKind k = kind_arg(kind);
            if (method == "recurrence") return poly_to_py(gen_recurrence(k, n));
            if (method == "closed-form") return poly_to_py(gen_closed_form(k, n));
            throw py::value_error("method must be 'recurrence' or 'closed-form'");
        },
        py::arg("kind"), py::arg("n"), py::arg("method") = "recurrence",
        "Ascending coefficients of T_n, U_n or T*_n.");

    m.def(
        "monic_transform",
        [](const std::string& kind, unsigned long n) {
            return poly_to_py(monic_transform(kind_arg(kind), n));
        },
        py::arg("kind"), py::arg("n"),
        "Ascending coefficients of the monic integer rescaling (2T_n(X/2), "
        "U_n(X/2) or 2T*_n(X/4)).");

    m.def(
        "value_at_one",
        [](const std::string& kind, unsigned long n) {
            return rat_to_py(value_at_one(kind_arg(kind), n));
        },
        py::arg("kind"), py::arg("n"));

    m.def(
        "check_identity",
        [](const std::string& name, unsigned long n) {
            return check_identity(identity_from_token(name), n).passed;
        },
        py::arg("identity"), py::arg("n"),
        "Exact check of one identity (eq1..eq5, ode, coprime, shiftsquare) at index n.");

    m.def(
        "run_identity_suite",
        [](unsigned long max_n) {
            const auto reports = run_suite(max_n);
            std::size_t failed = 0;
            for (const auto& r : reports) {
                if (!r.passed) ++failed;
            }
            py::dict d;
            d["total"] = reports.size();
            d["failed"] = failed;
            d["all_passed"] = failed == 0;
            return d;
        },
        py::arg("max_n"));

    m.def(
        "closed_form_value",
        [](const std::string& kind, const py::object& w, unsigned long k) {
            return rat_to_py(closed_form_value(kind_arg(kind), py_to_rat(w), k));
        },
        py::arg("kind"), py::arg("w"), py::arg("k"),
        "Value of the degree-k polynomial at rational w via the quadratic "
        "extension closed form.");

    m.def("j_power_period", &j_power_period,
          "Verify the third-root-of-unity structure behind the -1/2 case.");

    m.def(
        "eval_poly",
        [](const py::sequence& coeffs, const py::object& x) {
            return rat_to_py(eval_rat(py_to_poly(coeffs), py_to_rat(x)));
        },
        py::arg("coeffs"), py::arg("x"),
        "Exact value at rational x of the polynomial with the given "
        "ascending integer coefficients.");

    m.def(
        "is_squarefree",
        [](const py::sequence& coeffs) { return is_squarefree(py_to_poly(coeffs)); },
        py::arg("coeffs"));

    m.def(
        "count_real_roots",
        [](const py::sequence& coeffs, const py::object& a, const py::object& b) {
            return count_roots(sturm_chain(py_to_poly(coeffs)), py_to_rat(a), py_to_rat(b));
        },
        py::arg("coeffs"), py::arg("a"), py::arg("b"),
        "Distinct real roots in (a, b] by Sturm sign variations.");

    m.def(
        "isolate_roots",
        [](const std::string& kind, unsigned long n, const py::object& width) {
            const ChebKind k = kind_arg(kind);
            const IntPoly& p = default_cache().get(k, n);
            const Rat a = k == ChebKind::ShiftedFirstKind ? Rat(0) : Rat(-1);
            auto ivs = isolate_roots(p, a, Rat(1));
            if (!width.is_none()) {
                const Rat w = py_to_rat(width);
                for (auto& iv : ivs) iv = refine(p, iv, w);
            }
            py::list out;
            for (const auto& iv : ivs) out.append(interval_to_py(iv));
            return out;
        },
        py::arg("kind"), py::arg("n"), py::arg("width") = py::none(),
        "Isolating intervals for every real root, optionally refined to "
        "the given width.");

    m.def(
        "rational_roots",
        [](const py::sequence& coeffs) {
            py::list out;
            for (const Rat& r : rational_roots_generic(py_to_poly(coeffs))) {
                out.append(rat_to_py(r));
            }
            return out;
        },
        py::arg("coeffs"), "All rational roots, sorted ascending.");

    m.def(
        "cross_check",
        [](const std::string& kind, unsigned long n) {
            const RationalRootReport r = cross_check(kind_arg(kind), n);
            py::list computed, expected;
            for (const Rat& v : r.computed) computed.append(rat_to_py(v));
            for (const Rat& v : r.expected) expected.append(rat_to_py(v));
            py::dict d;
            d["kind"] = to_string(r.kind);
            d["n"] = r.n;
            d["computed"] = computed;
            d["expected"] = expected;
            d["agrees"] = r.agrees;
            return d;
        },
        py::arg("kind"), py::arg("n"),
        "Rational roots found by search vs the classification, with agreement flag.");

#ifdef CHEBX_VERSION
    m.attr("__version__") = CHEBX_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
