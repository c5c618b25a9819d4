#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgt/chars.hpp"
#include "qgt/codes.hpp"
#include "qgt/gf.hpp"
#include "qgt/gring.hpp"
#include "qgt/mub.hpp"
#include "qgt/numtheory.hpp"
#include "qgt/pg.hpp"
#include "qgt/phase.hpp"

namespace py = pybind11;
using namespace qgt;

namespace {

py::dict unbiasedness_dict(const mub::BasisSet& set, double tol) {
    mub::UnbiasednessReport rep = mub::verify_unbiasedness(set, tol);
    py::dict d;
    d["dim"] = set.dim;
    d["bases"] = set.bases.size();
    d["max_ortho_deviation"] = rep.max_ortho_deviation;
    d["max_abs_deviation"] = rep.max_abs_deviation;
    d["pass"] = rep.pass;
    return d;
}

}  // namespace

PYBIND11_MODULE(_qgt, mod) {
    mod.doc() = "finite fields, Galois rings, character sums, MUBs, cyclic codes, projective geometries";

    // number theory
    mod.def("mobius", &numtheory::mobius, py::arg("n"));
    mod.def("totient", &numtheory::totient, py::arg("n"));
    mod.def("mangoldt", &numtheory::mangoldt, py::arg("n"));
    mod.def("is_prime", &numtheory::is_prime, py::arg("n"));
    mod.def("prime_power_base", &numtheory::prime_power_base, py::arg("n"));
    mod.def("divisors", &numtheory::divisors, py::arg("n"));
    mod.def("ramanujan_sum", &numtheory::ramanujan_sum, py::arg("q"), py::arg("n"));
    mod.def(
        "cyclotomic_poly",
        [](std::uint64_t n) { return numtheory::cyclotomic_poly(n).coeffs; },
        py::arg("n"), "coefficients lowest degree first");

    // fields
    py::class_<gf::Field>(mod, "Field")
        .def(py::init<int, int>(), py::arg("p"), py::arg("m"))
        .def(py::init([](int p, int m, const std::vector<int>& g) {
                 return gf::Field(p, m, g);
             }),
             py::arg("p"), py::arg("m"), py::arg("modulus"))
        .def_property_readonly("p", &gf::Field::p)
        .def_property_readonly("m", &gf::Field::m)
        .def_property_readonly("q", &gf::Field::q)
        .def_property_readonly("modulus", &gf::Field::modulus)
        .def_property_readonly("alpha", &gf::Field::alpha)
        .def("add", &gf::Field::add)
        .def("sub", &gf::Field::sub)
        .def("neg", &gf::Field::neg)
        .def("mul", &gf::Field::mul)
        .def("inv", &gf::Field::inv)
        .def("pow", &gf::Field::pow)
        .def("trace", &gf::Field::trace)
        .def("discrete_log", &gf::Field::discrete_log)
        .def("table", [](const gf::Field& f) {
            py::list rows;
            for (const auto& r : f.table()) {
                py::dict d;
                d["power"] = r.power;
                d["polynomial"] = r.polynomial;
                d["tuple"] = r.tuple;
                d["index"] = r.canonical_index;
                rows.append(d);
            }
            return rows;
        });

    // Galois rings
    py::class_<gring::Ring>(mod, "Ring")
        .def(py::init<int>(), py::arg("m"))
        .def_property_readonly("m", &gring::Ring::m)
        .def_property_readonly("size", &gring::Ring::size)
        .def_property_readonly("modulus", &gring::Ring::modulus)
        .def_property_readonly("teichmuller", &gring::Ring::teichmuller)
        .def("add", &gring::Ring::add)
        .def("mul", &gring::Ring::mul)
        .def("gtrace", &gring::Ring::gtrace)
        .def("frobenius", &gring::Ring::frobenius)
        .def("is_unit", &gring::Ring::is_unit)
        .def("two_adic", [](const gring::Ring& r, int y) {
            gring::TwoAdicForm f = r.two_adic_decompose(y);
            return py::make_tuple(f.a, f.b);
        });

    // character sums
    mod.def("weil_sum", &chars::weil_sum, py::arg("field"), py::arg("f"), py::arg("c") = 1);
    mod.def("gauss_sum_field",
            py::overload_cast<const gf::Field&, int, int>(&chars::gauss_sum_field),
            py::arg("field"), py::arg("j"), py::arg("c"));
    mod.def("gamma_sum", &chars::gamma_sum, py::arg("ring"), py::arg("y"));

    // MUBs
    mod.def(
        "mub_odd_verify",
        [](const gf::Field& f, int k, double tol) {
            return unbiasedness_dict(mub::mub_odd(f, k), tol);
        },
        py::arg("field"), py::arg("k") = 0, py::arg("tol") = 1e-9);
    mod.def(
        "mub_even_verify",
        [](int m, int k, double tol) {
            gring::Ring r(m);
            return unbiasedness_dict(mub::mub_even(r, k), tol);
        },
        py::arg("m"), py::arg("k") = 0, py::arg("tol") = 1e-9);

    // phase operators
    mod.def(
        "lock_expectation",
        [](int q, double beta) {
            phase::LockExpectation e = phase::lock_expectation(q, beta);
            py::dict d;
            d["closed_form"] = e.closed_form;
            d["closed_form_truncated"] = e.closed_form_truncated;
            d["spectral"] = e.spectral;
            return d;
        },
        py::arg("q"), py::arg("beta"));
    mod.def(
        "lock_sweep",
        [](int qmax, double beta) {
            py::list rows;
            for (const auto& r : phase::lock_sweep(qmax, beta))
                rows.append(py::make_tuple(r.q, r.expectation_closed_form,
                                           r.expectation_spectral, r.mangoldt_reference));
            return rows;
        },
        py::arg("qmax"), py::arg("beta") = 1.0);

    // cyclic codes
    mod.def(
        "code_distance",
        [](int n, const gf::Field& f, const std::vector<int>& g) {
            codes::LinearCode code = codes::cyclic_code(n, f, g);
            codes::DistanceReport rep = codes::min_distance(code);
            py::dict d;
            d["n"] = code.n;
            d["k"] = code.k;
            d["d_min"] = rep.d_min;
            d["correct_up_to"] = rep.correct_up_to;
            d["detect_up_to"] = rep.detect_up_to;
            d["singleton_gap"] = rep.singleton_gap;
            d["is_mds"] = rep.is_mds;
            d["generator_matrix"] = code.generator_matrix;
            return d;
        },
        py::arg("n"), py::arg("field"), py::arg("g"));

    // projective geometries
    mod.def(
        "pg_census",
        [](int delta, const gf::Field& f, bool exhaustive) {
            pg::ProjectiveSpace s(delta, f);
            pg::ArcSearchResult res = pg::arc_search(
                s, exhaustive ? pg::SearchMode::exhaustive : pg::SearchMode::greedy);
            py::dict d;
            d["points"] = s.num_points();
            d["lines"] = s.num_lines();
            d["max_arc"] = res.size;
            d["arc_points"] = res.points;
            d["certified"] = res.certified_maximum;
            return d;
        },
        py::arg("delta"), py::arg("field"), py::arg("exhaustive") = true);
    mod.def("bruck_ryser_excluded", &pg::bruck_ryser_excluded, py::arg("q"));
}
