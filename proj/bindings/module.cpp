#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qint/expr.hpp"
#include "qint/funceq.hpp"
#include "qint/json_io.hpp"
#include "qint/quantum.hpp"
#include "qint/setops.hpp"

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

// Sequences handed to the checkers are always built as f_n = h * [n]_q,
// mirroring the CLI: the additive check then passes by construction while
// the multiplicative check probes whether h is admissible.
qint::PolySequence sequence_from_h(const qint::FracPoly& h, long long n) {
    return qint::afe_construct(h, n);
}

qint::IntSet set_of(const std::vector<long long>& elems) {
    return qint::IntSet::from_elements(elems);
}

}  // namespace

PYBIND11_MODULE(_qint, m) {
    m.doc() = "Exact symbolic arithmetic for quantum integers";

    py::class_<qint::QuantumNumber>(m, "QuantumNumber")
        .def_property_readonly(
            "value",
            [](const qint::QuantumNumber& a) { return qint::to_string(a.value()); },
            "The rational x with this object representing [x]_q, as a string.")
        .def_property_readonly(
            "canonical",
            [](const qint::QuantumNumber& a) { return qint::to_string(a.canonical()); },
            "Canonical rendering of [x]_q.")
        .def(
            "__eq__",
            [](const qint::QuantumNumber& a, const qint::QuantumNumber& b) {
                return a.value() == b.value();
            },
            py::is_operator())
        .def("__repr__", [](const qint::QuantumNumber& a) {
            return "[" + qint::to_string(a.value()) + "]_q = " + qint::to_string(a.canonical());
        });

    m.def(
        "q_int", [](long long n) { return qint::q_int(qint::Int(n)); }, py::arg("n"),
        "The quantum integer [n]_q.");
    m.def(
        "q_rational",
        [](long long num, long long den) {
            return qint::q_rational(qint::Int(num), qint::Int(den));
        },
        py::arg("num"), py::arg("den"), "The quantum rational [num/den]_q in lowest terms.");
    m.def("q_add", &qint::q_add, py::arg("a"), py::arg("b"),
          "Quantum addition [x]_q (+) [y]_q = [x+y]_q.");
    m.def("q_mul", &qint::q_mul, py::arg("a"), py::arg("b"),
          "Quantum multiplication [x]_q (*) [y]_q = [xy]_q.");
    m.def("q_negate", &qint::q_negate, py::arg("a"), "The quantum additive inverse [-x]_q.");
    m.def("q_reciprocal", &qint::q_reciprocal, py::arg("a"),
          "The quantum multiplicative inverse [1/x]_q.");
    m.def(
        "limit_at_one",
        [](const qint::QuantumNumber& a) { return qint::to_string(qint::limit_at_one(a)); },
        py::arg("a"), "lim_{q->1} [x]_q = x, as a rational string.");

    m.def(
        "evaluate",
        [](const std::string& src) {
            qint::Expr e = qint::parse_expr(src);
            qint::Value v = qint::eval_expr(e);
            return qint::render_display(e, v);
        },
        py::arg("expression"),
        "Parse, type-check and evaluate an expression; returns the display rendering.");

    m.def(
        "verify_ring_json",
        [](int bound) { return qint::to_json(qint::verify_ring_laws(bound)).dump(); },
        py::arg("bound") = 10);
    m.def(
        "verify_afe_json",
        [](const std::string& h, long long n) {
            qint::FracPoly hp = qint::parse_poly_text(h);
            return qint::to_json(qint::check_afe(sequence_from_h(hp, n)), hp).dump();
        },
        py::arg("h"), py::arg("n") = 20);
    m.def(
        "verify_mfe_json",
        [](const std::string& h, long long n) {
            qint::FracPoly hp = qint::parse_poly_text(h);
            return qint::to_json(qint::check_mfe(sequence_from_h(hp, n)), hp).dump();
        },
        py::arg("h"), py::arg("n") = 20);
    m.def(
        "classify_json",
        [](const std::string& h, long long n) {
            qint::FracPoly hp = qint::parse_poly_text(h);
            return qint::to_json(qint::classify_joint(sequence_from_h(hp, n)), hp).dump();
        },
        py::arg("h"), py::arg("n") = 20);
    m.def(
        "multiterm_sum_json",
        [](const std::vector<long long>& ms) {
            return qint::to_json(qint::verify_multiterm_sum(ms)).dump();
        },
        py::arg("ms"));
    m.def(
        "multiterm_product_json",
        [](const std::vector<long long>& ms) {
            return qint::to_json(qint::verify_multiterm_product(ms)).dump();
        },
        py::arg("ms"));
    m.def(
        "decompose_add_json",
        [](const std::vector<long long>& ms) {
            return qint::to_json(qint::partition_add_r(ms)).dump();
        },
        py::arg("ms"));
    m.def(
        "decompose_mul_json",
        [](const std::vector<long long>& ms) {
            return qint::to_json(qint::decompose_mul_r(ms)).dump();
        },
        py::arg("ms"));
    m.def(
        "direct_sum_json",
        [](const std::vector<long long>& a, const std::vector<long long>& b) {
            return qint::to_json(qint::direct_sum_check(set_of(a), set_of(b))).dump();
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "genfun",
        [](const std::vector<long long>& elems) {
            return qint::to_string(qint::genfun(set_of(elems)));
        },
        py::arg("elements"), "The generating function of a finite integer set.");
    m.def(
        "verify_genfun_json",
        [](const std::vector<long long>& a, const std::vector<long long>& b, long long mm) {
            return qint::to_json(qint::verify_genfun_identities(set_of(a), set_of(b), mm)).dump();
        },
        py::arg("a"), py::arg("b"), py::arg("m"));
}
