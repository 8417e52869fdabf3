#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>
#include <string>

#include "darboux/certificate.hpp"
#include "darboux/expr.hpp"
#include "darboux/pair.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpq_class <-> fractions.Fraction (ints load too; floats are rejected so no
// precision is ever lost silently).
template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr())) return false;
        if (PyLong_Check(src.ptr())) {
            value = mpq_class(mpz_class(static_cast<std::string>(py::str(src)), 10));
            return true;
        }
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            mpz_class num(static_cast<std::string>(py::str(src.attr("numerator"))), 10);
            mpz_class den(static_cast<std::string>(py::str(src.attr("denominator"))), 10);
            if (den == 0) return false;
            value = mpq_class(num, den);
            value.canonicalize();
            return true;
        }
        return false;
    }

    static handle cast(const mpq_class& src, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(darboux::rat_to_string(src)).release().ptr();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace darboux;

Var var_from_name(const std::string& name) {
    if (name == "x") return Var::x;
    if (name == "y") return Var::y;
    throw py::value_error("variable must be 'x' or 'y'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Darboux-polynomial certificates for commuting derivations of Q[x,y]";

    py::object base = py::register_exception<error>(m, "DarbouxError");
    py::register_exception<zero_input>(m, "ZeroInputError", base.ptr());
    py::register_exception<zero_derivation>(m, "ZeroDerivationError", base.ptr());
    py::register_exception<constant_input>(m, "ConstantInputError", base.ptr());
    py::register_exception<not_dependent>(m, "NotDependentError", base.ptr());
    py::register_exception<not_commuting>(m, "NotCommutingError", base.ptr());
    py::register_exception<linearly_dependent>(m, "LinearlyDependentError", base.ptr());
    py::register_exception<not_divergence_free>(m, "NotDivergenceFreeError", base.ptr());
    py::register_exception<invalid_witness>(m, "InvalidWitnessError", base.ptr());
    py::register_exception<verification_failure>(m, "VerificationFailureError", base.ptr());
    py::register_exception<certificate_error>(m, "CertificateError", base.ptr());
    py::register_exception<parse_error>(m, "ParseError", base.ptr());

    py::class_<Poly>(m, "Poly")
        .def(py::init<>())
        .def(py::init<const Rat&>(), py::arg("constant"))
        .def(py::init([](const std::string& src) { return parse_poly(src); }), py::arg("expr"))
        .def_static("x", &Poly::x)
        .def_static("y", &Poly::y)
        .def("is_zero", &Poly::is_zero)
        .def("is_constant", &Poly::is_constant)
        .def("constant_value", &Poly::constant_value)
        .def("total_degree", &Poly::total_degree)
        .def("degree_in", [](const Poly& p, const std::string& v) {
            return p.degree_in(var_from_name(v));
        })
        .def("coeff", [](const Poly& p, unsigned dx, unsigned dy) {
            return p.coeff({dx, dy});
        })
        .def("partial", [](const Poly& p, const std::string& v) {
            return p.partial(var_from_name(v));
        })
        .def("integrate", [](const Poly& p, const std::string& v) {
            return p.integrate(var_from_name(v));
        })
        .def("evaluate", &Poly::evaluate, py::arg("at_x"), py::arg("at_y"))
        .def("pow", &Poly::pow, py::arg("exponent"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * Rat())
        .def(Rat() * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__pow__", &Poly::pow)
        .def("__str__", [](const Poly& p) { return format_poly(p); })
        .def("__repr__", [](const Poly& p) { return "Poly(\"" + format_poly(p) + "\")"; });

    m.def("parse_poly", [](const std::string& src) { return parse_poly(src); }, py::arg("src"));
    m.def("format_poly", &format_poly, py::arg("p"));
    m.def("normalized", &normalized, py::arg("p"));
    m.def("divide_exact", &divide_exact, py::arg("a"), py::arg("b"));
    m.def("gcd", static_cast<Poly (*)(const Poly&, const Poly&)>(&darboux::gcd),
          py::arg("a"), py::arg("b"));
    m.def("squarefree_part", &squarefree_part, py::arg("a"));

    py::class_<Derivation>(m, "Derivation")
        .def(py::init<Poly, Poly>(), py::arg("p"), py::arg("q"))
        .def(py::init([](const std::string& p, const std::string& q) {
                 return Derivation{parse_poly(p), parse_poly(q)};
             }),
             py::arg("p"), py::arg("q"))
        .def_readwrite("p", &Derivation::p)
        .def_readwrite("q", &Derivation::q)
        .def("is_zero", &Derivation::is_zero)
        .def(py::self == py::self)
        .def("__repr__", [](const Derivation& d) {
            return "Derivation(\"" + format_poly(d.p) + "\", \"" + format_poly(d.q) + "\")";
        });

    m.def("apply", py::overload_cast<const Derivation&, const Poly&>(&apply), py::arg("d"),
          py::arg("f"));
    m.def("bracket", &bracket, py::arg("a"), py::arg("b"));
    m.def("divergence", &divergence, py::arg("d"));
    m.def("delta", &delta, py::arg("a"), py::arg("b"));
    m.def("k_linearly_independent", &k_linearly_independent, py::arg("a"), py::arg("b"));
    m.def("jacobian_derivation", &jacobian_derivation, py::arg("u"));
    m.def("jacobian_det", &jacobian_det, py::arg("u"), py::arg("v"));
    m.def("potential", &potential, py::arg("d"));

    py::class_<ReducedForm>(m, "ReducedForm")
        .def_readonly("d0", &ReducedForm::d0)
        .def_readonly("mu", &ReducedForm::mu);
    m.def("reduce", &reduce, py::arg("d"));

    py::class_<DarbouxWitness>(m, "DarbouxWitness")
        .def(py::init<Poly, Poly>(), py::arg("f"), py::arg("cofactor"))
        .def_readwrite("f", &DarbouxWitness::f)
        .def_readwrite("cofactor", &DarbouxWitness::cofactor)
        .def(py::self == py::self)
        .def("__repr__", [](const DarbouxWitness& w) {
            return "DarbouxWitness(\"" + format_poly(w.f) + "\", \"" + format_poly(w.cofactor) +
                   "\")";
        });

    m.def("cofactor_of", &cofactor_of, py::arg("d"), py::arg("f"));
    m.def("solve_fixed_cofactor", &solve_fixed_cofactor, py::arg("d"), py::arg("lambda_"),
          py::arg("max_degree"));
    m.def("first_integrals", &first_integrals, py::arg("d"), py::arg("max_degree"));
    m.def("is_common_darboux", &is_common_darboux, py::arg("d1"), py::arg("d2"), py::arg("f"));

    py::enum_<CertificateBranch>(m, "CertificateBranch")
        .value("DeltaNonconstant", CertificateBranch::DeltaNonconstant)
        .value("DegenerateKernel", CertificateBranch::DegenerateKernel);

    py::class_<CommonDarboux>(m, "CommonDarboux")
        .def_readonly("f", &CommonDarboux::f)
        .def_readonly("lambda1", &CommonDarboux::lambda1)
        .def_readonly("lambda2", &CommonDarboux::lambda2)
        .def_readonly("branch", &CommonDarboux::branch)
        .def("__repr__", [](const CommonDarboux& c) {
            return "CommonDarboux(f=\"" + format_poly(c.f) + "\", lambda1=\"" +
                   format_poly(c.lambda1) + "\", lambda2=\"" + format_poly(c.lambda2) + "\")";
        });

    py::class_<JacobianPair>(m, "JacobianPair")
        .def_readonly("u1", &JacobianPair::u1)
        .def_readonly("u2", &JacobianPair::u2)
        .def_readonly("c", &JacobianPair::c)
        .def("__repr__", [](const JacobianPair& j) {
            return "JacobianPair(u1=\"" + format_poly(j.u1) + "\", u2=\"" + format_poly(j.u2) +
                   "\", c=" + rat_to_string(j.c) + ")";
        });

    py::class_<DependentDecomposition>(m, "DependentDecomposition")
        .def_readonly("d0", &DependentDecomposition::d0)
        .def_readonly("f", &DependentDecomposition::f)
        .def_readonly("g", &DependentDecomposition::g);

    m.def("decompose_dependent", &decompose_dependent, py::arg("d1"), py::arg("d2"));
    m.def("analyze", &analyze, py::arg("d1"), py::arg("d2"));
    m.def("verify_outcome", &verify_outcome, py::arg("d1"), py::arg("d2"), py::arg("outcome"));
    m.def("propagate", &propagate, py::arg("d"), py::arg("w"), py::arg("d1"));

    m.def(
        "certificate_json",
        [](const Derivation& d1, const Derivation& d2, const PairOutcome& outcome, bool verified) {
            return certificate_to_json(d1, d2, outcome, verified).dump(2);
        },
        py::arg("d1"), py::arg("d2"), py::arg("outcome"), py::arg("verified") = true,
        "Serialize an analysis outcome to the JSON certificate schema.");
    m.def(
        "verify_certificate_json",
        [](const std::string& text) {
            ParsedCertificate parsed = certificate_from_json(nlohmann::json::parse(text));
            return verify_outcome(parsed.d1, parsed.d2, parsed.outcome);
        },
        py::arg("text"), "Parse a JSON certificate document and re-check it exactly.");
}
