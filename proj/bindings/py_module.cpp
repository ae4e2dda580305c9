#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dickson/catalog_io.hpp"
#include "dickson/dickson_pairs.hpp"
#include "dickson/ff_core.hpp"
#include "dickson/nearfield.hpp"

namespace py = pybind11;
using namespace dickson;
using u64 = std::uint64_t;
using Coeffs = std::vector<std::uint32_t>;

namespace {

py::dict check_to_dict(const CheckResult& c) {
    py::dict d;
    d["name"] = c.name;
    d["mode"] = c.mode == CheckMode::exhaustive ? "exhaustive" : "sampled";
    d["samples"] = c.sample_count;
    d["passed"] = c.passed;
    py::list w;
    for (const FieldElement& e : c.witness) w.append(e.coeffs);
    d["witness"] = w;
    return d;
}

DicksonNearfield build(u64 q, u64 n, std::optional<Coeffs> generator,
                       std::optional<unsigned> class_index) {
    const DicksonPair pair = make_dickson_pair(q, n);
    if (generator && class_index)
        throw std::invalid_argument("pass either generator or class_index, not both");
    if (generator) return construct(pair, FieldElement{*generator});
    if (class_index) return construct_class(pair, *class_index);
    return construct(pair);
}

}  // namespace

PYBIND11_MODULE(_dicksonnf, m) {
    m.doc() = "finite Dickson nearfields: construction, verification, export";

    py::register_exception<internal_contradiction_error>(m, "ContradictionError");

    m.def("is_prime", &dickson::is_prime, py::arg("n"));
    m.def("factorize", &dickson::factorize, py::arg("n"),
          "ascending prime multiset whose product is n");
    m.def("euler_phi", &dickson::euler_phi, py::arg("n"));
    m.def("mult_order", &dickson::mult_order, py::arg("a"), py::arg("n"));
    m.def(
        "as_prime_power",
        [](u64 q) -> std::optional<std::pair<u64, unsigned>> {
            const auto pp = dickson::as_prime_power(q);
            if (!pp) return std::nullopt;
            return std::make_pair(pp->p, pp->l);
        },
        py::arg("q"), "(p, l) with q = p^l, or None when q is not a prime power");
    m.def(
        "is_dickson_pair",
        [](u64 q, u64 n) {
            const PairCheck c = dickson::is_dickson_pair(q, n);
            return py::make_tuple(c.ok, c.violated_clause, c.reason);
        },
        py::arg("q"), py::arg("n"), "(ok, violated_clause, reason)");
    m.def(
        "class_count", [](u64 q, u64 n) { return dickson::class_count(make_dickson_pair(q, n)); },
        py::arg("q"), py::arg("n"), "phi(n) / ord_n(p)");
    m.def(
        "residue_indices",
        [](u64 q, u64 n) { return residue_indices(make_dickson_pair(q, n)).residues; },
        py::arg("q"), py::arg("n"), "i(k) mod n for k = 1..n");

    py::class_<ExtensionField>(m, "ExtensionField",
                               "GF(p^m) with a deterministic modulus and generator")
        .def(py::init<u64, unsigned>(), py::arg("p"), py::arg("m"))
        .def_property_readonly("characteristic", &ExtensionField::characteristic)
        .def_property_readonly("degree", &ExtensionField::degree)
        .def_property_readonly("order", &ExtensionField::order)
        .def_property_readonly("modulus",
                               [](const ExtensionField& f) { return f.modulus().coeffs(); })
        .def_property_readonly("generator",
                               [](const ExtensionField& f) { return f.generator().coeffs; })
        .def("add", [](const ExtensionField& f, Coeffs a,
                       Coeffs b) { return f.add(f.element(a), f.element(b)).coeffs; })
        .def("mul", [](const ExtensionField& f, Coeffs a,
                       Coeffs b) { return f.mul(f.element(a), f.element(b)).coeffs; })
        .def("inv", [](const ExtensionField& f, Coeffs a) { return f.inv(f.element(a)).coeffs; })
        .def("pow", [](const ExtensionField& f, Coeffs a,
                       std::int64_t e) { return f.pow(f.element(a), e).coeffs; })
        .def("frobenius", [](const ExtensionField& f, Coeffs a,
                             unsigned j) { return f.frobenius(f.element(a), j).coeffs; })
        .def("dlog", [](const ExtensionField& f, Coeffs a) { return f.dlog(f.element(a)); });

    py::class_<DicksonNearfield>(m, "DicksonNearfield",
                                 "DN(q,n): GF(q^n) with the coupling-map twisted product")
        .def_property_readonly("q", [](const DicksonNearfield& nf) { return nf.pair().q; })
        .def_property_readonly("n", [](const DicksonNearfield& nf) { return nf.pair().n; })
        .def_property_readonly("order", &DicksonNearfield::order)
        .def_property_readonly("label", &DicksonNearfield::label)
        .def_property_readonly("generator",
                               [](const DicksonNearfield& nf) { return nf.generator().coeffs; })
        .def_property_readonly("generator_exponent", &DicksonNearfield::generator_exponent)
        .def_property_readonly("modulus",
                               [](const DicksonNearfield& nf) {
                                   return nf.field().modulus().coeffs();
                               })
        .def("multiply",
             [](const DicksonNearfield& nf, Coeffs a, Coeffs b) {
                 const ExtensionField& F = nf.field();
                 return nf.nf_mul(F.element(a), F.element(b)).coeffs;
             })
        .def("inverse",
             [](const DicksonNearfield& nf, Coeffs a) {
                 return nf.nf_inv(nf.field().element(a)).coeffs;
             })
        .def("coset_exponent",
             [](const DicksonNearfield& nf, Coeffs b) {
                 return nf.coset_exponent(nf.field().element(b)).k;
             })
        .def("field_add",
             [](const DicksonNearfield& nf, Coeffs a, Coeffs b) {
                 const ExtensionField& F = nf.field();
                 return F.add(F.element(a), F.element(b)).coeffs;
             })
        .def("field_mul",
             [](const DicksonNearfield& nf, Coeffs a, Coeffs b) {
                 const ExtensionField& F = nf.field();
                 return F.mul(F.element(a), F.element(b)).coeffs;
             })
        .def(
            "verify",
            [](const DicksonNearfield& nf, bool exhaustive, u64 samples, u64 seed) {
                const VerificationReport rep =
                    verify_axioms(nf, exhaustive ? CheckMode::exhaustive : CheckMode::sampled,
                                  SampleSpec{samples, seed});
                py::list checks;
                for (const CheckResult& c : rep.checks) checks.append(check_to_dict(c));
                py::dict d;
                d["checks"] = checks;
                d["passed"] = rep.all_passed();
                return d;
            },
            py::arg("exhaustive") = false, py::arg("samples") = 100'000, py::arg("seed") = 0)
        .def("noncommutativity_witness",
             [](const DicksonNearfield& nf) {
                 const NoncommutativityWitness w = noncommutativity_witness(nf);
                 py::dict d;
                 d["a"] = w.a.coeffs;
                 d["b"] = w.b.coeffs;
                 d["lhs"] = w.lhs.coeffs;
                 d["rhs"] = w.rhs.coeffs;
                 return d;
             })
        .def("left_distributivity_witness",
             [](const DicksonNearfield& nf) -> std::optional<std::vector<Coeffs>> {
                 const auto w = left_distributivity_witness(nf);
                 if (!w) return std::nullopt;
                 return std::vector<Coeffs>{(*w)[0].coeffs, (*w)[1].coeffs, (*w)[2].coeffs};
             })
        .def("coupling_check",
             [](const DicksonNearfield& nf, bool exhaustive, u64 samples, u64 seed) {
                 return check_to_dict(coupling_property_check(
                     nf, exhaustive ? CheckMode::exhaustive : CheckMode::sampled,
                     SampleSpec{samples, seed}));
             },
             py::arg("exhaustive") = true, py::arg("samples") = 100'000, py::arg("seed") = 0)
        .def("metacyclic_check",
             [](const DicksonNearfield& nf) { return check_to_dict(metacyclic_check(nf)); })
        .def("descriptor_json",
             [](const DicksonNearfield& nf) {
                 return serialize_descriptor(descriptor_of(nf));
             })
        .def("cayley_csv",
             [](const DicksonNearfield& nf, const std::string& op) {
                 if (op != "add" && op != "mul")
                     throw std::invalid_argument("op must be 'add' or 'mul'");
                 return export_cayley(nf, op == "add" ? CayleyOp::add : CayleyOp::mul);
             },
             py::arg("op"));

    m.def("construct", &build, py::arg("q"), py::arg("n"), py::arg("generator") = py::none(),
          py::arg("class_index") = py::none(),
          "build DN(q,n) over the deterministic GF(q^n)");
    m.def("load_descriptor", &dickson::load_descriptor, py::arg("text"),
          "rebuild a nearfield from its JSON descriptor, re-validating everything");
    m.def(
        "enumerate_variant_classes",
        [](u64 q, u64 n) {
            const VariantClasses vc = enumerate_variants(make_dickson_pair(q, n));
            py::dict d;
            d["predicted"] = vc.predicted;
            d["found"] = vc.representatives.size();
            d["exponents"] = vc.rep_exponents;
            d["variants"] = vc.variant_count;
            d["match"] = vc.matches;
            return d;
        },
        py::arg("q"), py::arg("n"));
}
