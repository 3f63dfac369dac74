// Python bindings: a thin surface over the core operations.  Structured
// results cross the boundary as JSON strings (same payloads the CLI emits)
// or as plain dicts; polynomials travel as canonical text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kt/report.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace kt;

namespace {

Family parse_family(const std::string& family) {
    if (family == "itkt") return Family::ITKT;
    if (family == "cit") return Family::CIT;
    throw std::invalid_argument("family must be 'itkt' or 'cit'");
}

VarTablePtr family_table(const std::string& family, int n) {
    return family == "itkt" ? itkt_table(n) : cit_table(n);
}

std::vector<Derivation> family_generators(const std::string& family, int n) {
    parse_family(family);
    return family == "itkt" ? isometry_generators(n) : cayley_generators(n);
}

}  // namespace

PYBIND11_MODULE(ktinv, mod) {
    mod.doc() =
        "Exact toolkit for Killing tensors on the Minkowski plane and binary "
        "forms on the Euclidean plane.";
    mod.attr("__version__") = KT_VERSION;

    mod.def("dtt_dimension", &dtt_dimension, py::arg("m"), py::arg("n"),
            "Dimension of the valence-n Killing tensor space on an "
            "m-dimensional constant-curvature space.");

    mod.def(
        "killing_dimension", [](int n) { return killing_basis(n).size(); }, py::arg("n"),
        "Dimension found by the direct linear solve (always (n+1)(n+2)/2).");

    mod.def(
        "general",
        [](const std::string& family, int n) {
            parse_family(family);
            std::vector<std::string> lines;
            if (family == "itkt") {
                SymTensor K = general_element(n);
                for (int j = 0; j <= n; ++j)
                    lines.push_back(component_name(n, j) + " = " + K.comp[j].to_string());
            } else {
                lines.push_back("Q = " + form_poly(general_form(n)).to_string());
            }
            return lines;
        },
        py::arg("family"), py::arg("n"),
        "Canonical text of the labeled general element, one line per component.");

    mod.def(
        "labels",
        [](const std::string& family, int n) {
            parse_family(family);
            if (family == "itkt") return ParamScheme::make(n).labels;
            std::vector<std::string> out;
            for (int i = 0; i <= n; ++i) out.push_back("a" + std::to_string(i));
            return out;
        },
        py::arg("family"), py::arg("n"), "Parameter labels in canonical order.");

    mod.def(
        "generators",
        [](const std::string& family, int n) {
            std::vector<std::string> lines;
            std::vector<std::string> names = family == "itkt"
                                                 ? std::vector<std::string>{"V1", "V2", "V3"}
                                                 : std::vector<std::string>{"V-", "V0", "V+"};
            std::vector<Derivation> gens = family_generators(family, n);
            for (size_t i = 0; i < gens.size(); ++i)
                lines.push_back(names[i] + " = " + gens[i].to_string());
            return lines;
        },
        py::arg("family"), py::arg("n"),
        "Canonical text of the induced parameter-space generators.");

    mod.def(
        "commutators_ok",
        [](const std::string& family, int n) {
            std::vector<Derivation> g = family_generators(family, n);
            if (family == "itkt")
                return commutator(g[0], g[1]).is_zero() && commutator(g[0], g[2]) == -g[1] &&
                       commutator(g[1], g[2]) == -g[0];
            return commutator(g[0], g[1]) == g[0] * rat(-2) &&
                   commutator(g[2], g[1]) == g[2] * rat(2) && commutator(g[0], g[2]) == g[1];
        },
        py::arg("family"), py::arg("n"),
        "Whether the generators satisfy their commutator relations exactly.");

    mod.def(
        "invariants_json",
        [](const std::string& family, int n, int max_degree, std::uint64_t seed) {
            return json_dump(invariants_payload(family, n, max_degree, seed));
        },
        py::arg("family"), py::arg("n"), py::arg("max_degree") = 4, py::arg("seed") = 0,
        "JSON payload of the fundamental-invariant search.");

    mod.def(
        "verify",
        [](const std::string& family, int n, const std::string& poly, int trials,
           std::uint64_t seed) {
            Poly F = parse_poly(family_table(family, n), poly);
            Verdict v = verify_invariance(F, parse_family(family), n, trials, seed);
            py::dict out;
            out["pass"] = v.pass;
            out["trials"] = v.trials;
            if (v.counterexample) {
                py::dict c;
                c["trial"] = v.counterexample->trial;
                py::dict group, point;
                for (const auto& [name, value] : v.counterexample->group)
                    group[py::str(name)] = rational_text(value);
                for (const auto& [name, value] : v.counterexample->point)
                    point[py::str(name)] = rational_text(value);
                c["group"] = group;
                c["point"] = point;
                c["before"] = rational_text(v.counterexample->before);
                c["after"] = rational_text(v.counterexample->after);
                out["counterexample"] = c;
            } else {
                out["counterexample"] = py::none();
            }
            return out;
        },
        py::arg("family"), py::arg("n"), py::arg("poly"), py::arg("trials") = 100,
        py::arg("seed") = 0,
        "Exact randomized invariance check of a polynomial in the parameter labels.");
}
