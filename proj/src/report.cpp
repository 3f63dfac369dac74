#include "kt/report.hpp"

namespace kt {

std::string rational_text(const Rational& q) { return q.get_str(); }

Json poly_to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term;
        term["exponents"] = Json::array();
        for (unsigned e : m) term["exponents"].push_back(e);
        term["num"] = c.get_num().get_str();
        term["den"] = c.get_den().get_str();
        out.push_back(std::move(term));
    }
    return out;
}

Json polys_to_json(const std::vector<Poly>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(poly_to_json(p));
    return out;
}

Json variables_json(const VarTablePtr& tab) {
    Json out = Json::array();
    for (int i = 0; i < tab->size(); ++i) out.push_back(tab->name(i));
    return out;
}

Json derivation_to_json(const Derivation& V) {
    Json out = Json::array();
    for (const auto& [var, coeff] : V.coeffs()) {
        Json entry;
        entry["var"] = V.table()->name(var);
        entry["coeff"] = poly_to_json(coeff);
        entry["text"] = coeff.to_string();
        out.push_back(std::move(entry));
    }
    return out;
}

Json counterexample_to_json(const Counterexample& c) {
    Json out;
    out["trial"] = c.trial;
    Json group;
    for (const auto& [name, value] : c.group) group[name] = rational_text(value);
    out["group"] = std::move(group);
    Json point;
    for (const auto& [name, value] : c.point) point[name] = rational_text(value);
    out["point"] = std::move(point);
    out["before"] = rational_text(c.before);
    out["after"] = rational_text(c.after);
    return out;
}

Json verdict_to_json(const Verdict& v) {
    Json out;
    out["pass"] = v.pass;
    out["trials"] = v.trials;
    out["counterexample"] =
        v.counterexample ? counterexample_to_json(*v.counterexample) : Json(nullptr);
    return out;
}

Json invariant_report_to_json(const InvariantReport& rep) {
    Json out;
    out["ident"] = rep.ident;
    out["d"] = rep.d;
    out["s"] = rep.s;
    out["expected"] = rep.expected;
    out["max_degree"] = rep.max_degree;
    out["seed"] = rep.seed;
    Json per = Json::array();
    for (const auto& dk : rep.per_degree) {
        Json entry;
        entry["deg"] = dk.deg;
        entry["kernel"] = polys_to_json(dk.basis);
        Json text = Json::array();
        for (const auto& p : dk.basis) text.push_back(p.to_string());
        entry["text"] = std::move(text);
        per.push_back(std::move(entry));
    }
    out["per_degree"] = std::move(per);
    out["fundamentals"] = polys_to_json(rep.fundamentals);
    Json ftext = Json::array();
    for (const auto& p : rep.fundamentals) ftext.push_back(p.to_string());
    out["fundamentals_text"] = std::move(ftext);
    out["fundamental_degrees"] = rep.fundamental_degrees;
    out["jacobian_rank"] = rep.jacobian_rank;
    return out;
}

Json generator_diff_to_json(const std::vector<GeneratorDiff>& diff,
                            const std::vector<std::string>& field_names) {
    Json out = Json::array();
    for (const auto& d : diff) {
        Json entry;
        entry["field"] = field_names.at(d.field);
        entry["term"] = d.label;
        entry["mst"] = poly_to_json(d.mst);
        entry["mst_text"] = d.mst.to_string();
        entry["closed"] = poly_to_json(d.closed);
        entry["closed_text"] = d.closed.to_string();
        out.push_back(std::move(entry));
    }
    return out;
}

Json invariants_payload(const std::string& family, int n, int max_degree, std::uint64_t seed) {
    VarTablePtr tab;
    std::vector<Derivation> gens;
    if (family == "itkt") {
        tab = itkt_table(n);
        gens = isometry_generators(n, tab);
    } else if (family == "cit") {
        tab = cit_table(n);
        gens = cayley_generators(n, tab);
    } else {
        throw std::invalid_argument("family must be 'itkt' or 'cit'");
    }
    InvariantReport rep =
        fundamental_search(gens, max_degree, seed, family + " n=" + std::to_string(n));

    Json j;
    j["variables"] = variables_json(tab);
    j.update(invariant_report_to_json(rep));

    // Classical invariants of the quadratic cases, flagged by membership in
    // the kernel found at their degree.
    Json known = Json::array();
    auto add_known = [&](const std::string& name, const Poly& P) {
        int dg = P.degree();
        bool member = false;
        for (const auto& dk : rep.per_degree)
            if (dk.deg == dg) member = in_span(dk.basis, P);
        Json e;
        e["name"] = name;
        e["text"] = P.to_string();
        e["degree"] = dg;
        e["member"] = member;
        known.push_back(std::move(e));
    };
    auto v = [&](const std::string& s) { return Poly::variable(tab, s); };
    if (family == "itkt" && n == 2) {
        Poly a0 = v("a0"), a1 = v("a1"), a2 = v("a2"), a3 = v("a3"), a4 = v("a4"), a5 = v("a5");
        add_known("Delta1", a5);
        add_known("Delta2", (a0 - a2) * a5 - a3 * a3 + a4 * a4);
        Poly p = a3 * a3 + a4 * a4 - a5 * (a0 + a2);
        Poly q = a5 * a1 - a3 * a4;
        add_known("Delta3", p * p - rat(4) * (q * q));
    } else if (family == "cit" && n == 2) {
        add_known("discriminant", v("a0") * v("a2") - v("a1") * v("a1"));
    }
    j["known"] = std::move(known);
    return j;
}

std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kt
