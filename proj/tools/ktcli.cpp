// Command-line front end.  Every subcommand renders either deterministic
// text or a versioned JSON report ("schema": "v1"); the seed is echoed into
// all output so randomized verdicts are reproducible byte-for-byte.
//
// Exit codes: 0 success, 1 verification failure (counterexample or broken
// identity), 2 usage error.

#include "CLI11.hpp"

#include "kt/report.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace kt;

struct Common {
    std::string family = "itkt";
    int n = 2;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string output;
};

// Writes either the text body or the JSON dump, to stdout or --output.
int emit(const Common& cfg, const std::string& text, const Json& j) {
    std::string body = cfg.format == "json" ? json_dump(j) : text;
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file: " << cfg.output << "\n";
            return 2;
        }
        out << body;
        return 0;
    }
    std::cout << body;
    return 0;
}

Json envelope(const std::string& command, const Common& cfg) {
    Json j;
    j["schema"] = "v1";
    j["version"] = KT_VERSION;
    j["command"] = command;
    j["family"] = cfg.family;
    j["n"] = cfg.n;
    j["seed"] = cfg.seed;
    return j;
}

std::string head(const std::string& command, const Common& cfg) {
    std::ostringstream os;
    os << "command: " << command << "\n"
       << "family: " << cfg.family << "\n"
       << "n: " << cfg.n << "\n"
       << "seed: " << cfg.seed << "\n";
    return os.str();
}

int cmd_general(const Common& cfg) {
    Json j = envelope("general", cfg);
    std::ostringstream os;
    os << head("general", cfg);
    if (cfg.family == "itkt") {
        auto tab = itkt_table(cfg.n);
        ParamScheme scheme = ParamScheme::make(cfg.n);
        SymTensor K = general_element(cfg.n, tab);
        j["valence"] = cfg.n;
        j["variables"] = variables_json(tab);
        j["labels"] = scheme.labels;
        Json names = Json::array(), comps = Json::array(), text = Json::array();
        os << "parameters:";
        for (const auto& l : scheme.labels) os << " " << l;
        os << "\n";
        for (int c = 0; c <= cfg.n; ++c) {
            std::string line = component_name(cfg.n, c) + " = " + K.comp[c].to_string();
            names.push_back(component_name(cfg.n, c));
            comps.push_back(poly_to_json(K.comp[c]));
            text.push_back(line);
            os << line << "\n";
        }
        j["component_names"] = std::move(names);
        j["components"] = std::move(comps);
        j["text"] = std::move(text);
    } else {
        auto tab = cit_table(cfg.n);
        Poly q = form_poly(general_form(cfg.n, tab));
        j["degree"] = cfg.n;
        j["variables"] = variables_json(tab);
        Json labels = Json::array();
        os << "parameters:";
        for (int i = 0; i <= cfg.n; ++i) {
            labels.push_back("a" + std::to_string(i));
            os << " a" << i;
        }
        os << "\n";
        j["labels"] = std::move(labels);
        j["components"] = Json::array({poly_to_json(q)});
        j["text"] = Json::array({"Q = " + q.to_string()});
        os << "Q = " << q.to_string() << "\n";
    }
    return emit(cfg, os.str(), j);
}

int cmd_generators(const Common& cfg, const std::string& source, bool check) {
    Json j = envelope("generators", cfg);
    j["source"] = cfg.family == "itkt" ? source : "cayley";

    std::vector<Derivation> gens;
    std::vector<std::string> names;
    bool with_diff = false;
    std::vector<GeneratorDiff> diff;
    if (cfg.family == "itkt") {
        names = {"V1", "V2", "V3"};
        if (source == "closed") {
            gens = closed_form_generators(cfg.n).fields;
        } else {
            gens = isometry_generators(cfg.n);
            if (source == "both") {
                diff = closed_form_generators(cfg.n).diff;
                with_diff = true;
            }
        }
    } else {
        names = {"V-", "V0", "V+"};
        gens = cayley_generators(cfg.n);
    }
    const auto& tab = gens.at(0).table();
    j["variables"] = variables_json(tab);

    std::ostringstream os;
    os << head("generators", cfg);
    os << "source: " << j["source"].get<std::string>() << "\n";
    Json glist = Json::array();
    for (size_t i = 0; i < gens.size(); ++i) {
        Json entry;
        entry["name"] = names[i];
        entry["text"] = gens[i].to_string();
        entry["terms"] = derivation_to_json(gens[i]);
        glist.push_back(std::move(entry));
        os << names[i] << " = " << gens[i].to_string() << "\n";
    }
    j["generators"] = std::move(glist);

    bool all_ok = true;
    if (check) {
        struct Relation {
            int i, j;
            Derivation expected;
            std::string text;
        };
        std::vector<Relation> rels;
        if (cfg.family == "itkt") {
            rels.push_back({0, 1, Derivation(tab), "[V1,V2] = 0"});
            rels.push_back({0, 2, -gens[1], "[V1,V3] = -V2"});
            rels.push_back({1, 2, -gens[0], "[V2,V3] = -V1"});
        } else {
            rels.push_back({0, 1, gens[0] * rat(-2), "[V-,V0] = -2*V-"});
            rels.push_back({2, 1, gens[2] * rat(2), "[V+,V0] = 2*V+"});
            rels.push_back({0, 2, gens[1], "[V-,V+] = V0"});
        }
        Json table = Json::array();
        for (const auto& r : rels) {
            Derivation c = commutator(gens[r.i], gens[r.j]);
            bool ok = c == r.expected;
            all_ok = all_ok && ok;
            Json entry;
            entry["relation"] = r.text;
            entry["computed"] = c.to_string();
            entry["ok"] = ok;
            table.push_back(std::move(entry));
            os << r.text << " : " << (ok ? "ok" : "MISMATCH, got " + c.to_string()) << "\n";
        }
        j["commutators"] = std::move(table);
        j["commutators_ok"] = all_ok;
        os << "commutators: " << (all_ok ? "ok" : "MISMATCH") << "\n";
    }

    if (with_diff) {
        j["diff"] = generator_diff_to_json(diff, names);
        os << "diff entries: " << diff.size() << "\n";
        for (const auto& d : diff)
            os << names.at(d.field) << " @ " << d.label << ": mst = " << d.mst.to_string()
               << ", closed = " << d.closed.to_string() << "\n";
    }

    int rc = emit(cfg, os.str(), j);
    if (rc != 0) return rc;
    return all_ok ? 0 : 1;
}

int cmd_invariants(const Common& cfg, int max_degree) {
    Json payload = invariants_payload(cfg.family, cfg.n, max_degree, cfg.seed);
    Json j = envelope("invariants", cfg);
    j["max_degree"] = max_degree;
    j.update(payload);

    std::ostringstream os;
    os << head("invariants", cfg);
    os << "max_degree: " << max_degree << "\n";
    os << "parameter space dimension: " << j["d"].get<int>() << "\n";
    os << "generic orbit dimension: " << j["s"].get<int>() << "\n";
    os << "expected fundamental count: " << j["expected"].get<int>() << "\n";
    for (const auto& dk : j["per_degree"]) {
        os << "degree " << dk["deg"].get<int>() << " kernel (" << dk["text"].size() << ")\n";
        for (const auto& p : dk["text"]) os << "  " << p.get<std::string>() << "\n";
    }
    os << "fundamentals (" << j["fundamentals_text"].size() << ")\n";
    for (size_t i = 0; i < j["fundamentals_text"].size(); ++i)
        os << "  [deg " << j["fundamental_degrees"][i].get<int>() << "] "
           << j["fundamentals_text"][i].get<std::string>() << "\n";
    os << "jacobian rank: " << j["jacobian_rank"].get<int>() << "\n";
    for (const auto& e : j["known"])
        os << "known " << e["name"].get<std::string>() << ": "
           << (e["member"].get<bool>() ? "recovered" : "NOT recovered") << "\n";

    return emit(cfg, os.str(), j);
}

int cmd_verify(const Common& cfg, const std::string& poly_text, int trials) {
    VarTablePtr tab = cfg.family == "itkt" ? itkt_table(cfg.n) : cit_table(cfg.n);
    Poly F = parse_poly(tab, poly_text);
    Family fam = cfg.family == "itkt" ? Family::ITKT : Family::CIT;
    Verdict v = verify_invariance(F, fam, cfg.n, trials, cfg.seed);

    Json j = envelope("verify", cfg);
    j["poly"] = poly_text;
    j["poly_canonical"] = F.to_string();
    j["trials"] = trials;
    j.update(verdict_to_json(v));

    std::ostringstream os;
    os << head("verify", cfg);
    os << "poly: " << F.to_string() << "\n";
    os << "trials: " << trials << "\n";
    os << "pass: " << (v.pass ? "true" : "false") << "\n";
    if (v.counterexample) {
        const auto& c = *v.counterexample;
        os << "counterexample at trial " << c.trial << "\n";
        for (const auto& [name, value] : c.group)
            os << "  group " << name << " = " << rational_text(value) << "\n";
        for (const auto& [name, value] : c.point)
            os << "  point " << name << " = " << rational_text(value) << "\n";
        os << "  before = " << rational_text(c.before) << "\n";
        os << "  after  = " << rational_text(c.after) << "\n";
    }

    int rc = emit(cfg, os.str(), j);
    if (rc != 0) return rc;
    return v.pass ? 0 : 1;
}

int cmd_dims(const Common& cfg, int m, int n_min, int n_max) {
    Json j;
    j["schema"] = "v1";
    j["version"] = KT_VERSION;
    j["command"] = "dims";
    j["m"] = m;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["seed"] = cfg.seed;
    std::ostringstream os;
    os << "command: dims\n"
       << "m: " << m << "\n"
       << "seed: " << cfg.seed << "\n"
       << "n dim\n";
    Json rows = Json::array();
    for (int n = n_min; n <= n_max; ++n) {
        long long d = dtt_dimension(m, n);
        Json r;
        r["n"] = n;
        r["dim"] = d;
        rows.push_back(std::move(r));
        os << n << " " << d << "\n";
    }
    j["rows"] = std::move(rows);
    return emit(cfg, os.str(), j);
}

void add_output_opts(CLI::App* sub, Common& cfg) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "write the report to a file instead of stdout");
    sub->add_option("--seed", cfg.seed, "seed echoed into the report")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact toolkit for Killing tensors on the Minkowski plane and binary "
        "forms on the Euclidean plane: general elements, induced infinitesimal "
        "generators, polynomial invariants and randomized invariance checks."};
    app.require_subcommand(1);

    Common cfg;
    int rc = 0;

    auto* general = app.add_subcommand("general", "print the labeled general element");
    general->add_option("--family", cfg.family, "itkt (Killing tensors) or cit (binary forms)")
        ->check(CLI::IsMember({"itkt", "cit"}))
        ->capture_default_str();
    general->add_option("--n", cfg.n, "valence / form degree")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
    add_output_opts(general, cfg);
    general->callback([&]() { rc = cmd_general(cfg); });

    auto* generators =
        app.add_subcommand("generators", "print the induced parameter-space generators");
    generators->add_option("--family", cfg.family, "itkt or cit")
        ->check(CLI::IsMember({"itkt", "cit"}))
        ->capture_default_str();
    generators->add_option("--n", cfg.n, "valence / form degree")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
    std::string source = "mst";
    generators
        ->add_option("--source", source,
                     "construction for itkt generators: projection (mst), class "
                     "patterns (closed), or both with a diff report")
        ->check(CLI::IsMember({"mst", "closed", "both"}))
        ->capture_default_str();
    bool check_comm = false;
    generators->add_flag("--check-commutators", check_comm,
                         "verify the commutator relations of the generators");
    add_output_opts(generators, cfg);
    generators->callback([&]() { rc = cmd_generators(cfg, source, check_comm); });

    auto* invariants =
        app.add_subcommand("invariants", "degree-by-degree search for fundamental invariants");
    invariants->add_option("--family", cfg.family, "itkt or cit")
        ->check(CLI::IsMember({"itkt", "cit"}))
        ->capture_default_str();
    invariants->add_option("--n", cfg.n, "valence / form degree")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    int max_degree = 4;
    invariants->add_option("--max-degree", max_degree, "largest invariant degree searched")
        ->check(CLI::Range(1, 10))
        ->capture_default_str();
    add_output_opts(invariants, cfg);
    invariants->callback([&]() { rc = cmd_invariants(cfg, max_degree); });

    auto* verify =
        app.add_subcommand("verify", "randomized exact invariance check of a polynomial");
    verify->add_option("--family", cfg.family, "itkt or cit")
        ->check(CLI::IsMember({"itkt", "cit"}))
        ->capture_default_str();
    verify->add_option("--n", cfg.n, "valence / form degree")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    std::string poly_text;
    verify->add_option("--poly", poly_text, "polynomial in the parameter labels")->required();
    int trials = 100;
    verify->add_option("--trials", trials, "number of random (group element, point) trials")
        ->check(CLI::Range(0, 100000))
        ->capture_default_str();
    add_output_opts(verify, cfg);
    verify->callback([&]() { rc = cmd_verify(cfg, poly_text, trials); });

    auto* dims = app.add_subcommand(
        "dims", "table of Killing tensor space dimensions on constant-curvature spaces");
    int m = 2, n_min = 1, n_max = 8;
    dims->add_option("--m", m, "dimension of the underlying space")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    dims->add_option("--n-min", n_min, "first valence")
        ->check(CLI::Range(1, 30))
        ->capture_default_str();
    dims->add_option("--n-max", n_max, "last valence")
        ->check(CLI::Range(1, 30))
        ->capture_default_str();
    add_output_opts(dims, cfg);
    dims->callback([&]() {
        if (n_min > n_max) throw CLI::ValidationError("dims", "--n-min must be <= --n-max");
        rc = cmd_dims(cfg, m, n_min, n_max);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
