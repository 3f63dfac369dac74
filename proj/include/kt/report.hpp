#pragma once

// Deterministic JSON renderings of library objects.  Reports use
// nlohmann::ordered_json so key order is insertion order, and every
// polynomial serializes its terms in the canonical graded-lex ascending
// order; two runs with the same config and seed emit identical bytes.

#include "kt/derivations.hpp"
#include "kt/group_action.hpp"
#include "kt/invariants.hpp"
#include "kt/killing.hpp"
#include "kt/poly.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace kt {

using Json = nlohmann::ordered_json;

// Exact rational as a string, "num" or "num/den".
std::string rational_text(const Rational& q);

// List of {exponents: [per-variable powers], num, den} with num/den as
// decimal strings (coefficients are arbitrary-precision).
Json poly_to_json(const Poly& p);
Json polys_to_json(const std::vector<Poly>& ps);

// Variable names in table order; exponent vectors index into this list.
Json variables_json(const VarTablePtr& tab);

// List of {var, coeff: poly-json, text} in table order.
Json derivation_to_json(const Derivation& V);

Json counterexample_to_json(const Counterexample& c);
Json verdict_to_json(const Verdict& v);

// {deg, kernel: [poly-json], text: [..]} entries plus the search summary.
Json invariant_report_to_json(const InvariantReport& rep);

Json generator_diff_to_json(const std::vector<GeneratorDiff>& diff,
                            const std::vector<std::string>& field_names);

// Runs the fundamental-invariant search for a family ("itkt" or "cit") and
// returns the full payload: variables, report fields, and span-membership
// flags for the classical invariants of the quadratic cases ("known").
Json invariants_payload(const std::string& family, int n, int max_degree, std::uint64_t seed);

// dump(indent=2) with a trailing newline.
std::string json_dump(const Json& j);

}  // namespace kt
