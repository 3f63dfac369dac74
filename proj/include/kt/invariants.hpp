#pragma once

// Joint-kernel computation for sets of derivations: invariants degree by
// degree, fundamental filtering against products of earlier findings, orbit
// dimension and functional independence at sample points, and the covariant
// kernel for the extended generators.

#include "kt/derivations.hpp"
#include "kt/linalg.hpp"
#include "kt/poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kt {

// All monomials over the Parameter-kind variables with total degree deg,
// sorted graded-lex descending (column 0 = leading monomial).
std::vector<Monomial> degree_monomials(const VarTablePtr& tab, int deg);

// Basis of {F homogeneous of degree deg in the parameters : V(F) = 0 for
// every V}.  Generators must have parameter-linear coefficients (checked
// structurally; violation throws std::invalid_argument) so they preserve
// degree.  The basis is the canonical reduced-echelon one, each element
// normalized to coprime integer coefficients with positive leading term.
std::vector<Poly> kernel_at_degree(const std::vector<Derivation>& gens, int deg);

// Rank of the generators' coefficient matrix at the point (tangent space of
// the orbit through that point).
int orbit_dimension(const std::vector<Derivation>& gens, const std::map<int, Rational>& point);

// Exact Jacobian rank of the polynomials at the point.
int functional_independence(const std::vector<Poly>& polys,
                            const std::map<int, Rational>& point);

struct DegreeKernel {
    int deg = 0;
    std::vector<Poly> basis;
};

struct InvariantReport {
    std::string ident;  // generator-set identifier, e.g. "itkt n=2"
    int d = 0;          // parameter-space dimension
    int s = 0;          // generic orbit dimension (max over sampled points)
    int expected = 0;   // d - s
    int max_degree = 0;
    std::uint64_t seed = 0;
    std::vector<DegreeKernel> per_degree;
    std::vector<Poly> fundamentals;       // new at their degree, reduced
    std::vector<int> fundamental_degrees;
    int jacobian_rank = 0;                // of the fundamentals at the sample point
};

// Degree-by-degree search up to max_deg: kernel elements lying in the span
// of same-degree products of earlier fundamentals are filtered out; the
// survivors (reduced against that span) are reported as fundamentals.
// Orbit dimension is the max rank over 5 seeded sample points.
InvariantReport fundamental_search(const std::vector<Derivation>& gens, int max_deg,
                                   std::uint64_t seed, const std::string& ident);

// Whether `target` lies in the exact linear span of `basis`.
bool in_span(const std::vector<Poly>& basis, const Poly& target);

// Joint kernel of the extended generators on polynomials of total degree
// 1..deg over parameters and {t, x} (the extended fields only ever lower
// the geometric degree, so this space is stable under them).  Constant-free
// canonical basis.
std::vector<Poly> covariant_kernel(int n, int deg);

}  // namespace kt
