#include "kt/invariants.hpp"

#include "kt/group_action.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kt {

namespace {

// Monomials over `vars` with total degree exactly deg (deg_lo < 0) or with
// total degree in [deg_lo, deg] when deg_lo >= 1.
void enumerate(const std::vector<int>& vars, int nvars_total, int deg, int deg_lo,
               std::vector<Monomial>& out) {
    Monomial cur(nvars_total, 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i + 1 == vars.size()) {
            if (deg_lo >= 0) {
                for (int e = 0; e <= left; ++e) {
                    cur[vars[i]] = e;
                    if (static_cast<int>(total_degree(cur)) >= deg_lo) out.push_back(cur);
                }
                cur[vars[i]] = 0;
            } else {
                cur[vars[i]] = left;
                out.push_back(cur);
                cur[vars[i]] = 0;
            }
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[vars[i]] = e;
            rec(i + 1, left - e);
        }
        cur[vars[i]] = 0;
    };
    if (!vars.empty()) rec(0, deg);
    std::sort(out.begin(), out.end(), GrlexLess());
    std::reverse(out.begin(), out.end());  // column 0 = grlex-largest
}

SparseRow poly_to_row(const Poly& p, const std::map<Monomial, int, GrlexLess>& col) {
    SparseRow row;
    for (const auto& [m, c] : p.terms()) row[col.at(m)] = c;
    return row;
}

Poly row_to_poly(const SparseRow& row, const std::vector<Monomial>& monomials,
                 const VarTablePtr& tab) {
    Poly p = Poly::zero(tab);
    for (const auto& [c, v] : row) p.add_term(monomials[c], v);
    return p;
}

// Kernel of the generators on the span of `monomials` (a subspace stable
// under every generator).
std::vector<Poly> kernel_on(const std::vector<Derivation>& gens,
                            const std::vector<Monomial>& monomials) {
    const auto& tab = gens.at(0).table();
    std::map<Monomial, int, GrlexLess> col;
    for (size_t i = 0; i < monomials.size(); ++i) col[monomials[i]] = static_cast<int>(i);

    std::vector<SparseRow> rows;
    for (const auto& V : gens) {
        std::map<Monomial, SparseRow, GrlexLess> per_target;
        for (size_t i = 0; i < monomials.size(); ++i) {
            Poly img = V.apply(Poly::term(tab, monomials[i], rat(1)));
            for (const auto& [m, c] : img.terms()) per_target[m][static_cast<int>(i)] = c;
        }
        for (auto& [m, row] : per_target) rows.push_back(std::move(row));
    }

    std::vector<Poly> out;
    for (const auto& v : nullspace(rows, static_cast<int>(monomials.size()))) {
        Poly p = Poly::zero(tab);
        for (size_t c = 0; c < v.size(); ++c)
            if (v[c] != 0) p.add_term(monomials[c], v[c]);
        out.push_back(p.normalized());
    }
    return out;
}

std::map<int, Rational> sample_point(const VarTablePtr& tab, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::map<int, Rational> point;
    for (int p : tab->indices_of(VarKind::Parameter)) point[p] = random_rational(eng, 6, 6);
    return point;
}

}  // namespace

std::vector<Monomial> degree_monomials(const VarTablePtr& tab, int deg) {
    std::vector<Monomial> out;
    enumerate(tab->indices_of(VarKind::Parameter), tab->size(), deg, -1, out);
    return out;
}

std::vector<Poly> kernel_at_degree(const std::vector<Derivation>& gens, int deg) {
    if (deg < 1) throw std::invalid_argument("kernel degree must be >= 1");
    const auto& tab = gens.at(0).table();
    for (const auto& V : gens)
        for (const auto& [v, c] : V.coeffs()) {
            if (tab->kind(v) != VarKind::Parameter)
                throw std::invalid_argument("generator moves a non-parameter variable");
            for (const auto& [m, co] : c.terms()) {
                bool linear = total_degree(m) == 1;
                if (linear)
                    for (int i = 0; i < tab->size(); ++i)
                        if (m[i] == 1 && tab->kind(i) != VarKind::Parameter) linear = false;
                if (!linear)
                    throw std::invalid_argument(
                        "generator coefficients must be parameter-linear");
            }
        }
    return kernel_on(gens, degree_monomials(tab, deg));
}

int orbit_dimension(const std::vector<Derivation>& gens,
                    const std::map<int, Rational>& point) {
    const auto& tab = gens.at(0).table();
    std::vector<int> params = tab->indices_of(VarKind::Parameter);
    std::vector<std::vector<Rational>> mat;
    for (const auto& V : gens) {
        std::vector<Rational> row;
        for (int p : params) row.push_back(V.coeff(p).subst_values(point).constant_term());
        mat.push_back(std::move(row));
    }
    return static_cast<int>(rank_of(mat));
}

int functional_independence(const std::vector<Poly>& polys,
                            const std::map<int, Rational>& point) {
    if (polys.empty()) return 0;
    const auto& tab = polys.at(0).table();
    std::vector<int> params = tab->indices_of(VarKind::Parameter);
    std::vector<std::vector<Rational>> jac;
    for (const auto& F : polys) {
        std::vector<Rational> row;
        for (int p : params) row.push_back(F.diff(p).subst_values(point).constant_term());
        jac.push_back(std::move(row));
    }
    return static_cast<int>(rank_of(jac));
}

InvariantReport fundamental_search(const std::vector<Derivation>& gens, int max_deg,
                                   std::uint64_t seed, const std::string& ident) {
    if (max_deg < 1) throw std::invalid_argument("max degree must be >= 1");
    const auto& tab = gens.at(0).table();

    InvariantReport rep;
    rep.ident = ident;
    rep.d = static_cast<int>(tab->indices_of(VarKind::Parameter).size());
    rep.max_degree = max_deg;
    rep.seed = seed;

    std::map<int, Rational> best_point;
    for (std::uint64_t k = 0; k < 5; ++k) {
        auto point = sample_point(tab, mix_seed(seed, 9000 + k));
        int s = orbit_dimension(gens, point);
        if (s > rep.s || best_point.empty()) {
            rep.s = s;
            best_point = std::move(point);
        }
    }
    rep.expected = rep.d - rep.s;

    for (int deg = 1; deg <= max_deg; ++deg) {
        DegreeKernel dk;
        dk.deg = deg;
        dk.basis = kernel_at_degree(gens, deg);
        std::vector<Monomial> monomials = degree_monomials(tab, deg);
        std::map<Monomial, int, GrlexLess> col;
        for (size_t i = 0; i < monomials.size(); ++i) col[monomials[i]] = static_cast<int>(i);

        // Span of all degree-deg products of earlier fundamentals.
        Echelon span;
        std::function<void(size_t, int, Poly)> products = [&](size_t i, int left, Poly acc) {
            if (left == 0) {
                span.insert(poly_to_row(acc, col));
                return;
            }
            if (i == rep.fundamentals.size()) return;
            int fd = rep.fundamental_degrees[i];
            Poly p = acc;
            for (int e = 0; e * fd <= left; ++e) {
                if (e > 0) p = p * rep.fundamentals[i];
                products(i + 1, left - e * fd, p);
            }
        };
        products(0, deg, Poly::constant(tab, rat(1)));

        for (const auto& F : dk.basis) {
            SparseRow rem = span.reduce(poly_to_row(F, col));
            if (rem.empty()) continue;
            Poly fresh = row_to_poly(rem, monomials, tab).normalized();
            span.insert(std::move(rem));
            rep.fundamentals.push_back(fresh);
            rep.fundamental_degrees.push_back(deg);
        }
        rep.per_degree.push_back(std::move(dk));
    }

    rep.jacobian_rank = functional_independence(rep.fundamentals, best_point);
    return rep;
}

bool in_span(const std::vector<Poly>& basis, const Poly& target) {
    if (target.is_zero()) return true;
    std::map<Monomial, int, GrlexLess> col;
    for (const auto& p : basis)
        for (const auto& [m, c] : p.terms()) col.emplace(m, 0);
    for (const auto& [m, c] : target.terms())
        if (!col.count(m)) return false;
    int id = 0;
    for (auto& [m, v] : col) v = id++;
    Echelon ech;
    for (const auto& p : basis) ech.insert(poly_to_row(p, col));
    return ech.reduce(poly_to_row(target, col)).empty();
}

std::vector<Poly> covariant_kernel(int n, int deg) {
    if (deg < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<Derivation> gens = extended_generators(n);
    const auto& tab = gens.at(0).table();
    std::vector<int> vars;
    for (int i = 0; i < tab->size(); ++i) vars.push_back(i);
    std::vector<Monomial> monomials;
    enumerate(vars, tab->size(), deg, 1, monomials);
    return kernel_on(gens, monomials);
}

}  // namespace kt
