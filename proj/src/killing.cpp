#include "kt/killing.hpp"

#include "kt/linalg.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace kt {

VectorFieldM field_T(const VarTablePtr& tab) {
    return {Poly::constant(tab, rat(1)), Poly::zero(tab)};
}

VectorFieldM field_X(const VarTablePtr& tab) {
    return {Poly::zero(tab), Poly::constant(tab, rat(1))};
}

VectorFieldM field_H(const VarTablePtr& tab) {
    return {Poly::variable(tab, "x"), Poly::variable(tab, "t")};
}

std::string ParamScheme::class_label(int n, int r, int m) {
    if (m <= n - 2 * r) return "a" + std::to_string(r + 1) + "_" + std::to_string(m);
    return "b" + std::to_string(n - r - m + 1) + "_" + std::to_string(m);
}

ParamScheme ParamScheme::make(int n) {
    if (n < 1) throw std::invalid_argument("valence must be >= 1");
    ParamScheme s;
    s.n = n;
    for (int m = 0; m <= n; ++m) {
        for (int r = 0; r + m <= n; ++r) {
            s.rm.emplace_back(r, m);
            s.labels.push_back(class_label(n, r, m));
        }
    }
    if (n == 2) s.labels = {"a0", "a1", "a2", "a3", "a4", "a5"};
    return s;
}

int ParamScheme::slot_of(int r, int m) const {
    for (size_t k = 0; k < rm.size(); ++k)
        if (rm[k] == std::make_pair(r, m)) return static_cast<int>(k);
    return -1;
}

std::string component_name(int n, int j) {
    std::string idx(n - j, '1');
    idx.append(j, '2');
    return "K^{" + idx + "}";
}

VarTablePtr geo_table() {
    auto tab = make_table();
    tab->add("t", VarKind::Geometric);
    tab->add("x", VarKind::Geometric);
    return tab;
}

VarTablePtr itkt_table(int n, bool with_group) {
    auto tab = make_table();
    tab->add("t", VarKind::Geometric);
    tab->add("x", VarKind::Geometric);
    for (const auto& label : ParamScheme::make(n).labels) tab->add(label, VarKind::Parameter);
    if (with_group) {
        tab->add("ch", VarKind::Group);
        tab->add("sh", VarKind::Group);
        tab->add("a", VarKind::Group);
        tab->add("b", VarKind::Group);
    }
    return tab;
}

SymTensor scheme_build(const VarTablePtr& tab, const ParamScheme& scheme,
                       const std::vector<Poly>& values) {
    const int n = scheme.n;
    if (values.size() != scheme.labels.size())
        throw std::invalid_argument("value count does not match the scheme");
    int t = tab->require("t"), x = tab->require("x");
    SymTensor K;
    K.n = n;
    for (int j = 0; j <= n; ++j) {
        Poly comp = Poly::zero(tab);
        for (int i = 0; i <= j; ++i) {
            for (int l = 0; l <= n - j; ++l) {
                int slot = scheme.slot_of(j - i, i + l);
                Monomial m(tab->size(), 0);
                m[t] = i;
                m[x] = l;
                Rational w(Integer(binomial(j, i) * binomial(n - j, l)));
                comp = comp + values[slot] * Poly::term(tab, m, w);
            }
        }
        K.comp.push_back(comp);
    }
    return K;
}

SymTensor general_element(int n, const VarTablePtr& tab) {
    ParamScheme scheme = ParamScheme::make(n);
    std::vector<Poly> vars;
    for (const auto& label : scheme.labels) vars.push_back(Poly::variable(tab, label));
    return scheme_build(tab, scheme, vars);
}

SymTensor general_element(int n) { return general_element(n, itkt_table(n)); }

std::vector<Poly> scheme_extract(const SymTensor& K, const ParamScheme& scheme) {
    const int n = scheme.n;
    if (K.n != n) throw std::invalid_argument("tensor valence does not match the scheme");
    const auto& tab = K.table();
    int t = tab->require("t"), x = tab->require("x");

    std::vector<Poly> values;
    values.reserve(scheme.rm.size());
    for (auto [r, m] : scheme.rm) {
        // Representative slot (j, i, l) = (r, 0, m): the t^0 x^m coefficient
        // of comp[r], carrying weight C(n-r, m).
        Monomial mono(tab->size(), 0);
        mono[x] = m;
        Poly coeff = Poly::zero(tab);
        for (const auto& [mk, ck] : K.comp[r].terms()) {
            if (mk[t] != 0 || mk[x] != static_cast<std::uint32_t>(m)) continue;
            Monomial rest = mk;
            rest[x] = 0;
            coeff.add_term(rest, ck);
        }
        values.push_back(coeff * rat_frac(1, binomial(n - r, m)));
    }

    if (!(scheme_build(tab, scheme, values) == K))
        throw std::domain_error("tensor is not in the Killing solution space");
    return values;
}

std::vector<Poly> killing_residuals(const SymTensor& K) {
    const auto& tab = K.table();
    int t = tab->require("t"), x = tab->require("x");
    const int n = K.n;
    std::vector<Poly> res;
    res.push_back(K.comp[0].diff(t));
    for (int j = 0; j < n; ++j)
        res.push_back(K.comp[j].diff(x) * rat(j + 1) - K.comp[j + 1].diff(t) * rat(n - j));
    res.push_back(K.comp[n].diff(x));
    return res;
}

bool killing_check(const SymTensor& K) {
    for (const auto& r : killing_residuals(K))
        if (!r.is_zero()) return false;
    return true;
}

std::vector<SymTensor> killing_basis(int n) {
    if (n < 1) throw std::invalid_argument("valence must be >= 1");
    // Generic components within the degree bounds, over a scratch table with
    // one parameter per coefficient slot.
    auto scratch = make_table();
    int t = scratch->add("t", VarKind::Geometric);
    int x = scratch->add("x", VarKind::Geometric);
    std::map<std::tuple<int, int, int>, int> slot;  // (j, i, l) -> unknown id
    int nu = 0;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
            for (int l = 0; l <= n - j; ++l) {
                scratch->add("u" + std::to_string(nu), VarKind::Parameter);
                slot[{j, i, l}] = nu++;
            }
    VarTablePtr tab = scratch;

    SymTensor generic;
    generic.n = n;
    for (int j = 0; j <= n; ++j) {
        Poly comp = Poly::zero(tab);
        for (int i = 0; i <= j; ++i)
            for (int l = 0; l <= n - j; ++l) {
                Monomial m(tab->size(), 0);
                m[t] = i;
                m[x] = l;
                m[2 + slot[{j, i, l}]] = 1;
                comp.add_term(m, rat(1));
            }
        generic.comp.push_back(comp);
    }

    // Each (t, x)-monomial coefficient of each residual is linear in the
    // unknowns and must vanish.
    std::vector<SparseRow> rows;
    for (const auto& res : killing_residuals(generic)) {
        std::map<std::pair<unsigned, unsigned>, SparseRow> per_monomial;
        for (const auto& [m, c] : res.terms()) {
            int u = -1;
            for (int v = 2; v < tab->size(); ++v)
                if (m[v] > 0) { u = v - 2; break; }
            per_monomial[{m[t], m[x]}][u] += c;
        }
        for (auto& [key, row] : per_monomial) rows.push_back(std::move(row));
    }

    auto vecs = nullspace(rows, nu);
    auto out_tab = geo_table();
    std::vector<SymTensor> basis;
    for (const auto& v : vecs) {
        SymTensor K;
        K.n = n;
        for (int j = 0; j <= n; ++j) {
            Poly comp = Poly::zero(out_tab);
            for (int i = 0; i <= j; ++i)
                for (int l = 0; l <= n - j; ++l) {
                    const Rational& c = v[slot[{j, i, l}]];
                    if (c == 0) continue;
                    Monomial m(2, 0);
                    m[0] = i;
                    m[1] = l;
                    comp.add_term(m, c);
                }
            K.comp.push_back(comp);
        }
        basis.push_back(std::move(K));
    }
    return basis;
}

SymTensor sym_product(const SymTensor& A, const SymTensor& B) {
    const auto& tab = A.table();
    const int n = A.n + B.n;
    SymTensor P;
    P.n = n;
    P.comp.assign(n + 1, Poly::zero(tab));
    // Symbol product: C(n,j) P_j = sum_{ja+jb=j} C(na,ja) C(nb,jb) A_ja B_jb.
    for (int ja = 0; ja <= A.n; ++ja)
        for (int jb = 0; jb <= B.n; ++jb) {
            int j = ja + jb;
            Rational w = rat_frac(binomial(A.n, ja) * binomial(B.n, jb), binomial(n, j));
            P.comp[j] = P.comp[j] + A.comp[ja] * B.comp[jb] * w;
        }
    return P;
}

std::vector<SymTensor> sym_product_basis(int n) {
    auto tab = geo_table();
    SymTensor T = field_T(tab).tensor();
    SymTensor X = field_X(tab).tensor();
    SymTensor H = field_H(tab).tensor();
    std::vector<SymTensor> out;
    for (int p = n; p >= 0; --p)
        for (int q = n - p; q >= 0; --q) {
            int r = n - p - q;
            SymTensor prod;
            bool started = false;
            auto mul = [&](const SymTensor& f, int times) {
                for (int k = 0; k < times; ++k) {
                    prod = started ? sym_product(prod, f) : f;
                    started = true;
                }
            };
            mul(T, p);
            mul(X, q);
            mul(H, r);
            out.push_back(prod);
        }
    return out;
}

long long dtt_dimension(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("dtt_dimension needs m, n >= 1");
    Integer d = binomial(m + n, n + 1) * binomial(m + n - 1, n);
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(m));
    if (!d.fits_slong_p()) throw std::overflow_error("dimension exceeds the return type");
    return d.get_si();
}

size_t tensor_span_dimension(const std::vector<SymTensor>& family) {
    if (family.empty()) return 0;
    std::map<std::pair<int, Monomial>, int> col_ids;
    std::vector<SparseRow> rows;
    for (const auto& K : family) {
        SparseRow row;
        for (int j = 0; j <= K.n; ++j)
            for (const auto& [m, c] : K.comp[j].terms()) {
                auto [it, ins] = col_ids.try_emplace({j, m}, static_cast<int>(col_ids.size()));
                row[it->second] = c;
            }
        rows.push_back(std::move(row));
    }
    Echelon ech;
    for (auto& r : rows) ech.insert(std::move(r));
    return ech.rank();
}

SymTensor eval_params(const SymTensor& K, const std::map<int, Rational>& values) {
    SymTensor out;
    out.n = K.n;
    for (const auto& c : K.comp) out.comp.push_back(c.subst_values(values));
    return out;
}

}  // namespace kt
