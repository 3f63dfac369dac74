#include "kt/derivations.hpp"

#include <algorithm>
#include <stdexcept>

namespace kt {

Poly Derivation::coeff(int var) const {
    auto it = coeff_.find(var);
    return it == coeff_.end() ? Poly::zero(tab_) : it->second;
}

Poly Derivation::coeff(const std::string& name) const { return coeff(tab_->require(name)); }

void Derivation::set_coeff(int var, Poly p) {
    if (var < 0 || var >= tab_->size()) throw std::invalid_argument("derivation: bad variable");
    if (p.is_zero())
        coeff_.erase(var);
    else
        coeff_[var] = std::move(p);
}

Poly Derivation::apply(const Poly& p) const {
    Poly out = Poly::zero(tab_);
    for (const auto& [v, c] : coeff_) out = out + c * p.diff(v);
    return out;
}

Derivation Derivation::operator+(const Derivation& rhs) const {
    Derivation out(tab_);
    for (const auto& [v, c] : coeff_) out.set_coeff(v, c);
    for (const auto& [v, c] : rhs.coeff_) out.set_coeff(v, out.coeff(v) + c);
    return out;
}

Derivation Derivation::operator-(const Derivation& rhs) const { return *this + rhs * rat(-1); }

Derivation Derivation::operator*(const Rational& c) const {
    Derivation out(tab_);
    if (c == 0) return out;
    for (const auto& [v, p] : coeff_) out.set_coeff(v, p * c);
    return out;
}

bool Derivation::operator==(const Derivation& rhs) const {
    if (!tab_->same_as(*rhs.tab_)) return false;
    return coeff_ == rhs.coeff_;
}

std::string Derivation::to_string() const {
    if (coeff_.empty()) return "0";
    std::string out;
    for (const auto& [v, c] : coeff_) {
        std::string cs = c.to_string();
        bool neg = c.term_count() == 1 && cs.size() > 1 && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        bool atomic = c.term_count() == 1;
        std::string body;
        if (cs == "1")
            body = "d_" + tab_->name(v);
        else if (atomic)
            body = cs + "*d_" + tab_->name(v);
        else
            body = "(" + cs + ")*d_" + tab_->name(v);
        if (out.empty())
            out = neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

Derivation commutator(const Derivation& d1, const Derivation& d2) {
    Derivation out(d1.table());
    std::map<int, Poly> acc;
    for (const auto& [v, c] : d2.coeffs()) acc[v] = d1.apply(c);
    for (const auto& [v, c] : d1.coeffs()) {
        auto it = acc.find(v);
        if (it == acc.end())
            acc[v] = -d2.apply(c);
        else
            it->second = it->second - d2.apply(c);
    }
    for (auto& [v, c] : acc) out.set_coeff(v, std::move(c));
    return out;
}

SymTensor lie_derivative(const VectorFieldM& X, const SymTensor& K) {
    const auto& tab = K.table();
    if (K.n < 1) throw std::invalid_argument("lie_derivative needs valence >= 1");
    int t = tab->require("t"), x = tab->require("x");
    const Poly &Xt = X.vt, &Xx = X.vx;
    SymTensor out;
    out.n = K.n;
    const int n = K.n;
    for (int j = 0; j <= n; ++j) {
        Poly r = Xt * K.comp[j].diff(t) + Xx * K.comp[j].diff(x);
        r = r - (K.comp[j] * Xt.diff(t)) * rat(n - j);
        if (j + 1 <= n) r = r - (K.comp[j + 1] * Xt.diff(x)) * rat(n - j);
        if (j - 1 >= 0) r = r - (K.comp[j - 1] * Xx.diff(t)) * rat(j);
        r = r - (K.comp[j] * Xx.diff(x)) * rat(j);
        out.comp.push_back(r);
    }
    return out;
}

Derivation mst_project(const SymTensor& LK, const SymTensor& general,
                       const ParamScheme& scheme) {
    if (LK.n != general.n || LK.n != scheme.n)
        throw std::invalid_argument("mst_project: valence mismatch");
    const auto& tab = LK.table();
    std::vector<Poly> values = scheme_extract(LK, scheme);
    Derivation D(tab);
    for (size_t k = 0; k < values.size(); ++k)
        D.set_coeff(tab->require(scheme.labels[k]), values[k]);
    return D;
}

std::vector<Derivation> isometry_generators(int n, const VarTablePtr& tab) {
    ParamScheme scheme = ParamScheme::make(n);
    SymTensor gen = general_element(n, tab);
    std::vector<Derivation> out;
    for (const VectorFieldM& X : {field_T(tab), field_X(tab), field_H(tab)})
        out.push_back(mst_project(lie_derivative(X, gen), gen, scheme));
    return out;
}

std::vector<Derivation> isometry_generators(int n) {
    return isometry_generators(n, itkt_table(n));
}

ClosedFormResult closed_form_generators(int n) {
    if (n < 2) throw std::invalid_argument("closed-form patterns start at valence 2");
    auto tab = itkt_table(n);
    ParamScheme scheme = ParamScheme::make(n);
    auto param = [&](int r, int m) {
        int slot = scheme.slot_of(r, m);
        if (slot < 0) throw std::logic_error("class index out of range");
        return Poly::variable(tab, scheme.labels[slot]);
    };

    ClosedFormResult res;
    Derivation V1(tab), V2(tab), V3(tab);
    for (size_t k = 0; k < scheme.labels.size(); ++k) {
        auto [r, m] = scheme.rm[k];
        int v = tab->require(scheme.labels[k]);
        if (r >= 1) V1.set_coeff(v, param(r - 1, m + 1) * rat(r));
        if (m <= n - r - 1) V2.set_coeff(v, param(r, m + 1) * rat(n - r - m));
        Poly c3 = Poly::zero(tab);
        if (r >= 1) c3 = c3 - param(r - 1, m) * rat(r);
        if (r + 1 + m <= n) c3 = c3 - param(r + 1, m) * rat(n - r - m);
        V3.set_coeff(v, c3);
    }
    res.fields = {V1, V2, V3};

    std::vector<Derivation> mst = isometry_generators(n, tab);
    for (int f = 0; f < 3; ++f)
        for (size_t k = 0; k < scheme.labels.size(); ++k) {
            int v = tab->require(scheme.labels[k]);
            Poly a = mst[f].coeff(v), b = res.fields[f].coeff(v);
            if (a != b) res.diff.push_back({f, scheme.labels[k], a, b});
        }
    return res;
}

std::vector<Derivation> cayley_generators(int n, const VarTablePtr& tab) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    auto a = [&](int i) { return Poly::variable(tab, "a" + std::to_string(i)); };
    Derivation lower(tab), euler(tab), raise(tab);
    for (int i = 0; i <= n; ++i) {
        int v = tab->require("a" + std::to_string(i));
        if (i < n) lower.set_coeff(v, a(i + 1) * rat(n - i));
        euler.set_coeff(v, a(i) * rat(2 * i - n));
        if (i > 0) raise.set_coeff(v, a(i - 1) * rat(i));
    }
    return {lower, euler, raise};
}

std::vector<Derivation> cayley_generators(int n) { return cayley_generators(n, cit_table(n)); }

std::vector<Derivation> extended_generators(int n) {
    auto tab = itkt_table(n);
    std::vector<Derivation> V = isometry_generators(n, tab);
    int t = tab->require("t"), x = tab->require("x");
    V[0].set_coeff(t, V[0].coeff(t) - Poly::constant(tab, rat(1)));
    V[1].set_coeff(x, V[1].coeff(x) - Poly::constant(tab, rat(1)));
    V[2].set_coeff(t, V[2].coeff(t) - Poly::variable(tab, x));
    V[2].set_coeff(x, V[2].coeff(x) - Poly::variable(tab, t));
    return V;
}

VarTablePtr cit_table(int n) {
    auto tab = make_table();
    tab->add("x", VarKind::Geometric);
    tab->add("y", VarKind::Geometric);
    for (int i = 0; i <= n; ++i) tab->add("a" + std::to_string(i), VarKind::Parameter);
    return tab;
}

BinaryForm general_form(int n, const VarTablePtr& tab) {
    BinaryForm Q;
    Q.n = n;
    for (int i = 0; i <= n; ++i)
        Q.coeff.push_back(Poly::variable(tab, "a" + std::to_string(i)));
    return Q;
}

BinaryForm general_form(int n) { return general_form(n, cit_table(n)); }

Poly form_poly(const BinaryForm& Q) {
    const auto& tab = Q.table();
    int x = tab->require("x"), y = tab->require("y");
    Poly out = Poly::zero(tab);
    for (int i = 0; i <= Q.n; ++i) {
        Monomial m(tab->size(), 0);
        m[x] = Q.n - i;
        m[y] = i;
        out = out + Q.coeff[i] * Poly::term(tab, m, Rational(binomial(Q.n, i)));
    }
    return out;
}

BinaryForm form_from_poly(int n, const Poly& p) {
    const auto& tab = p.table();
    int x = tab->require("x"), y = tab->require("y");
    BinaryForm Q;
    Q.n = n;
    Q.coeff.assign(n + 1, Poly::zero(tab));
    for (const auto& [m, c] : p.terms()) {
        int dx = m[x], dy = m[y];
        if (dx + dy != n) throw std::domain_error("polynomial is not a degree-n form");
        Monomial rest = m;
        rest[x] = 0;
        rest[y] = 0;
        Q.coeff[dy].add_term(rest, c / Rational(binomial(n, dy)));
    }
    return Q;
}

}  // namespace kt
