#include "kt/group_action.hpp"

#include <stdexcept>

namespace kt {

IsometryElem::IsometryElem(const Rational& lam_, const Rational& a_, const Rational& b_)
    : lam(lam_), a(a_), b(b_) {
    if (lam <= 0) throw std::invalid_argument("isometry parameter lambda must be positive");
}

IsometryElem compose(const IsometryElem& g2, const IsometryElem& g1) {
    IsometryElem g;
    g.lam = g2.lam * g1.lam;
    g.a = g2.ch() * g1.a + g2.sh() * g1.b + g2.a;
    g.b = g2.sh() * g1.a + g2.ch() * g1.b + g2.b;
    return g;
}

UnimodularElem::UnimodularElem(const Rational& al_, const Rational& be_, const Rational& ga_,
                               const Rational& de_)
    : al(al_), be(be_), ga(ga_), de(de_) {
    if (al * de - be * ga != 1) throw std::invalid_argument("substitution must have det 1");
}

UnimodularElem compose(const UnimodularElem& g2, const UnimodularElem& g1) {
    UnimodularElem g;
    g.al = g2.al * g1.al + g2.be * g1.ga;
    g.be = g2.al * g1.be + g2.be * g1.de;
    g.ga = g2.ga * g1.al + g2.de * g1.ga;
    g.de = g2.ga * g1.be + g2.de * g1.de;
    return g;
}

namespace {

// Shared engine for numeric and symbolic group coordinates: base points are
// pulled back through the inverse map, the index block transforms through
// the symbol substitution u -> ch u + sh v, v -> sh u + ch v.
SymTensor hyperbolic_apply(const SymTensor& K, const Poly& ch, const Poly& sh, const Poly& ta,
                           const Poly& xb) {
    const auto& tab = K.table();
    const int n = K.n;
    int t = tab->require("t"), x = tab->require("x");
    Poly pt = Poly::variable(tab, t), px = Poly::variable(tab, x);

    std::map<int, Poly> inverse = {{t, ch * (pt - ta) - sh * (px - xb)},
                                   {x, ch * (px - xb) - sh * (pt - ta)}};
    std::vector<Poly> S;
    for (const auto& c : K.comp) S.push_back(c.subst(inverse));

    std::vector<Poly> chp(n + 1, Poly::constant(tab, rat(1))), shp = chp;
    for (int e = 1; e <= n; ++e) {
        chp[e] = chp[e - 1] * ch;
        shp[e] = shp[e - 1] * sh;
    }

    SymTensor out;
    out.n = n;
    out.comp.assign(n + 1, Poly::zero(tab));
    for (int k = 0; k <= n; ++k) {
        // (ch u + sh v)^{n-k} (sh u + ch v)^k, coefficients indexed by the
        // v-degree j.
        std::vector<Poly> w(n + 1, Poly::zero(tab));
        for (int i = 0; i <= n - k; ++i)
            for (int i2 = 0; i2 <= k; ++i2) {
                Poly f = chp[n - k - i] * shp[i] * shp[k - i2] * chp[i2] *
                         Rational(binomial(n - k, i) * binomial(k, i2));
                w[i + i2] = w[i + i2] + f;
            }
        for (int j = 0; j <= n; ++j) {
            if (w[j].is_zero()) continue;
            out.comp[j] = out.comp[j] + S[k] * w[j] * rat_frac(binomial(n, k), binomial(n, j));
        }
    }
    return out;
}

}  // namespace

SymTensor isometry_apply(const IsometryElem& g, const SymTensor& K) {
    const auto& tab = K.table();
    return hyperbolic_apply(K, Poly::constant(tab, g.ch()), Poly::constant(tab, g.sh()),
                            Poly::constant(tab, g.a), Poly::constant(tab, g.b));
}

Poly reduce_ch(const Poly& p) {
    const auto& tab = p.table();
    int c = tab->require("ch"), s = tab->require("sh");
    Poly out = Poly::zero(tab);
    for (const auto& [m, co] : p.terms()) {
        unsigned e = m[c];
        if (e <= 1) {
            out.add_term(m, co);
            continue;
        }
        unsigned h = e / 2;
        Monomial base = m;
        base[c] = e % 2;
        for (unsigned i = 0; i <= h; ++i) {  // (1 + sh^2)^h expanded
            Monomial mm = base;
            mm[s] += 2 * i;
            out.add_term(mm, co * Rational(binomial(h, i)));
        }
    }
    return out;
}

std::map<std::string, Poly> param_transform(int n) {
    auto tab = itkt_table(n, true);
    SymTensor K = general_element(n, tab);
    SymTensor Kt = hyperbolic_apply(K, Poly::variable(tab, "ch"), Poly::variable(tab, "sh"),
                                    Poly::variable(tab, "a"), Poly::variable(tab, "b"));
    for (auto& c : Kt.comp) c = reduce_ch(c);
    ParamScheme scheme = ParamScheme::make(n);
    std::vector<Poly> values = scheme_extract(Kt, scheme);
    std::map<std::string, Poly> out;
    for (size_t k = 0; k < values.size(); ++k) out[scheme.labels[k]] = values[k];
    return out;
}

BinaryForm sl2_apply(const UnimodularElem& g, const BinaryForm& Q) {
    const auto& tab = Q.table();
    int x = tab->require("x"), y = tab->require("y");
    Poly px = Poly::variable(tab, x), py = Poly::variable(tab, y);
    std::map<int, Poly> sub = {{x, px * g.al + py * g.be}, {y, px * g.ga + py * g.de}};
    return form_from_poly(Q.n, form_poly(Q).subst(sub));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
    // splitmix64 step on seed + k: independent per-trial streams.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long rand_int(std::mt19937_64& eng, long lo, long hi) {
    return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational random_rational(std::mt19937_64& eng, long max_num, long max_den) {
    return rat(rand_int(eng, -max_num, max_num), rand_int(eng, 1, max_den));
}

IsometryElem random_isometry(std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    Rational lam = rat(rand_int(eng, 1, 12), rand_int(eng, 1, 12));
    return IsometryElem(lam, random_rational(eng, 6, 6), random_rational(eng, 6, 6));
}

UnimodularElem random_unimodular(std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    UnimodularElem g;
    int shears = static_cast<int>(rand_int(eng, 3, 6));
    for (int i = 0; i < shears; ++i) {
        Rational s = rat(rand_int(eng, -3, 3));
        g = (i % 2 == 0) ? compose(g, UnimodularElem(1, s, 0, 1))
                         : compose(g, UnimodularElem(1, 0, s, 1));
    }
    return g;
}

Verdict verify_invariance(const Poly& F, Family fam, int n, int trials, std::uint64_t seed) {
    const auto& tab = F.table();
    std::vector<int> params = tab->indices_of(VarKind::Parameter);
    ParamScheme scheme = fam == Family::ITKT ? ParamScheme::make(n) : ParamScheme();

    Verdict v;
    v.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 eng(mix_seed(seed, trial));
        std::map<int, Rational> point;
        for (int p : params) point[p] = random_rational(eng, 6, 6);

        std::map<int, Rational> moved;
        std::vector<std::pair<std::string, Rational>> group_desc;
        if (fam == Family::ITKT) {
            IsometryElem g = random_isometry(mix_seed(seed, trial) ^ 0x5bd1e995ULL);
            group_desc = {{"lambda", g.lam}, {"a", g.a}, {"b", g.b}};
            SymTensor Kp = eval_params(general_element(n, tab), point);
            std::vector<Poly> vals = scheme_extract(isometry_apply(g, Kp), scheme);
            for (size_t k = 0; k < vals.size(); ++k)
                moved[tab->require(scheme.labels[k])] = vals[k].constant_term();
        } else {
            UnimodularElem g = random_unimodular(mix_seed(seed, trial) ^ 0x5bd1e995ULL);
            group_desc = {{"alpha", g.al}, {"beta", g.be}, {"gamma", g.ga}, {"delta", g.de}};
            BinaryForm Q = general_form(n, tab);
            for (auto& c : Q.coeff) c = c.subst_values(point);
            BinaryForm Qt = sl2_apply(g, Q);
            for (int i = 0; i <= n; ++i)
                moved[tab->require("a" + std::to_string(i))] = Qt.coeff[i].constant_term();
        }

        Rational before = F.subst_values(point).constant_term();
        Rational after = F.subst_values(moved).constant_term();
        if (before != after) {
            v.pass = false;
            Counterexample ce;
            ce.trial = trial;
            ce.group = std::move(group_desc);
            for (int p : params) ce.point.emplace_back(tab->name(p), point[p]);
            ce.before = before;
            ce.after = after;
            v.counterexample = std::move(ce);
            return v;
        }
    }
    return v;
}

}  // namespace kt
