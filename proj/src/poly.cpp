#include "kt/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace kt {

int VarTable::add(const std::string& name, VarKind kind) {
    if (index_.count(name)) throw std::invalid_argument("duplicate variable '" + name + "'");
    int id = size();
    names_.push_back(name);
    kinds_.push_back(kind);
    index_[name] = id;
    return id;
}

int VarTable::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int VarTable::require(const std::string& name) const {
    int id = find(name);
    if (id < 0) throw std::invalid_argument("unknown variable '" + name + "'");
    return id;
}

std::vector<int> VarTable::indices_of(VarKind kind) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (kinds_[i] == kind) out.push_back(i);
    return out;
}

bool VarTable::same_as(const VarTable& other) const {
    return names_ == other.names_ && kinds_ == other.kinds_;
}

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // Same degree: the monomial with the larger exponent on the earliest
    // differing variable sorts first, so within a degree terms follow the
    // table's variable order (begin() is the display-leading term).
    const size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        std::uint32_t ea = i < a.size() ? a[i] : 0;
        std::uint32_t eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb ? false : true;
    }
    return false;
}

void Poly::check_same_table(const Poly& rhs) const {
    if (tab_ == rhs.tab_) return;
    if (tab_ && rhs.tab_ && tab_->same_as(*rhs.tab_)) return;
    throw std::invalid_argument("polynomials over different variable tables");
}

Poly Poly::constant(VarTablePtr tab, const Rational& c) {
    Poly p(std::move(tab));
    if (c != 0) p.terms_.emplace(Monomial(p.tab_->size(), 0), c);
    return p;
}

Poly Poly::variable(VarTablePtr tab, int var) {
    if (var < 0 || var >= tab->size()) throw std::invalid_argument("variable index out of range");
    Poly p(std::move(tab));
    Monomial m(p.tab_->size(), 0);
    m[var] = 1;
    p.terms_.emplace(std::move(m), rat(1));
    return p;
}

Poly Poly::variable(VarTablePtr tab, const std::string& name) {
    int id = tab->require(name);
    return variable(std::move(tab), id);
}

Poly Poly::term(VarTablePtr tab, const Monomial& m, const Rational& c) {
    Poly p(std::move(tab));
    if (m.size() != static_cast<size_t>(p.tab_->size()))
        throw std::invalid_argument("monomial length does not match table");
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

unsigned Poly::degree() const {
    if (terms_.empty()) return 0;
    return total_degree(terms_.rbegin()->first);
}

unsigned Poly::degree_in(int var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<unsigned>(m[var]));
    return d;
}

bool Poly::homogeneous(unsigned deg) const {
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != deg) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly out(tab_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly Poly::operator+(const Poly& rhs) const {
    check_same_table(rhs);
    Poly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& rhs) const {
    check_same_table(rhs);
    Poly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    check_same_table(rhs);
    Poly out(tab_);
    Monomial prod;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            prod = ma;
            for (size_t i = 0; i < prod.size(); ++i) prod[i] += mb[i];
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

Poly Poly::operator*(const Rational& c) const {
    Poly out(tab_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

bool Poly::operator==(const Poly& rhs) const {
    if (tab_ != rhs.tab_ && !(tab_ && rhs.tab_ && tab_->same_as(*rhs.tab_))) return false;
    return terms_ == rhs.terms_;
}

Poly Poly::diff(int var) const {
    if (!tab_ || var < 0 || var >= tab_->size())
        throw std::invalid_argument("differentiation variable out of range");
    Poly out(tab_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        out.add_term(d, c * rat(m[var]));
    }
    return out;
}

Poly Poly::diff(const std::string& name) const { return diff(tab_->require(name)); }

Poly Poly::subst(const std::map<int, Poly>& bindings) const {
    for (const auto& [v, p] : bindings) {
        if (v < 0 || v >= tab_->size()) throw std::invalid_argument("substituted variable out of range");
        if (p.tab_) check_same_table(p);
    }
    // Cache powers of each bound replacement as they are needed.
    std::map<int, std::vector<Poly>> powers;
    Poly out(tab_);
    for (const auto& [m, c] : terms_) {
        Poly factor = Poly::constant(tab_, c);
        Monomial passthrough(tab_->size(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto bit = bindings.find(static_cast<int>(i));
            if (bit == bindings.end()) {
                passthrough[i] = m[i];
                continue;
            }
            auto& pw = powers[static_cast<int>(i)];
            if (pw.empty()) pw.push_back(Poly::constant(tab_, rat(1)));
            while (pw.size() <= m[i]) pw.push_back(pw.back() * bit->second);
            factor = factor * pw[m[i]];
        }
        if (total_degree(passthrough) > 0)
            factor = factor * Poly::term(tab_, passthrough, rat(1));
        for (const auto& [fm, fc] : factor.terms()) out.add_term(fm, fc);
    }
    return out;
}

Poly Poly::subst_values(const std::map<int, Rational>& values) const {
    std::map<int, Poly> bindings;
    for (const auto& [v, r] : values) bindings.emplace(v, Poly::constant(tab_, r));
    return subst(bindings);
}

Rational Poly::coeff_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coeff_of(Monomial(tab_->size(), 0)); }

std::map<Monomial, Poly, GrlexLess> Poly::group_by(const std::vector<int>& vars) const {
    std::vector<bool> mask(tab_->size(), false);
    for (int v : vars) {
        if (v < 0 || v >= tab_->size()) throw std::invalid_argument("grouping variable out of range");
        mask[v] = true;
    }
    std::map<Monomial, Poly, GrlexLess> out;
    for (const auto& [m, c] : terms_) {
        Monomial key(tab_->size(), 0), rest(tab_->size(), 0);
        for (size_t i = 0; i < m.size(); ++i) (mask[i] ? key[i] : rest[i]) = m[i];
        auto [it, inserted] = out.try_emplace(key, tab_);
        it->second.add_term(rest, c);
    }
    return out;
}

Poly Poly::normalized() const {
    if (terms_.empty()) return *this;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_.begin()->second < 0) scale = -scale;
    return *this * scale;
}

}  // namespace kt
