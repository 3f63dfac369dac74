#include "kt/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kt {

namespace {

int kind_rank(VarKind k) {
    switch (k) {
        case VarKind::Parameter: return 0;
        case VarKind::Group: return 1;
        case VarKind::Geometric: return 2;
    }
    return 3;
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;

        std::vector<int> factors;
        for (int i = 0; i < tab_->size(); ++i)
            if (m[i] > 0) factors.push_back(i);
        std::stable_sort(factors.begin(), factors.end(), [&](int a, int b) {
            int ra = kind_rank(tab_->kind(a)), rb = kind_rank(tab_->kind(b));
            return ra != rb ? ra < rb : a < b;
        });

        std::string body;
        if (factors.empty()) {
            body = mag.get_str();
        } else {
            for (int v : factors) {
                if (!body.empty()) body += "*";
                body += tab_->name(v);
                if (m[v] > 1) body += "^" + std::to_string(m[v]);
            }
            if (mag != 1) body = mag.get_str() + "*" + body;
        }

        if (first) {
            out = neg ? "-" + body : body;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

namespace {

struct Parser {
    const VarTablePtr& tab;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + why);
    }

    unsigned long read_uint() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoul(s.substr(start, pos - start));
    }

    Poly atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long num = read_uint();
            Rational r(static_cast<long>(num));
            if (eat('/')) {
                unsigned long den = read_uint();
                if (den == 0) fail("zero denominator");
                r = Rational(static_cast<long>(num), static_cast<long>(den));
                r.canonicalize();
            }
            return Poly::constant(tab, r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int id = tab->find(name);
            if (id < 0) fail("unknown variable '" + name + "'");
            return Poly::variable(tab, id);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Poly factor() {
        Poly base = atom();
        if (eat('^')) {
            unsigned long e = read_uint();
            Poly out = Poly::constant(tab, rat(1));
            for (unsigned long i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    Poly term() {
        Poly out = factor();
        while (eat('*')) out = out * factor();
        return out;
    }

    Poly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly out = term();
        if (neg) out = -out;
        while (true) {
            skip();
            if (eat('+')) {
                out = out + term();
            } else if (eat('-')) {
                out = out - term();
            } else {
                break;
            }
        }
        return out;
    }
};

}  // namespace

Poly parse_poly(const VarTablePtr& tab, const std::string& text) {
    Parser p{tab, text};
    Poly out = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

}  // namespace kt
