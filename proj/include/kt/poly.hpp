#pragma once

// Sparse multivariate polynomials with exact rational coefficients over a
// fixed, shared variable table.
//
// Conventions used throughout the project:
//  - variables are registered geometric first, then parameters, then group
//    coordinates; the table order defines the exponent-vector layout;
//  - monomials are compared in graded lexicographic order (total degree
//    first, ties by the leftmost differing exponent, larger exponent on an
//    earlier variable wins);
//  - canonical text prints terms in ascending graded-lex order, with the
//    factors of each monomial ordered parameters, then group variables,
//    then geometric variables (so a quadratic component reads
//    "a0 + 2*a3*x + a5*x^2").
//
// Values are immutable in practice: every operation returns a new Poly.

#include "kt/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace kt {

enum class VarKind { Geometric, Parameter, Group };

class VarTable {
  public:
    int add(const std::string& name, VarKind kind);
    int find(const std::string& name) const;  // -1 when absent
    int require(const std::string& name) const;
    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    VarKind kind(int i) const { return kinds_[i]; }
    std::vector<int> indices_of(VarKind kind) const;
    bool same_as(const VarTable& other) const;

  private:
    std::vector<std::string> names_;
    std::vector<VarKind> kinds_;
    std::map<std::string, int> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline std::shared_ptr<VarTable> make_table() { return std::make_shared<VarTable>(); }

using Monomial = std::vector<std::uint32_t>;

unsigned total_degree(const Monomial& m);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Poly() = default;
    explicit Poly(VarTablePtr tab) : tab_(std::move(tab)) {}

    static Poly zero(VarTablePtr tab) { return Poly(std::move(tab)); }
    static Poly constant(VarTablePtr tab, const Rational& c);
    static Poly variable(VarTablePtr tab, int var);
    static Poly variable(VarTablePtr tab, const std::string& name);
    static Poly term(VarTablePtr tab, const Monomial& m, const Rational& c);

    const VarTablePtr& table() const { return tab_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int term_count() const { return static_cast<int>(terms_.size()); }
    unsigned degree() const;           // total degree, 0 for the zero poly
    unsigned degree_in(int var) const;
    bool homogeneous(unsigned deg) const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    Poly diff(int var) const;
    Poly diff(const std::string& name) const;

    // Simultaneous substitution; unbound variables pass through.
    Poly subst(const std::map<int, Poly>& bindings) const;
    Poly subst_values(const std::map<int, Rational>& values) const;

    Rational coeff_of(const Monomial& m) const;
    Rational constant_term() const;

    // Regroups by the given variables: each key is a monomial supported only
    // on `vars`, each value collects the cofactor terms.  Reassembling
    // sum(key * value) gives the original polynomial back.
    std::map<Monomial, Poly, GrlexLess> group_by(const std::vector<int>& vars) const;

    // Multiplies by the rational that makes every coefficient an integer,
    // the set of coefficients coprime, and the first displayed term positive.
    Poly normalized() const;

    std::string to_string() const;

    void add_term(const Monomial& m, const Rational& c);  // used by builders

  private:
    void check_same_table(const Poly& rhs) const;

    VarTablePtr tab_;
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// Canonical text grammar: sums of '*'-joined factors, each factor a rational
// literal ("3", "3/2"), a registered variable, an exponent "x^2", or a
// parenthesized subexpression.  Throws std::invalid_argument on unknown
// variables or malformed input.
Poly parse_poly(const VarTablePtr& tab, const std::string& text);

}  // namespace kt
