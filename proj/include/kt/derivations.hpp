#pragma once

// First-order derivations on parameter rings and the three ways the project
// produces them:
//
//  - the projection procedure: Lie-differentiate the labeled general Killing
//    tensor along a Killing vector, then read the parameter-linear result
//    back through the labeling scheme;
//  - closed-form term patterns indexed by the parameter classes (r, m);
//  - the classical ladder operators acting on binary-form coefficients.
//
// A Derivation stores, per variable, the polynomial coefficient of d/dv.
// Coefficients never include stored zeros.

#include "kt/killing.hpp"
#include "kt/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace kt {

class Derivation {
  public:
    Derivation() = default;
    explicit Derivation(VarTablePtr tab) : tab_(std::move(tab)) {}

    const VarTablePtr& table() const { return tab_; }
    const std::map<int, Poly>& coeffs() const { return coeff_; }

    // Coefficient of d/dv (zero polynomial when absent).
    Poly coeff(int var) const;
    Poly coeff(const std::string& name) const;
    void set_coeff(int var, Poly p);  // drops zero polynomials

    bool is_zero() const { return coeff_.empty(); }

    Poly apply(const Poly& p) const;

    Derivation operator+(const Derivation& rhs) const;
    Derivation operator-(const Derivation& rhs) const;
    Derivation operator*(const Rational& c) const;
    Derivation operator-() const { return *this * rat(-1); }
    bool operator==(const Derivation& rhs) const;
    bool operator!=(const Derivation& rhs) const { return !(*this == rhs); }

    std::string to_string() const;  // "2*a3*d_a0 + (a0 + a2)*d_a1" style

  private:
    VarTablePtr tab_;
    std::map<int, Poly> coeff_;
};

Derivation commutator(const Derivation& d1, const Derivation& d2);

// Componentwise Lie derivative of a contravariant symmetric tensor:
// (L_X K)_j = X^t dK_j/dt + X^x dK_j/dx
//             - (n-j)(K_j dX^t/dt + K_{j+1} dX^t/dx)
//             - j    (K_{j-1} dX^x/dt + K_j dX^x/dx).
SymTensor lie_derivative(const VectorFieldM& X, const SymTensor& K);

// Solves LK = scheme_build(values) for the parameter-linear values and
// returns sum values[k] * d/d(label k).  Throws std::domain_error when LK is
// not in the labeled solution space.
Derivation mst_project(const SymTensor& LK, const SymTensor& general,
                       const ParamScheme& scheme);

// V1, V2, V3: the induced action of the t-translation, x-translation and
// hyperbolic rotation on the valence-n parameter space, by projection.
std::vector<Derivation> isometry_generators(int n);
std::vector<Derivation> isometry_generators(int n, const VarTablePtr& tab);

// One mismatching coefficient between the two constructions of a generator.
struct GeneratorDiff {
    int field;          // 0, 1, 2 for V1, V2, V3
    std::string label;  // parameter whose coefficient differs
    Poly mst;
    Poly closed;
};

struct ClosedFormResult {
    std::vector<Derivation> fields;
    std::vector<GeneratorDiff> diff;  // vs. isometry_generators(n)
};

// Instantiates the per-class coefficient patterns
//   V1: sum_{r>=1}            r (r-1, m+1) d/d(r, m)
//   V2: sum_{m<=n-r-1} (n-r-m)   (r, m+1) d/d(r, m)
//   V3: sum  [ -r (r-1, m) - (n-r-m) (r+1, m) ] d/d(r, m)
// and reports every coefficient mismatch against the projection procedure.
ClosedFormResult closed_form_generators(int n);

// Ladder operators on binary-form coefficients a_0..a_n:
//   V- = sum (n-i) a_{i+1} d/d a_i,   V0 = sum (2i-n) a_i d/d a_i,
//   V+ = sum i a_{i-1} d/d a_i.
std::vector<Derivation> cayley_generators(int n);
std::vector<Derivation> cayley_generators(int n, const VarTablePtr& tab);

// V1 - d/dt, V2 - d/dx, V3 - x d/dt - t d/dx over parameters + {t, x}; the
// joint kernel of these consists of the covariants of the action.
std::vector<Derivation> extended_generators(int n);

// Binary form of degree n in the binomial convention:
// form = sum C(n,i) coeff[i] x^{n-i} y^i.
struct BinaryForm {
    int n = 0;
    std::vector<Poly> coeff;  // n+1 entries

    const VarTablePtr& table() const { return coeff.at(0).table(); }
    bool operator==(const BinaryForm& rhs) const { return n == rhs.n && coeff == rhs.coeff; }
};

// {x, y} geometric + a0..an parameters.
VarTablePtr cit_table(int n);

BinaryForm general_form(int n, const VarTablePtr& tab);
BinaryForm general_form(int n);

Poly form_poly(const BinaryForm& Q);
BinaryForm form_from_poly(int n, const Poly& p);  // throws on stray terms

}  // namespace kt
