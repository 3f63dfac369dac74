#pragma once

// The vector space of valence-n Killing tensors on the Minkowski plane.
//
// A symmetric contravariant tensor of valence n in coordinates (t, x) is
// stored through its n+1 distinct components: comp[j] is the component whose
// index string contains j twos (x-indices) and n-j ones (t-indices).  The
// Killing equation reduces to the first-order system
//
//     d/dt comp[0] = 0,
//     (j+1) d/dx comp[j] = (n-j) d/dt comp[j+1],   j = 0..n-1,
//     d/dx comp[n] = 0,
//
// whose solutions are polynomials with deg_t(comp[j]) <= j and
// deg_x(comp[j]) <= n-j.  The solution space has dimension (n+1)(n+2)/2.
//
// Parameters are labeled by equivalence classes (r, m) of coefficient slots:
// writing comp[j] = sum C(j,i)*C(n-j,l)*c[j,i,l]*t^i*x^l, the system forces
// c[j,i,l+1] = c[j+1,i+1,l], so the free parameters are the classes
// r = j-i, m = i+l.  Class (r, m) is labeled a^{r+1}_m when m <= n-2r and
// b^{n-r-m+1}_m otherwise, spelled "a1_0", "b2_1", ... in variable names;
// valence 2 keeps the legacy spelling a0..a5.

#include "kt/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kt {

struct SymTensor {
    int n = 0;
    std::vector<Poly> comp;  // n+1 entries, comp[j] has j x-indices

    const VarTablePtr& table() const { return comp.at(0).table(); }
    bool operator==(const SymTensor& rhs) const { return n == rhs.n && comp == rhs.comp; }
};

// A vector field vt*d/dt + vx*d/dx; as a tensor it is {vt, vx}.
struct VectorFieldM {
    Poly vt, vx;
    SymTensor tensor() const { return SymTensor{1, {vt, vx}}; }
};

VectorFieldM field_T(const VarTablePtr& tab);  // d/dt
VectorFieldM field_X(const VarTablePtr& tab);  // d/dx
VectorFieldM field_H(const VarTablePtr& tab);  // x d/dt + t d/dx

struct ParamScheme {
    int n = 0;
    std::vector<std::string> labels;        // variable names, canonical order
    std::vector<std::pair<int, int>> rm;    // class (r, m) per label slot

    int slot_of(int r, int m) const;        // -1 when out of range
    static ParamScheme make(int n);
    static std::string class_label(int n, int r, int m);
};

std::string component_name(int n, int j);   // "K^{112}" style

// Variable tables.  Geometric coordinates come first, parameters follow in
// scheme order; group coordinates (ch, sh, a, b), when requested, come last.
VarTablePtr geo_table();                         // {t, x} only
VarTablePtr itkt_table(int n, bool with_group = false);

// The labeled general element over `tab` (which must contain t, x and every
// scheme label).  Coefficients are linear in the parameters.
SymTensor general_element(int n, const VarTablePtr& tab);
SymTensor general_element(int n);

// Rebuild a tensor from per-class coefficient values (index = scheme slot).
SymTensor scheme_build(const VarTablePtr& tab, const ParamScheme& scheme,
                       const std::vector<Poly>& values);

// Read the per-class coefficients back off a tensor in the solution space.
// Throws std::domain_error when the tensor does not satisfy the Killing
// equation's coefficient pattern (extraction is verified by rebuilding).
std::vector<Poly> scheme_extract(const SymTensor& K, const ParamScheme& scheme);

// Basis of the solution space found by the direct linear solve, over a
// fresh {t, x} table.  Size is always (n+1)(n+2)/2.
std::vector<SymTensor> killing_basis(int n);

// All symmetrized products T^p X^q H^r with p+q+r = n, in lexicographic
// (p, q, r) order with p, then q, descending.  The product is normalized so
// that a tensor corresponds to its symbol polynomial K(u, v) =
// sum C(n,j) comp[j] u^{n-j} v^j and products multiply symbols.
std::vector<SymTensor> sym_product_basis(int n);

SymTensor sym_product(const SymTensor& A, const SymTensor& B);

long long dtt_dimension(int m, int n);

std::vector<Poly> killing_residuals(const SymTensor& K);
bool killing_check(const SymTensor& K);

// Dimension of the span of a family of equal-valence tensors over a shared
// table with rational coefficients (used for basis cross-checks).
size_t tensor_span_dimension(const std::vector<SymTensor>& family);

SymTensor eval_params(const SymTensor& K, const std::map<int, Rational>& values);

}  // namespace kt
