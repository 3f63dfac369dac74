#pragma once

// Exact finite group actions: hyperbolic rotations + translations of the
// Minkowski plane acting on symmetric tensors, unimodular substitutions
// acting on binary forms, and seeded randomized invariance checking.
//
// Hyperbolic rotations are parametrized by a positive rational lambda with
// ch = (lambda + 1/lambda)/2 and sh = (lambda - 1/lambda)/2, so that
// ch^2 - sh^2 = 1 holds exactly.  The forward map is
//     t~ = t ch + x sh + a,     x~ = t sh + x ch + b.

#include "kt/derivations.hpp"
#include "kt/killing.hpp"
#include "kt/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace kt {

struct IsometryElem {
    Rational lam = 1;  // encodes e^phi; must stay positive
    Rational a = 0;    // t-translation
    Rational b = 0;    // x-translation

    IsometryElem() = default;
    IsometryElem(const Rational& lam_, const Rational& a_, const Rational& b_);

    Rational ch() const { return (lam + 1 / lam) / 2; }
    Rational sh() const { return (lam - 1 / lam) / 2; }
};

IsometryElem compose(const IsometryElem& g2, const IsometryElem& g1);  // g2 after g1

struct UnimodularElem {
    Rational al = 1, be = 0, ga = 0, de = 1;

    UnimodularElem() = default;
    UnimodularElem(const Rational& al_, const Rational& be_, const Rational& ga_,
                   const Rational& de_);  // throws unless det = 1
};

UnimodularElem compose(const UnimodularElem& g2, const UnimodularElem& g1);

// Pushforward of K along the isometry, expressed in the new coordinates
// (base points move through the inverse map, indices through the Jacobian).
SymTensor isometry_apply(const IsometryElem& g, const SymTensor& K);

// Eliminates even powers of the symbolic ch via ch^2 -> 1 + sh^2; the result
// is the canonical representative with ch-degree <= 1.
Poly reduce_ch(const Poly& p);

// Full symbolic transformation law label -> polynomial in the parameters and
// the group coordinates ch, sh, a, b (ch-reduced).
std::map<std::string, Poly> param_transform(int n);

// Substitute (x, y) -> (al x + be y, ga x + de y) and re-read coefficients.
BinaryForm sl2_apply(const UnimodularElem& g, const BinaryForm& Q);

// Deterministic, portable randomness (mt19937_64 output is specified by the
// standard; no distribution objects are used).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k);
long rand_int(std::mt19937_64& eng, long lo, long hi);
Rational random_rational(std::mt19937_64& eng, long max_num, long max_den);

IsometryElem random_isometry(std::uint64_t seed);
UnimodularElem random_unimodular(std::uint64_t seed);  // product of integer shears

enum class Family { CIT, ITKT };

struct Counterexample {
    int trial = 0;
    std::vector<std::pair<std::string, Rational>> group;  // element coordinates
    std::vector<std::pair<std::string, Rational>> point;  // parameter values
    Rational before, after;
};

struct Verdict {
    bool pass = true;
    int trials = 0;
    std::optional<Counterexample> counterexample;
};

// Checks F(a~) = F(a) exactly on `trials` random (group element, point)
// pairs; the per-trial stream is split from the seed, so trial i is
// reproducible in isolation.  F must live over the family's table
// (itkt_table(n) or cit_table(n)).
Verdict verify_invariance(const Poly& F, Family fam, int n, int trials, std::uint64_t seed);

}  // namespace kt
