#include "doctest.h"

#include "kt/derivations.hpp"
#include "kt/killing.hpp"
#include "util.hpp"

#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using namespace kt;

namespace {

Derivation make_derivation(const VarTablePtr& tab,
                           std::initializer_list<std::pair<const char*, const char*>> terms) {
    Derivation d(tab);
    for (const auto& [label, coeff] : terms)
        d.set_coeff(tab->require(label), parse_poly(tab, coeff));
    return d;
}

void check_isometry_relations(const std::vector<Derivation>& V) {
    REQUIRE(V.size() == 3);
    CHECK(commutator(V[0], V[1]).is_zero());
    CHECK(commutator(V[0], V[2]) == -V[1]);
    CHECK(commutator(V[1], V[2]) == -V[0]);
}

}  // namespace

TEST_CASE("derivation arithmetic and application") {
    auto tab = itkt_table(2);
    auto D = make_derivation(tab, {{"a1", "a3"}, {"a2", "2*a4"}});
    auto F = parse_poly(tab, "a1*a2");
    CHECK(D.apply(F) == parse_poly(tab, "a2*a3 + 2*a1*a4"));
    CHECK(D.apply(Poly::constant(tab, rat(5))).is_zero());

    auto E = make_derivation(tab, {{"a1", "-a3"}});
    CHECK((D + E) == make_derivation(tab, {{"a2", "2*a4"}}));
    CHECK((D - D).is_zero());
    CHECK((D * rat(2)).coeff("a2") == parse_poly(tab, "4*a4"));
    CHECK(D.coeff("a5").is_zero());

    // Chain rule through products.
    auto G = parse_poly(tab, "a1^2 - a2");
    CHECK(D.apply(F * G) == D.apply(F) * G + F * D.apply(G));
}

TEST_CASE("commutator is antisymmetric and matches direct application") {
    auto tab = itkt_table(2);
    auto A = make_derivation(tab, {{"a0", "a1"}, {"a1", "a2"}});
    auto B = make_derivation(tab, {{"a1", "a0*a2"}});
    auto C = commutator(A, B);
    CHECK(commutator(B, A) == -C);
    for (const char* name : {"a0", "a1", "a2", "a3"}) {
        Poly v = Poly::variable(tab, name);
        CHECK(C.apply(v) == A.apply(B.apply(v)) - B.apply(A.apply(v)));
    }
}

TEST_CASE("componentwise Lie derivative reproduces hand computations") {
    auto tab = geo_table();
    auto T = field_T(tab);
    auto X = field_X(tab);
    auto H = field_H(tab);

    for (const auto& K : {T.tensor(), X.tensor(), H.tensor()}) {
        CHECK(killing_check(lie_derivative(T, K)));
    }
    // Translations commute; the rotation maps one onto the other.
    for (const auto& comp : lie_derivative(T, T.tensor()).comp) CHECK(comp.is_zero());
    for (const auto& comp : lie_derivative(T, X.tensor()).comp) CHECK(comp.is_zero());

    auto TT = sym_product(T.tensor(), T.tensor());
    auto TX = sym_product(T.tensor(), X.tensor());
    auto LH = lie_derivative(H, TT);
    auto expect = SymTensor{2, {TX.comp[0] * rat(-2), TX.comp[1] * rat(-2), TX.comp[2] * rat(-2)}};
    CHECK(LH == expect);

    auto ptab = itkt_table(2);
    auto G = general_element(2, ptab);
    CHECK(lie_derivative(field_X(ptab), G).comp[0] == parse_poly(ptab, "2*a3 + 2*a5*x"));
}

TEST_CASE("Lie derivative is a derivation of the symmetrized product") {
    auto tab = geo_table();
    std::mt19937_64 eng(321);
    for (int trial = 0; trial < 8; ++trial) {
        SymTensor A{1, {ktt::random_poly(eng, tab, 3, 2), ktt::random_poly(eng, tab, 3, 2)}};
        SymTensor B{1, {ktt::random_poly(eng, tab, 3, 2), ktt::random_poly(eng, tab, 3, 2)}};
        for (const auto& V : {field_T(tab), field_X(tab), field_H(tab)}) {
            auto lhs = lie_derivative(V, sym_product(A, B));
            auto rhs = sym_product(lie_derivative(V, A), B);
            auto rhs2 = sym_product(A, lie_derivative(V, B));
            for (size_t j = 0; j < lhs.comp.size(); ++j)
                CHECK(lhs.comp[j] == rhs.comp[j] + rhs2.comp[j]);
        }
    }
}

TEST_CASE("Lie derivatives realize the field brackets on tensors") {
    auto tab = itkt_table(3);
    auto G = general_element(3, tab);
    auto T = field_T(tab);
    auto X = field_X(tab);
    auto H = field_H(tab);

    // [T, H] = X, [X, H] = T, [T, X] = 0 as operators on tensors.
    auto TH = lie_derivative(T, lie_derivative(H, G));
    auto HT = lie_derivative(H, lie_derivative(T, G));
    auto LX = lie_derivative(X, G);
    for (size_t j = 0; j < G.comp.size(); ++j) CHECK(TH.comp[j] - HT.comp[j] == LX.comp[j]);

    auto XH = lie_derivative(X, lie_derivative(H, G));
    auto HX = lie_derivative(H, lie_derivative(X, G));
    auto LT = lie_derivative(T, G);
    for (size_t j = 0; j < G.comp.size(); ++j) CHECK(XH.comp[j] - HX.comp[j] == LT.comp[j]);

    auto TX = lie_derivative(T, lie_derivative(X, G));
    auto XT = lie_derivative(X, lie_derivative(T, G));
    for (size_t j = 0; j < G.comp.size(); ++j) CHECK(TX.comp[j] == XT.comp[j]);
}

TEST_CASE("projection reads parameter fields off Lie derivatives") {
    auto V = isometry_generators(1);
    auto tab = V[0].table();
    CHECK(V[0] == make_derivation(tab, {{"b1_0", "a1_1"}}));
    CHECK(V[1] == make_derivation(tab, {{"a1_0", "a1_1"}}));
    CHECK(V[2] == make_derivation(tab, {{"a1_0", "-b1_0"}, {"b1_0", "-a1_0"}}));
    CHECK(V[0].to_string() == "a1_1*d_b1_0");
    CHECK(V[2].to_string() == "-b1_0*d_a1_0 - a1_0*d_b1_0");

    // Projection is linear in the differentiated field.
    auto ptab = itkt_table(2);
    auto scheme = ParamScheme::make(2);
    auto G = general_element(2, ptab);
    auto W = isometry_generators(2, ptab);
    VectorFieldM mix{Poly::constant(ptab, 2) - Poly::variable(ptab, "x") * rat(3),
                     Poly::constant(ptab, 5) - Poly::variable(ptab, "t") * rat(3)};
    auto proj = mst_project(lie_derivative(mix, G), G, scheme);
    CHECK(proj == W[0] * rat(2) + W[1] * rat(5) + W[2] * rat(-3));

    // Tensors outside the solution space are rejected.
    auto bad = G;
    bad.comp[0] = bad.comp[0] + Poly::variable(ptab, "t");
    CHECK_THROWS_AS(mst_project(bad, G, scheme), std::domain_error);
}

TEST_CASE("valence-2 parameter fields in closed form") {
    auto V = isometry_generators(2);
    auto tab = V[0].table();
    CHECK(V[0].to_string() == "a3*d_a1 + 2*a4*d_a2 + a5*d_a4");
    CHECK(V[1].to_string() == "2*a3*d_a0 + a4*d_a1 + a5*d_a3");
    CHECK(V[2].to_string() ==
          "-2*a1*d_a0 + (-a0 - a2)*d_a1 - 2*a1*d_a2 - a4*d_a3 - a3*d_a4");

    CHECK(V[0] == make_derivation(tab, {{"a1", "a3"}, {"a2", "2*a4"}, {"a4", "a5"}}));
    CHECK(V[1] == make_derivation(tab, {{"a0", "2*a3"}, {"a1", "a4"}, {"a3", "a5"}}));
    CHECK(V[2] == make_derivation(tab, {{"a0", "-2*a1"},
                                        {"a1", "-a0 - a2"},
                                        {"a2", "-2*a1"},
                                        {"a3", "-a4"},
                                        {"a4", "-a3"}}));
}

TEST_CASE("valence-4 parameter fields term by term") {
    auto V = isometry_generators(4);
    auto tab = V[0].table();
    CHECK(V[0] == make_derivation(tab, {{"a2_0", "a1_1"}, {"a2_1", "a1_2"}, {"a2_2", "a1_3"},
                                        {"a3_0", "2*a2_1"},
                                        {"b2_0", "3*b2_1"}, {"b2_1", "2*a2_2"},
                                        {"b1_0", "4*b1_1"}, {"b1_1", "3*b1_2"},
                                        {"b1_2", "2*b1_3"}, {"b1_3", "a1_4"}}));
    CHECK(V[1] == make_derivation(tab, {{"b2_0", "b1_1"}, {"b2_1", "b1_2"}, {"a2_2", "b1_3"},
                                        {"a3_0", "2*b2_1"},
                                        {"a2_0", "3*a2_1"}, {"a2_1", "2*a2_2"},
                                        {"a1_0", "4*a1_1"}, {"a1_1", "3*a1_2"},
                                        {"a1_2", "2*a1_3"}, {"a1_3", "a1_4"}}));
    CHECK(V[2] == make_derivation(tab, {{"a1_0", "-4*a2_0"}, {"a1_1", "-3*a2_1"},
                                        {"a1_2", "-2*a2_2"}, {"a1_3", "-b1_3"},
                                        {"a2_0", "-3*a3_0 - a1_0"}, {"a2_1", "-2*b2_1 - a1_1"},
                                        {"a3_0", "-2*a2_0 - 2*b2_0"}, {"a2_2", "-a1_2 - b1_2"},
                                        {"b2_0", "-3*a3_0 - b1_0"}, {"b2_1", "-2*a2_1 - b1_1"},
                                        {"b1_0", "-4*b2_0"}, {"b1_1", "-3*b2_1"},
                                        {"b1_2", "-2*a2_2"}, {"b1_3", "-a1_3"}}));
}

TEST_CASE("valence-5 parameter fields term by term") {
    auto V = isometry_generators(5);
    auto tab = V[0].table();
    CHECK(V[0] == make_derivation(tab, {{"a2_0", "a1_1"}, {"a2_1", "a1_2"},
                                        {"a2_2", "a1_3"}, {"a2_3", "a1_4"},
                                        {"a3_0", "2*a2_1"}, {"a3_1", "2*a2_2"},
                                        {"b3_0", "3*a3_1"},
                                        {"b2_0", "4*b2_1"}, {"b2_1", "3*b2_2"}, {"b2_2", "2*a2_3"},
                                        {"b1_0", "5*b1_1"}, {"b1_1", "4*b1_2"}, {"b1_2", "3*b1_3"},
                                        {"b1_3", "2*b1_4"}, {"b1_4", "a1_5"}}));
    CHECK(V[1] == make_derivation(tab, {{"b2_0", "b1_1"}, {"b2_1", "b1_2"},
                                        {"b2_2", "b1_3"}, {"a2_3", "b1_4"},
                                        {"b3_0", "2*b2_1"}, {"a3_1", "2*b2_2"},
                                        {"a3_0", "3*a3_1"},
                                        {"a2_0", "4*a2_1"}, {"a2_1", "3*a2_2"}, {"a2_2", "2*a2_3"},
                                        {"a1_0", "5*a1_1"}, {"a1_1", "4*a1_2"}, {"a1_2", "3*a1_3"},
                                        {"a1_3", "2*a1_4"}, {"a1_4", "a1_5"}}));
    CHECK(V[2] == make_derivation(tab, {{"a1_0", "-5*a2_0"}, {"a1_1", "-4*a2_1"},
                                        {"a1_2", "-3*a2_2"}, {"a1_3", "-2*a2_3"},
                                        {"a1_4", "-b1_4"},
                                        {"a2_0", "-4*a3_0 - a1_0"}, {"a2_1", "-3*a3_1 - a1_1"},
                                        {"a2_2", "-2*b2_2 - a1_2"}, {"a2_3", "-a1_3 - b1_3"},
                                        {"a3_0", "-3*b3_0 - 2*a2_0"}, {"a3_1", "-2*b2_1 - 2*a2_1"},
                                        {"b3_0", "-3*a3_0 - 2*b2_0"},
                                        {"b2_0", "-4*b3_0 - b1_0"}, {"b2_1", "-3*a3_1 - b1_1"},
                                        {"b2_2", "-2*a2_2 - b1_2"},
                                        {"b1_0", "-5*b2_0"}, {"b1_1", "-4*b2_1"},
                                        {"b1_2", "-3*b2_2"}, {"b1_3", "-2*a2_3"},
                                        {"b1_4", "-a1_4"}}));
}

TEST_CASE("parameter fields satisfy the isometry bracket table for n = 1..6") {
    for (int n = 1; n <= 6; ++n) {
        auto V = isometry_generators(n);
        check_isometry_relations(V);
        // Negating both arguments cancels, so the negated fields close with
        // plus signs — the same table the coordinate fields satisfy.
        std::vector<Derivation> W{-V[0], -V[1], -V[2]};
        CHECK(commutator(W[0], W[1]).is_zero());
        CHECK(commutator(W[0], W[2]) == W[1]);
        CHECK(commutator(W[1], W[2]) == W[0]);
    }
}

TEST_CASE("closed-form patterns agree with the projection for n = 2..8") {
    CHECK_THROWS_AS(closed_form_generators(1), std::invalid_argument);
    for (int n = 2; n <= 8; ++n) {
        auto result = closed_form_generators(n);
        CHECK(result.diff.empty());
        auto V = isometry_generators(n);
        REQUIRE(result.fields.size() == 3);
        for (int i = 0; i < 3; ++i) CHECK(result.fields[i] == V[i]);
    }
}

TEST_CASE("ladder operators on binary-form coefficients") {
    auto V2 = cayley_generators(2);
    auto tab = V2[0].table();
    CHECK(V2[0].to_string() == "2*a1*d_a0 + a2*d_a1");
    CHECK(V2[1].to_string() == "-2*a0*d_a0 + 2*a2*d_a2");
    CHECK(V2[2].to_string() == "a0*d_a1 + 2*a1*d_a2");

    auto V3 = cayley_generators(3);
    auto tab3 = V3[0].table();
    CHECK(V3[0] == make_derivation(tab3, {{"a0", "3*a1"}, {"a1", "2*a2"}, {"a2", "a3"}}));
    CHECK(V3[1] == make_derivation(tab3, {{"a0", "-3*a0"}, {"a1", "-a1"},
                                          {"a2", "a2"}, {"a3", "3*a3"}}));
    CHECK(V3[2] == make_derivation(tab3, {{"a1", "a0"}, {"a2", "2*a1"}, {"a3", "3*a2"}}));

    // All three annihilate the quadratic discriminant.
    auto disc = parse_poly(tab, "a0*a2 - a1^2");
    for (const auto& V : V2) CHECK(V.apply(disc).is_zero());
}

TEST_CASE("ladder operators close under the bracket for n = 1..8") {
    for (int n = 1; n <= 8; ++n) {
        auto V = cayley_generators(n);
        REQUIRE(V.size() == 3);
        CHECK(commutator(V[0], V[1]) == V[0] * rat(-2));
        CHECK(commutator(V[2], V[1]) == V[2] * rat(2));
        CHECK(commutator(V[0], V[2]) == V[1]);
    }
}

TEST_CASE("the opposite ladder convention is the mirror of ours") {
    // Swapping lowering and raising and negating the weight field gives the
    // other standard orientation of the same algebra; both close identically.
    auto V = cayley_generators(2);
    auto tab = V[0].table();
    auto Wm = make_derivation(tab, {{"a1", "a0"}, {"a2", "2*a1"}});
    auto W0 = make_derivation(tab, {{"a0", "2*a0"}, {"a2", "-2*a2"}});
    auto Wp = make_derivation(tab, {{"a0", "2*a1"}, {"a1", "a2"}});
    CHECK(Wm == V[2]);
    CHECK(W0 == -V[1]);
    CHECK(Wp == V[0]);
    CHECK(commutator(Wm, W0) == Wm * rat(-2));
    CHECK(commutator(Wp, W0) == Wp * rat(2));
    CHECK(commutator(Wm, Wp) == W0);
}

TEST_CASE("extended fields subtract the coordinate flows") {
    for (int n : {1, 2, 3, 4}) {
        auto E = extended_generators(n);
        REQUIRE(E.size() == 3);
        auto tab = E[0].table();
        auto V = isometry_generators(n, tab);
        auto t = Poly::variable(tab, "t");
        auto x = Poly::variable(tab, "x");
        auto minus_one = Poly::constant(tab, rat(-1));

        CHECK(E[0].coeff("t") == minus_one);
        CHECK(E[0].coeff("x").is_zero());
        CHECK(E[1].coeff("x") == minus_one);
        CHECK(E[1].coeff("t").is_zero());
        CHECK(E[2].coeff("t") == -x);
        CHECK(E[2].coeff("x") == -t);
        for (int i = 0; i < 3; ++i)
            for (int v : tab->indices_of(VarKind::Parameter))
                CHECK(E[i].coeff(v) == V[i].coeff(v));

        CHECK(commutator(E[0], E[1]).is_zero());
        CHECK(commutator(E[0], E[2]) == -E[1]);
        CHECK(commutator(E[1], E[2]) == -E[0]);
    }
}

TEST_CASE("extended fields annihilate the valence-2 trace expression") {
    auto E = extended_generators(2);
    auto tab = E[0].table();
    auto C = parse_poly(tab, "a0 - a2 + 2*a3*x - 2*a4*t + a5*x^2 - a5*t^2");
    for (const auto& field : E) CHECK(field.apply(C).is_zero());

    auto interval = parse_poly(tab, "t^2 - x^2");
    CHECK(E[0].apply(interval) == parse_poly(tab, "-2*t"));
    CHECK(E[1].apply(interval) == parse_poly(tab, "2*x"));
    CHECK(E[2].apply(interval).is_zero());
}

TEST_CASE("binary forms round-trip through their polynomial") {
    auto tab = cit_table(3);
    auto Q = general_form(3, tab);
    CHECK(form_poly(Q).to_string() ==
          "a0*x^3 + 3*a1*x^2*y + 3*a2*x*y^2 + a3*y^3");
    CHECK(form_from_poly(3, form_poly(Q)) == Q);

    auto stray = form_poly(Q) + Poly::variable(tab, "x");
    CHECK_THROWS_AS(form_from_poly(3, stray), std::domain_error);
}
