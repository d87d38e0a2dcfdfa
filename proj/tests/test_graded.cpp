#include <doctest.h>

#include <random>

#include "kschubert/graded.hpp"

using namespace kschubert;

namespace {

GradedFactor T(int i) { return {i, {}}; }
GradedFactor P(const Poly& f) { return {-1, f}; }

Poly random_poly(std::mt19937_64& rng, int rank, int degree) {
    Poly f = Poly::constant(rank, static_cast<int>(rng() % 5) - 2);
    for (int k = 0; k < 3; ++k) {
        Poly m = Poly::constant(rank, static_cast<int>(rng() % 7) - 3);
        const int d = static_cast<int>(rng() % static_cast<unsigned>(degree + 1));
        for (int j = 0; j < d; ++j) {
            const int v = static_cast<int>(rng() % static_cast<unsigned>(2 * rank));
            m = m * (v < rank ? Poly::x(rank, v) : Poly::y(rank, v - rank));
        }
        f += m;
    }
    return f;
}

// Evaluate a graded element acting on polynomials in x: t_i by the divided
// difference, polynomials by multiplication.
Poly apply(const RootSystem& rs, const GradedElt& h, const Poly& f) {
    Poly out = Poly::constant(rs.rank(), 0);
    for (const auto& [w, g] : h.terms()) {
        Poly v = g * f;
        const auto& word = rs.reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = divided_difference(rs, *it, v);
        out += v;
    }
    return out;
}

}  // namespace

TEST_CASE("divided differences") {
    auto rs = RootSystem::build("A2");
    const Poly x1 = Poly::x(2, 0), x2 = Poly::x(2, 1);
    CHECK(divided_difference(*rs, 0, x1) == Poly::constant(2, 1));
    CHECK(divided_difference(*rs, 0, x2).is_zero());
    CHECK(divided_difference(*rs, 0, Poly::x_weight(rs->simple_root(0))) == Poly::constant(2, 2));
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        Poly f = random_poly(rng, 2, 4);
        for (int i = 0; i < 2; ++i) {
            // (f - s_i f) = alpha_i d_i f
            const Poly lhs = f - f.act(*rs, rs->simple_reflection(i));
            CHECK(lhs == Poly::x_weight(rs->simple_root(i)) * divided_difference(*rs, i, f));
        }
    }
}

TEST_CASE("graded relations") {
    for (const char* type : {"A2", "B2", "G2"}) {
        auto rs = RootSystem::build(type);
        const int n = rs->rank();
        CHECK(graded_normalize(*rs, {T(0), T(0)}).is_zero());
        const Poly xa = Poly::x_weight(rs->simple_root(0));
        GradedElt got = graded_normalize(*rs, {P(xa), T(0)});
        GradedElt expect = GradedElt::t(rs->simple_reflection(0), n);
        expect = right_mul_poly(expect, -xa);
        expect += GradedElt::poly(Poly::constant(n, 2));
        CHECK(got == expect);
        CHECK(graded_normalize(*rs, {P(Poly::x(n, 1)), T(0)}) == right_mul_poly(GradedElt::t(rs->simple_reflection(0), n), Poly::x(n, 1)));
        // compare with the polynomial representation
        std::mt19937_64 rng(11);
        for (int k = 0; k < 5; ++k) {
            Poly f = random_poly(rng, n, 6);
            Poly g = random_poly(rng, n, 2);
            GradedElt h = graded_normalize(*rs, {P(g), T(0), T(1), P(g), T(0)});
            // h acts right to left: the last factor first
            Poly step = divided_difference(*rs, 0, f);
            step = divided_difference(*rs, 1, g * step);
            step = g * divided_difference(*rs, 0, step);
            CHECK(apply(*rs, h, f) == step);
        }
    }
}

TEST_CASE("representatives of Schubert classes") {
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        auto rs = RootSystem::build(type);
        GradedCohomology hc(rs);
        for (WeylElt w : rs->elements()) {
            HClass c = graded_phi(*rs, hc.representative(w));
            CHECK(c == HClass{{w, Poly::constant(rs->rank(), 1)}});
        }
    }
}

TEST_CASE("module action rules") {
    auto rs = RootSystem::build("A2");
    const int n = 2;
    for (WeylElt w : rs->elements())
        for (int i = 0; i < n; ++i) {
            HClass got = h_act(*rs, GradedElt::t(rs->simple_reflection(i), n), {{w, Poly::constant(n, 1)}});
            const WeylElt ws = rs->right_mul(w, i);
            if (rs->length(ws) > rs->length(w))
                CHECK(got == HClass{{ws, Poly::constant(n, 1)}});
            else
                CHECK(got.empty());
        }
    HClass pt{{rs->identity(), Poly::constant(n, 1)}};
    CHECK(h_act(*rs, GradedElt::poly(Poly::x(n, 0)), pt) == HClass{{rs->identity(), Poly::y(n, 0)}});
}

TEST_CASE("A2 cohomology products") {
    auto rs = RootSystem::build("A2");
    GradedCohomology hc(rs);
    const WeylElt s1 = rs->simple_reflection(0), s2 = rs->simple_reflection(1);
    const WeylElt s1s2 = rs->multiply(s1, s2), s2s1 = rs->multiply(s2, s1);
    HClass p = hc.h_product(s1s2, s2s1);
    CHECK(specialize_h(p) == HClass{{s1, Poly::constant(2, 1)}, {s2, Poly::constant(2, 1)}});
    HClass q = hc.h_product(s1, s2);
    CHECK(specialize_h(q).empty());
    // -alpha_11 [1] becomes y_{alpha_1 + alpha_2} [1]
    const Weight beta = rs->simple_root(0) + rs->simple_root(1);
    CHECK(q == HClass{{rs->identity(), Poly::y_weight(beta)}});
    // commutative, unit [X_{w0}]
    for (WeylElt w : rs->elements()) {
        CHECK(hc.h_product(w, rs->longest()) == HClass{{w, Poly::constant(2, 1)}});
        for (WeylElt v : rs->elements()) CHECK(hc.h_product(w, v) == hc.h_product(v, w));
    }
}

TEST_CASE("graded kernel") {
    for (const char* type : {"A2", "B2"}) {
        auto rs = RootSystem::build(type);
        const int n = rs->rank();
        std::mt19937_64 rng(5);
        for (int k = 0; k < 10; ++k) {
            Poly f = random_poly(rng, n, 2);
            Poly p = random_poly(rng, n, 2);
            Poly g = Poly::constant(n, 0);
            for (WeylElt w : rs->elements()) g += p.act(*rs, w);
            CHECK(graded_phi(*rs, f * (g - g.x_to_y())).empty());
        }
    }
}

TEST_CASE("Chern character") {
    auto rs = RootSystem::build("A2");
    const int n = 2;
    const Weight lam{1, 1};
    SUBCASE("exponential") {
        GradedElt c = ch_truncated(*rs, NilHeckeElt::X(lam), 2);
        const Poly x = Poly::x_weight(lam);
        CHECK(c == GradedElt::poly(Poly::constant(n, 1) + x + x * x * Rational(1, 2)));
        CHECK(ch_truncated(*rs, NilHeckeElt::T(rs->identity(), n), 3) == GradedElt::poly(Poly::constant(n, 1)));
        CHECK_THROWS_AS(ch_truncated(*rs, NilHeckeElt::X(lam), 0), std::invalid_argument);
    }
    SUBCASE("homomorphism") {
        const int D = 4, guard = D + 3;
        std::vector<Weight> ws{{1, 0}, {0, 1}, {-1, 2}, {2, -1}, {1, 1}};
        for (const auto& l : ws)
            for (int i = 0; i < n; ++i) {
                NilHeckeElt lhs = right_mul_T(*rs, NilHeckeElt::X(l), i);
                GradedElt a = multiply(*rs, ch_truncated(*rs, NilHeckeElt::X(l), guard),
                                       ch_truncated(*rs, NilHeckeElt::T(rs->simple_reflection(i), n), guard));
                CHECK(a.truncated(D) == ch_truncated(*rs, lhs, D));
            }
        for (int i = 0; i < n; ++i) {
            GradedElt t = ch_truncated(*rs, NilHeckeElt::T(rs->simple_reflection(i), n), guard);
            CHECK(multiply(*rs, t, t).truncated(D) == t.truncated(D));
        }
        GradedElt b1 = ch_truncated(*rs, NilHeckeElt::T(rs->from_word({0, 1, 0}), n), D);
        GradedElt b2 = ch_truncated(*rs, NilHeckeElt::T(rs->from_word({1, 0, 1}), n), D);
        CHECK(b1 == b2);
    }
    SUBCASE("lowest degree of Schubert classes") {
        KTheory kt(rs);
        const int D = rs->length(rs->longest()) + 1;
        for (WeylElt w : rs->elements()) {
            HClass c = ch_class(*rs, kt.schubert_class(w), D);
            CHECK(lowest_degree(*rs, c) == HClass{{w, Poly::constant(n, 1)}});
        }
    }
}

TEST_CASE("specialization diagram") {
    for (const char* type : {"A2", "B2"}) {
        auto rs = RootSystem::build(type);
        KTheory kt(rs);
        GradedCohomology hc(rs);
        const int D = rs->length(rs->longest()) + 1;
        for (WeylElt w : rs->elements())
            for (WeylElt v : rs->elements()) {
                HClass lhs = lowest_degree(*rs, ch_class(*rs, kt.product(w, v), D));
                CHECK(lhs == hc.h_product(w, v));
            }
    }
}

TEST_CASE("K specialization") {
    auto rs = RootSystem::build("A2");
    KTheory kt(rs);
    const WeylElt s1s2 = rs->from_word({0, 1}), s2s1 = rs->from_word({1, 0});
    KClass k = specialize_k(kt.product(s1s2, s2s1));
    KClass expect;
    expect.add_term(rs->identity(), GroupAlgElt::constant(2, -1));
    expect.add_term(rs->simple_reflection(0), GroupAlgElt::constant(2, 1));
    expect.add_term(rs->simple_reflection(1), GroupAlgElt::constant(2, 1));
    CHECK(k == expect);
}
