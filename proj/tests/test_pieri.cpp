#include <doctest.h>

#include "kschubert/pieri.hpp"
#include "oracles.hpp"

using namespace kschubert;

namespace {

PieriExpansion xt_oracle(const RootSystem& rs, const Weight& lambda, WeylElt w) {
    return to_expansion(rs, right_mul_T(rs, NilHeckeElt::X(lambda), rs.inverse(w)));
}

PieriExpansion xeps_oracle(const RootSystem& rs, const Weight& lambda, WeylElt w) {
    return to_expansion(rs, multiply(rs, NilHeckeElt::X(lambda), epsilon(rs, rs.inverse(w))));
}

Weight W(std::initializer_list<std::int64_t> c) { return Weight(std::vector<std::int64_t>(c)); }

}  // namespace

TEST_CASE("A1 expansions by hand") {
    auto rs = RootSystem::build("A1");
    PieriEngine pe(rs);
    const WeylElt s = rs->simple_reflection(0);
    PieriExpansion expect{{{s, W({-1})}, 1}, {{rs->identity(), W({1})}, 1}};
    CHECK(pe.expand_XT(W({1}), s) == expect);
    CHECK(pe.expand_XT(W({1}), rs->identity()) == PieriExpansion{{{rs->identity(), W({1})}, 1}});
    // X^w (1 - T_1) = -T_1 X^{-w}
    CHECK(pe.expand_Xeps(W({1}), s) == PieriExpansion{{{s, W({-1})}, -1}});
    CHECK(pe.expand_negative(W({0}), s) == PieriExpansion{{{s, W({0})}, 1}});
    CHECK(pe.expand_negative(W({1}), s) == xt_oracle(*rs, W({-1}), s));
}

TEST_CASE("A2 omega_1 with s_1") {
    auto rs = RootSystem::build("A2");
    PieriEngine pe(rs);
    const WeylElt s1 = rs->simple_reflection(0);
    const Weight om1 = rs->omega(0);
    PieriExpansion expect{{{rs->identity(), om1}, 1}, {{s1, rs->act(s1, om1)}, 1}};
    CHECK(pe.expand_XT(om1, s1) == expect);
}

TEST_CASE("path model matches nil-Hecke normal form") {
    for (const char* type : {"A1", "A2", "B2", "C2"}) {
        auto rs = RootSystem::build(type);
        PieriEngine pe(rs);
        for (const auto& lam : oracle::small_dominant(rs->rank(), 2)) {
            for (WeylElt w : rs->elements()) {
                CAPTURE(type);
                CAPTURE(lam.str());
                CAPTURE(rs->word_string(w));
                CHECK(pe.expand_XT(lam, w) == xt_oracle(*rs, lam, w));
                CHECK(pe.expand_Xeps(lam, w) == xeps_oracle(*rs, lam, w));
                CHECK(pe.expand_negative(lam, w) == xt_oracle(*rs, -lam, w));
                CHECK(pe.expand_w0(lam, w) == xt_oracle(*rs, rs->act(rs->longest(), lam), w));
            }
        }
    }
}

TEST_CASE("G2 sample") {
    auto rs = RootSystem::build("G2");
    PieriEngine pe(rs);
    std::mt19937_64 rng(7);
    auto elems = rs->elements();
    for (int k = 0; k < 10; ++k) {
        Weight lam = W({static_cast<std::int64_t>(rng() % 2), static_cast<std::int64_t>(rng() % 2)});
        WeylElt w = elems[rng() % elems.size()];
        CAPTURE(lam.str());
        CAPTURE(rs->word_string(w));
        CHECK(pe.expand_XT(lam, w) == xt_oracle(*rs, lam, w));
        CHECK(pe.expand_Xeps(lam, w) == xeps_oracle(*rs, lam, w));
    }
}

TEST_CASE("dual paths") {
    for (const char* type : {"A2", "B2", "G2"}) {
        auto rs = RootSystem::build(type);
        PieriEngine pe(rs);
        const WeylElt w0 = rs->longest();
        for (const auto& lam : oracle::small_dominant(rs->rank(), 1)) {
            const Weight dual_shape = -rs->act(w0, lam);
            const Crystal& c = pe.crystal(lam);
            const Crystal& d = pe.crystal(dual_shape);
            const SimpleSet J = d.stabilizer();
            for (std::size_t k = 0; k < c.size(); ++k) {
                const LSPath q = c.paths()[k].dual();
                const auto qd = endpoints_and_directions(*rs, dual_shape, q);
                CHECK(d.index_of(q) < d.size());
                CHECK(qd.endpoint == -c.data(k).endpoint);
                CHECK(qd.iota == rs->min_rep(rs->multiply(c.data(k).phi, w0), J));
                CHECK(qd.phi == rs->min_rep(rs->multiply(c.data(k).iota, w0), J));
            }
        }
    }
}

TEST_CASE("pieri coefficients agree with the nil-Hecke engine") {
    for (const char* type : {"A2", "B2"}) {
        auto rs = RootSystem::build(type);
        PieriEngine pe(rs);
        KTheory kt(rs);
        for (const auto& lam : oracle::small_dominant(rs->rank(), 1)) {
            for (WeylElt w : rs->elements()) {
                for (const Weight& mu : {lam, Weight(-lam)}) {
                    KClass expect = kt.x_action(mu, w);
                    KClass got;
                    for (const auto& [z, c] : pe.pieri_coeffs(mu, w)) got.add_term(z, c);
                    CHECK(got == expect);
                }
            }
        }
        CHECK(pe.pieri_coeffs(Weight(rs->rank()), rs->longest()).size() == 1);
    }
}

TEST_CASE("path engine acts like the nil-Hecke engine") {
    auto rs = RootSystem::build("A2");
    PieriEngine pe(rs);
    KTheory kt(rs);
    for (const auto& mu : {W({1, -1}), W({-2, 1}), W({0, 0}), W({1, 1})})
        for (WeylElt v : rs->elements()) CHECK(pe.x_action(mu, v) == kt.x_action(mu, v));
    for (WeylElt w : rs->elements())
        for (WeylElt v : rs->elements()) CHECK(kt.product(w, v, pe.as_engine()) == kt.product(w, v));
}

TEST_CASE("codimension one classes and Monk coefficients") {
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        auto rs = RootSystem::build(type);
        PieriEngine pe(rs);
        KTheory kt(rs);
        const WeylElt w0 = rs->longest();
        for (int i = 0; i < rs->rank(); ++i) {
            const WeylElt d = rs->multiply(w0, rs->simple_reflection(i));
            CHECK(pe.codim_one_class(i) == kt.schubert_class(d));
            for (WeylElt w : rs->elements()) {
                KClass got;
                for (const auto& [z, c] : pe.monk_coeffs(i, w)) got.add_term(z, c);
                CHECK(got == kt.product(d, w));
                // diagonal term
                const Weight ex = rs->act(w0, rs->omega(i)) - rs->act(w, rs->omega(i));
                GroupAlgElt diag = GroupAlgElt::constant(rs->rank(), 1) - GroupAlgElt::monomial(ex);
                CHECK(got.coeff(w) == diag);
            }
        }
    }
}

TEST_CASE("A2 Monk example") {
    auto rs = RootSystem::build("A2");
    PieriEngine pe(rs);
    const WeylElt s1 = rs->simple_reflection(0);
    auto c = pe.monk_coeffs(0, s1);
    const Weight a2 = rs->simple_root(1);
    CHECK(c.at(s1) == -(GroupAlgElt::monomial(-a2) - GroupAlgElt::constant(2, 1)));
    CHECK(c.at(rs->identity()) == GroupAlgElt::monomial(-a2));
}

TEST_CASE("errors") {
    auto rs = RootSystem::build("A2");
    PieriEngine pe(rs);
    CHECK_THROWS_AS(pe.expand_XT(W({-1, 0}), rs->identity()), std::invalid_argument);
    CHECK_THROWS_AS(pe.pieri_coeffs(W({1, -1}), rs->identity()), std::invalid_argument);
}

TEST_CASE("Brion duality") {
    for (const char* type : {"A2", "B2"}) {
        auto rs = RootSystem::build(type);
        PieriEngine pe(rs);
        KTheory kt(rs);
        const WeylElt w0 = rs->longest();
        for (const auto& lam : oracle::small_dominant(rs->rank(), 1)) {
            const Weight w0lam = rs->act(w0, lam);
            for (WeylElt w : rs->elements()) {
                const KClass a = kt.x_action(w0lam, w), b = kt.x_action(-lam, w);
                for (WeylElt z : rs->elements()) {
                    const KClass ra = pe.x_action(lam, rs->multiply(z, w0));
                    const KClass rb = pe.x_action(-w0lam, rs->multiply(z, w0));
                    const Integer sign = rs->sign(w) * rs->sign(z);
                    CHECK(a.coeff(z) == ra.coeff(rs->multiply(w, w0)) * sign);
                    CHECK(b.coeff(z) == rb.coeff(rs->multiply(w, w0)) * sign);
                }
            }
        }
    }
}
