#include <doctest.h>

#include <algorithm>
#include <set>

#include "kschubert/root_system.hpp"

using namespace kschubert;

namespace {

std::set<Weight> as_set(const std::vector<PositiveRoot>& roots) {
    std::set<Weight> s;
    for (const auto& r : roots) s.insert(r.omega);
    return s;
}

}  // namespace

TEST_CASE("rank two basics") {
    auto a2 = RootSystem::build("A2");
    CHECK(a2->positive_roots().size() == 3);
    CHECK(a2->braid_order(0, 1) == 3);
    CHECK(a2->order() == 6);

    auto b2 = RootSystem::build("B2");
    CHECK(b2->order() == 8);
    CHECK(b2->braid_order(0, 1) == 4);
    // alpha_1 short: 2 alpha_1 + alpha_2 is a root
    bool found = false;
    for (const auto& r : b2->positive_roots()) found |= (r.alpha == std::vector<std::int64_t>{2, 1});
    CHECK(found);

    auto g2 = RootSystem::build("G2");
    CHECK(g2->order() == 12);
    CHECK(g2->length(g2->longest()) == 6);
    CHECK(g2->positive_roots().size() == 6);
    CHECK(g2->braid_order(0, 1) == 6);
}

TEST_CASE("group orders of larger types") {
    CHECK(RootSystem::build("A3")->order() == 24);
    CHECK(RootSystem::build("B3")->order() == 48);
    CHECK(RootSystem::build("C3")->order() == 48);
    CHECK(RootSystem::build("D4")->order() == 192);
    CHECK(RootSystem::build("F4")->order() == 1152);
    CHECK(RootSystem::build("A4")->order() == 120);
}

TEST_CASE("malformed Cartan matrices are rejected") {
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, -1}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, -2}, {-2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::from_cartan({{3}}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("Q7"), std::invalid_argument);
    // E9 is affine-like and exceeds any finite bound
    std::vector<std::vector<int>> e9(9, std::vector<int>(9, 0));
    CHECK_THROWS_AS(RootSystem::from_cartan(e9), std::invalid_argument);
}

TEST_CASE("bruhat order in A2") {
    auto rs = RootSystem::build("A2");
    WeylElt s1 = rs->from_word({0});
    WeylElt s1s2 = rs->from_word({0, 1});
    WeylElt s2s1 = rs->from_word({1, 0});
    CHECK(rs->bruhat_leq(s1, s1s2));
    CHECK_FALSE(rs->bruhat_leq(s1s2, s2s1));
    CHECK_FALSE(rs->bruhat_leq(s2s1, s1s2));
    for (WeylElt w : rs->elements()) {
        CHECK(rs->bruhat_leq(rs->identity(), w));
        CHECK(rs->bruhat_leq(w, rs->longest()));
    }
}

TEST_CASE("bruhat order agrees with the subword property") {
    for (std::string type : {"A3", "B2", "G2", "B3"}) {
        auto rs = RootSystem::build(type);
        for (WeylElt w : rs->elements()) {
            const auto& word = rs->reduced_word(w);
            std::set<std::uint32_t> below;
            const std::size_t n = word.size();
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                std::vector<int> sub;
                for (std::size_t k = 0; k < n; ++k)
                    if (mask & (1ull << k)) sub.push_back(word[k]);
                below.insert(rs->from_word(sub).index);
            }
            for (WeylElt u : rs->elements())
                CHECK(rs->bruhat_leq(u, w) == (below.count(u.index) > 0));
        }
    }
}

TEST_CASE("group axioms and lengths") {
    for (std::string type : {"A3", "B2", "G2", "C3"}) {
        auto rs = RootSystem::build(type);
        for (WeylElt w : rs->elements()) {
            CHECK(rs->multiply(w, rs->inverse(w)) == rs->identity());
            CHECK(rs->length(w) == rs->length(rs->inverse(w)));
            CHECK(rs->length(w) == static_cast<int>(rs->inversion_set(w).size()));
            CHECK(rs->length(rs->multiply(rs->longest(), w)) == rs->length(rs->longest()) - rs->length(w));
            CHECK(rs->from_rho_image(rs->act(w, rs->rho())) == w);
            for (int i = 0; i < rs->rank(); ++i) {
                CHECK(rs->has_left_descent(w, i) == (rs->rho_image(w)[i] < 0));
                CHECK(rs->act(rs->right_mul(w, i), rs->rho()) == rs->rho_image(rs->right_mul(w, i)));
            }
        }
        for (int i = 0; i < rs->rank(); ++i)
            for (int j = 0; j < rs->rank(); ++j) {
                std::vector<int> word;
                for (int k = 0; k < rs->braid_order(i, j); ++k) word.push_back(k % 2 ? j : i);
                word.insert(word.end(), word.begin(), word.end());
                CHECK(rs->from_word(word) == rs->identity());
            }
    }
}

TEST_CASE("inversion sets") {
    auto rs = RootSystem::build("A2");
    WeylElt s1s2 = rs->from_word({0, 1});
    auto inv = as_set(rs->inversion_set(s1s2));
    std::set<Weight> expected{rs->simple_root(1), rs->simple_root(0) + rs->simple_root(1)};
    CHECK(inv == expected);
    for (std::string type : {"A3", "G2", "B3"}) {
        auto r = RootSystem::build(type);
        for (WeylElt w : r->elements()) {
            auto from_word = r->inversion_set_from_word(w);
            std::set<Weight> fw(from_word.begin(), from_word.end());
            CHECK(fw == as_set(r->inversion_set(w)));
        }
    }
}

TEST_CASE("coroot pairing matches the reflection formula") {
    for (std::string type : {"B2", "G2", "C3"}) {
        auto rs = RootSystem::build(type);
        for (const auto& beta : rs->positive_roots()) {
            CHECK(rs->coroot_pairing(beta.omega, beta) == 2);
            for (int i = 0; i < rs->rank(); ++i) {
                Weight w = rs->omega(i);
                // s_beta(lambda) = lambda - <lambda, beta^vee> beta, computed by conjugation
                WeylElt c = beta.conjugator;
                Weight reflected = rs->act(c, rs->reflect(beta.simple, rs->act(rs->inverse(c), w)));
                CHECK(reflected == w - rs->coroot_pairing(w, beta) * beta.omega);
            }
        }
    }
}

TEST_CASE("Steinberg weights") {
    auto rs = RootSystem::build("A2");
    CHECK(rs->steinberg_weight(rs->identity(), SteinbergConvention::RightAscent) == rs->rho());
    WeylElt s2s1 = rs->from_word({1, 0});
    CHECK(rs->steinberg_weight(s2s1, SteinbergConvention::RightAscent) == rs->act(rs->from_word({1}), rs->omega(1)));
    CHECK(rs->steinberg_weight(rs->identity(), SteinbergConvention::LeftDescent) == rs->zero());
    CHECK(rs->steinberg_weight(rs->longest(), SteinbergConvention::LeftDescent) ==
          rs->act(rs->longest(), rs->rho()));
    CHECK(parse_convention("left-descent") == SteinbergConvention::LeftDescent);
    CHECK_THROWS(parse_convention("other"));
}

TEST_CASE("parabolic cosets") {
    auto rs = RootSystem::build("A2");
    SimpleSet J = RootSystem::stabilizer_set(Weight{1, 0});
    CHECK(J == 0b10);
    WeylElt s1s2 = rs->from_word({0, 1});
    CHECK(rs->min_rep(s1s2, J) == rs->from_word({0}));
    CHECK(rs->max_rep(rs->from_word({0}), J) == s1s2);
    CHECK(rs->parabolic_subgroup(J).size() == 2);
    auto below = rs->max_rep_below(rs->from_word({0}), J, rs->from_word({0}));
    REQUIRE(below);
    CHECK(*below == rs->from_word({0}));
    CHECK_FALSE(rs->max_rep_below(rs->from_word({0}), J, rs->identity()));
    auto g2 = RootSystem::build("G2");
    for (WeylElt w : g2->elements())
        for (int i = 0; i < 2; ++i) {
            Weight lam = g2->omega(i);
            auto m = g2->min_element_mapping(lam, g2->act(w, lam));
            REQUIRE(m);
            CHECK(*m == g2->min_rep(w, RootSystem::stabilizer_set(lam)));
        }
}

TEST_CASE("alpha coordinates round trip") {
    auto rs = RootSystem::build("G2");
    for (const auto& beta : rs->positive_roots()) {
        auto c = rs->to_alpha_coords(beta.omega);
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == Rational(beta.alpha[i]));
        CHECK(rs->from_alpha_coords(beta.alpha) == beta.omega);
    }
    auto w1 = rs->to_alpha_coords(rs->omega(0));
    CHECK(w1[0] == 2);
    CHECK(w1[1] == 1);
}
