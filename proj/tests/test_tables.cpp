#include <doctest.h>

#include <set>
#include <sstream>

#include "kschubert/pieri.hpp"
#include "kschubert/tables.hpp"

using namespace kschubert;

namespace {

std::set<std::string> mismatches(const TableReport& rep, const std::string& kind) {
    std::set<std::string> out;
    for (const auto& e : rep.entries)
        if (e.kind == kind && !e.ok) out.insert(e.label);
    return out;
}

TableReport verify(const std::string& type) {
    auto rs = RootSystem::build(type);
    KTheory kt(rs);
    GradedCohomology hc(rs);
    PieriEngine pe(rs);
    return verify_fixture(load_fixture(fixture_path(type)), kt, hc, pe);
}

}  // namespace

TEST_CASE("parsing table expressions") {
    auto rs = RootSystem::build("A2");
    const Weight beta = rs->simple_root(0) + rs->simple_root(1);
    SUBCASE("coefficients") {
        const TableFraction f = parse_table_expr(*rs, "-\\alpha_{11}[1]");
        const auto coeffs = class_coefficients(*rs, f.num);
        REQUIRE(coeffs.size() == 1);
        const GroupAlgElt c = coefficient_kt(*rs, coeffs.at(rs->identity()));
        CHECK(c == GroupAlgElt::constant(2, 1) - GroupAlgElt::monomial(-beta));
        CHECK(coefficient_k(coeffs.at(rs->identity())) == 0);
        CHECK(coefficient_ht(*rs, coeffs.at(rs->identity())) == Poly::y_weight(beta));
    }
    SUBCASE("braces") {
        const std::string tex = "\\,\\{\\,-[1]\\,\\}\\,+[s_1]+[s_2]";
        const auto full = class_coefficients(*rs, parse_table_expr(*rs, tex, true).num);
        const auto reduced = class_coefficients(*rs, parse_table_expr(*rs, tex, false).num);
        CHECK(full.size() == 3);
        CHECK(reduced.size() == 2);
        CHECK_FALSE(reduced.count(rs->identity()));
        // a signed group continues a sum
        const auto g = parse_table_expr(*rs, "(y_{10}\\{\\,+\\alpha_{10}\\,\\})[1]", false).num;
        CHECK(g == parse_table_expr(*rs, "y_{10}[1]").num);
    }
    SUBCASE("exponents and fractions") {
        const TableFraction f = parse_table_expr(*rs, "1-e^{-\\omega_1}X^{-s_1\\omega_1}");
        CHECK(f.num.terms().size() == 2);
        const TableFraction q = parse_table_expr(*rs, "{1-X^{-\\omega_1}\\over 1+e^{-\\alpha_2}}[s_1]");
        CHECK(q.den == parse_table_expr(*rs, "1+e^{-\\alpha_2}").num);
        CHECK(parse_table_expr(*rs, "(1+y_{10})^2").num == parse_table_expr(*rs, "1+2y_{10}+y_{10}y_{10}").num);
    }
    SUBCASE("weights") {
        const auto w = parse_weight_expr(*rs, "{1\\over3}\\alpha_1+{2\\over 3}\\alpha_2");
        CHECK(w == std::vector<Rational>{0, 1});
        CHECK(parse_weight_expr(*rs, "s_2\\omega_2") == std::vector<Rational>{1, -1});
        CHECK(parse_weight_expr(*rs, "-\\rho") == std::vector<Rational>{-1, -1});
        CHECK(parse_weight_expr(*rs, "0") == std::vector<Rational>{0, 0});
    }
    SUBCASE("words") {
        CHECK(parse_word(*rs, "[1]") == rs->identity());
        CHECK(parse_word(*rs, "w_0") == rs->longest());
        CHECK(parse_word(*rs, "s_1s_2") == rs->from_word({0, 1}));
        CHECK(parse_word(*rs, "s1s2") == rs->from_word({0, 1}));
        CHECK(tex_word(*rs, rs->from_word({1, 0})) == "s_2s_1");
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_table_expr(*rs, "[s_1][s_2]"), std::invalid_argument);
        CHECK_THROWS_AS(parse_table_expr(*rs, "(y_{10}"), std::invalid_argument);
        CHECK_THROWS_AS(parse_table_expr(*rs, "\\alpha_{1}"), std::invalid_argument);
        CHECK_THROWS_AS(parse_weight_expr(*rs, "5\\alpha+3\\alpha_2"), std::invalid_argument);
        CHECK_THROWS_AS(parse_word(*rs, "s_3"), std::invalid_argument);
        CHECK(split_equation("[1] = a = {b = c}").size() == 3);
    }
}

TEST_CASE("reading fixtures") {
    std::istringstream in("# comment\nsystem: A2\n\nproduct: [1]^2 = 0\n");
    const Fixture fx = read_fixture(in);
    CHECK(fx.system == "A2");
    REQUIRE(fx.entries.size() == 1);
    CHECK(fx.entries[0].line == 4);
    std::istringstream bad("system: A2\nfoo: 1\n");
    CHECK_THROWS_AS(read_fixture(bad), std::invalid_argument);
    std::istringstream none("product: [1]^2 = 0\n");
    CHECK_THROWS_AS(read_fixture(none), std::invalid_argument);
    CHECK_THROWS_AS(load_fixture("/nonexistent/X9.tex"), std::runtime_error);
}

TEST_CASE("A2 fixture") {
    const TableReport rep = verify("A2");
    CHECK(rep.products_accounted());
    CHECK(rep.bundles_accounted());
    CHECK(rep.missing.empty());
    CHECK(rep.count("product", true) == 14);
    CHECK(rep.count("bundle", false) == 0);
    CHECK(mismatches(rep, "product") == std::set<std::string>{"[s_2]^2"});
    CHECK(mismatches(rep, "weights") == std::set<std::string>{"\\alpha_1", "\\alpha_2"});
}

TEST_CASE("B2 fixture") {
    const TableReport rep = verify("B2");
    CHECK(rep.products_accounted());
    CHECK(rep.count("bundle", false) == 0);
    CHECK(rep.count("weights", false) == 0);
    CHECK(rep.duplicates.size() == 3);
    CHECK(mismatches(rep, "product") == std::set<std::string>{"[s_1s_2][s_1s_2s_1]"});
}

TEST_CASE("G2 fixture") {
    const TableReport rep = verify("G2");
    CHECK(rep.products_accounted());
    CHECK(rep.bundles_accounted());
    CHECK(rep.missing.empty());
    CHECK(rep.count("product", true) == 55);
    CHECK(rep.count("bundle", true) == 19);
    CHECK(mismatches(rep, "weights") == std::set<std::string>{"\\lambda_1"});
}

TEST_CASE("fixture coefficients are certificates") {
    for (const char* type : {"A2", "B2", "G2"}) {
        CAPTURE(type);
        auto rs = RootSystem::build(type);
        KTheory kt(rs);
        PositivityChecker pc(rs);
        int checked = 0;
        for (const auto& e : load_fixture(fixture_path(type)).entries) {
            if (e.kind != "product") continue;
            const auto sides = split_equation(e.tex);
            TableFraction f;
            try {
                f = parse_table_expr(*rs, sides[1]);
            } catch (const std::invalid_argument&) {
                continue;
            }
            for (const auto& [z, c] : class_coefficients(*rs, f.num)) {
                auto cert = to_certificate(pc, c);
                if (!cert) continue;  // alpha off the roots
                ++checked;
                CHECK(pc.substitute(*cert) == coefficient_kt(*rs, c));
            }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("formatted products reparse") {
    for (const char* type : {"A2", "B2", "G2"}) {
        CAPTURE(type);
        auto rs = RootSystem::build(type);
        KTheory kt(rs);
        PositivityChecker pc(rs);
        const auto els = rs->elements();
        for (std::size_t i = 0; i < els.size(); i += (type[0] == 'G' ? 3 : 1))
            for (std::size_t j = i; j < els.size(); ++j) {
                const std::string line = format_product(kt, pc, els[i], els[j]);
                const auto sides = split_equation(line);
                REQUIRE(sides.size() == 2);
                const TableFraction f = parse_table_expr(*rs, sides[1]);
                KClass got;
                for (const auto& [z, c] : class_coefficients(*rs, f.num)) got.add_term(z, coefficient_kt(*rs, c));
                CHECK(got == kt.product(els[i], els[j]));
            }
    }
    auto rs = RootSystem::build("A2");
    KTheory kt(rs);
    PositivityChecker pc(rs);
    CHECK(format_product(kt, pc, rs->simple_reflection(0), rs->simple_reflection(1)) == "[s_1][s_2] = -\\alpha_{11}[1]");
}

TEST_CASE("table export round trip") {
    for (const char* type : {"A2", "B2"}) {
        auto rs = RootSystem::build(type);
        KTheory kt(rs);
        GradedCohomology hc(rs);
        for (Ring ring : {Ring::KT, Ring::K, Ring::HT, Ring::H}) {
            CAPTURE(to_string(ring));
            const ProductTable t = compute_table(kt, &hc, ring);
            CHECK_FALSE(t.rows.empty());
            const nlohmann::json j = table_to_json(*rs, t);
            const ProductTable back = table_from_json(*rs, nlohmann::json::parse(j.dump()));
            CHECK(back == t);
            CHECK(parse_ring(to_string(ring)) == ring);
        }
    }
    auto rs = RootSystem::build("A2");
    KTheory kt(rs);
    CHECK_THROWS_AS(compute_table(kt, nullptr, Ring::HT), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring("Q"), std::invalid_argument);
    const nlohmann::json j = table_to_json(*rs, compute_table(kt, nullptr, Ring::K));
    CHECK_THROWS_AS(table_from_json(*RootSystem::build("B2"), j), std::invalid_argument);
}
