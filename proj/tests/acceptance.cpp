#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "kschubert/bareiss.hpp"
#include "kschubert/graded.hpp"
#include "kschubert/nilhecke.hpp"
#include "kschubert/pieri.hpp"
#include "kschubert/positivity.hpp"
#include "kschubert/tables.hpp"
#include "oracles.hpp"

using namespace kschubert;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 for no limit
    std::function<Outcome()> run;
};

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
}

// ---- rank-two tables ----------------------------------------------------

Outcome tables(const std::string& type) {
    auto rs = RootSystem::build(type);
    KTheory kt(rs);
    GradedCohomology hc(rs);
    PieriEngine pe(rs);
    const VerifyOptions opts{false, false, true};
    const TableReport rep = verify_fixture(load_fixture(fixture_path(type)), kt, hc, pe, opts);
    const std::size_t pairs = rs->order() * (rs->order() - 1) / 2;
    const std::size_t distinct = rep.entries.size() - rep.duplicates.size();
    std::vector<std::string> errata, unconfirmed;
    for (const auto& e : rep.entries) {
        if (e.ok) continue;
        (e.dual_confirmed ? errata : unconfirmed).push_back(e.label);
    }
    Outcome o;
    o.pass = rep.products_accounted() && distinct == pairs;
    std::ostringstream os;
    os << distinct << "/" << pairs << " products, " << rep.count("product", true) << " exact";
    if (!rep.duplicates.empty()) os << ", " << rep.duplicates.size() << " repeated";
    if (!errata.empty()) os << "; suspected errata confirmed by both engines: " << join(errata);
    if (!unconfirmed.empty()) os << "; UNCONFIRMED: " << join(unconfirmed);
    if (!rep.missing.empty()) os << "; missing " << rep.missing.size();
    o.detail = os.str();
    return o;
}

Outcome bundles() {
    Outcome o;
    std::vector<std::string> parts;
    for (const char* type : {"A2", "B2", "G2"}) {
        auto rs = RootSystem::build(type);
        KTheory kt(rs);
        GradedCohomology hc(rs);
        PieriEngine pe(rs);
        const TableReport rep = verify_fixture(load_fixture(fixture_path(type)), kt, hc, pe, {false, true, false});
        std::vector<std::string> errata;
        for (const auto& e : rep.entries)
            if (!e.ok) errata.push_back(e.label + (e.dual_confirmed ? "" : " UNCONFIRMED"));
        // A2 and B2 are required to match outright
        const bool exact = std::string(type) == "G2" || errata.empty();
        o.pass = o.pass && rep.bundles_accounted() && exact;
        std::string s = std::string(type) + " " + std::to_string(rep.count("bundle", true)) + "/" +
                        std::to_string(rep.entries.size());
        if (!errata.empty()) s += " (suspected errata: " + join(errata) + ")";
        parts.push_back(s);
    }
    o.detail = join(parts);
    return o;
}

// ---- path model ---------------------------------------------------------

PieriExpansion xt_oracle(const RootSystem& rs, const Weight& lambda, WeylElt w) {
    return to_expansion(rs, right_mul_T(rs, NilHeckeElt::X(lambda), rs.inverse(w)));
}

PieriExpansion xeps_oracle(const RootSystem& rs, const Weight& lambda, WeylElt w) {
    return to_expansion(rs, multiply(rs, NilHeckeElt::X(lambda), epsilon(rs, rs.inverse(w))));
}

std::vector<std::pair<Weight, WeylElt>> g2_sample(const RootSystem& rs) {
    std::mt19937_64 rng(11);
    const auto els = rs.elements();
    std::vector<std::pair<Weight, WeylElt>> out;
    for (int k = 0; k < 20; ++k) {
        Weight lam(2);
        lam[0] = static_cast<std::int64_t>(rng() % 2);
        lam[1] = static_cast<std::int64_t>(rng() % 2);
        out.emplace_back(lam, els[rng() % els.size()]);
    }
    return out;
}

Outcome cross_validation() {
    Outcome o;
    int checked = 0;
    std::vector<std::string> bad;
    auto check = [&](const PieriEngine& pe, const RootSystem& rs, const Weight& lam, WeylElt w) {
        ++checked;
        if (pe.expand_XT(lam, w) != xt_oracle(rs, lam, w) || pe.expand_Xeps(lam, w) != xeps_oracle(rs, lam, w))
            bad.push_back(rs.name() + " " + lam.str() + " " + rs.word_string(w));
    };
    for (const char* type : {"A1", "A2", "B2"}) {
        auto rs = RootSystem::build(type);
        PieriEngine pe(rs);
        for (const auto& lam : oracle::small_dominant(rs->rank(), 2))
            for (WeylElt w : rs->elements()) check(pe, *rs, lam, w);
    }
    auto g2 = RootSystem::build("G2");
    PieriEngine pe(g2);
    for (const auto& [lam, w] : g2_sample(*g2)) check(pe, *g2, lam, w);
    o.pass = bad.empty();
    o.detail = std::to_string(checked) + " (lambda, w) pairs" + (bad.empty() ? "" : "; failing: " + join(bad));
    return o;
}

Outcome crystals() {
    Outcome o;
    std::mt19937_64 rng(3);
    int checked = 0;
    auto check = [&](RootSystemPtr rs, const Weight& lam) {
        const Crystal c(rs, lam);
        GroupAlgElt ch;
        for (std::size_t k = 0; k < c.size(); ++k) ch.add_term(c.data(k).endpoint, 1);
        ++checked;
        if (Rational(c.size()) != oracle::weyl_dimension(*rs, lam) || !oracle::weyl_character_matches(*rs, lam, ch, rng, 5)) {
            o.pass = false;
            o.detail += " " + rs->name() + lam.str();
        }
    };
    for (const char* type : {"A1", "A2", "B2"}) {
        auto rs = RootSystem::build(type);
        for (const auto& lam : oracle::small_dominant(rs->rank(), 2)) check(rs, lam);
    }
    auto g2 = RootSystem::build("G2");
    std::set<Weight> seen;
    for (const auto& [lam, w] : g2_sample(*g2))
        if (seen.insert(lam).second) check(g2, lam);
    o.detail = std::to_string(checked) + " shapes" + (o.pass ? "" : "; failing:" + o.detail);
    return o;
}

Outcome monk() {
    Outcome o;
    int checked = 0;
    for (const char* type : {"A2", "B2", "G2"}) {
        auto rs = RootSystem::build(type);
        PieriEngine pe(rs);
        KTheory kt(rs);
        for (int i = 0; i < rs->rank(); ++i) {
            const WeylElt d = rs->multiply(rs->longest(), rs->simple_reflection(i));
            if (pe.codim_one_class(i) != kt.schubert_class(d)) {
                o.pass = false;
                o.detail += " class " + std::string(type) + " i=" + std::to_string(i + 1);
            }
            for (WeylElt w : rs->elements()) {
                KClass got;
                for (const auto& [z, c] : pe.monk_coeffs(i, w)) got.add_term(z, c);
                ++checked;
                if (got != kt.product(d, w)) {
                    o.pass = false;
                    o.detail += " monk " + std::string(type) + " " + rs->word_string(w);
                }
            }
        }
    }
    o.detail = std::to_string(checked) + " (i, w) pairs" + (o.pass ? "" : "; failing:" + o.detail);
    return o;
}

// c_{mu,w}^z, the coefficient of [O_z] in [X^mu][O_w]
Outcome brion() {
    Outcome o;
    int checked = 0;
    for (const char* type : {"A2", "B2", "C2", "G2"}) {
        auto rs = RootSystem::build(type);
        KTheory kt(rs);
        PieriEngine pe(rs);
        const WeylElt w0 = rs->longest();
        for (const auto& lam : oracle::small_dominant(rs->rank(), 2)) {
            const Weight w0lam = rs->act(w0, lam);
            for (WeylElt w : rs->elements()) {
                const KClass a = kt.x_action(w0lam, w), b = kt.x_action(-lam, w);
                for (WeylElt z : rs->elements()) {
                    const Integer sign = rs->sign(w) * rs->sign(z);
                    const WeylElt zw0 = rs->multiply(z, w0), ww0 = rs->multiply(w, w0);
                    const auto dom = pe.pieri_coeffs(lam, zw0);
                    const auto dual = pe.pieri_coeffs(-w0lam, zw0);
                    auto at = [](const std::map<WeylElt, GroupAlgElt>& m, WeylElt u) {
                        auto it = m.find(u);
                        return it == m.end() ? GroupAlgElt{} : it->second;
                    };
                    GroupAlgElt r1 = at(dom, ww0), r2 = at(dual, ww0);
                    r1 *= GroupAlgElt::constant(rs->rank(), sign);
                    r2 *= GroupAlgElt::constant(rs->rank(), sign);
                    checked += 2;
                    if (a.coeff(z) != r1 || b.coeff(z) != r2) {
                        o.pass = false;
                        o.detail += " " + std::string(type) + lam.str() + rs->word_string(w) + "->" + rs->word_string(z);
                    }
                }
            }
        }
    }
    o.detail = std::to_string(checked) + " identities" + (o.pass ? "" : "; failing:" + o.detail);
    return o;
}

// ---- K-theory -----------------------------------------------------------

Outcome determinant() {
    Outcome o;
    int checked = 0;
    for (const char* type : {"A1", "A2", "B2", "G2"})
        for (auto conv : {SteinbergConvention::RightAscent, SteinbergConvention::LeftDescent}) {
            auto rs = RootSystem::build(type);
            KTheory kt(rs, conv);
            int sign = 0;
            Weight mu;
            ++checked;
            if (!as_signed_monomial(kt.steinberg_determinant(), sign, mu) ||
                mu != static_cast<std::int64_t>(rs->order() / 2) * rs->rho()) {
                o.pass = false;
                o.detail += " " + std::string(type) + "/" + to_string(conv);
            }
        }
    o.detail = std::to_string(checked) + " matrices" + (o.pass ? "" : "; failing:" + o.detail);
    return o;
}

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

Outcome kernels() {
    Outcome o;
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> coord(-2, 2), coef(-3, 3);
    int checked = 0;
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        auto rs = RootSystem::build(type);
        KTheory kt(rs);
        const int n = rs->rank();
        auto random_weight = [&] {
            Weight w(n);
            for (int i = 0; i < n; ++i) w[i] = coord(rng);
            return w;
        };
        int bad_k = 0, bad_h = 0;
        for (int trial = 0; trial < 50; ++trial) {
            const GroupAlgElt g = orbit_sum(*rs, random_weight());
            const RXElt diff = RXElt::from_x(g) - RXElt::scalar(g, n);
            RXElt f = RXElt::term(GroupAlgElt::monomial(random_weight(), coef(rng)), random_weight());
            f = f + RXElt::x_monomial(random_weight());
            if (!kt.phi(f * diff).is_zero()) ++bad_k;

            const Poly pf = random_poly(rng, n, 2), p = random_poly(rng, n, 2);
            Poly pg = Poly::constant(n, 0);
            for (WeylElt w : rs->elements()) pg += p.act(*rs, w);
            if (!graded_phi(*rs, pf * (pg - pg.x_to_y())).empty()) ++bad_h;
            checked += 2;
        }
        if (bad_k || bad_h) {
            o.pass = false;
            o.detail += " " + std::string(type) + " K:" + std::to_string(bad_k) + " H:" + std::to_string(bad_h);
        }
    }
    o.detail = std::to_string(checked) + " kernel elements" + (o.pass ? "" : "; failing:" + o.detail);
    return o;
}

Outcome chern() {
    Outcome o;
    auto rs = RootSystem::build("A2");
    KTheory kt(rs);
    GradedCohomology hc(rs);
    const int D = rs->length(rs->longest()) + 1;
    int leading = 0, diagram = 0;
    for (WeylElt w : rs->elements()) {
        if (lowest_degree(*rs, ch_class(*rs, kt.schubert_class(w), D)) == HClass{{w, Poly::constant(2, 1)}}) ++leading;
        for (WeylElt v : rs->elements())
            if (lowest_degree(*rs, ch_class(*rs, kt.product(w, v), D)) == hc.h_product(w, v)) ++diagram;
    }
    const int n = static_cast<int>(rs->order());
    o.pass = leading == n && diagram == n * n;
    o.detail = "leading terms " + std::to_string(leading) + "/" + std::to_string(n) + ", products " +
               std::to_string(diagram) + "/" + std::to_string(n * n);
    return o;
}

Outcome positivity() {
    Outcome o;
    int coeffs = 0, table_coeffs = 0, errata_skipped = 0;
    for (const char* type : {"A2", "B2", "G2"}) {
        auto rs = RootSystem::build(type);
        KTheory kt(rs);
        GradedCohomology hc(rs);
        PieriEngine pe(rs);
        const PositivityChecker pc(rs);
        std::mt19937_64 rng(41);
        const auto els = rs->elements();
        for (std::size_t i = 0; i < els.size(); ++i)
            for (std::size_t j = i; j < els.size(); ++j) {
                const KClass p = kt.product(els[i], els[j]);
                for (const auto& [z, c] : p.terms()) {
                    ++coeffs;
                    const SignReport r = pc.sign_check(els[i], els[j], z, c, rng);
                    if (!r.numeric_ok || !pc.find_certificate(c, r.sign)) {
                        o.pass = false;
                        o.detail += " " + std::string(type) + ":" + rs->word_string(els[i]) + "," +
                                    rs->word_string(els[j]) + "->" + rs->word_string(z);
                    }
                }
            }
        // the displayed coefficients themselves
        const Fixture fx = load_fixture(fixture_path(type));
        const TableReport rep = verify_fixture(fx, kt, hc, pe, {false, false, true});
        std::map<int, bool> ok;
        for (const auto& e : rep.entries) ok[e.line] = e.ok;
        for (const auto& e : fx.entries) {
            if (e.kind != "product") continue;
            if (!ok[e.line]) {
                ++errata_skipped;
                continue;
            }
            const auto sides = split_equation(e.tex);
            const auto [w, v] = product_lhs(*rs, sides[0]);
            const KClass engine = kt.product(w, v);
            for (const auto& [z, c] : class_coefficients(*rs, parse_table_expr(*rs, sides[1]).num)) {
                ++table_coeffs;
                auto cert = to_certificate(pc, c);
                bool good = cert.has_value();
                if (good) {
                    Certificate signed_cert;
                    for (const auto& [m, k] : cert->terms) signed_cert.add(m, k * pc.predicted_sign(w, v, z));
                    good = pc.verify(signed_cert, engine.coeff(z) * GroupAlgElt::constant(rs->rank(), pc.predicted_sign(w, v, z)));
                }
                if (!good) {
                    o.pass = false;
                    o.detail += " table " + std::string(type) + " line " + std::to_string(e.line);
                }
            }
        }
    }
    o.detail = std::to_string(coeffs) + " structure constants, " + std::to_string(table_coeffs) +
               " displayed coefficients (" + std::to_string(errata_skipped) + " erratum lines excluded)" +
               (o.pass ? "" : "; failing:" + o.detail);
    return o;
}

Outcome eigen() {
    Outcome o;
    std::mt19937_64 rng(23);
    std::vector<std::string> parts;
    for (const char* type : {"A1", "A2", "B2"}) {
        KTheory kt(RootSystem::build(type));
        const EigenReport r = kt.eigen_verify(rng, 5);
        o.pass = o.pass && r.ok && r.points == 5;
        parts.push_back(std::string(type) + (r.ok ? " ok" : " " + join(r.failures)));
    }
    o.detail = join(parts);
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "A2 table reproduction", 1, [] { return tables("A2"); }},
        {2, "B2 table reproduction", 10, [] { return tables("B2"); }},
        {3, "G2 table reproduction", 300, [] { return tables("G2"); }},
        {4, "Schubert classes in line bundles", 0, bundles},
        {5, "path model against nil-Hecke normal form", 0, cross_validation},
        {6, "crystal dimension and character", 0, crystals},
        {7, "codimension-one classes and Monk coefficients", 0, monk},
        {8, "Brion duality", 0, brion},
        {9, "Steinberg determinant", 0, determinant},
        {10, "kernels of the evaluation maps", 0, kernels},
        {11, "Chern character", 0, chern},
        {12, "positivity", 0, positivity},
        {13, "eigenbasis verification", 0, eigen},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.pass = false;
            o.detail += "; over the time limit";
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << std::setw(2) << c.id << ". " << c.name << ": " << o.detail << " ["
                  << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
