#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "kschubert/graded.hpp"
#include "kschubert/parallel.hpp"
#include "kschubert/pieri.hpp"
#include "kschubert/positivity.hpp"
#include "kschubert/tables.hpp"

using namespace kschubert;
using nlohmann::json;

namespace {

struct Options {
    std::string system = "A2";
    std::string weight;
    std::vector<std::string> words;
    std::string ring = "KT";
    int degree = -1;
    int bound = PositivityChecker::kDefaultSupportBound;
    std::string out;
    bool text = false;
    bool strict = false;
};

/// "1,2,1" (1-based letters), "e" or "" for the identity, "w0".
WeylElt parse_cli_word(const RootSystem& rs, const std::string& text) {
    if (text.empty() || text == "e" || text == "id") return rs.identity();
    if (text == "w0") return rs.longest();
    std::vector<int> word;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t used = 0;
        int i = 0;
        try {
            i = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || used == 0 || i < 1 || i > rs.rank())
            throw std::invalid_argument("bad letter '" + tok + "' in word '" + text + "'");
        word.push_back(i - 1);
    }
    return rs.from_word(word);
}

json weight_json(const Weight& w) {
    json a = json::array();
    for (int i = 0; i < w.rank(); ++i) a.push_back(w[i]);
    return a;
}

json group_json(const GroupAlgElt& c) {
    json terms = json::array();
    for (const auto& [e, k] : c.serialize()) terms.push_back({e, k.str()});
    return {{"terms", terms}, {"str", c.str()}};
}

json kclass_json(const RootSystem& rs, const KClass& c) {
    json rows = json::array();
    for (const auto& [z, k] : c.terms()) rows.push_back({{"z", rs.word_string(z)}, {"c", group_json(k)}});
    return rows;
}

json hclass_json(const RootSystem& rs, const HClass& c) {
    json rows = json::array();
    for (const auto& [z, f] : c) rows.push_back({{"z", rs.word_string(z)}, {"c", f.str()}});
    return rows;
}

void emit(const Options& o, const json& j, const std::string& text = {}) {
    const std::string body = (o.text && !text.empty()) ? text : j.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << body;
}

Weight require_weight(const RootSystem& rs, const Options& o) {
    if (o.weight.empty()) throw std::invalid_argument("--weight is required");
    return parse_weight(o.weight, rs.rank());
}

WeylElt require_word(const RootSystem& rs, const Options& o, std::size_t k) {
    if (o.words.size() <= k) throw std::invalid_argument("expected " + std::to_string(k + 1) + " --word option(s)");
    return parse_cli_word(rs, o.words[k]);
}

int cmd_rootsys(const Options& o) {
    auto rs = RootSystem::build(o.system);
    json roots = json::array();
    for (const auto& b : rs->positive_roots()) roots.push_back({{"alpha", b.alpha}, {"omega", weight_json(b.omega)}});
    json els = json::array();
    for (WeylElt w : rs->elements_by_length())
        els.push_back({{"word", rs->word_string(w)}, {"length", rs->length(w)}});
    emit(o, {{"system", rs->name()},
             {"rank", rs->rank()},
             {"cartan", rs->cartan_matrix()},
             {"order", rs->order()},
             {"positive_roots", roots},
             {"elements", els}});
    return 0;
}

int cmd_class(const Options& o) {
    auto rs = RootSystem::build(o.system);
    KTheory kt(rs);
    if (!o.weight.empty()) {
        const Weight lambda = require_weight(*rs, o);
        const KClass c = kt.line_bundle_class(lambda);
        emit(o, {{"system", rs->name()}, {"weight", weight_json(lambda)}, {"class", kclass_json(*rs, c)}},
             c.str(*rs) + "\n");
        return 0;
    }
    const WeylElt w = require_word(*rs, o, 0);
    const KClass ideal = kt.ideal_class(w);
    emit(o, {{"system", rs->name()},
             {"word", rs->word_string(w)},
             {"schubert", kclass_json(*rs, kt.schubert_class(w))},
             {"ideal", kclass_json(*rs, ideal)}},
         ideal.str(*rs) + "\n");
    return 0;
}

int cmd_bundles(const Options& o) {
    auto rs = RootSystem::build(o.system);
    KTheory kt(rs);
    std::vector<WeylElt> targets;
    if (o.words.empty()) targets = rs->elements_by_length();
    else targets.push_back(require_word(*rs, o, 0));
    json all = json::array();
    for (WeylElt w : targets) {
        json terms = json::array();
        for (const auto& [u, n] : kt.schubert_in_line_bundles(w))
            terms.push_back({{"u", rs->word_string(u)}, {"lambda", weight_json(kt.steinberg_weight(u))}, {"c", group_json(n)}});
        all.push_back({{"word", rs->word_string(w)}, {"expansion", terms}});
    }
    emit(o, {{"system", rs->name()}, {"convention", to_string(kt.convention())}, {"classes", all}});
    return 0;
}

int cmd_product(const Options& o) {
    auto rs = RootSystem::build(o.system);
    KTheory kt(rs);
    const WeylElt w = require_word(*rs, o, 0), v = require_word(*rs, o, 1);
    const Ring ring = parse_ring(o.ring);
    json j = {{"system", rs->name()}, {"ring", to_string(ring)}, {"w", rs->word_string(w)}, {"v", rs->word_string(v)}};
    std::string text;
    if (ring == Ring::KT || ring == Ring::K) {
        KClass p = kt.product(w, v);
        if (ring == Ring::K) p = specialize_k(p);
        j["product"] = kclass_json(*rs, p);
        text = p.str(*rs) + "\n";
        if (ring == Ring::KT && rs->rank() == 2) {
            text = format_product(kt, PositivityChecker(rs), w, v) + "\n";
            j["tex"] = text.substr(0, text.size() - 1);
        }
    } else {
        GradedCohomology hc(rs);
        HClass p = hc.h_product(w, v);
        if (ring == Ring::H) p = specialize_h(p);
        j["product"] = hclass_json(*rs, p);
        text = hclass_str(*rs, p) + "\n";
    }
    emit(o, j, text);
    return 0;
}

int cmd_table(const Options& o) {
    auto rs = RootSystem::build(o.system);
    KTheory kt(rs);
    const Ring ring = parse_ring(o.ring);
    std::optional<GradedCohomology> hc;
    if (ring == Ring::HT || ring == Ring::H) hc.emplace(rs);
    const ProductTable t = compute_table(kt, hc ? &*hc : nullptr, ring);
    std::string text;
    if (ring == Ring::KT && rs->rank() == 2) {
        const PositivityChecker pc(rs);
        const auto els = rs->elements_by_length();
        for (std::size_t i = 0; i < els.size(); ++i)
            for (std::size_t k = i; k < els.size(); ++k) text += format_product(kt, pc, els[i], els[k]) + "\n";
    }
    emit(o, table_to_json(*rs, t), text);
    return 0;
}

int cmd_crystal(const Options& o) {
    auto rs = RootSystem::build(o.system);
    const Weight lambda = require_weight(*rs, o);
    if (!lambda.is_dominant()) throw std::invalid_argument("crystal needs a dominant weight");
    const Crystal cr(rs, lambda);
    json paths = json::array();
    std::string text;
    for (const auto& p : cr.paths()) {
        paths.push_back({{"path", p.str()}, {"endpoint", weight_json(p.endpoint())}});
        text += p.str() + "\n";
    }
    emit(o, {{"system", rs->name()}, {"weight", weight_json(lambda)}, {"size", cr.size()}, {"paths", paths}}, text);
    return 0;
}

int cmd_pieri(const Options& o) {
    auto rs = RootSystem::build(o.system);
    const PieriEngine pe(rs);
    const Weight lambda = require_weight(*rs, o);
    const WeylElt w = require_word(*rs, o, 0);
    KClass c;
    for (const auto& [z, k] : pe.pieri_coeffs(lambda, w)) c.add_term(z, k);
    emit(o, {{"system", rs->name()}, {"weight", weight_json(lambda)}, {"word", rs->word_string(w)}, {"product", kclass_json(*rs, c)}},
         c.str(*rs) + "\n");
    return 0;
}

int cmd_ch(const Options& o) {
    auto rs = RootSystem::build(o.system);
    KTheory kt(rs);
    const WeylElt w = require_word(*rs, o, 0);
    const int degree = o.degree >= 0 ? o.degree : rs->length(rs->longest()) + 1;
    const HClass c = ch_class(*rs, kt.schubert_class(w), degree);
    emit(o, {{"system", rs->name()}, {"word", rs->word_string(w)}, {"degree", degree}, {"ch", hclass_json(*rs, c)}},
         hclass_str(*rs, c) + "\n");
    return 0;
}

int cmd_verify(const Options& o) {
    auto rs = RootSystem::build(o.system);
    KTheory kt(rs);
    GradedCohomology hc(rs);
    PieriEngine pe(rs);
    const TableReport rep = verify_fixture(load_fixture(fixture_path(o.system)), kt, hc, pe);
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"line", e.line}, {"kind", e.kind}, {"label", e.label}, {"ok", e.ok},
                           {"dual_confirmed", e.dual_confirmed}, {"notes", e.notes}});
    const bool accounted = rep.products_accounted() && rep.bundles_accounted();
    const bool clean = rep.count("weights", false) + rep.count("bundle", false) + rep.count("product", false) == 0;
    emit(o, {{"system", rep.system}, {"entries", entries}, {"accounted", accounted}, {"clean", clean}}, rep.str());
    return (o.strict ? clean : accounted) ? 0 : 1;
}

int cmd_positivity(const Options& o) {
    auto rs = RootSystem::build(o.system);
    KTheory kt(rs);
    const PositivityChecker pc(rs);
    std::vector<std::tuple<WeylElt, WeylElt, WeylElt, GroupAlgElt>> triples;
    std::vector<std::pair<WeylElt, WeylElt>> pairs;
    if (!o.words.empty()) {
        pairs.emplace_back(require_word(*rs, o, 0), require_word(*rs, o, 1));
    } else {
        const auto els = rs->elements();
        for (std::size_t i = 0; i < els.size(); ++i)
            for (std::size_t k = i; k < els.size(); ++k) pairs.emplace_back(els[i], els[k]);
    }
    for (const auto& [w, v] : pairs) {
        const KClass p = kt.product(w, v);
        for (const auto& [z, c] : p.terms()) triples.emplace_back(w, v, z, c);
    }
    std::vector<SignReport> reports(triples.size());
    parallel_for(triples.size(), [&](std::size_t k) {
        const auto& [w, v, z, c] = triples[k];
        std::mt19937_64 rng(k + 1);
        reports[k] = pc.sign_check(w, v, z, c, rng);
        reports[k].certificate = pc.find_certificate(c, reports[k].sign, o.bound);
    });
    json rows = json::array();
    int sign_failures = 0, uncertified = 0;
    std::string text;
    for (const auto& r : reports) {
        sign_failures += !r.numeric_ok;
        uncertified += !r.certificate;
        const std::string cert = r.certificate ? pc.str(*r.certificate) : "not found";
        rows.push_back({{"w", rs->word_string(r.w)}, {"v", rs->word_string(r.v)}, {"z", rs->word_string(r.z)},
                        {"sign", r.sign}, {"sign_check", r.numeric_ok}, {"certificate", cert}});
        text += rs->word_string(r.w) + " " + rs->word_string(r.v) + " -> " + rs->word_string(r.z) + ": " +
                (r.numeric_ok ? "ok" : "FAIL") + " " + cert + "\n";
    }
    text += std::to_string(reports.size()) + " coefficients, " + std::to_string(sign_failures) + " sign failures, " +
            std::to_string(uncertified) + " without certificate\n";
    emit(o, {{"system", rs->name()}, {"bound", o.bound}, {"rows", rows}, {"sign_failures", sign_failures},
             {"uncertified", uncertified}},
         text);
    return sign_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant K-theory of flag varieties"};
    app.require_subcommand(1);
    Options o;
    int status = 0;

    auto add = [&](const std::string& name, const std::string& help, int (*fn)(const Options&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--system", o.system, "type name (A2, B2, G2, ...) or Cartan file")->capture_default_str();
        sub->add_option("--out", o.out, "write output to FILE");
        sub->add_flag("--text", o.text, "human-readable output");
        sub->callback([&o, &status, fn] { status = fn(o); });
        return sub;
    };

    add("rootsys", "root system data and Weyl group elements", cmd_rootsys);
    auto* cls = add("class", "Schubert and ideal-sheaf class of --word, or line bundle class of --weight", cmd_class);
    cls->add_option("--word", o.words, "reduced word, e.g. 1,2,1");
    cls->add_option("--weight", o.weight, "weight a,b,...");
    add("bundles", "Schubert classes in the line-bundle basis", cmd_bundles)
        ->add_option("--word", o.words, "restrict to one element");
    auto* prod = add("product", "product of two Schubert classes", cmd_product);
    prod->add_option("--word", o.words, "two words, e.g. --word 1 --word 2,1")->required();
    prod->add_option("--ring", o.ring, "K | KT | H | HT")->capture_default_str();
    add("table", "full multiplication table", cmd_table)
        ->add_option("--ring", o.ring, "K | KT | H | HT")
        ->capture_default_str();
    add("crystal", "path model for a dominant weight", cmd_crystal)->add_option("--weight", o.weight, "a,b,...")->required();
    auto* pieri = add("pieri", "line bundle times Schubert class through the path model", cmd_pieri);
    pieri->add_option("--weight", o.weight, "dominant or antidominant weight")->required();
    pieri->add_option("--word", o.words, "reduced word")->required();
    auto* ch = add("ch", "Chern character of a Schubert class", cmd_ch);
    ch->add_option("--word", o.words, "reduced word")->required();
    ch->add_option("--degree", o.degree, "truncation degree (default l(w0)+1)");
    add("verify-tables", "compare the shipped rank-two tables with the engine", cmd_verify)
        ->add_flag("--strict", o.strict, "fail on any mismatch, including confirmed errata");
    auto* pos = add("positivity", "sign checks and certificates for structure constants", cmd_positivity);
    pos->add_option("--word", o.words, "restrict to one pair");
    pos->add_option("--degree", o.bound, "certificate support bound")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
