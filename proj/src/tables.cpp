#include "kschubert/tables.hpp"

#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kschubert/parallel.hpp"
#include "kschubert/pieri.hpp"

namespace kschubert {

// ---- TableExpr ----------------------------------------------------------

TableExpr TableExpr::constant(int rank, const Integer& c) {
    TableMonomial m;
    m.e = Weight(rank);
    m.x = Weight(rank);
    return monomial(m, c);
}

TableExpr TableExpr::monomial(const TableMonomial& m, const Integer& c) {
    TableExpr out;
    out.add_term(m, c);
    return out;
}

void TableExpr::add_term(const TableMonomial& m, const Integer& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

bool TableExpr::has_classes() const {
    for (const auto& [m, c] : terms_)
        if (m.cls) return true;
    return false;
}

TableExpr& TableExpr::operator+=(const TableExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TableExpr& TableExpr::operator-=(const TableExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TableExpr operator*(const TableExpr& a, const TableExpr& b) {
    TableExpr out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.cls && mb.cls) throw std::invalid_argument("product of two Schubert classes in a table entry");
            TableMonomial m;
            m.e = ma.e + mb.e;
            m.x = ma.x + mb.x;
            m.symbols = ma.symbols;
            for (const auto& [s, k] : mb.symbols) m.symbols[s] += k;
            m.cls = ma.cls ? ma.cls : mb.cls;
            out.add_term(m, ca * cb);
        }
    return out;
}

TableExpr TableExpr::operator-() const {
    TableExpr out;
    for (const auto& [m, c] : terms_) out.add_term(m, -c);
    return out;
}

// ---- parsing ------------------------------------------------------------

namespace {

std::string clean(const std::string& tex) {
    static const std::vector<std::string> drop{"\\displaystyle", "\\qquad", "\\quad", "\\hfill", "\\bigl", "\\bigr",
                                               "\\Bigl", "\\Bigr", "\\big", "\\Big", "\\left", "\\right", "\\cr",
                                               "\\,", "\\;", "\\!"};
    std::string s;
    for (std::size_t p = 0; p < tex.size();) {
        if (tex.compare(p, 8, "\\phantom") == 0) {
            p += 8;
            int depth = 0;
            do {
                if (tex[p] == '{') ++depth;
                if (tex[p] == '}') --depth;
                ++p;
            } while (p < tex.size() && depth > 0);
            continue;
        }
        bool skipped = false;
        for (const auto& d : drop)
            if (tex.compare(p, d.size(), d) == 0) {
                p += d.size();
                skipped = true;
                break;
            }
        if (skipped) continue;
        const char ch = tex[p];
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '&' && ch != ',') s += ch;
        ++p;
    }
    return s;
}

bool is_one(const TableExpr& f, int rank) { return f == TableExpr::constant(rank, 1); }

TableFraction operator+(const TableFraction& a, const TableFraction& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

TableFraction operator*(const TableFraction& a, const TableFraction& b) { return {a.num * b.num, a.den * b.den}; }

TableFraction negate(const TableFraction& a) { return {-a.num, a.den}; }

std::vector<Rational> apply_word(const RootSystem& rs, const std::vector<int>& word, std::vector<Rational> v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int i = *it;
        const Rational c = v[static_cast<std::size_t>(i)];
        const Weight& a = rs.simple_root(i);
        for (int j = 0; j < rs.rank(); ++j) v[static_cast<std::size_t>(j)] -= c * a[j];
    }
    return v;
}

class Reader {
public:
    Reader(const RootSystem& rs, std::string s) : rs_(rs), s_(std::move(s)) {}

    bool done() const { return p_ >= s_.size(); }
    bool at(const char* lit) const { return s_.compare(p_, std::char_traits<char>::length(lit), lit) == 0; }
    bool eat(const char* lit) {
        if (!at(lit)) return false;
        p_ += std::char_traits<char>::length(lit);
        return true;
    }
    void expect(const char* lit) {
        if (!eat(lit)) fail(std::string("expected '") + lit + "'");
    }
    char peek() const { return done() ? '\0' : s_[p_]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at offset " + std::to_string(p_) + " in \"" + s_ + "\"");
    }

    Integer number() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[p_++];
        if (digits.empty()) fail("expected a number");
        return Integer(digits);
    }

    /// Index after '_': a single character or a braced group.
    std::string subscript() {
        expect("_");
        if (eat("{")) {
            std::string out;
            while (!done() && peek() != '}') out += s_[p_++];
            expect("}");
            return out;
        }
        if (done()) fail("missing subscript");
        return std::string(1, s_[p_++]);
    }

    int simple_index() {
        const std::string idx = subscript();
        if (idx.size() != 1 || !std::isdigit(static_cast<unsigned char>(idx[0]))) fail("bad simple index '" + idx + "'");
        const int i = idx[0] - '1';
        if (i < 0 || i >= rs_.rank()) fail("simple index out of range");
        return i;
    }

    std::vector<int> word() {
        std::vector<int> w;
        while (peek() == 's') {
            ++p_;
            w.push_back(simple_index());
        }
        return w;
    }

    Rational weight_coefficient() {
        if (eat("{")) {
            const Integer a = number();
            expect("\\over");
            const Integer b = number();
            expect("}");
            return Rational(a, b);
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) return Rational(number());
        return Rational(1);
    }

    std::vector<Rational> weight_sum() {
        const int n = rs_.rank();
        std::vector<Rational> total(static_cast<std::size_t>(n));
        bool first = true;
        while (!done() && peek() != '}' && peek() != '=') {
            int sign = 1;
            if (eat("-")) sign = -1;
            else if (!eat("+") && !first) fail("expected '+' or '-'");
            first = false;
            const Rational c = weight_coefficient();
            const auto w = word();
            std::vector<Rational> base(static_cast<std::size_t>(n));
            if (eat("\\omega")) {
                base[static_cast<std::size_t>(simple_index())] = 1;
            } else if (eat("\\alpha")) {
                if (peek() != '_') fail("\\alpha needs an index");
                const Weight& a = rs_.simple_root(simple_index());
                for (int j = 0; j < n; ++j) base[static_cast<std::size_t>(j)] = a[j];
            } else if (eat("\\rho")) {
                for (auto& b : base) b = 1;
            } else if (w.empty() && c == 0) {
                // the literal 0
            } else {
                fail("expected \\omega, \\alpha or \\rho");
            }
            base = apply_word(rs_, w, base);
            for (int j = 0; j < n; ++j) total[static_cast<std::size_t>(j)] += Rational(sign) * c * base[static_cast<std::size_t>(j)];
        }
        return total;
    }

    Weight integral_weight() {
        std::string inner;
        if (eat("{")) {
            int depth = 1;
            while (!done()) {
                if (peek() == '{') ++depth;
                if (peek() == '}' && --depth == 0) break;
                inner += s_[p_++];
            }
            expect("}");
        } else {
            if (done()) fail("missing exponent");
            inner = std::string(1, s_[p_++]);
        }
        const auto v = parse_weight_expr(rs_, inner);
        Weight out(rs_.rank());
        for (int j = 0; j < rs_.rank(); ++j) {
            const Rational& c = v[static_cast<std::size_t>(j)];
            if (boost::multiprecision::denominator(c) != 1) fail("non-integral exponent");
            out[j] = static_cast<std::int64_t>(boost::multiprecision::numerator(c));
        }
        return out;
    }

    const RootSystem& rs_;
    std::string s_;
    std::size_t p_ = 0;
};

class ExprParser : public Reader {
public:
    ExprParser(const RootSystem& rs, std::string s, bool keep) : Reader(rs, std::move(s)), keep_(keep) {}

    TableFraction parse() {
        TableFraction f = expr();
        if (!done()) fail("unexpected input");
        return f;
    }

private:
    TableFraction zero() const { return {TableExpr{}, TableExpr::constant(rs_.rank(), 1)}; }
    TableFraction one() const { return {TableExpr::constant(rs_.rank(), 1), TableExpr::constant(rs_.rank(), 1)}; }

    bool at_end() const {
        return done() || at(")") || at("}") || at("\\}") || at("]") || at("=") || at("\\over");
    }

    TableFraction expr() {
        TableFraction acc = zero();
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (eat("+")) {
            } else if (eat("-")) {
                sign = -1;
            } else if (!first && !at("\\{")) {
                fail("expected '+' or '-'");
            }
            first = false;
            TableFraction t;
            bool braced = false;
            if (eat("\\{")) {
                t = expr();
                expect("\\}");
                braced = true;
            } else {
                t = term();
            }
            if (braced && !keep_) continue;
            acc = acc + (sign < 0 ? negate(t) : t);
        }
        return acc;
    }

    TableFraction term() {
        TableFraction acc = one();
        bool any = false;
        while (!at_end() && !at("+") && !at("-") && !at("\\{")) {
            acc = acc * factor();
            any = true;
        }
        if (!any) fail("empty term");
        return acc;
    }

    TableFraction factor() {
        TableFraction a = atom();
        while (eat("^")) {
            Integer k;
            if (eat("{")) {
                k = number();
                expect("}");
            } else {
                k = number();
            }
            TableFraction base = a;
            a = one();
            for (Integer j = 0; j < k; ++j) a = a * base;
        }
        return a;
    }

    TableMonomial unit() const {
        TableMonomial m;
        m.e = Weight(rs_.rank());
        m.x = Weight(rs_.rank());
        return m;
    }

    TableFraction atom() {
        const TableExpr den = TableExpr::constant(rs_.rank(), 1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) return {TableExpr::constant(rs_.rank(), number()), den};
        if (eat("(")) {
            TableFraction f = expr();
            expect(")");
            return f;
        }
        if (eat("{")) {
            TableFraction f = expr();
            if (eat("\\over")) {
                TableFraction g = expr();
                expect("}");
                if (g.num.has_classes()) fail("class in a denominator");
                return {f.num * g.den, f.den * g.num};
            }
            expect("}");
            return f;
        }
        if (eat("[")) {
            std::string w;
            while (!done() && peek() != ']') w += s_[p_++];
            expect("]");
            TableMonomial m = unit();
            m.cls = parse_word(rs_, w);
            return {TableExpr::monomial(m), den};
        }
        if (eat("\\alpha") || (peek() == 'y' && (++p_, true))) {
            const char kind = s_[p_ - 1] == 'y' ? 'y' : 'a';
            const std::string idx = subscript();
            if (idx.size() != 2 || !std::isdigit(static_cast<unsigned char>(idx[0])) ||
                !std::isdigit(static_cast<unsigned char>(idx[1])))
                fail("expected a two-digit index");
            TableMonomial m = unit();
            m.symbols[TableSymbol{kind, idx[0] - '0', idx[1] - '0'}] = 1;
            return {TableExpr::monomial(m), den};
        }
        if (eat("e^")) {
            TableMonomial m = unit();
            m.e = integral_weight();
            return {TableExpr::monomial(m), den};
        }
        if (eat("X^")) {
            TableMonomial m = unit();
            m.x = integral_weight();
            return {TableExpr::monomial(m), den};
        }
        fail("unexpected symbol");
    }

    bool keep_;
};

}  // namespace

TableFraction parse_table_expr(const RootSystem& rs, const std::string& tex, bool keep_braces) {
    ExprParser p(rs, clean(tex), keep_braces);
    TableFraction f = p.parse();
    if (is_one(f.den, rs.rank())) f.den = TableExpr::constant(rs.rank(), 1);
    return f;
}

std::vector<Rational> parse_weight_expr(const RootSystem& rs, const std::string& tex) {
    Reader r(rs, clean(tex));
    auto v = r.weight_sum();
    if (!r.done()) r.fail("unexpected input");
    return v;
}

WeylElt parse_word(const RootSystem& rs, const std::string& tex) {
    std::string s = clean(tex);
    if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    if (s == "1") return rs.identity();
    if (s == "w_0" || s == "w0") return rs.longest();
    std::vector<int> word;
    for (std::size_t p = 0; p < s.size();) {
        if (s[p] != 's') throw std::invalid_argument("bad Weyl group word \"" + tex + "\"");
        ++p;
        if (p < s.size() && s[p] == '_') ++p;
        bool braced = p < s.size() && s[p] == '{';
        if (braced) ++p;
        if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p])))
            throw std::invalid_argument("bad Weyl group word \"" + tex + "\"");
        const int i = s[p++] - '1';
        if (braced && (p >= s.size() || s[p++] != '}')) throw std::invalid_argument("bad Weyl group word \"" + tex + "\"");
        if (i < 0 || i >= rs.rank()) throw std::invalid_argument("simple index out of range in \"" + tex + "\"");
        word.push_back(i);
    }
    if (word.empty()) throw std::invalid_argument("empty Weyl group word");
    return rs.from_word(word);
}

std::vector<std::string> split_equation(const std::string& tex) {
    std::vector<std::string> out(1);
    int depth = 0;
    for (char ch : tex) {
        if (ch == '{' || ch == '(' || ch == '[') ++depth;
        if (ch == '}' || ch == ')' || ch == ']') --depth;
        if (ch == '=' && depth == 0) {
            out.emplace_back();
            continue;
        }
        out.back() += ch;
    }
    return out;
}

Weight table_root(const RootSystem& rs, int r, int s) {
    if (rs.rank() != 2) throw std::invalid_argument("table notation needs a rank-two system");
    return rs.from_alpha_coords({r, s});
}

// ---- evaluation ---------------------------------------------------------

namespace {

GroupAlgElt symbol_value(const RootSystem& rs, const TableSymbol& s) {
    const GroupAlgElt y = GroupAlgElt::monomial(-table_root(rs, s.r, s.s));
    return s.kind == 'y' ? y : y - GroupAlgElt::constant(rs.rank(), 1);
}

GroupAlgElt monomial_value(const RootSystem& rs, const TableMonomial& m, const Integer& c) {
    GroupAlgElt v = GroupAlgElt::monomial(m.e, c);
    for (const auto& [s, k] : m.symbols) v *= symbol_value(rs, s).pow(static_cast<unsigned>(k));
    return v;
}

}  // namespace

KClass evaluate_kt(const KTheory& kt, const TableExpr& f) {
    const RootSystem& rs = kt.root_system();
    std::map<std::pair<Weight, WeylElt>, GroupAlgElt> grouped;
    for (const auto& [m, c] : f.terms()) grouped[{m.x, m.cls.value_or(rs.longest())}] += monomial_value(rs, m, c);
    KClass out;
    for (const auto& [key, coeff] : grouped)
        if (!coeff.is_zero()) out += kt.x_action(key.first, key.second) * coeff;
    return out;
}

std::map<WeylElt, TableExpr> class_coefficients(const RootSystem& rs, const TableExpr& f) {
    std::map<WeylElt, TableExpr> out;
    for (const auto& [m, c] : f.terms()) {
        TableMonomial stripped = m;
        stripped.cls.reset();
        out[m.cls.value_or(rs.longest())].add_term(stripped, c);
    }
    return out;
}

GroupAlgElt coefficient_kt(const RootSystem& rs, const TableExpr& c) {
    GroupAlgElt out;
    for (const auto& [m, k] : c.terms()) {
        if (m.x != Weight(rs.rank()) || m.cls) throw std::invalid_argument("coefficient involves X or a class");
        out += monomial_value(rs, m, k);
    }
    return out;
}

Integer coefficient_k(const TableExpr& c) {
    Integer out = 0;
    for (const auto& [m, k] : c.terms()) {
        if (m.x != Weight(m.x.rank()) || m.cls) throw std::invalid_argument("coefficient involves X or a class");
        bool vanishes = false;
        for (const auto& [s, e] : m.symbols) vanishes = vanishes || (s.kind == 'a' && e > 0);
        if (!vanishes) out += k;
    }
    return out;
}

Poly coefficient_ht(const RootSystem& rs, const TableExpr& c) {
    const int n = rs.rank();
    Poly out = Poly::constant(n, 0);
    for (const auto& [m, k] : c.terms()) {
        if (m.x != Weight(n) || m.e != Weight(n) || m.cls)
            throw std::invalid_argument("coefficient involves e, X or a class");
        Poly t = Poly::constant(n, Rational(k));
        for (const auto& [s, e] : m.symbols) {
            if (s.kind != 'a') continue;
            const Poly lin = -Poly::y_weight(table_root(rs, s.r, s.s));
            for (int j = 0; j < e; ++j) t = t * lin;
        }
        out += t;
    }
    return out;
}

namespace {

// Fewest positive roots summing to (r, s); empty if impossible.
std::optional<std::vector<int>> root_decomposition(const PositivityChecker& pc, int r, int s) {
    const auto& pos = pc.root_system().positive_roots();
    std::map<std::pair<int, int>, std::optional<std::vector<int>>> memo;
    std::function<std::optional<std::vector<int>>(int, int)> go = [&](int a, int b) -> std::optional<std::vector<int>> {
        if (a == 0 && b == 0) return std::vector<int>{};
        if (a < 0 || b < 0) return std::nullopt;
        if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
        std::optional<std::vector<int>> best;
        for (std::size_t k = 0; k < pos.size(); ++k) {
            auto rest = go(a - static_cast<int>(pos[k].alpha[0]), b - static_cast<int>(pos[k].alpha[1]));
            if (rest && (!best || rest->size() + 1 < best->size())) {
                rest->push_back(static_cast<int>(k));
                best = rest;
            }
        }
        return memo[{a, b}] = best;
    };
    return go(r, s);
}

}  // namespace

std::optional<Certificate> to_certificate(const PositivityChecker& pc, const TableExpr& c) {
    const int n = pc.root_system().rank();
    const std::size_t roots = pc.symbol_count() / 2;
    Certificate out;
    for (const auto& [m, k] : c.terms()) {
        if (m.x != Weight(n) || m.e != Weight(n) || m.cls) return std::nullopt;
        std::vector<int> e(pc.symbol_count(), 0);
        for (const auto& [s, p] : m.symbols) {
            if (s.kind == 'a') {
                const int idx = pc.root_index({s.r, s.s});
                if (idx < 0) return std::nullopt;
                e[static_cast<std::size_t>(idx)] += p;
                continue;
            }
            // y is multiplicative, so y_{rs} for a non-root is a product of root y's
            const auto parts = root_decomposition(pc, s.r, s.s);
            if (!parts) return std::nullopt;
            for (int idx : *parts) e[static_cast<std::size_t>(idx) + roots] += p;
        }
        out.add(e, k);
    }
    return out;
}

// ---- fixtures -----------------------------------------------------------

Fixture read_fixture(std::istream& in) {
    Fixture fx;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("fixture line " + std::to_string(number) + ": missing ':'");
        std::string key = line.substr(first, colon - first);
        std::string value = line.substr(colon + 1);
        const auto v0 = value.find_first_not_of(" \t");
        const auto v1 = value.find_last_not_of(" \t\r");
        value = v0 == std::string::npos ? "" : value.substr(v0, v1 - v0 + 1);
        if (key == "system") {
            fx.system = value;
        } else if (key == "weights" || key == "bundle" || key == "product") {
            fx.entries.push_back({number, key, value});
        } else {
            throw std::invalid_argument("fixture line " + std::to_string(number) + ": unknown key '" + key + "'");
        }
    }
    if (fx.system.empty()) throw std::invalid_argument("fixture has no system line");
    return fx;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    return read_fixture(in);
}

std::string fixture_path(const std::string& system) {
    return std::string(KSCHUBERT_FIXTURE_DIR) + "/" + system + ".tex";
}

int TableReport::count(const std::string& kind, bool ok) const {
    int n = 0;
    for (const auto& e : entries)
        if (e.kind == kind && e.ok == ok) ++n;
    return n;
}

bool TableReport::products_accounted() const {
    for (const auto& e : entries)
        if (e.kind == "product" && !e.ok && !e.dual_confirmed) return false;
    return missing.empty();
}

bool TableReport::bundles_accounted() const {
    for (const auto& e : entries)
        if (e.kind == "bundle" && !e.ok && !e.dual_confirmed) return false;
    return true;
}

std::string TableReport::str() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << "line " << e.line << " " << e.kind << " " << e.label << ": ";
        if (e.ok) os << "match";
        else os << "MISMATCH" << (e.dual_confirmed ? " (engines agree)" : "");
        os << "\n";
        for (const auto& n : e.notes) os << "    " << n << "\n";
    }
    for (const auto& kind : {"weights", "bundle", "product"})
        os << kind << ": " << count(kind, true) << " match, " << count(kind, false) << " mismatch\n";
    os << "missing products: " << missing.size() << ", duplicated: " << duplicates.size() << "\n";
    return os.str();
}

namespace {

std::string rat_vec(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

void check_weights(const RootSystem& rs, const FixtureEntry& e, EntryReport& rep) {
    const auto sides = split_equation(e.tex);
    const std::string lhs = clean(sides[0]);
    rep.label = lhs;
    std::vector<Rational> expect(static_cast<std::size_t>(rs.rank()));
    Weight target;
    if (lhs.rfind("\\lambda", 0) == 0) {
        Reader r(rs, lhs);
        r.expect("\\lambda");
        target = rs.steinberg_weight(parse_word(rs, r.subscript()), SteinbergConvention::RightAscent);
    } else if (lhs.rfind("\\alpha", 0) == 0) {
        Reader r(rs, lhs);
        r.expect("\\alpha");
        target = rs.simple_root(r.simple_index());
    } else {
        throw std::invalid_argument("unknown weight label " + lhs);
    }
    for (int j = 0; j < rs.rank(); ++j) expect[static_cast<std::size_t>(j)] = target[j];
    rep.ok = true;
    for (std::size_t k = 1; k < sides.size(); ++k) {
        try {
            const auto v = parse_weight_expr(rs, sides[k]);
            if (v != expect) {
                rep.ok = false;
                rep.notes.push_back("side " + std::to_string(k) + " is " + rat_vec(v) + ", engine " + rat_vec(expect));
            }
        } catch (const std::invalid_argument& ex) {
            rep.ok = false;
            rep.notes.push_back(std::string("parse error: ") + ex.what());
        }
    }
}

std::map<Weight, GroupAlgElt> literal_expansion(const RootSystem& rs, const TableExpr& f) {
    std::map<Weight, GroupAlgElt> out;
    for (const auto& [m, c] : f.terms()) {
        TableMonomial coeff = m;
        coeff.x = Weight(rs.rank());
        out[m.x] += monomial_value(rs, coeff, c);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

void check_bundle(const KTheory& kt, const PieriEngine& paths, const FixtureEntry& e, EntryReport& rep) {
    const RootSystem& rs = kt.root_system();
    const auto sides = split_equation(e.tex);
    const WeylElt w = parse_word(rs, sides[0]);
    rep.label = "[" + tex_word(rs, w) + "]";
    const KClass target = kt.schubert_class(w);
    TableMonomial cls;
    cls.e = Weight(rs.rank());
    cls.x = Weight(rs.rank());
    cls.cls = w;
    rep.ok = true;
    for (std::size_t k = 1; k < sides.size(); ++k) {
        try {
            const TableFraction f = parse_table_expr(rs, sides[k]);
            const KClass lhs = evaluate_kt(kt, f.den * TableExpr::monomial(cls));
            const KClass rhs = evaluate_kt(kt, f.num);
            if (lhs != rhs) {
                rep.ok = false;
                rep.notes.push_back("side " + std::to_string(k) + " evaluates to " + (rhs - lhs + target).str(rs) +
                                    ", engine " + target.str(rs));
                continue;
            }
            if (!f.num.has_classes() && is_one(f.den, rs.rank())) {
                std::map<Weight, GroupAlgElt> engine;
                for (const auto& [u, c] : kt.schubert_in_line_bundles(w))
                    if (!c.is_zero()) engine[-kt.steinberg_weight(u)] = c;
                if (literal_expansion(rs, f.num) != engine) {
                    rep.ok = false;
                    rep.notes.push_back("side " + std::to_string(k) + " is a valid identity but not the basis expansion");
                }
            }
        } catch (const std::invalid_argument& ex) {
            rep.ok = false;
            rep.notes.push_back(std::string("parse error: ") + ex.what());
        }
    }
    if (!rep.ok) {
        // recombine the engine expansion through the path model
        KClass sum;
        for (const auto& [u, c] : kt.schubert_in_line_bundles(w))
            if (!c.is_zero()) sum += paths.x_action(-kt.steinberg_weight(u), rs.longest()) * c;
        rep.dual_confirmed = sum == target;
    }
}

}  // namespace

std::pair<WeylElt, WeylElt> product_lhs(const RootSystem& rs, const std::string& lhs) {
    static const std::regex square(R"(^\[([^\]]*)\]\^2$)");
    static const std::regex pair(R"(^\[([^\]]*)\]\[([^\]]*)\]$)");
    const std::string s = clean(lhs);
    std::smatch m;
    if (std::regex_match(s, m, square)) {
        const WeylElt w = parse_word(rs, m[1]);
        return {w, w};
    }
    if (std::regex_match(s, m, pair)) return {parse_word(rs, m[1]), parse_word(rs, m[2])};
    throw std::invalid_argument("bad product label " + lhs);
}

namespace {

int codim(const RootSystem& rs, WeylElt w) { return rs.length(rs.longest()) - rs.length(w); }

void check_product(const KTheory& kt, const GradedCohomology& hc, const PieriEngine& paths, WeylElt w, WeylElt v,
                   const std::string& rhs, EntryReport& rep) {
    const RootSystem& rs = kt.root_system();
    const KClass engine = kt.product(w, v);
    auto fail = [&](const std::string& note) {
        rep.ok = false;
        rep.notes.push_back(note);
    };
    rep.ok = true;
    try {
        const TableFraction full = parse_table_expr(rs, rhs, true);
        const TableFraction reduced = parse_table_expr(rs, rhs, false);
        if (!is_one(full.den, rs.rank())) throw std::invalid_argument("fraction in a product entry");
        const auto kt_coeffs = class_coefficients(rs, full.num);
        const auto h_coeffs = class_coefficients(rs, reduced.num);
        const HClass h_engine = hc.h_product(w, v);
        const KClass k_engine = specialize_k(engine);
        const HClass h0_engine = specialize_h(h_engine);
        for (WeylElt z : rs.elements_by_length()) {
            const std::string zs = "[" + tex_word(rs, z) + "]";
            const auto it = kt_coeffs.find(z);
            const TableExpr c = it == kt_coeffs.end() ? TableExpr{} : it->second;
            const auto jt = h_coeffs.find(z);
            const TableExpr ch = jt == h_coeffs.end() ? TableExpr{} : jt->second;
            const GroupAlgElt ckt = coefficient_kt(rs, c);
            if (ckt != engine.coeff(z))
                fail("K_T " + zs + ": fixture " + ckt.str() + ", engine " + engine.coeff(z).str());
            const Integer ck = coefficient_k(c);
            const Integer ek = k_engine.coeff(z).constant_term(rs.rank());
            if (ck != ek) fail("K " + zs + ": fixture " + ck.str() + ", engine " + ek.str());
            const int d = codim(rs, w) + codim(rs, v) - codim(rs, z);
            const Poly pht = coefficient_ht(rs, ch);
            const Poly fixture_h = d < 0 ? Poly::constant(rs.rank(), 0) : pht.homogeneous_part(d);
            const auto ht = h_engine.find(z);
            const Poly eh = ht == h_engine.end() ? Poly::constant(rs.rank(), 0) : ht->second;
            if (fixture_h != eh) fail("H_T " + zs + ": fixture " + fixture_h.str() + ", engine " + eh.str());
            else if (fixture_h != pht) rep.notes.push_back("H_T " + zs + ": unbraced terms of other degree");
            const Integer ch0 = coefficient_k(ch);
            const auto h0 = h0_engine.find(z);
            const Rational eh0 = h0 == h0_engine.end() ? Rational(0) : h0->second.coeff(std::vector<int>(2 * static_cast<std::size_t>(rs.rank()), 0));
            if (Rational(ch0) != eh0) fail("H " + zs + ": fixture " + ch0.str() + ", engine " + eh0.str());
        }
    } catch (const std::invalid_argument& ex) {
        fail(std::string("parse error: ") + ex.what());
    }
    if (!rep.ok) rep.dual_confirmed = kt.product(w, v, paths.as_engine()) == engine;
}

}  // namespace

TableReport verify_fixture(const Fixture& fx, const KTheory& kt, const GradedCohomology& hc,
                           const PieriEngine& paths, const VerifyOptions& opts) {
    const RootSystem& rs = kt.root_system();
    if (fx.system != rs.name()) throw std::invalid_argument("fixture is for " + fx.system + ", engine is " + rs.name());
    TableReport report;
    report.system = fx.system;
    std::map<std::pair<WeylElt, WeylElt>, std::string> seen;
    for (const auto& e : fx.entries) {
        EntryReport rep;
        rep.line = e.line;
        rep.kind = e.kind;
        try {
            if (e.kind == "weights") {
                if (!opts.weights) continue;
                check_weights(rs, e, rep);
            } else if (e.kind == "bundle") {
                if (!opts.bundles) continue;
                check_bundle(kt, paths, e, rep);
            } else {
                if (!opts.products) continue;
                const auto sides = split_equation(e.tex);
                if (sides.size() != 2) throw std::invalid_argument("product line needs one '='");
                auto [w, v] = product_lhs(rs, sides[0]);
                rep.label = clean(sides[0]);
                if (v < w) std::swap(w, v);
                const std::string rhs = clean(sides[1]);
                if (auto it = seen.find({w, v}); it != seen.end()) {
                    report.duplicates.emplace_back(w, v);
                    rep.notes.push_back(it->second == rhs ? "repeated entry, identical" : "repeated entry, differs");
                }
                seen.emplace(std::make_pair(w, v), rhs);
                check_product(kt, hc, paths, w, v, sides[1], rep);
            }
        } catch (const std::invalid_argument& ex) {
            rep.ok = false;
            rep.notes.push_back(std::string("parse error: ") + ex.what());
        }
        report.entries.push_back(std::move(rep));
    }
    if (opts.products) {
        const auto els = rs.elements();
        for (std::size_t i = 0; i < els.size(); ++i)
            for (std::size_t j = i; j < els.size(); ++j) {
                if (els[i] == rs.longest() || els[j] == rs.longest()) continue;
                if (!seen.count({els[i], els[j]})) report.missing.emplace_back(els[i], els[j]);
            }
    }
    return report;
}

// ---- product tables -----------------------------------------------------

Ring parse_ring(const std::string& name) {
    if (name == "KT") return Ring::KT;
    if (name == "K") return Ring::K;
    if (name == "HT") return Ring::HT;
    if (name == "H") return Ring::H;
    throw std::invalid_argument("unknown ring '" + name + "' (KT, K, HT, H)");
}

std::string to_string(Ring r) {
    switch (r) {
        case Ring::KT: return "KT";
        case Ring::K: return "K";
        case Ring::HT: return "HT";
        case Ring::H: return "H";
    }
    return "?";
}

ProductTable compute_table(const KTheory& kt, const GradedCohomology* hc, Ring ring) {
    const RootSystem& rs = kt.root_system();
    if ((ring == Ring::HT || ring == Ring::H) && !hc) throw std::invalid_argument("cohomology tables need H*_T data");
    ProductTable t;
    t.system = rs.name();
    t.ring = ring;
    const auto els = rs.elements();
    std::vector<std::pair<WeylElt, WeylElt>> pairs;
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i; j < els.size(); ++j) pairs.emplace_back(els[i], els[j]);
    using Cell = std::variant<GroupAlgElt, Poly>;
    std::vector<std::map<WeylElt, Cell>> out(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
        const auto [w, v] = pairs[k];
        if (ring == Ring::KT || ring == Ring::K) {
            KClass p = kt.product(w, v);
            if (ring == Ring::K) p = specialize_k(p);
            for (const auto& [z, c] : p.terms()) out[k].emplace(z, c);
        } else {
            HClass p = hc->h_product(w, v);
            if (ring == Ring::H) p = specialize_h(p);
            for (const auto& [z, c] : p) out[k].emplace(z, c);
        }
    });
    for (std::size_t k = 0; k < pairs.size(); ++k)
        for (auto& [z, c] : out[k]) t.rows[{pairs[k].first, pairs[k].second, z}] = std::move(c);
    return t;
}

nlohmann::json table_to_json(const RootSystem& rs, const ProductTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, c] : t.rows) {
        const auto& [w, v, z] = key;
        nlohmann::json coeff = nlohmann::json::array();
        if (const auto* g = std::get_if<GroupAlgElt>(&c)) {
            for (const auto& [e, k] : g->serialize()) coeff.push_back({e, k.str()});
        } else {
            for (const auto& [e, k] : std::get<Poly>(c).terms()) coeff.push_back({e, k.str()});
        }
        rows.push_back({{"w", rs.word_string(w)}, {"v", rs.word_string(v)}, {"z", rs.word_string(z)}, {"c", coeff}});
    }
    return {{"system", t.system}, {"ring", to_string(t.ring)}, {"rows", rows}};
}

ProductTable table_from_json(const RootSystem& rs, const nlohmann::json& j) {
    ProductTable t;
    t.system = j.at("system").get<std::string>();
    if (t.system != rs.name()) throw std::invalid_argument("table is for " + t.system + ", not " + rs.name());
    t.ring = parse_ring(j.at("ring").get<std::string>());
    for (const auto& row : j.at("rows")) {
        const WeylElt w = parse_word(rs, row.at("w").get<std::string>());
        const WeylElt v = parse_word(rs, row.at("v").get<std::string>());
        const WeylElt z = parse_word(rs, row.at("z").get<std::string>());
        if (t.ring == Ring::KT || t.ring == Ring::K) {
            std::vector<std::pair<std::vector<std::int64_t>, Integer>> data;
            for (const auto& term : row.at("c"))
                data.emplace_back(term.at(0).get<std::vector<std::int64_t>>(), Integer(term.at(1).get<std::string>()));
            t.rows[{w, v, z}] = GroupAlgElt::deserialize(data);
        } else {
            Poly p = Poly::constant(rs.rank(), 0);
            for (const auto& term : row.at("c"))
                p.add_term(term.at(0).get<std::vector<int>>(), Rational(term.at(1).get<std::string>()));
            t.rows[{w, v, z}] = p;
        }
    }
    return t;
}

// ---- formatting ---------------------------------------------------------

std::string tex_word(const RootSystem& rs, WeylElt w) {
    const auto& word = rs.reduced_word(w);
    if (word.empty()) return "1";
    std::string s;
    for (int i : word) s += "s_" + std::to_string(i + 1);
    return s;
}

namespace {

std::string tex_weight(const Weight& mu) {
    std::string s;
    for (int i = 0; i < mu.rank(); ++i) {
        const auto c = mu[i];
        if (c == 0) continue;
        if (c < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c);
        s += "\\omega_" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

std::string tex_group(const GroupAlgElt& g, int rank) {
    std::string s;
    for (const auto& [mu, c] : g.terms()) {
        Integer a = c;
        if (a < 0) {
            s += "-";
            a = -a;
        } else if (!s.empty()) {
            s += "+";
        }
        const bool unit = mu == Weight(rank);
        if (a != 1 || unit) s += a.str();
        if (!unit) s += "e^{" + tex_weight(mu) + "}";
    }
    return s;
}

std::string tex_certificate(const PositivityChecker& pc, const Certificate& f, int sign) {
    const auto& rs = pc.root_system();
    const std::size_t roots = pc.symbol_count() / 2;
    std::vector<std::string> terms;
    std::vector<std::pair<std::vector<int>, Integer>> ordered(f.terms.rbegin(), f.terms.rend());
    auto deg = [](const std::vector<int>& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    };
    std::stable_sort(ordered.begin(), ordered.end(),
                     [&](const auto& x, const auto& y) { return deg(x.first) < deg(y.first); });
    const auto& pos = rs.positive_roots();
    auto label = [&](std::size_t k) {
        return std::to_string(pos[k].alpha[0]) + std::to_string(pos[k].alpha[1]);
    };
    for (const auto& [e, c] : ordered) {
        std::string t;
        if (c != 1 || deg(e) == 0) t += c.str();
        for (std::size_t k = 0; k < roots; ++k)
            for (int j = 0; j < e[k]; ++j) t += "\\alpha_{" + label(k) + "}";
        for (std::size_t k = 0; k < roots; ++k)
            for (int j = 0; j < e[roots + k]; ++j) t += "y_{" + label(k) + "}";
        terms.push_back(t);
    }
    std::string body;
    for (std::size_t i = 0; i < terms.size(); ++i) body += (i ? "+" : "") + terms[i];
    if (terms.size() > 1) body = "(" + body + ")";
    return (sign < 0 ? "-" : "+") + body;
}

}  // namespace

std::string format_product(const KTheory& kt, const PositivityChecker& pc, WeylElt w, WeylElt v) {
    const RootSystem& rs = kt.root_system();
    std::string out = w == v ? "[" + tex_word(rs, w) + "]^2 =" : "[" + tex_word(rs, w) + "][" + tex_word(rs, v) + "] =";
    const KClass p = kt.product(w, v);
    bool first = true;
    for (WeylElt z : rs.elements_by_length()) {
        const GroupAlgElt c = p.coeff(z);
        if (c.is_zero()) continue;
        std::string term;
        const int sign = pc.predicted_sign(w, v, z);
        std::optional<Certificate> cert;
        if (rs.rank() == 2) cert = pc.find_certificate(c, sign);
        if (cert) {
            term = tex_certificate(pc, *cert, sign);
        } else {
            term = "+(" + tex_group(c, rs.rank()) + ")";
        }
        if (first && term[0] == '+') term = term.substr(1);
        out += " " + term + "[" + tex_word(rs, z) + "]";
        first = false;
    }
    if (first) out += " 0";
    return out;
}

}  // namespace kschubert
