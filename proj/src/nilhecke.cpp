#include "kschubert/nilhecke.hpp"

#include <cctype>
#include <sstream>

namespace kschubert {

NilHeckeElt NilHeckeElt::T(WeylElt w, int rank) {
    NilHeckeElt r;
    r.add_term(w, RXElt::x_monomial(Weight(rank)));
    return r;
}

NilHeckeElt NilHeckeElt::X(const Weight& lambda) {
    NilHeckeElt r;
    r.add_term(WeylElt{0}, RXElt::x_monomial(lambda));
    return r;
}

NilHeckeElt NilHeckeElt::scalar(const GroupAlgElt& e_part, int rank) {
    NilHeckeElt r;
    r.add_term(WeylElt{0}, RXElt::scalar(e_part, rank));
    return r;
}

NilHeckeElt NilHeckeElt::from_rx(const RXElt& f) { return term(WeylElt{0}, f); }

NilHeckeElt NilHeckeElt::term(WeylElt w, const RXElt& f) {
    NilHeckeElt r;
    r.add_term(w, f);
    return r;
}

const RXElt& NilHeckeElt::coeff(WeylElt w) const {
    static const RXElt zero;
    auto it = terms_.find(w);
    return it == terms_.end() ? zero : it->second;
}

void NilHeckeElt::add_term(WeylElt w, const RXElt& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NilHeckeElt& NilHeckeElt::operator+=(const NilHeckeElt& o) {
    for (const auto& [w, f] : o.terms_) add_term(w, f);
    return *this;
}

NilHeckeElt& NilHeckeElt::operator-=(const NilHeckeElt& o) {
    for (const auto& [w, f] : o.terms_) add_term(w, -f);
    return *this;
}

NilHeckeElt& NilHeckeElt::operator*=(const GroupAlgElt& k) {
    Terms out;
    for (const auto& [w, f] : terms_) {
        RXElt g = f * k;
        if (!g.is_zero()) out.emplace(w, std::move(g));
    }
    terms_ = std::move(out);
    return *this;
}

NilHeckeElt NilHeckeElt::operator-() const {
    NilHeckeElt r;
    for (const auto& [w, f] : terms_) r.terms_.emplace(w, -f);
    return r;
}

// ---------------------------------------------------------------------------

NilHeckeElt right_mul_T(const RootSystem& rs, const NilHeckeElt& x, int i) {
    const WeylElt s = rs.simple_reflection(i);
    NilHeckeElt r;
    for (const auto& [w, f] : x.terms()) {
        r.add_term(rs.hecke_product(w, s), f.act(rs, s));
        r.add_term(w, geometric_quotient(rs, f, i));
    }
    return r;
}

NilHeckeElt right_mul_T(const RootSystem& rs, const NilHeckeElt& x, WeylElt w) {
    NilHeckeElt r = x;
    for (int i : rs.reduced_word(w)) r = right_mul_T(rs, r, i);
    return r;
}

NilHeckeElt right_mul_rx(const NilHeckeElt& x, const RXElt& f) {
    NilHeckeElt r;
    for (const auto& [w, g] : x.terms()) r.add_term(w, g * f);
    return r;
}

NilHeckeElt multiply(const RootSystem& rs, const NilHeckeElt& a, const NilHeckeElt& b) {
    NilHeckeElt r;
    for (const auto& [v, g] : b.terms()) r += right_mul_rx(right_mul_T(rs, a, v), g);
    return r;
}

NilHeckeElt left_mul_X(const RootSystem& rs, const Weight& lambda, const NilHeckeElt& x) {
    return multiply(rs, NilHeckeElt::X(lambda), x);
}

NilHeckeElt commute_once(const RootSystem& rs, const Weight& lambda, int i) {
    return right_mul_T(rs, NilHeckeElt::X(lambda), i);
}

NilHeckeElt epsilon(const RootSystem& rs, WeylElt w) {
    NilHeckeElt r;
    for (WeylElt v : rs.elements()) {
        if (!rs.bruhat_leq(v, w)) continue;
        RXElt one = RXElt::x_monomial(rs.zero());
        r.add_term(v, rs.sign(v) > 0 ? one : -one);
    }
    return r;
}

bool is_central(const RootSystem& rs, const GroupAlgElt& f) {
    NilHeckeElt x = NilHeckeElt::from_rx(RXElt::from_x(f));
    for (int i = 0; i < rs.rank(); ++i) {
        NilHeckeElt t = NilHeckeElt::T(rs.simple_reflection(i), rs.rank());
        if (multiply(rs, x, t) != multiply(rs, t, x)) return false;
    }
    return true;
}

namespace {

// T_i * sum_w g_w T_w in opposite form, using T_i X^mu = X^{s_i mu} T_i - Q_i(s_i mu).
OppositeForm left_mul_T_opposite(const RootSystem& rs, const OppositeForm& g, int i) {
    const WeylElt s = rs.simple_reflection(i);
    OppositeForm out;
    auto add = [&](WeylElt w, const RXElt& f) {
        if (f.is_zero()) return;
        auto [it, inserted] = out.try_emplace(w, f);
        if (!inserted) {
            it->second += f;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [w, f] : g) {
        RXElt sf = f.act(rs, s);
        add(rs.hecke_product(s, w), sf);
        add(w, -geometric_quotient(rs, sf, i));
    }
    return out;
}

}  // namespace

OppositeForm to_opposite(const RootSystem& rs, const NilHeckeElt& x) {
    OppositeForm total;
    for (const auto& [w, f] : x.terms()) {
        OppositeForm part{{rs.identity(), f}};
        const auto& word = rs.reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) part = left_mul_T_opposite(rs, part, *it);
        for (const auto& [v, g] : part) {
            auto [pos, inserted] = total.try_emplace(v, g);
            if (!inserted) {
                pos->second += g;
                if (pos->second.is_zero()) total.erase(pos);
            }
        }
    }
    return total;
}

NilHeckeElt from_opposite(const RootSystem& rs, const OppositeForm& g) {
    NilHeckeElt r;
    for (const auto& [w, f] : g) r += right_mul_T(rs, NilHeckeElt::from_rx(f), w);
    return r;
}

NilHeckeElt theta(const RootSystem& rs, const NilHeckeElt& x) {
    NilHeckeElt r;
    for (const auto& [w, f] : x.terms()) {
        RXElt dual;
        for (const auto& [lam, c] : f.terms()) dual.add_term(-lam, c);
        r += right_mul_rx(epsilon(rs, w), dual);
    }
    return r;
}

RXElt apply_operator(const RootSystem& rs, const NilHeckeElt& x, const RXElt& f) {
    RXElt out;
    for (const auto& [w, g] : x.terms()) {
        RXElt v = g * f;
        const auto& word = rs.reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = demazure(rs, *it, v);
        out += v;
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<int> parse_word(const RootSystem& rs, const std::string& inside) {
    std::vector<int> word;
    std::stringstream ss(inside);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed word entry '" + tok + "'");
        }
        if (i < 1 || i > rs.rank()) throw std::invalid_argument("simple index " + tok + " out of range");
        word.push_back(i - 1);
    }
    return word;
}

NilHeckeElt parse_factor(const RootSystem& rs, const std::string& f) {
    const int n = rs.rank();
    if (f.empty()) throw std::invalid_argument("empty factor");
    if (std::isdigit(static_cast<unsigned char>(f[0]))) {
        Integer c;
        try {
            c = Integer(f);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed coefficient '" + f + "'");
        }
        return NilHeckeElt::scalar(GroupAlgElt::constant(n, c), n);
    }
    auto open = f.find('[');
    if (open == std::string::npos || f.back() != ']') throw std::invalid_argument("malformed factor '" + f + "'");
    std::string head = trim(f.substr(0, open));
    std::string inside = f.substr(open + 1, f.size() - open - 2);
    if (head == "e") return NilHeckeElt::scalar(GroupAlgElt::monomial(parse_weight(inside, n)), n);
    if (head == "X") return NilHeckeElt::X(parse_weight(inside, n));
    if (head == "T") return NilHeckeElt::T(rs.from_word(parse_word(rs, inside)), n);
    throw std::invalid_argument("unknown factor '" + head + "'");
}

}  // namespace

NilHeckeElt parse_nilhecke(const RootSystem& rs, const std::string& text) {
    NilHeckeElt total;
    std::vector<std::pair<int, std::string>> terms;
    std::string cur;
    int sign = 1;
    int depth = 0;
    bool have_content = false;
    for (char ch : text) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (depth < 0) throw std::invalid_argument("unbalanced brackets");
        if (depth == 0 && (ch == '+' || ch == '-')) {
            if (have_content) {
                terms.emplace_back(sign, cur);
                cur.clear();
                have_content = false;
                sign = 1;
            }
            if (ch == '-') sign = -sign;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(ch))) have_content = true;
        cur += ch;
    }
    if (depth != 0) throw std::invalid_argument("unbalanced brackets");
    if (have_content) terms.emplace_back(sign, cur);
    if (terms.empty() && trim(text) != "0") throw std::invalid_argument("empty expression");
    for (auto& [s, body] : terms) {
        if (trim(body) == "0") continue;
        NilHeckeElt acc = NilHeckeElt::scalar(GroupAlgElt::constant(rs.rank(), s), rs.rank());
        std::string factor;
        int d = 0;
        for (char ch : body + "*") {
            if (ch == '[') ++d;
            if (ch == ']') --d;
            if (ch == '*' && d == 0) {
                acc = multiply(rs, acc, parse_factor(rs, trim(factor)));
                factor.clear();
                continue;
            }
            factor += ch;
        }
        total += acc;
    }
    return total;
}

std::string to_string(const RootSystem& rs, const NilHeckeElt& x) {
    OppositeForm g = to_opposite(rs, x);
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, f] : g) {
        for (const auto& [lam, c] : f.terms()) {
            for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
                const auto& [mu, k] = *it;
                if (!first) os << (k < 0 ? " - " : " + ");
                else if (k < 0) os << "-";
                first = false;
                os << (k < 0 ? Integer(-k) : k);
                if (!mu.is_zero()) os << " * e" << mu.str();
                if (!lam.is_zero()) os << " * X" << lam.str();
                if (w != rs.identity()) {
                    os << " * T[";
                    const auto& word = rs.reduced_word(w);
                    for (std::size_t k2 = 0; k2 < word.size(); ++k2) os << (k2 ? "," : "") << word[k2] + 1;
                    os << ']';
                }
            }
        }
    }
    return first ? "0" : os.str();
}

}  // namespace kschubert
