#include "kschubert/ring.hpp"

#include <sstream>

namespace kschubert {

GroupAlgElt GroupAlgElt::monomial(const Weight& w, Integer c) {
    GroupAlgElt r;
    r.add_term(w, c);
    return r;
}

GroupAlgElt GroupAlgElt::constant(int rank, Integer c) { return monomial(Weight(rank), std::move(c)); }

Integer GroupAlgElt::coeff(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
}

void GroupAlgElt::add_term(const Weight& w, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupAlgElt& GroupAlgElt::operator+=(const GroupAlgElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

GroupAlgElt& GroupAlgElt::operator-=(const GroupAlgElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

GroupAlgElt operator*(const GroupAlgElt& a, const GroupAlgElt& b) {
    GroupAlgElt r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
}

GroupAlgElt& GroupAlgElt::operator*=(const GroupAlgElt& o) { return *this = *this * o; }

GroupAlgElt& GroupAlgElt::operator*=(const Integer& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= k;
    return *this;
}

GroupAlgElt GroupAlgElt::operator-() const {
    GroupAlgElt r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

GroupAlgElt GroupAlgElt::shifted(const Weight& s) const {
    GroupAlgElt r;
    for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w + s, c);
    return r;
}

GroupAlgElt GroupAlgElt::act(const RootSystem& rs, WeylElt w) const {
    if (w == rs.identity()) return *this;
    GroupAlgElt r;
    for (const auto& [lam, c] : terms_) r.add_term(rs.act(w, lam), c);
    return r;
}

GroupAlgElt GroupAlgElt::dual() const {
    GroupAlgElt r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(-w, c);
    return r;
}

GroupAlgElt GroupAlgElt::pow(unsigned k) const {
    if (terms_.empty()) return {};
    GroupAlgElt result = constant(terms_.begin()->first.rank(), 1);
    GroupAlgElt base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

Rational GroupAlgElt::evaluate(const std::vector<Rational>& point) const {
    for (const auto& v : point)
        if (v == 0) throw std::invalid_argument("evaluation point has a zero coordinate");
    Rational sum = 0;
    for (const auto& [w, c] : terms_) {
        Rational term = Rational(c);
        for (int i = 0; i < w.rank(); ++i) {
            if (w[i] == 0) continue;
            if (static_cast<std::size_t>(i) >= point.size())
                throw std::invalid_argument("evaluation point has too few coordinates");
            term *= rational_pow(point[static_cast<std::size_t>(i)], w[i]);
        }
        sum += term;
    }
    return sum;
}

std::string GroupAlgElt::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        Integer a = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (w.is_zero()) {
            os << a;
            continue;
        }
        if (a != 1) os << a << '*';
        os << var << w.str();
    }
    return os.str();
}

std::vector<std::pair<std::vector<std::int64_t>, Integer>> GroupAlgElt::serialize() const {
    std::vector<std::pair<std::vector<std::int64_t>, Integer>> out;
    for (const auto& [w, c] : terms_) out.emplace_back(w.coords(), c);
    return out;
}

GroupAlgElt GroupAlgElt::deserialize(const std::vector<std::pair<std::vector<std::int64_t>, Integer>>& data) {
    GroupAlgElt r;
    for (const auto& [coords, c] : data) r.add_term(Weight(std::span<const std::int64_t>(coords)), c);
    return r;
}

// ---------------------------------------------------------------------------

RXElt RXElt::x_monomial(const Weight& lambda) {
    RXElt r;
    r.add_term(lambda, GroupAlgElt::constant(lambda.rank(), 1));
    return r;
}

RXElt RXElt::scalar(const GroupAlgElt& e_part, int rank) {
    RXElt r;
    r.add_term(Weight(rank), e_part);
    return r;
}

RXElt RXElt::from_x(const GroupAlgElt& x_part) {
    RXElt r;
    for (const auto& [w, c] : x_part.terms()) r.add_term(w, GroupAlgElt::constant(w.rank(), c));
    return r;
}

RXElt RXElt::term(const GroupAlgElt& e_part, const Weight& lambda) {
    RXElt r;
    r.add_term(lambda, e_part);
    return r;
}

const GroupAlgElt& RXElt::coeff(const Weight& lambda) const {
    static const GroupAlgElt zero;
    auto it = terms_.find(lambda);
    return it == terms_.end() ? zero : it->second;
}

void RXElt::add_term(const Weight& lambda, const GroupAlgElt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RXElt& RXElt::operator+=(const RXElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

RXElt& RXElt::operator-=(const RXElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

RXElt& RXElt::operator*=(const GroupAlgElt& k) {
    Terms out;
    for (auto& [w, c] : terms_) {
        GroupAlgElt p = c * k;
        if (!p.is_zero()) out.emplace_hint(out.end(), w, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
}

RXElt operator*(const RXElt& a, const RXElt& b) {
    RXElt r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
}

RXElt RXElt::operator-() const {
    RXElt r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

RXElt RXElt::x_shifted(const Weight& lambda) const {
    RXElt r;
    for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w + lambda, c);
    return r;
}

RXElt RXElt::act(const RootSystem& rs, WeylElt w) const {
    if (w == rs.identity()) return *this;
    RXElt r;
    for (const auto& [lam, c] : terms_) r.add_term(rs.act(w, lam), c);
    return r;
}

GroupAlgElt RXElt::x_to_e() const {
    GroupAlgElt r;
    for (const auto& [lam, c] : terms_) r += c.shifted(lam);
    return r;
}

Rational RXElt::evaluate(const std::vector<Rational>& e_point, const std::vector<Rational>& x_point) const {
    Rational sum = 0;
    for (const auto& [lam, c] : terms_)
        sum += c.evaluate(e_point) * GroupAlgElt::monomial(lam).evaluate(x_point);
    return sum;
}

std::string RXElt::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str("e") << ")*X" << lam.str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------

GroupAlgElt demazure(const RootSystem& rs, int i, const GroupAlgElt& f) {
    GroupAlgElt r;
    const Weight& a = rs.simple_root(i);
    for (const auto& [lam, c] : f.terms()) {
        const std::int64_t m = lam[i];
        if (m >= 0) {
            Weight mu = lam;
            for (std::int64_t k = 0; k <= m; ++k, mu -= a) r.add_term(mu, c);
        } else {
            Weight mu = lam + a;
            for (std::int64_t k = 1; k <= -m - 1; ++k, mu += a) r.add_term(mu, -c);
        }
    }
    return r;
}

RXElt demazure(const RootSystem& rs, int i, const RXElt& f) {
    RXElt r;
    const Weight& a = rs.simple_root(i);
    for (const auto& [lam, c] : f.terms()) {
        const std::int64_t m = lam[i];
        if (m >= 0) {
            Weight mu = lam;
            for (std::int64_t k = 0; k <= m; ++k, mu -= a) r.add_term(mu, c);
        } else {
            Weight mu = lam + a;
            for (std::int64_t k = 1; k <= -m - 1; ++k, mu += a) r.add_term(mu, -c);
        }
    }
    return r;
}

GroupAlgElt geometric_quotient(const RootSystem& rs, const Weight& lambda, int i) {
    GroupAlgElt r;
    const Weight& a = rs.simple_root(i);
    const std::int64_t m = lambda[i];
    if (m >= 0) {
        Weight mu = lambda;
        for (std::int64_t k = 0; k < m; ++k, mu -= a) r.add_term(mu, 1);
    } else {
        Weight mu = lambda + a;
        for (std::int64_t k = 1; k <= -m; ++k, mu += a) r.add_term(mu, -1);
    }
    return r;
}

RXElt geometric_quotient(const RootSystem& rs, const RXElt& f, int i) {
    RXElt r;
    const Weight& a = rs.simple_root(i);
    for (const auto& [lam, c] : f.terms()) {
        const std::int64_t m = lam[i];
        if (m >= 0) {
            Weight mu = lam;
            for (std::int64_t k = 0; k < m; ++k, mu -= a) r.add_term(mu, c);
        } else {
            Weight mu = lam + a;
            for (std::int64_t k = 1; k <= -m; ++k, mu += a) r.add_term(mu, -c);
        }
    }
    return r;
}

GroupAlgElt orbit_sum(const RootSystem& rs, const Weight& lambda) {
    GroupAlgElt r;
    for (WeylElt w : rs.elements()) r.add_term(rs.act(w, lambda), 1);
    return r;
}

bool is_w_invariant(const RootSystem& rs, const GroupAlgElt& f) {
    for (int i = 0; i < rs.rank(); ++i)
        if (f.act(rs, rs.simple_reflection(i)) != f) return false;
    return true;
}

GroupAlgElt y_root(const Weight& beta) { return GroupAlgElt::monomial(-beta); }

GroupAlgElt a_root(const Weight& beta) {
    return GroupAlgElt::monomial(-beta) - GroupAlgElt::constant(beta.rank(), 1);
}

}  // namespace kschubert
