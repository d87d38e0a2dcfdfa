#include "kschubert/graded.hpp"

#include <sstream>
#include <stdexcept>

namespace kschubert {

// ---------------------------------------------------------------------------
// Poly

namespace {

Poly::Exponent zero_exponent(int rank) { return Poly::Exponent(static_cast<std::size_t>(2 * rank), 0); }

int exponent_degree(const Poly::Exponent& e) {
    int d = 0;
    for (int k : e) d += k;
    return d;
}

}  // namespace

Poly Poly::constant(int rank, const Rational& c) {
    Poly p(rank);
    p.add_term(zero_exponent(rank), c);
    return p;
}

Poly Poly::x(int rank, int i) {
    Poly p(rank);
    auto e = zero_exponent(rank);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, 1);
    return p;
}

Poly Poly::y(int rank, int i) {
    Poly p(rank);
    auto e = zero_exponent(rank);
    e[static_cast<std::size_t>(rank + i)] = 1;
    p.add_term(e, 1);
    return p;
}

Poly Poly::x_weight(const Weight& lambda) {
    Poly p(lambda.rank());
    for (int i = 0; i < lambda.rank(); ++i)
        if (lambda[i] != 0) p += x(lambda.rank(), i) * Rational(lambda[i]);
    return p;
}

Poly Poly::y_weight(const Weight& lambda) {
    Poly p(lambda.rank());
    for (int i = 0; i < lambda.rank(); ++i)
        if (lambda[i] != 0) p += y(lambda.rank(), i) * Rational(lambda[i]);
    return p;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    if (rank_ == 0) rank_ = static_cast<int>(e.size() / 2);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational Poly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, exponent_degree(e));
    return d;
}

int Poly::low_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int k = exponent_degree(e);
        if (d < 0 || k < d) d = k;
    }
    return d;
}

bool Poly::involves_x() const {
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < rank_; ++i)
            if (e[static_cast<std::size_t>(i)] != 0) return true;
    return false;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out(std::max(a.rank_, b.rank_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Poly::Exponent e = ea;
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

Poly Poly::truncated(int max_degree) const {
    Poly p(rank_);
    for (const auto& [e, c] : terms_)
        if (exponent_degree(e) <= max_degree) p.terms_.emplace(e, c);
    return p;
}

Poly Poly::homogeneous_part(int d) const {
    Poly p(rank_);
    for (const auto& [e, c] : terms_)
        if (exponent_degree(e) == d) p.terms_.emplace(e, c);
    return p;
}

Poly Poly::act(const RootSystem& rs, WeylElt w) const {
    if (w == rs.identity() || terms_.empty()) return *this;
    std::vector<Poly> images;
    for (int j = 0; j < rank_; ++j) images.push_back(x_weight(rs.act(w, rs.omega(j))));
    Poly out(rank_);
    for (const auto& [e, c] : terms_) {
        Exponent ye = zero_exponent(rank_);
        for (int j = 0; j < rank_; ++j) ye[static_cast<std::size_t>(rank_ + j)] = e[static_cast<std::size_t>(rank_ + j)];
        Poly term(rank_);
        term.add_term(ye, c);
        for (int j = 0; j < rank_; ++j)
            for (int k = 0; k < e[static_cast<std::size_t>(j)]; ++k) term = term * images[static_cast<std::size_t>(j)];
        out += term;
    }
    return out;
}

Poly Poly::x_to_y() const {
    Poly out(rank_);
    for (const auto& [e, c] : terms_) {
        Exponent f = zero_exponent(rank_);
        for (int j = 0; j < rank_; ++j)
            f[static_cast<std::size_t>(rank_ + j)] = e[static_cast<std::size_t>(j)] + e[static_cast<std::size_t>(rank_ + j)];
        out.add_term(f, c);
    }
    return out;
}

Poly Poly::y_to_zero() const {
    Poly out(rank_);
    for (const auto& [e, c] : terms_) {
        bool has_y = false;
        for (int j = 0; j < rank_; ++j) has_y = has_y || e[static_cast<std::size_t>(rank_ + j)] != 0;
        if (!has_y) out.terms_.emplace(e, c);
    }
    return out;
}

Rational Poly::evaluate(const std::vector<Rational>& x_point, const std::vector<Rational>& y_point) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (int j = 0; j < rank_; ++j) {
            v *= rational_pow(x_point[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(j)]);
            v *= rational_pow(y_point[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(rank_ + j)]);
        }
        total += v;
    }
    return total;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (a < 0) {
            os << (first ? "-" : " - ");
            a = -a;
        } else if (!first) {
            os << " + ";
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (int j = 0; j < 2 * rank_; ++j) {
            int k = e[static_cast<std::size_t>(j)];
            if (k == 0) continue;
            if (any) mono << '*';
            mono << (j < rank_ ? 'x' : 'y') << (j % rank_ + 1);
            if (k > 1) mono << '^' << k;
            any = true;
        }
        if (!any) {
            os << a;
        } else {
            if (a != 1) os << a << '*';
            os << mono.str();
        }
    }
    return os.str();
}

Poly divided_difference(const RootSystem& rs, int i, const Poly& f) {
    const int n = rs.rank();
    const Poly xi = Poly::x(n, i);
    const Poly reflected = xi - Poly::x_weight(rs.simple_root(i));  // s_i x_i
    Poly out = Poly::constant(n, 0);
    std::map<int, Poly> cache;
    for (const auto& [e, c] : f.terms()) {
        const int m = e[static_cast<std::size_t>(i)];
        if (m == 0) continue;
        auto it = cache.find(m);
        if (it == cache.end()) {
            // sum_{a+b=m-1} x_i^a (s_i x_i)^b
            Poly s = Poly::constant(n, 0);
            for (int a = 0; a < m; ++a) {
                Poly t = Poly::constant(n, 1);
                for (int k = 0; k < a; ++k) t = t * xi;
                for (int k = 0; k < m - 1 - a; ++k) t = t * reflected;
                s += t;
            }
            it = cache.emplace(m, s).first;
        }
        Poly::Exponent rest = e;
        rest[static_cast<std::size_t>(i)] = 0;
        Poly g = Poly::constant(n, 0);
        g.add_term(rest, c);
        out += g * it->second;
    }
    return out;
}

// ---------------------------------------------------------------------------
// GradedElt

GradedElt GradedElt::t(WeylElt w, int rank) {
    GradedElt h;
    h.add_term(w, Poly::constant(rank, 1));
    return h;
}

GradedElt GradedElt::poly(const Poly& f) {
    GradedElt h;
    h.add_term(WeylElt{0}, f);
    return h;
}

Poly GradedElt::coeff(WeylElt w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Poly() : it->second;
}

void GradedElt::add_term(WeylElt w, const Poly& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

GradedElt& GradedElt::operator+=(const GradedElt& o) {
    for (const auto& [w, f] : o.terms_) add_term(w, f);
    return *this;
}

GradedElt& GradedElt::operator-=(const GradedElt& o) {
    for (const auto& [w, f] : o.terms_) add_term(w, -f);
    return *this;
}

GradedElt& GradedElt::operator*=(const Rational& k) {
    GradedElt out;
    for (const auto& [w, f] : terms_) out.add_term(w, f * k);
    *this = std::move(out);
    return *this;
}

GradedElt GradedElt::truncated(int max_degree) const {
    GradedElt out;
    for (const auto& [w, f] : terms_) out.add_term(w, f.truncated(max_degree));
    return out;
}

std::string GradedElt::str(const RootSystem& rs) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "t[" << rs.word_string(w) << "]*(" << f.str() << ')';
    }
    return os.str();
}

GradedElt right_mul_t(const RootSystem& rs, const GradedElt& h, int i) {
    // t_w f t_i = t_w t_i (s_i f) + t_w d_i(f)
    GradedElt out;
    const WeylElt si = rs.simple_reflection(i);
    for (const auto& [w, f] : h.terms()) {
        const WeylElt ws = rs.right_mul(w, i);
        if (rs.length(ws) > rs.length(w)) out.add_term(ws, f.act(rs, si));
        out.add_term(w, divided_difference(rs, i, f));
    }
    return out;
}

GradedElt right_mul_poly(const GradedElt& h, const Poly& f) {
    GradedElt out;
    for (const auto& [w, g] : h.terms()) out.add_term(w, g * f);
    return out;
}

GradedElt multiply(const RootSystem& rs, const GradedElt& a, const GradedElt& b) {
    GradedElt out;
    for (const auto& [v, g] : b.terms()) {
        GradedElt part = a;
        for (int i : rs.reduced_word(v)) part = right_mul_t(rs, part, i);
        out += right_mul_poly(part, g);
    }
    return out;
}

GradedElt graded_normalize(const RootSystem& rs, const std::vector<GradedFactor>& word) {
    GradedElt h = GradedElt::t(rs.identity(), rs.rank());
    for (const auto& f : word) {
        if (f.t_index >= 0) {
            if (f.t_index >= rs.rank()) throw std::out_of_range("simple index out of range");
            h = right_mul_t(rs, h, f.t_index);
        } else {
            h = right_mul_poly(h, f.f);
        }
    }
    return h;
}

// ---------------------------------------------------------------------------
// H*_T(G/B)

std::string hclass_str(const RootSystem& rs, const HClass& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, f] : c) {
        if (!first) os << " + ";
        first = false;
        os << '(' << f.str() << ")[" << rs.word_string(w) << ']';
    }
    return os.str();
}

namespace {

void add_to(HClass& c, WeylElt w, const Poly& f) {
    if (f.is_zero()) return;
    auto it = c.find(w);
    if (it == c.end()) {
        c.emplace(w, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) c.erase(it);
}

}  // namespace

HClass graded_phi1(const RootSystem& rs, const GradedElt& h) {
    HClass out;
    for (const auto& [w, f] : h.terms()) add_to(out, rs.inverse(w), f.x_to_y());
    return out;
}

HClass h_act(const RootSystem& rs, const GradedElt& h, const HClass& c) {
    HClass out;
    for (const auto& [v, a] : c) {
        GradedElt hv = multiply(rs, h, GradedElt::t(rs.inverse(v), rs.rank()));
        for (const auto& [z, f] : graded_phi1(rs, hv)) add_to(out, z, f * a);
    }
    return out;
}

HClass graded_phi(const RootSystem& rs, const Poly& f) {
    return graded_phi1(rs, multiply(rs, GradedElt::poly(f), GradedElt::t(rs.longest(), rs.rank())));
}

GradedCohomology::GradedCohomology(RootSystemPtr rs) : rs_(std::move(rs)) {
    const int n = rs_->rank();
    const int top = rs_->length(rs_->longest());
    std::vector<std::vector<WeylElt>> levels(static_cast<std::size_t>(top + 1));
    for (WeylElt w : rs_->elements()) levels[static_cast<std::size_t>(rs_->length(w))].push_back(w);
    reps_[rs_->longest()] = Poly::constant(n, 1);
    // x_i [X_w] = c(y) [X_w] + integer combination of one-step-lower classes
    for (int L = top - 1; L >= 0; --L) {
        const auto& cols = levels[static_cast<std::size_t>(L)];
        std::map<WeylElt, std::size_t> col_of;
        for (std::size_t k = 0; k < cols.size(); ++k) col_of[cols[k]] = k;
        std::vector<std::pair<std::vector<Rational>, Poly>> rows;
        for (WeylElt w : levels[static_cast<std::size_t>(L + 1)]) {
            for (int i = 0; i < n; ++i) {
                Poly g = Poly::x(n, i) * reps_.at(w);
                HClass image = graded_phi(*rs_, g);
                if (auto it = image.find(w); it != image.end()) g -= it->second * reps_.at(w);
                std::vector<Rational> row(cols.size(), Rational(0));
                for (const auto& [z, c] : graded_phi(*rs_, g)) {
                    auto k = col_of.find(z);
                    if (k == col_of.end() || c.degree() != 0)
                        throw std::logic_error("unexpected term in the Chevalley expansion");
                    row[k->second] = c.terms().begin()->second;
                }
                rows.emplace_back(std::move(row), std::move(g));
            }
        }
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::size_t piv = c;
            while (piv < rows.size() && rows[piv].first[c] == 0) ++piv;
            if (piv == rows.size()) throw std::logic_error("Schubert classes not reached by polynomials");
            std::swap(rows[piv], rows[c]);
            const Rational inv = 1 / rows[c].first[c];
            for (auto& e : rows[c].first) e *= inv;
            rows[c].second *= inv;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == c || rows[r].first[c] == 0) continue;
                const Rational f = rows[r].first[c];
                for (std::size_t k = 0; k < cols.size(); ++k) rows[r].first[k] -= f * rows[c].first[k];
                rows[r].second -= rows[c].second * f;
            }
        }
        for (std::size_t c = 0; c < cols.size(); ++c) reps_[cols[c]] = rows[c].second;
    }
}

HClass GradedCohomology::h_product(WeylElt w, WeylElt v) const {
    return h_act(*rs_, GradedElt::poly(reps_.at(w)), HClass{{v, Poly::constant(rs_->rank(), 1)}});
}

HClass GradedCohomology::product(const HClass& a, const HClass& b) const {
    HClass out;
    for (const auto& [w, f] : a)
        for (const auto& [z, g] : h_act(*rs_, GradedElt::poly(reps_.at(w)), b)) add_to(out, z, g * f);
    return out;
}

// ---------------------------------------------------------------------------
// Chern character

namespace {

// exp(L) = sum_{r <= D} L^r / r!
Poly exp_truncated(const Poly& linear, int max_degree) {
    const int n = linear.rank();
    Poly out = Poly::constant(n, 1);
    Poly power = Poly::constant(n, 1);
    Rational fact = 1;
    for (int r = 1; r <= max_degree; ++r) {
        power = power * linear;
        fact *= r;
        out += power * (Rational(1) / fact);
    }
    return out;
}

// Coefficients of u / (1 - e^{-u}) up to u^N.
std::vector<Rational> todd_series(int N) {
    // (1 - e^{-u}) / u = sum_k (-1)^k u^k / (k+1)!
    std::vector<Rational> a(static_cast<std::size_t>(N + 1));
    Rational fact = 1;
    for (int k = 0; k <= N; ++k) {
        fact *= (k + 1);
        a[static_cast<std::size_t>(k)] = Rational(k % 2 == 0 ? 1 : -1) / fact;
    }
    std::vector<Rational> b(static_cast<std::size_t>(N + 1));
    b[0] = 1 / a[0];
    for (int k = 1; k <= N; ++k) {
        Rational s = 0;
        for (int j = 1; j <= k; ++j) s += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
        b[static_cast<std::size_t>(k)] = -s / a[0];
    }
    return b;
}

Poly series_in(const std::vector<Rational>& coeffs, const Poly& u) {
    const int n = u.rank();
    Poly out = Poly::constant(n, 0);
    Poly power = Poly::constant(n, 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        out += power * coeffs[k];
        power = power * u;
    }
    return out;
}

// ch of sum c e^mu X^lambda
Poly ch_rx(const RXElt& f, int rank, int max_degree) {
    Poly out = Poly::constant(rank, 0);
    for (const auto& [lambda, e_part] : f.terms())
        for (const auto& [mu, c] : e_part.terms())
            out += exp_truncated(Poly::x_weight(lambda) + Poly::y_weight(mu), max_degree) * Rational(c);
    return out;
}

Poly ch_scalar(const GroupAlgElt& f, int rank, int max_degree) {
    Poly out = Poly::constant(rank, 0);
    for (const auto& [mu, c] : f.terms()) out += exp_truncated(Poly::y_weight(mu), max_degree) * Rational(c);
    return out;
}

GradedElt ch_T(const RootSystem& rs, WeylElt w, int max_degree) {
    const int n = rs.rank();
    const int cap = max_degree + rs.length(w);
    const auto todd = todd_series(cap);
    GradedElt g = GradedElt::t(rs.identity(), n);
    for (int i : rs.reduced_word(w)) {
        g = right_mul_t(rs, g, i);
        g = right_mul_poly(g, series_in(todd, Poly::x_weight(rs.simple_root(i))).truncated(cap)).truncated(cap);
    }
    return g;
}

}  // namespace

GradedElt ch_truncated(const RootSystem& rs, const NilHeckeElt& h, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("degree bound must be at least 1");
    const int n = rs.rank();
    GradedElt out;
    for (const auto& [w, f] : h.terms())
        out += right_mul_poly(ch_T(rs, w, max_degree), ch_rx(f, n, max_degree)).truncated(max_degree);
    return out;
}

HClass ch_class(const RootSystem& rs, const KClass& c, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("degree bound must be at least 1");
    const int n = rs.rank();
    HClass out;
    for (const auto& [z, coef] : c.terms()) {
        const Poly s = ch_scalar(coef, n, max_degree);
        for (const auto& [u, f] : graded_phi1(rs, ch_T(rs, rs.inverse(z), max_degree)))
            add_to(out, u, (f * s).truncated(max_degree));
    }
    return out;
}

HClass lowest_degree(const RootSystem& rs, const HClass& c) {
    const int top = rs.length(rs.longest());
    int best = -1;
    for (const auto& [z, f] : c) {
        int d = f.low_degree() + top - rs.length(z);
        if (best < 0 || d < best) best = d;
    }
    HClass out;
    for (const auto& [z, f] : c) {
        const int d = best - (top - rs.length(z));
        if (d < 0) continue;
        Poly part = f.homogeneous_part(d);
        if (!part.is_zero()) out.emplace(z, part);
    }
    return out;
}

KClass specialize_k(const KClass& c) {
    KClass out;
    for (const auto& [z, f] : c.terms()) {
        Integer s = 0;
        int rank = 0;
        for (const auto& [mu, k] : f.terms()) {
            s += k;
            rank = mu.rank();
        }
        if (s != 0) out.add_term(z, GroupAlgElt::constant(rank, s));
    }
    return out;
}

HClass specialize_h(const HClass& c) {
    HClass out;
    for (const auto& [z, f] : c) {
        Poly p = f.y_to_zero();
        if (!p.is_zero()) out.emplace(z, p);
    }
    return out;
}

}  // namespace kschubert
