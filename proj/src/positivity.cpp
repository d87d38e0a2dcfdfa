#include "kschubert/positivity.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kschubert {

bool Certificate::nonnegative() const {
    for (const auto& [e, c] : terms)
        if (c < 0) return false;
    return true;
}

int Certificate::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms) {
        int k = 0;
        for (int x : e) k += x;
        d = std::max(d, k);
    }
    return d;
}

void Certificate::add(const std::vector<int>& e, const Integer& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

namespace {

int total_degree(const Weight& m) {
    int d = 0;
    for (int i = 0; i < m.rank(); ++i) d += static_cast<int>(m[i]);
    return d;
}

// graded lex: degree first, then coordinates
bool order_less(const Weight& a, const Weight& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (int i = 0; i < a.rank(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

Weight min_monomial(const GroupAlgElt& q) {
    const Weight* best = nullptr;
    for (const auto& [m, c] : q.terms())
        if (!best || order_less(m, *best)) best = &m;
    return *best;
}

// (1 + v)^e for e >= 0
GroupAlgElt one_plus_v_pow(const std::vector<std::int64_t>& e) {
    const int n = static_cast<int>(e.size());
    GroupAlgElt out = GroupAlgElt::constant(n, 1);
    for (int i = 0; i < n; ++i) {
        Weight vi(n);
        vi[i] = 1;
        const GroupAlgElt f = GroupAlgElt::constant(n, 1) + GroupAlgElt::monomial(vi);
        out *= f.pow(static_cast<unsigned>(e[static_cast<std::size_t>(i)]));
    }
    return out;
}

bool dominated(const GroupAlgElt& m, const GroupAlgElt& q) {
    for (const auto& [w, c] : m.terms())
        if (q.coeff(w) < c) return false;
    return true;
}

Integer value_at_one(const GroupAlgElt& q) {
    Integer s = 0;
    for (const auto& [w, c] : q.terms()) s += c;
    return s;
}

struct Candidate {
    std::vector<int> exponent;
    int degree = 0;
    Integer at_one;
};

class Search {
public:
    Search(const std::vector<std::vector<std::int64_t>>& roots, int bound)
        : roots_(roots), bound_(bound), n_(static_cast<int>(roots.front().size())) {
        for (const auto& b : roots_) {
            y_.push_back(one_plus_v_pow(b));
            a_.push_back(y_.back() - GroupAlgElt::constant(n_, 1));
            int first = 0;
            while (b[static_cast<std::size_t>(first)] == 0) ++first;
            min_var_.push_back(first);
            Integer p = 1;
            for (auto x : b)
                for (std::int64_t k = 0; k < x; ++k) p *= 2;
            y_one_.push_back(p);
        }
    }

    std::optional<Certificate> run(const GroupAlgElt& q) {
        Certificate cert;
        if (dfs(q, cert)) return cert;
        return std::nullopt;
    }

private:
    static constexpr long kNodeBudget = 20000;

    bool dfs(const GroupAlgElt& q, Certificate& cert) {
        if (q.is_zero()) return true;
        if (++nodes_ > kNodeBudget) return false;
        if (failed_.count(q.terms())) return false;
        const Weight m = min_monomial(q);
        const Integer q_one = value_at_one(q);
        for (const auto& cand : candidates(m)) {
            if (cand.at_one > q_one) continue;
            GroupAlgElt expansion = expand(cand.exponent);
            if (!dominated(expansion, q)) continue;
            if (dfs(q - expansion, cert)) {
                cert.add(cand.exponent, 1);
                return true;
            }
            if (nodes_ > kNodeBudget) return false;
        }
        failed_.insert(q.terms());
        return false;
    }

    GroupAlgElt expand(const std::vector<int>& e) const {
        const std::size_t r = roots_.size();
        GroupAlgElt out = GroupAlgElt::constant(n_, 1);
        for (std::size_t k = 0; k < r; ++k) {
            if (e[k]) out *= a_[k].pow(static_cast<unsigned>(e[k]));
            if (e[r + k]) out *= y_[k].pow(static_cast<unsigned>(e[r + k]));
        }
        return out;
    }

    // Multisets of size `size` over roots, as exponent vectors.
    void multisets(int size, std::size_t from, std::vector<int>& cur, std::vector<std::vector<int>>& out) const {
        if (size == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t k = from; k < roots_.size(); ++k) {
            ++cur[k];
            multisets(size - 1, k, cur, out);
            --cur[k];
        }
    }

    const std::vector<Candidate>& candidates(const Weight& m) {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        const std::size_t r = roots_.size();
        const int d = total_degree(m);
        std::vector<Candidate> list;
        if (d <= bound_) {
            std::vector<int> cur(r, 0);
            std::vector<std::vector<int>> a_parts;
            multisets(d, 0, cur, a_parts);
            for (const auto& ap : a_parts) {
                Weight lead(n_);
                Integer a_one = 1;
                for (std::size_t k = 0; k < r; ++k) {
                    lead[min_var_[k]] += ap[k];
                    for (int j = 0; j < ap[k]; ++j) a_one *= (y_one_[k] - 1);
                }
                if (lead != m) continue;
                for (int ydeg = 0; d + ydeg <= bound_; ++ydeg) {
                    std::vector<std::vector<int>> y_parts;
                    multisets(ydeg, 0, cur, y_parts);
                    for (const auto& yp : y_parts) {
                        Candidate c;
                        c.exponent.assign(2 * r, 0);
                        c.at_one = a_one;
                        for (std::size_t k = 0; k < r; ++k) {
                            c.exponent[k] = ap[k];
                            c.exponent[r + k] = yp[k];
                            for (int j = 0; j < yp[k]; ++j) c.at_one *= y_one_[k];
                        }
                        c.degree = d + ydeg;
                        list.push_back(std::move(c));
                    }
                }
            }
        }
        std::stable_sort(list.begin(), list.end(), [](const Candidate& x, const Candidate& y) {
            if (x.at_one != y.at_one) return x.at_one > y.at_one;
            return x.degree < y.degree;
        });
        return cache_.emplace(m, std::move(list)).first->second;
    }

    const std::vector<std::vector<std::int64_t>>& roots_;
    int bound_;
    int n_;
    std::vector<GroupAlgElt> a_, y_;
    std::vector<int> min_var_;
    std::vector<Integer> y_one_;
    std::map<Weight, std::vector<Candidate>> cache_;
    std::set<GroupAlgElt::Terms> failed_;
    long nodes_ = 0;
};

}  // namespace

PositivityChecker::PositivityChecker(RootSystemPtr rs) : rs_(std::move(rs)) {
    for (const auto& beta : rs_->positive_roots()) roots_.push_back(beta.alpha);
}

int PositivityChecker::root_index(const std::vector<std::int64_t>& alpha) const {
    for (std::size_t k = 0; k < roots_.size(); ++k)
        if (roots_[k] == alpha) return static_cast<int>(k);
    return -1;
}

GroupAlgElt PositivityChecker::substitute(const Certificate& f) const {
    const int n = rs_->rank();
    const std::size_t r = roots_.size();
    GroupAlgElt out;
    for (const auto& [e, c] : f.terms) {
        if (e.size() != 2 * r) throw std::invalid_argument("certificate has the wrong number of symbols");
        GroupAlgElt term = GroupAlgElt::constant(n, c);
        for (std::size_t k = 0; k < r; ++k) {
            const GroupAlgElt y = GroupAlgElt::monomial(-rs_->from_alpha_coords(roots_[k]));
            if (e[k]) term *= (y - GroupAlgElt::constant(n, 1)).pow(static_cast<unsigned>(e[k]));
            if (e[r + k]) term *= y.pow(static_cast<unsigned>(e[r + k]));
        }
        out += term;
    }
    return out;
}

bool PositivityChecker::verify(const Certificate& f, const GroupAlgElt& target) const {
    return f.nonnegative() && substitute(f) == target;
}

std::string PositivityChecker::str(const Certificate& f) const {
    if (f.is_zero()) return "0";
    const std::size_t r = roots_.size();
    auto label = [&](std::size_t k) {
        std::string s;
        bool wide = false;
        for (auto x : roots_[k]) wide = wide || x > 9;
        for (std::size_t i = 0; i < roots_[k].size(); ++i) {
            if (wide && i) s += ',';
            s += std::to_string(roots_[k][i]);
        }
        return s;
    };
    std::ostringstream os;
    bool first = true;
    std::vector<std::pair<std::vector<int>, Integer>> ordered(f.terms.rbegin(), f.terms.rend());
    auto deg = [](const std::vector<int>& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    };
    std::stable_sort(ordered.begin(), ordered.end(),
                     [&](const auto& x, const auto& y) { return deg(x.first) < deg(y.first); });
    for (const auto& [e, c] : ordered) {
        Integer a = c;
        if (a < 0) {
            os << (first ? "-" : " - ");
            a = -a;
        } else if (!first) {
            os << " + ";
        }
        first = false;
        std::vector<std::string> factors;
        for (std::size_t k = 0; k < r; ++k) {
            for (int j = 0; j < e[k]; ++j) factors.push_back("a_{" + label(k) + "}");
            for (int j = 0; j < e[r + k]; ++j) factors.push_back("y_{" + label(k) + "}");
        }
        if (factors.empty() || a != 1) {
            os << a;
            if (!factors.empty()) os << '*';
        }
        for (std::size_t j = 0; j < factors.size(); ++j) os << (j ? "*" : "") << factors[j];
    }
    return os.str();
}

int PositivityChecker::predicted_sign(WeylElt w, WeylElt v, WeylElt z) const {
    const int top = rs_->length(rs_->longest());
    const int d = (top - rs_->length(w)) + (top - rs_->length(v)) - (top - rs_->length(z));
    return d % 2 == 0 ? 1 : -1;
}

std::optional<GroupAlgElt> PositivityChecker::to_u(const GroupAlgElt& c) const {
    const int n = rs_->rank();
    GroupAlgElt out;
    for (const auto& [mu, k] : c.terms()) {
        const auto alpha = rs_->to_alpha_coords(mu);
        Weight e(n);
        for (int i = 0; i < n; ++i) {
            const Rational& x = alpha[static_cast<std::size_t>(i)];
            if (boost::multiprecision::denominator(x) != 1) return std::nullopt;
            e[i] = -static_cast<std::int64_t>(boost::multiprecision::numerator(x));
        }
        out.add_term(e, k);
    }
    return out;
}

SignReport PositivityChecker::sign_check(WeylElt w, WeylElt v, WeylElt z, const GroupAlgElt& c,
                                         std::mt19937_64& rng, int points) const {
    const int top = rs_->length(rs_->longest());
    SignReport rep;
    rep.w = w;
    rep.v = v;
    rep.z = z;
    rep.dw = top - rs_->length(w);
    rep.dv = top - rs_->length(v);
    rep.dz = top - rs_->length(z);
    rep.c = c;
    rep.sign = predicted_sign(w, v, z);
    if (c.is_zero()) return rep;
    auto u = to_u(c);
    if (!u) {
        rep.numeric_ok = false;
        return rep;
    }
    const GroupAlgElt target = *u * Integer(rep.sign);
    for (int k = 0; k < points; ++k) {
        std::vector<Rational> pt;
        for (int i = 0; i < rs_->rank(); ++i)
            pt.push_back(1 + Rational(static_cast<long>(rng() % 97 + 1), static_cast<long>(rng() % 13 + 1)));
        if (target.evaluate(pt) < 0) rep.numeric_ok = false;
    }
    return rep;
}

std::optional<Certificate> PositivityChecker::find_certificate(const GroupAlgElt& c, int sign, int support_bound) const {
    if (c.is_zero()) return Certificate{};
    auto u = to_u(c);
    if (!u) return std::nullopt;
    const int n = rs_->rank();
    // Q(v) = sign * c at u = 1 + v
    GroupAlgElt q;
    for (const auto& [e, k] : u->terms()) {
        std::vector<std::int64_t> ex;
        for (int i = 0; i < n; ++i) {
            if (e[i] < 0) return std::nullopt;
            ex.push_back(e[i]);
        }
        q += one_plus_v_pow(ex) * (k * sign);
    }
    for (const auto& [m, k] : q.terms())
        if (k < 0) return std::nullopt;

    Search search(roots_, support_bound);
    if (auto cert = search.run(q)) return cert;

    // every monomial v^m is a product of simple a's
    Certificate direct;
    for (const auto& [m, k] : q.terms()) {
        if (total_degree(m) > support_bound) return std::nullopt;
        std::vector<int> e(symbol_count(), 0);
        for (int i = 0; i < n; ++i) {
            std::vector<std::int64_t> simple(static_cast<std::size_t>(n), 0);
            simple[static_cast<std::size_t>(i)] = 1;
            e[static_cast<std::size_t>(root_index(simple))] = static_cast<int>(m[i]);
        }
        direct.add(e, k);
    }
    return direct;
}

}  // namespace kschubert
