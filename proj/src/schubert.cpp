#include "kschubert/schubert.hpp"

#include <sstream>

namespace kschubert {

KClass KClass::basis(WeylElt w, int rank) {
    KClass c;
    c.add_term(w, GroupAlgElt::constant(rank, 1));
    return c;
}

GroupAlgElt KClass::coeff(WeylElt w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? GroupAlgElt() : it->second;
}

void KClass::add_term(WeylElt w, const GroupAlgElt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KClass& KClass::operator+=(const KClass& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

KClass& KClass::operator-=(const KClass& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

KClass& KClass::operator*=(const GroupAlgElt& k) {
    Terms out;
    for (const auto& [w, c] : terms_) {
        GroupAlgElt p = c * k;
        if (!p.is_zero()) out.emplace(w, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
}

KClass KClass::operator-() const {
    KClass r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

std::string KClass::str(const RootSystem& rs) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (WeylElt w : rs.elements_by_length()) {
        auto it = terms_.find(w);
        if (it == terms_.end()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << it->second.str("e") << ")[" << rs.word_string(w) << ']';
    }
    return os.str();
}

// ---------------------------------------------------------------------------

KTheory::KTheory(RootSystemPtr rs, SteinbergConvention convention)
    : rs_(std::move(rs)), convention_(convention), basis_order_(rs_->elements_by_length()) {
    for (std::size_t k = 0; k < basis_order_.size(); ++k) position_[basis_order_[k].index] = k;
}

KClass KTheory::schubert_class(WeylElt w) const { return KClass::basis(w, rank()); }

KClass KTheory::phi1(const NilHeckeElt& h) const {
    KClass c;
    for (const auto& [w, f] : h.terms()) c.add_term(rs_->inverse(w), f.x_to_e());
    return c;
}

KClass KTheory::ideal_class(WeylElt w) const { return phi1(epsilon(*rs_, rs_->inverse(w))); }

KClass KTheory::act(const NilHeckeElt& h, const KClass& c) const {
    KClass out;
    for (const auto& [v, coef] : c.terms()) {
        NilHeckeElt prod = right_mul_T(*rs_, h, rs_->inverse(v));
        out += phi1(prod) * coef;
    }
    return out;
}

KClass KTheory::x_action(const Weight& mu, WeylElt v) const {
    const auto key = std::make_pair(mu, v.index);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = x_cache_.find(key);
        if (it != x_cache_.end()) return it->second;
    }
    KClass c = phi1(right_mul_T(*rs_, NilHeckeElt::X(mu), rs_->inverse(v)));
    std::lock_guard<std::mutex> lock(mutex_);
    return x_cache_.emplace(key, std::move(c)).first->second;
}

KClass KTheory::x_action(const Weight& mu, const KClass& c) const {
    KClass out;
    for (const auto& [v, coef] : c.terms()) out += x_action(mu, v) * coef;
    return out;
}

KClass KTheory::phi(const RXElt& f) const {
    return phi1(right_mul_T(*rs_, NilHeckeElt::from_rx(f), rs_->longest()));
}

KClass KTheory::line_bundle_class(const Weight& lambda) const { return x_action(lambda, rs_->longest()); }

void KTheory::require_matrix_size() const {
    if (rs_->order() > kMaxMatrixOrder)
        throw std::invalid_argument("Weyl group of order " + std::to_string(rs_->order()) +
                                    " exceeds the matrix limit of " + std::to_string(kMaxMatrixOrder));
}

void KTheory::build_matrix() const {
    std::lock_guard<std::mutex> guard(matrix_mutex_);
    if (matrix_ready_) return;
    require_matrix_size();
    const std::size_t n = basis_order_.size();
    RMatrix m(n, std::vector<GroupAlgElt>(n));
    for (std::size_t col = 0; col < n; ++col) {
        KClass c = line_bundle_class(-steinberg_weight(basis_order_[col]));
        for (const auto& [w, coef] : c.terms()) m[position_.at(w.index)][col] = coef;
    }
    BareissSolution sol = bareiss_solve(m, identity_matrix(n, rank()));
    int sign = 0;
    Weight mu;
    if (sol.det.is_zero() || !as_signed_monomial(sol.det, sign, mu))
        throw std::domain_error("Steinberg matrix determinant " + sol.det.str("e") + " is not a unit of R");
    RMatrix inv(n, std::vector<GroupAlgElt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = exact_divide(sol.scaled[i][j], sol.det);
    matrix_ = std::move(m);
    inverse_ = std::move(inv);
    det_ = sol.det;
    matrix_ready_ = true;
}

const RMatrix& KTheory::steinberg_matrix() const {
    build_matrix();
    return matrix_;
}

const GroupAlgElt& KTheory::steinberg_determinant() const {
    build_matrix();
    return det_;
}

const RMatrix& KTheory::steinberg_inverse() const {
    build_matrix();
    return inverse_;
}

LineBundleExpansion KTheory::schubert_in_line_bundles(WeylElt w) const {
    build_matrix();
    LineBundleExpansion out;
    const std::size_t col = position_.at(w.index);
    for (std::size_t row = 0; row < basis_order_.size(); ++row)
        if (!inverse_[row][col].is_zero()) out.emplace(basis_order_[row], inverse_[row][col]);
    return out;
}

KClass KTheory::from_line_bundles(const LineBundleExpansion& f) const {
    KClass out;
    for (const auto& [u, n] : f) out += line_bundle_class(-steinberg_weight(u)) * n;
    return out;
}

KClass KTheory::product(WeylElt w, WeylElt v) const {
    return product(w, v, [this](const Weight& mu, WeylElt z) { return x_action(mu, z); });
}

KClass KTheory::product(WeylElt w, WeylElt v, const XAction& engine) const {
    KClass out;
    for (const auto& [u, n] : schubert_in_line_bundles(w)) out += engine(-steinberg_weight(u), v) * n;
    return out;
}

KClass KTheory::product(const KClass& a, const KClass& b) const {
    KClass out;
    for (const auto& [w, ca] : a.terms())
        for (const auto& [v, cb] : b.terms()) out += product(w, v) * (ca * cb);
    return out;
}

std::map<WeylElt, GroupAlgElt> KTheory::steinberg_decompose(const GroupAlgElt& f) const {
    require_matrix_size();
    const auto elems = rs_->elements_by_length();
    const std::size_t n = elems.size();
    std::vector<Weight> lam(n);
    for (std::size_t k = 0; k < n; ++k) lam[k] = rs_->steinberg_weight(elems[k], SteinbergConvention::LeftDescent);
    RMatrix a(n, std::vector<GroupAlgElt>(n)), b(n, std::vector<GroupAlgElt>(1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r][c] = GroupAlgElt::monomial(rs_->act(elems[r], -lam[c]));
        b[r][0] = f.act(*rs_, elems[r]);
    }
    BareissSolution sol = bareiss_solve(a, b);
    if (sol.det.is_zero()) throw std::domain_error("Steinberg system is singular");
    std::map<WeylElt, GroupAlgElt> out;
    GroupAlgElt check;
    for (std::size_t k = 0; k < n; ++k) {
        GroupAlgElt fk = exact_divide(sol.scaled[k][0], sol.det);
        if (fk.is_zero()) continue;
        if (!is_w_invariant(*rs_, fk)) throw std::logic_error("Steinberg coefficient is not W-invariant");
        check += fk.shifted(-lam[k]);
        out.emplace(elems[k], std::move(fk));
    }
    if (check != f) throw std::logic_error("Steinberg decomposition does not reassemble");
    return out;
}

// ---------------------------------------------------------------------------

namespace {

using QMatrix = std::vector<std::vector<Rational>>;

QMatrix q_identity(std::size_t n) {
    QMatrix m(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
    const std::size_t n = a.size();
    QMatrix c(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

std::vector<Rational> q_apply(const QMatrix& a, const std::vector<Rational>& v) {
    std::vector<Rational> r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

QMatrix q_sub(QMatrix a, const QMatrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
    return a;
}

bool q_inverse(QMatrix a, QMatrix& inv) {
    const std::size_t n = a.size();
    inv = q_identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return false;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return true;
}

}  // namespace

EigenReport KTheory::eigen_verify(std::mt19937_64& rng, int points) const {
    require_matrix_size();
    EigenReport report;
    const std::size_t n = basis_order_.size();
    const int r = rank();
    std::uniform_int_distribution<int> num(2, 11), den(1, 5);

    auto to_matrix = [&](const std::function<KClass(WeylElt)>& column, const std::vector<Rational>& pt) {
        QMatrix m(n, std::vector<Rational>(n, 0));
        for (std::size_t c = 0; c < n; ++c) {
            const KClass col = column(basis_order_[c]);
            for (const auto& [w, coef] : col.terms()) m[position_.at(w.index)][c] = coef.evaluate(pt);
        }
        return m;
    };

    int attempts = 0;
    while (report.points < points) {
        if (++attempts > 20 * points) {
            report.ok = false;
            report.failures.push_back("could not find a generic evaluation point");
            break;
        }
        std::vector<Rational> pt;
        for (int i = 0; i < r; ++i) pt.emplace_back(num(rng), den(rng));

        std::vector<QMatrix> tmat(static_cast<std::size_t>(r)), tau(static_cast<std::size_t>(r)),
            xa(static_cast<std::size_t>(r)), xma(static_cast<std::size_t>(r)), xw(static_cast<std::size_t>(r));
        bool generic = true;
        for (int i = 0; i < r && generic; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            tmat[ui] = to_matrix(
                [&](WeylElt w) {
                    WeylElt ws = rs_->right_mul(w, i);
                    return KClass::basis(rs_->length(ws) > rs_->length(w) ? ws : w, r);
                },
                pt);
            xa[ui] = to_matrix([&](WeylElt w) { return x_action(rs_->simple_root(i), w); }, pt);
            xma[ui] = to_matrix([&](WeylElt w) { return x_action(-rs_->simple_root(i), w); }, pt);
            xw[ui] = to_matrix([&](WeylElt w) { return x_action(rs_->omega(i), w); }, pt);
            QMatrix inv;
            if (!q_inverse(q_sub(q_identity(n), xma[ui]), inv)) generic = false;
            tau[ui] = q_sub(tmat[ui], inv);
        }
        if (!generic) continue;
        // the eigenvalues e^{w alpha_i} must avoid 1
        for (WeylElt w : rs_->elements())
            for (const auto& beta : rs_->positive_roots())
                if (GroupAlgElt::monomial(rs_->act(w, beta.omega)).evaluate(pt) == 1) generic = false;
        if (!generic) continue;
        ++report.points;

        auto fail = [&](const std::string& msg) {
            report.ok = false;
            report.failures.push_back(msg);
        };

        for (int i = 0; i < r; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            QMatrix lhs = q_mul(q_mul(tau[ui], tau[ui]), q_mul(q_sub(xa[ui], q_identity(n)), q_sub(xma[ui], q_identity(n))));
            if (lhs != q_identity(n)) fail("tau_" + std::to_string(i + 1) + " squared identity");
        }

        std::map<std::uint32_t, std::vector<Rational>> b;
        std::vector<Rational> b1(n, 0);
        b1[position_.at(rs_->identity().index)] = 1;
        b[rs_->identity().index] = b1;
        for (WeylElt w : rs_->elements_by_length())
            for (int i = 0; i < r; ++i) {
                WeylElt ws = rs_->right_mul(w, i);
                if (rs_->length(ws) > rs_->length(w) && !b.count(ws.index))
                    b[ws.index] = q_apply(tau[static_cast<std::size_t>(i)], b.at(w.index));
            }
        for (WeylElt w : rs_->elements())
            for (int j = 0; j < r; ++j) {
                Rational ev = GroupAlgElt::monomial(rs_->act(w, rs_->omega(j))).evaluate(pt);
                auto lhs = q_apply(xw[static_cast<std::size_t>(j)], b.at(w.index));
                auto rhs = b.at(w.index);
                for (auto& x : rhs) x *= ev;
                if (lhs != rhs) fail("eigenvector b_" + rs_->word_string(w) + " for omega_" + std::to_string(j + 1));
            }
        std::vector<Rational> total(n, 0);
        const WeylElt w0 = rs_->longest();
        for (WeylElt v : rs_->elements()) {
            Rational c = 1;
            for (const auto& beta : rs_->inversion_set(v))
                c /= (Rational(1) - GroupAlgElt::monomial(rs_->act(w0, beta.omega)).evaluate(pt));
            WeylElt w = rs_->multiply(w0, rs_->inverse(v));
            const auto& bw = b.at(w.index);
            for (std::size_t k = 0; k < n; ++k) total[k] += c * bw[k];
        }
        std::vector<Rational> top(n, 0);
        top[position_.at(w0.index)] = 1;
        if (total != top) fail("expansion of [O_w0] in the eigenbasis");
    }
    return report;
}

}  // namespace kschubert
