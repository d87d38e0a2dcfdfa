#include "kschubert/bareiss.hpp"

#include <algorithm>
#include <stdexcept>

namespace kschubert {

GroupAlgElt exact_divide(const GroupAlgElt& a, const GroupAlgElt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Z[P]");
    if (a.is_zero()) return {};
    const int n = a.terms().begin()->first.rank();
    if (b.is_monomial()) {
        const auto& [mu, c] = *b.terms().begin();
        GroupAlgElt q;
        for (const auto& [w, k] : a.terms()) {
            if (k % c != 0) throw std::domain_error("inexact division in Z[P]");
            q.add_term(w - mu, k / c);
        }
        return q;
    }
    // Newton polytope bounding box of the quotient.
    std::vector<std::int64_t> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::int64_t amin = INT64_MAX, amax = INT64_MIN, bmin = INT64_MAX, bmax = INT64_MIN;
        for (const auto& [w, c] : a.terms()) amin = std::min(amin, w[i]), amax = std::max(amax, w[i]);
        for (const auto& [w, c] : b.terms()) bmin = std::min(bmin, w[i]), bmax = std::max(bmax, w[i]);
        lo[static_cast<std::size_t>(i)] = amin - bmin;
        hi[static_cast<std::size_t>(i)] = amax - bmax;
        if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)])
            throw std::domain_error("inexact division in Z[P]");
    }
    const auto& [lead_b, lead_c] = *b.terms().rbegin();
    GroupAlgElt rem = a, q;
    while (!rem.is_zero()) {
        const auto& [lead_r, rc] = *rem.terms().rbegin();
        if (rc % lead_c != 0) throw std::domain_error("inexact division in Z[P]");
        Weight e = lead_r - lead_b;
        for (int i = 0; i < n; ++i)
            if (e[i] < lo[static_cast<std::size_t>(i)] || e[i] > hi[static_cast<std::size_t>(i)])
                throw std::domain_error("inexact division in Z[P]");
        GroupAlgElt t = GroupAlgElt::monomial(e, rc / lead_c);
        q += t;
        rem -= t * b;
    }
    return q;
}

BareissSolution bareiss_solve(RMatrix a, RMatrix b) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    if (b.size() != n) throw std::invalid_argument("right-hand side has wrong row count");
    const std::size_t m = b.empty() ? 0 : b[0].size();
    int rank = 0;
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_zero()) rank = e.terms().begin()->first.rank();

    GroupAlgElt prev = GroupAlgElt::constant(rank, 1);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        std::size_t best = n;
        for (std::size_t r = k; r < n; ++r) {
            if (a[r][k].is_zero()) continue;
            if (best == n || a[r][k].size() < a[best][k].size()) best = r;
        }
        if (best == n) return {GroupAlgElt(), {}};
        piv = best;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(b[piv], b[k]);
            sign = -sign;
        }
        const GroupAlgElt p = a[k][k];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k) continue;
            const GroupAlgElt f = a[r][k];
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                GroupAlgElt v = p * a[r][j];
                if (!f.is_zero() && !a[k][j].is_zero()) v -= f * a[k][j];
                a[r][j] = exact_divide(v, prev);
            }
            for (std::size_t j = 0; j < m; ++j) {
                GroupAlgElt v = p * b[r][j];
                if (!f.is_zero() && !b[k][j].is_zero()) v -= f * b[k][j];
                b[r][j] = exact_divide(v, prev);
            }
            a[r][k] = GroupAlgElt();
        }
        prev = p;
    }
    // every diagonal entry now equals the last pivot
    const GroupAlgElt det = a[n - 1][n - 1];
    GroupAlgElt signed_det = det;
    if (sign < 0) signed_det = -signed_det;
    if (sign < 0)
        for (auto& row : b)
            for (auto& e : row) e = -e;
    return {signed_det, std::move(b)};
}

RMatrix identity_matrix(std::size_t n, int rank) {
    RMatrix m(n, std::vector<GroupAlgElt>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = GroupAlgElt::constant(rank, 1);
    return m;
}

RMatrix mat_mul(const RMatrix& a, const RMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RMatrix c(n, std::vector<GroupAlgElt>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

bool as_signed_monomial(const GroupAlgElt& f, int& sign, Weight& mu) {
    if (!f.is_monomial()) return false;
    const auto& [w, c] = *f.terms().begin();
    if (c != 1 && c != -1) return false;
    sign = c > 0 ? 1 : -1;
    mu = w;
    return true;
}

}  // namespace kschubert
