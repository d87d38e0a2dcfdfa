#include "kschubert/paths.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace kschubert {

LSPath::LSPath(std::vector<Segment> segments) : segs_(std::move(segments)) { normalize(); }

LSPath LSPath::straight(const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("straight path needs a dominant weight");
    return LSPath({Segment{lambda, Rational(1)}});
}

void LSPath::normalize() {
    std::vector<Segment> out;
    for (auto& s : segs_) {
        if (s.length == 0) continue;
        if (s.length < 0) throw std::invalid_argument("negative segment length");
        if (!out.empty() && out.back().direction == s.direction) {
            out.back().length += s.length;
        } else {
            out.push_back(std::move(s));
        }
    }
    Rational total = 0;
    for (const auto& s : out) total += s.length;
    if (out.empty() || total != 1) throw std::invalid_argument("path segments must have total length 1");
    segs_ = std::move(out);
}

std::vector<Rational> LSPath::endpoint_rational() const {
    const int n = segs_.front().direction.rank();
    std::vector<Rational> p(static_cast<std::size_t>(n), 0);
    for (const auto& s : segs_)
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] += s.length * s.direction[i];
    return p;
}

Weight LSPath::endpoint() const {
    auto p = endpoint_rational();
    Weight w(static_cast<int>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (boost::multiprecision::denominator(p[i]) != 1) throw std::logic_error("path endpoint is not integral");
        w[static_cast<int>(i)] = static_cast<std::int64_t>(boost::multiprecision::numerator(p[i]));
    }
    return w;
}

namespace {

// Values of <p(t), alpha_i^vee> at the breakpoints 0 = t_0 < ... < t_k = 1.
std::vector<Rational> heights(const std::vector<Segment>& segs, int i) {
    std::vector<Rational> h{Rational(0)};
    for (const auto& s : segs) h.push_back(h.back() + s.length * s.direction[i]);
    return h;
}

std::vector<Rational> breakpoints(const std::vector<Segment>& segs) {
    std::vector<Rational> t{Rational(0)};
    for (const auto& s : segs) t.push_back(t.back() + s.length);
    return t;
}

// Time in [0,1] where the height first reaches `target` after time index
// `from` (moving forward) or last reaches it before `from` (moving back).
Rational crossing(const std::vector<Segment>& segs, const std::vector<Rational>& h,
                  const std::vector<Rational>& t, std::size_t from, const Rational& target, int i, bool forward) {
    if (forward) {
        for (std::size_t k = from; k < segs.size(); ++k) {
            if (h[k] == target) return t[k];
            if ((h[k] < target && h[k + 1] >= target) || (h[k] > target && h[k + 1] <= target)) {
                Rational slope = segs[k].direction[i];
                return t[k] + (target - h[k]) / slope;
            }
        }
        return t.back();
    }
    for (std::size_t k = from; k > 0; --k) {
        if (h[k] == target) return t[k];
        if ((h[k] < target && h[k - 1] >= target) || (h[k] > target && h[k - 1] <= target)) {
            Rational slope = segs[k - 1].direction[i];
            return t[k] - (h[k] - target) / slope;
        }
    }
    return t.front();
}

// Apply s_i to the directions on [a, b].
std::vector<Segment> reflect_piece(const RootSystem& rs, const std::vector<Segment>& segs, const Rational& a,
                                   const Rational& b, int i) {
    std::vector<Segment> out;
    Rational start = 0;
    for (const auto& s : segs) {
        Rational end = start + s.length;
        Rational lo = std::max(start, a), hi = std::min(end, b);
        if (lo >= hi) {
            out.push_back(s);
        } else {
            if (lo > start) out.push_back({s.direction, lo - start});
            out.push_back({rs.reflect(i, s.direction), hi - lo});
            if (end > hi) out.push_back({s.direction, end - hi});
        }
        start = end;
    }
    return out;
}

}  // namespace

std::optional<LSPath> LSPath::f(const RootSystem& rs, int i) const {
    auto h = heights(segs_, i);
    auto t = breakpoints(segs_);
    Rational m = *std::min_element(h.begin(), h.end());
    if (h.back() - m < 1) return std::nullopt;
    std::size_t k0 = 0;
    for (std::size_t k = 0; k < h.size(); ++k)
        if (h[k] == m) k0 = k;
    Rational t1 = crossing(segs_, h, t, k0, m + 1, i, true);
    return LSPath(reflect_piece(rs, segs_, t[k0], t1, i));
}

std::optional<LSPath> LSPath::e(const RootSystem& rs, int i) const {
    auto h = heights(segs_, i);
    auto t = breakpoints(segs_);
    Rational m = *std::min_element(h.begin(), h.end());
    if (m > -1) return std::nullopt;
    std::size_t k1 = 0;
    while (h[k1] != m) ++k1;
    Rational t0 = crossing(segs_, h, t, k1, m + 1, i, false);
    return LSPath(reflect_piece(rs, segs_, t0, t[k1], i));
}

LSPath LSPath::dual() const {
    std::vector<Segment> out;
    for (auto it = segs_.rbegin(); it != segs_.rend(); ++it) out.push_back({-it->direction, it->length});
    return LSPath(std::move(out));
}

bool operator<(const LSPath& a, const LSPath& b) {
    const std::size_t n = std::min(a.segs_.size(), b.segs_.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto& x = a.segs_[k];
        const auto& y = b.segs_[k];
        if (x.direction != y.direction) return x.direction < y.direction;
        if (x.length != y.length) return x.length < y.length;
    }
    return a.segs_.size() < b.segs_.size();
}

std::string LSPath::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < segs_.size(); ++k) {
        if (k) os << " * ";
        os << segs_[k].direction.str() << '^' << segs_[k].length;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

PathData endpoints_and_directions(const RootSystem& rs, const Weight& lambda, const LSPath& p) {
    auto first = rs.min_element_mapping(lambda, p.first_direction());
    auto last = rs.min_element_mapping(lambda, p.last_direction());
    if (!first || !last) throw std::invalid_argument("path direction is not in the W-orbit of its shape");
    return {p.endpoint(), *first, *last};
}

bool is_valid_ls_path(const RootSystem& rs, const Weight& lambda, const LSPath& p) {
    std::optional<WeylElt> prev;
    for (const auto& s : p.segments()) {
        auto w = rs.min_element_mapping(lambda, s.direction);
        if (!w) return false;
        if (prev && (*prev == *w || !rs.bruhat_leq(*w, *prev))) return false;
        prev = w;
    }
    for (const auto& c : p.endpoint_rational())
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

std::vector<LSPath> i_string(const RootSystem& rs, const LSPath& head, int i) {
    if (head.e(rs, i)) throw std::invalid_argument("path is not the head of its i-string");
    std::vector<LSPath> out{head};
    while (auto next = out.back().f(rs, i)) out.push_back(std::move(*next));
    return out;
}

Crystal::Crystal(RootSystemPtr rs, const Weight& lambda)
    : rs_(std::move(rs)), lambda_(lambda), J_(RootSystem::stabilizer_set(lambda)) {
    if (!lambda.is_dominant()) throw std::invalid_argument("crystal shape must be dominant");
    std::set<LSPath> seen;
    std::deque<LSPath> queue{LSPath::straight(lambda)};
    seen.insert(queue.front());
    while (!queue.empty()) {
        LSPath p = std::move(queue.front());
        queue.pop_front();
        paths_.push_back(p);
        for (int i = 0; i < rs_->rank(); ++i)
            if (auto q = p.f(*rs_, i); q && seen.insert(*q).second) queue.push_back(std::move(*q));
    }
    for (const auto& p : paths_) data_.push_back(endpoints_and_directions(*rs_, lambda_, p));
}

std::size_t Crystal::index_of(const LSPath& p) const {
    for (std::size_t k = 0; k < paths_.size(); ++k)
        if (paths_[k] == p) return k;
    throw std::out_of_range("path not in crystal");
}

}  // namespace kschubert
