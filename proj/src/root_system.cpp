#include "kschubert/root_system.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace kschubert {

namespace {

std::vector<std::vector<Rational>> rational_inverse(const std::vector<std::vector<int>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("singular Cartan matrix");
        std::swap(m[piv], m[col]);
        Rational p = m[col][col];
        for (auto& v : m[col]) v /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

// Symmetrizable with positive-definite symmetrization.
void check_finite_type(const std::vector<std::vector<int>>& a) {
    const std::size_t n = a.size();
    std::vector<Rational> d(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::deque<std::size_t> q{start};
        while (!q.empty()) {
            std::size_t i = q.front();
            q.pop_front();
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                Rational dj = d[i] * a[i][j] / a[j][i];
                if (d[j] == 0) {
                    d[j] = dj;
                    q.push_back(j);
                } else if (d[j] != dj) {
                    throw std::invalid_argument("Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = d[i] * a[i][j];
    for (std::size_t col = 0; col < n; ++col) {
        if (b[col][col] <= 0)
            throw std::invalid_argument("Cartan matrix is not of finite type");
        for (std::size_t r = col + 1; r < n; ++r) {
            Rational f = b[r][col] / b[col][col];
            for (std::size_t k = col; k < n; ++k) b[r][k] -= f * b[col][k];
        }
    }
}

}  // namespace

SteinbergConvention parse_convention(const std::string& name) {
    if (name == "left-descent") return SteinbergConvention::LeftDescent;
    if (name == "right-ascent") return SteinbergConvention::RightAscent;
    throw std::invalid_argument("unknown Steinberg convention '" + name + "'");
}

std::string to_string(SteinbergConvention c) {
    return c == SteinbergConvention::LeftDescent ? "left-descent" : "right-ascent";
}

std::vector<std::vector<int>> RootSystem::cartan_for_type(const std::string& name) {
    static const std::regex re("^([A-Ga-g])([0-9]+)$");
    std::smatch m;
    if (!std::regex_match(name, m, re)) throw std::invalid_argument("unknown root system '" + name + "'");
    const char type = static_cast<char>(std::toupper(m[1].str()[0]));
    const int n = std::stoi(m[2].str());
    if (n < 1 || n > kMaxRank) throw std::invalid_argument("unsupported rank in '" + name + "'");
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v; };
    for (int i = 0; i < n; ++i) set(i, i, 2);
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) {
            set(i, i + 1, -1);
            set(i + 1, i, -1);
        }
    };
    switch (type) {
        case 'A':
            chain(n);
            break;
        case 'B':
        case 'C': {
            if (n < 2) throw std::invalid_argument("type " + name + " needs rank >= 2");
            chain(n);
            // Rank two uses the labelling with alpha_1 short for B2; rank >= 3
            // follows the usual convention with alpha_n short in B_n.
            bool last_short = (type == 'B');
            if (n == 2) last_short = !last_short;
            if (last_short) {
                set(n - 1, n - 2, -2);
            } else {
                set(n - 2, n - 1, -2);
            }
            break;
        }
        case 'D':
            if (n < 4) throw std::invalid_argument("type D needs rank >= 4");
            chain(n - 1);
            set(n - 3, n - 1, -1);
            set(n - 1, n - 3, -1);
            break;
        case 'E':
            if (n < 6 || n > 8) throw std::invalid_argument("type E needs rank 6..8");
            // Bourbaki: 1-3-4-5-...; 2 attached to 4.
            set(0, 2, -1), set(2, 0, -1);
            set(1, 3, -1), set(3, 1, -1);
            for (int i = 2; i + 1 < n; ++i) set(i, i + 1, -1), set(i + 1, i, -1);
            break;
        case 'F':
            if (n != 4) throw std::invalid_argument("type F needs rank 4");
            chain(4);
            set(2, 1, -2);
            break;
        case 'G':
            if (n != 2) throw std::invalid_argument("type G needs rank 2");
            set(0, 1, -3);
            set(1, 0, -1);
            break;
        default:
            throw std::invalid_argument("unknown root system '" + name + "'");
    }
    return a;
}

std::shared_ptr<const RootSystem> RootSystem::build(const std::string& spec) {
    static const std::regex re("^[A-Ga-g][0-9]+$");
    if (std::regex_match(spec, re)) return from_cartan(cartan_for_type(spec), spec);
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("unknown root system '" + spec + "' (not a type name or readable file)");
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                row.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("Cartan file '" + spec + "': bad entry '" + tok + "'");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return from_cartan(std::move(rows), spec);
}

std::shared_ptr<const RootSystem> RootSystem::from_cartan(std::vector<std::vector<int>> cartan,
                                                          std::string name) {
    const std::size_t n = cartan.size();
    if (n == 0) throw std::invalid_argument("empty Cartan matrix");
    if (n > static_cast<std::size_t>(kMaxRank))
        throw std::invalid_argument("rank exceeds " + std::to_string(kMaxRank));
    for (const auto& row : cartan)
        if (row.size() != n) throw std::invalid_argument("Cartan matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (cartan[i][i] != 2) throw std::invalid_argument("Cartan diagonal entry is not 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0) throw std::invalid_argument("positive off-diagonal Cartan entry");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw std::invalid_argument("Cartan entries a_ij and a_ji must vanish together");
            int p = cartan[i][j] * cartan[j][i];
            if (p > 3) throw std::invalid_argument("Cartan matrix is not of finite type (a_ij a_ji > 3)");
        }
    }
    check_finite_type(cartan);

    std::shared_ptr<RootSystem> rs(new RootSystem());
    rs->name_ = std::move(name);
    rs->rank_ = static_cast<int>(n);
    rs->cartan_ = std::move(cartan);
    rs->m_.assign(n, std::vector<int>(n, 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            static constexpr int kOrder[] = {2, 3, 4, 6};
            rs->m_[i][j] = kOrder[rs->cartan_[i][j] * rs->cartan_[j][i]];
        }
    for (std::size_t j = 0; j < n; ++j) {
        Weight a(static_cast<int>(n));
        for (std::size_t i = 0; i < n; ++i) a[static_cast<int>(i)] = rs->cartan_[i][j];
        rs->simple_roots_.push_back(a);
    }
    rs->inverse_cartan_ = rational_inverse(rs->cartan_);
    rs->enumerate_group();
    rs->enumerate_roots();
    if (rs->positive_.size() != static_cast<std::size_t>(rs->length(rs->longest_)))
        throw std::logic_error("number of positive roots differs from l(w0)");
    rs->compute_bruhat();
    return rs;
}

Weight RootSystem::rho() const {
    Weight r(rank_);
    for (int i = 0; i < rank_; ++i) r[i] = 1;
    return r;
}

Weight RootSystem::reflect(int i, const Weight& lambda) const {
    Weight r = lambda;
    std::int64_t k = lambda[i];
    if (k != 0) r -= k * simple_roots_[static_cast<std::size_t>(i)];
    return r;
}

Weight RootSystem::act(WeylElt w, const Weight& lambda) const {
    Weight r = lambda;
    const auto& word = words_[w.index];
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = reflect(*it, r);
    return r;
}

void RootSystem::enumerate_group() {
    const Weight r = rho();
    rho_images_.push_back(r);
    index_of_.emplace(r, 0);
    words_.push_back({});
    // Breadth-first by left multiplication; s_i w > w iff <w rho, alpha_i^vee> > 0.
    for (std::size_t k = 0; k < rho_images_.size(); ++k) {
        for (int i = 0; i < rank_; ++i) {
            const Weight& img = rho_images_[k];
            if (img[i] <= 0) continue;
            Weight next = reflect(i, img);
            if (index_of_.count(next)) continue;
            if (rho_images_.size() >= kMaxGroupOrder)
                throw std::invalid_argument("Weyl group of '" + name_ + "' exceeds " +
                                            std::to_string(kMaxGroupOrder) + " elements");
            index_of_.emplace(next, static_cast<std::uint32_t>(rho_images_.size()));
            std::vector<int> word{i};
            word.insert(word.end(), words_[k].begin(), words_[k].end());
            rho_images_.push_back(next);
            words_.push_back(std::move(word));
        }
    }
    const std::size_t order = rho_images_.size();
    left_.assign(static_cast<std::size_t>(rank_), std::vector<WeylElt>(order));
    right_.assign(static_cast<std::size_t>(rank_), std::vector<WeylElt>(order));
    for (int i = 0; i < rank_; ++i) {
        for (std::size_t k = 0; k < order; ++k) {
            left_[static_cast<std::size_t>(i)][k] = WeylElt{index_of_.at(reflect(i, rho_images_[k]))};
            // w s_i rho = w rho - w alpha_i
            WeylElt w{static_cast<std::uint32_t>(k)};
            Weight img = rho_images_[k] - act(w, simple_roots_[static_cast<std::size_t>(i)]);
            right_[static_cast<std::size_t>(i)][k] = WeylElt{index_of_.at(img)};
        }
    }
    // Canonical reduced words: peel the smallest right descent.
    std::vector<std::size_t> by_len(order);
    for (std::size_t k = 0; k < order; ++k) by_len[k] = k;
    std::stable_sort(by_len.begin(), by_len.end(),
                     [&](std::size_t a, std::size_t b) { return words_[a].size() < words_[b].size(); });
    std::vector<std::vector<int>> canon(order);
    for (std::size_t k : by_len) {
        if (k == 0) continue;
        const std::size_t len = words_[k].size();
        for (int i = 0; i < rank_; ++i) {
            std::size_t shorter = right_[static_cast<std::size_t>(i)][k].index;
            if (words_[shorter].size() < len) {
                canon[k] = canon[shorter];
                canon[k].push_back(i);
                break;
            }
        }
    }
    words_ = std::move(canon);
    inverse_.resize(order);
    std::size_t longest = 0;
    for (std::size_t k = 0; k < order; ++k) {
        std::vector<int> rev(words_[k].rbegin(), words_[k].rend());
        inverse_[k] = from_word(rev);
        if (words_[k].size() > words_[longest].size()) longest = k;
    }
    longest_ = WeylElt{static_cast<std::uint32_t>(longest)};
}

void RootSystem::enumerate_roots() {
    std::set<Weight> seen;
    std::deque<PositiveRoot> queue;
    for (int i = 0; i < rank_; ++i) {
        PositiveRoot r;
        r.omega = simple_roots_[static_cast<std::size_t>(i)];
        r.alpha.assign(static_cast<std::size_t>(rank_), 0);
        r.alpha[static_cast<std::size_t>(i)] = 1;
        r.conjugator = identity();
        r.simple = i;
        seen.insert(r.omega);
        queue.push_back(r);
    }
    while (!queue.empty()) {
        PositiveRoot r = queue.front();
        queue.pop_front();
        positive_.push_back(r);
        for (int j = 0; j < rank_; ++j) {
            std::int64_t k = r.omega[j];
            if (k == 0) continue;
            PositiveRoot s;
            s.omega = reflect(j, r.omega);
            s.alpha = r.alpha;
            s.alpha[static_cast<std::size_t>(j)] -= k;
            if (std::any_of(s.alpha.begin(), s.alpha.end(), [](auto v) { return v < 0; })) continue;
            if (!seen.insert(s.omega).second) continue;
            s.conjugator = left_mul(j, r.conjugator);
            s.simple = r.simple;
            queue.push_back(s);
        }
    }
    std::sort(positive_.begin(), positive_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
        std::int64_t ha = 0, hb = 0;
        for (auto v : a.alpha) ha += v;
        for (auto v : b.alpha) hb += v;
        if (ha != hb) return ha < hb;
        return std::lexicographical_compare(b.alpha.begin(), b.alpha.end(), a.alpha.begin(), a.alpha.end());
    });
}

void RootSystem::compute_bruhat() {
    const std::size_t order = rho_images_.size();
    bruhat_.assign(order, std::vector<bool>(order, false));
    std::vector<std::size_t> by_len(order);
    for (std::size_t k = 0; k < order; ++k) by_len[k] = k;
    std::stable_sort(by_len.begin(), by_len.end(),
                     [&](std::size_t a, std::size_t b) { return words_[a].size() < words_[b].size(); });
    for (std::size_t w : by_len) {
        if (w == 0) {
            bruhat_[0][0] = true;
            continue;
        }
        int i = 0;
        while (length(left_mul(i, WeylElt{static_cast<std::uint32_t>(w)})) > length(WeylElt{static_cast<std::uint32_t>(w)})) ++i;
        const std::size_t sw = left_[static_cast<std::size_t>(i)][w].index;
        for (std::size_t u = 0; u < order; ++u) {
            std::size_t su = left_[static_cast<std::size_t>(i)][u].index;
            std::size_t lower = words_[su].size() < words_[u].size() ? su : u;
            bruhat_[w][u] = bruhat_[sw][lower];
        }
    }
}

std::int64_t RootSystem::coroot_pairing(const Weight& lambda, const PositiveRoot& beta) const {
    return act(inverse(beta.conjugator), lambda)[beta.simple];
}

std::vector<Rational> RootSystem::to_alpha_coords(const Weight& lambda) const {
    std::vector<Rational> c(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            c[static_cast<std::size_t>(i)] += inverse_cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * lambda[j];
    return c;
}

Weight RootSystem::from_alpha_coords(const std::vector<std::int64_t>& alpha) const {
    Weight r(rank_);
    for (int j = 0; j < rank_ && j < static_cast<int>(alpha.size()); ++j)
        r += alpha[static_cast<std::size_t>(j)] * simple_roots_[static_cast<std::size_t>(j)];
    return r;
}

std::vector<WeylElt> RootSystem::elements() const {
    std::vector<WeylElt> v;
    for (std::size_t k = 0; k < order(); ++k) v.push_back(WeylElt{static_cast<std::uint32_t>(k)});
    return v;
}

std::vector<WeylElt> RootSystem::elements_by_length() const {
    auto v = elements();
    std::stable_sort(v.begin(), v.end(), [&](WeylElt a, WeylElt b) {
        if (length(a) != length(b)) return length(a) < length(b);
        return reduced_word(a) < reduced_word(b);
    });
    return v;
}

WeylElt RootSystem::from_rho_image(const Weight& image) const {
    auto it = index_of_.find(image);
    if (it == index_of_.end()) throw std::invalid_argument("not the image of rho under a Weyl element");
    return WeylElt{it->second};
}

WeylElt RootSystem::from_word(const std::vector<int>& word) const {
    WeylElt w = identity();
    for (int i : word) {
        if (i < 0 || i >= rank_) throw std::invalid_argument("simple index out of range in word");
        w = right_mul(w, i);
    }
    return w;
}

WeylElt RootSystem::multiply(WeylElt u, WeylElt v) const {
    for (int i : words_[v.index]) u = right_mul(u, i);
    return u;
}

WeylElt RootSystem::hecke_product(WeylElt u, WeylElt v) const {
    for (int i : words_[v.index]) {
        WeylElt us = right_mul(u, i);
        if (length(us) > length(u)) u = us;
    }
    return u;
}

bool RootSystem::bruhat_leq(WeylElt u, WeylElt w) const { return bruhat_[w.index][u.index]; }

std::vector<PositiveRoot> RootSystem::inversion_set(WeylElt w) const {
    std::vector<PositiveRoot> out;
    const Weight& inv_rho = rho_image(inverse(w));
    for (const auto& beta : positive_)
        if (coroot_pairing(inv_rho, beta) < 0) out.push_back(beta);
    return out;
}

std::vector<Weight> RootSystem::inversion_set_from_word(WeylElt w) const {
    const auto& word = words_[w.index];
    std::vector<Weight> out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        Weight r = simple_roots_[static_cast<std::size_t>(word[k])];
        for (std::size_t j = k + 1; j < word.size(); ++j) r = reflect(word[j], r);
        out.push_back(r);
    }
    return out;
}

Weight RootSystem::steinberg_weight(WeylElt w, SteinbergConvention c) const {
    Weight sum(rank_);
    if (c == SteinbergConvention::LeftDescent) {
        for (int i = 0; i < rank_; ++i)
            if (has_left_descent(w, i)) sum += omega(i);
        return act(inverse(w), sum);
    }
    for (int i = 0; i < rank_; ++i)
        if (!has_right_descent(w, i)) sum += omega(i);
    return act(w, sum);
}

SimpleSet RootSystem::stabilizer_set(const Weight& dominant) {
    SimpleSet J = 0;
    for (int i = 0; i < dominant.rank(); ++i)
        if (dominant[i] == 0) J |= (1u << i);
    return J;
}

const std::vector<WeylElt>& RootSystem::parabolic_subgroup(SimpleSet J) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = parabolic_cache_.find(J);
    if (it != parabolic_cache_.end()) return it->second;
    std::vector<WeylElt> elems{identity()};
    std::set<std::uint32_t> seen{0};
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (int j = 0; j < rank_; ++j) {
            if (!(J & (1u << j))) continue;
            WeylElt n = right_mul(elems[k], j);
            if (seen.insert(n.index).second) elems.push_back(n);
        }
    return parabolic_cache_.emplace(J, std::move(elems)).first->second;
}

WeylElt RootSystem::parabolic_longest(SimpleSet J) const {
    WeylElt u = identity();
    bool grew = true;
    while (grew) {
        grew = false;
        for (int j = 0; j < rank_; ++j) {
            if (!(J & (1u << j))) continue;
            WeylElt n = right_mul(u, j);
            if (length(n) > length(u)) {
                u = n;
                grew = true;
            }
        }
    }
    return u;
}

WeylElt RootSystem::min_rep(WeylElt w, SimpleSet J) const {
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (int j = 0; j < rank_; ++j) {
            if ((J & (1u << j)) && has_right_descent(w, j)) {
                w = right_mul(w, j);
                shrunk = true;
            }
        }
    }
    return w;
}

WeylElt RootSystem::max_rep(WeylElt w, SimpleSet J) const {
    return multiply(min_rep(w, J), parabolic_longest(J));
}

std::optional<WeylElt> RootSystem::max_rep_below(WeylElt w, SimpleSet J, WeylElt bound) const {
    const WeylElt m = min_rep(w, J);
    std::optional<WeylElt> best;
    std::vector<WeylElt> below;
    for (WeylElt u : parabolic_subgroup(J)) {
        WeylElt x = multiply(m, u);
        if (!bruhat_leq(x, bound)) continue;
        below.push_back(x);
        if (!best || length(x) > length(*best)) best = x;
    }
    if (best)
        for (WeylElt x : below)
            if (!bruhat_leq(x, *best)) throw std::logic_error("coset elements below bound lack a maximum");
    return best;
}

std::optional<WeylElt> RootSystem::min_element_mapping(const Weight& lambda, const Weight& image) const {
    Weight mu = image;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j < rank_; ++j) {
            if (mu[j] < 0) {
                mu = reflect(j, mu);
                word.push_back(j);
                moved = true;
                break;
            }
        }
    }
    if (mu != lambda) return std::nullopt;
    return from_word(word);
}

std::string RootSystem::word_string(WeylElt w) const {
    const auto& word = words_[w.index];
    if (word.empty()) return "1";
    std::string s;
    for (int i : word) s += "s" + std::to_string(i + 1);
    return s;
}

}  // namespace kschubert
