#include "kschubert/weight.hpp"

#include <sstream>

namespace kschubert {

int Weight::check_rank(int r) {
    if (r < 0 || r > kMaxRank)
        throw std::invalid_argument("rank " + std::to_string(r) + " outside [0, " +
                                    std::to_string(kMaxRank) + "]");
    return r;
}

Weight::Weight(std::initializer_list<std::int64_t> coords)
    : rank_(check_rank(static_cast<int>(coords.size()))) {
    std::size_t i = 0;
    for (auto v : coords) c_[i++] = v;
}

Weight::Weight(std::span<const std::int64_t> coords)
    : rank_(check_rank(static_cast<int>(coords.size()))) {
    for (std::size_t i = 0; i < coords.size(); ++i) c_[i] = coords[i];
}

Weight Weight::fundamental(int rank, int i) {
    Weight w(rank);
    if (i < 0 || i >= rank) throw std::out_of_range("fundamental weight index");
    w[i] = 1;
    return w;
}

bool Weight::is_zero() const {
    for (int i = 0; i < rank_; ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

bool Weight::is_dominant() const {
    for (int i = 0; i < rank_; ++i)
        if (c_[static_cast<std::size_t>(i)] < 0) return false;
    return true;
}

std::vector<std::int64_t> Weight::coords() const {
    return {c_.begin(), c_.begin() + rank_};
}

Weight& Weight::operator+=(const Weight& o) {
    for (int i = 0; i < kMaxRank; ++i) c_[static_cast<std::size_t>(i)] += o.c_[static_cast<std::size_t>(i)];
    if (o.rank_ > rank_) rank_ = o.rank_;
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (int i = 0; i < kMaxRank; ++i) c_[static_cast<std::size_t>(i)] -= o.c_[static_cast<std::size_t>(i)];
    if (o.rank_ > rank_) rank_ = o.rank_;
    return *this;
}

Weight& Weight::operator*=(std::int64_t k) {
    for (auto& v : c_) v *= k;
    return *this;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

std::size_t Weight::hash() const {
    std::size_t h = static_cast<std::size_t>(rank_) * 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < rank_; ++i) {
        h ^= std::hash<std::int64_t>{}(c_[static_cast<std::size_t>(i)]) + 0x9e3779b97f4a7c15ULL +
             (h << 6) + (h >> 2);
    }
    return h;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rank_; ++i) {
        if (i) os << ',';
        os << c_[static_cast<std::size_t>(i)];
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

Weight parse_weight(const std::string& text, int rank) {
    std::vector<std::int64_t> v;
    std::string cur;
    std::string s = text;
    for (char& ch : s)
        if (ch == '[' || ch == ']' || ch == ' ') ch = ',';
    std::stringstream ss(s);
    while (std::getline(ss, cur, ',')) {
        if (cur.empty()) continue;
        std::size_t used = 0;
        long long x = 0;
        try {
            x = std::stoll(cur, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed weight '" + text + "'");
        }
        if (used != cur.size()) throw std::invalid_argument("malformed weight '" + text + "'");
        v.push_back(x);
    }
    if (static_cast<int>(v.size()) != rank)
        throw std::invalid_argument("weight '" + text + "' does not have " + std::to_string(rank) +
                                    " coordinates");
    return Weight(std::span<const std::int64_t>(v));
}

Rational rational_pow(const Rational& base, std::int64_t exponent) {
    Rational result = 1;
    Rational b = exponent < 0 ? Rational(1) / base : base;
    std::int64_t e = exponent < 0 ? -exponent : exponent;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

}  // namespace kschubert
