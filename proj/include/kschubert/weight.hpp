#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kschubert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest rank handled by the fixed-capacity weight vector.
inline constexpr int kMaxRank = 8;

/// An integral weight in fundamental-weight coordinates.
///
/// Coordinates beyond `rank()` are kept at zero so that the defaulted
/// ordering is the lexicographic order on coordinate vectors.
class Weight {
public:
    Weight() = default;
    explicit Weight(int rank) : rank_(check_rank(rank)) {}
    Weight(std::initializer_list<std::int64_t> coords);
    explicit Weight(std::span<const std::int64_t> coords);

    static Weight fundamental(int rank, int i);

    int rank() const { return rank_; }
    std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::int64_t& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const;
    bool is_dominant() const;
    std::vector<std::int64_t> coords() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight& operator*=(std::int64_t k);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(std::int64_t k, Weight a) { return a *= k; }
    Weight operator-() const;

    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;

    std::size_t hash() const;
    std::string str() const;

private:
    static int check_rank(int r);

    std::array<std::int64_t, kMaxRank> c_{};
    int rank_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Parse "a,b,c" into a weight of the given rank.
Weight parse_weight(const std::string& text, int rank);

struct WeightHash {
    std::size_t operator()(const Weight& w) const { return w.hash(); }
};

/// Integer power of a rational, negative exponents allowed.
Rational rational_pow(const Rational& base, std::int64_t exponent);

}  // namespace kschubert
