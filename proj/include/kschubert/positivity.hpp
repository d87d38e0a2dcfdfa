#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kschubert/schubert.hpp"

namespace kschubert {

/// Polynomial in the symbols a_beta, y_beta (beta positive) with integer
/// coefficients.  Exponent layout: a's in positive-root order, then y's.
struct Certificate {
    std::map<std::vector<int>, Integer> terms;

    bool is_zero() const { return terms.empty(); }
    bool nonnegative() const;
    int degree() const;
    void add(const std::vector<int>& e, const Integer& c);
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct SignReport {
    WeylElt w, v, z;
    int dw = 0, dv = 0, dz = 0;
    GroupAlgElt c;
    int sign = 1;
    bool numeric_ok = true;
    std::optional<Certificate> certificate;
};

class PositivityChecker {
public:
    static constexpr int kDefaultSupportBound = 6;

    explicit PositivityChecker(RootSystemPtr rs);

    const RootSystem& root_system() const { return *rs_; }
    std::size_t symbol_count() const { return 2 * roots_.size(); }
    /// Positive root with the given simple-root coordinates.
    int root_index(const std::vector<std::int64_t>& alpha) const;

    /// a_beta -> e^{-beta} - 1, y_beta -> e^{-beta}.
    GroupAlgElt substitute(const Certificate& f) const;
    /// Nonnegative coefficients and f = target after substitution.
    bool verify(const Certificate& f, const GroupAlgElt& target) const;
    std::string str(const Certificate& f) const;

    /// (-1)^{d(w)+d(v)-d(z)}.
    int predicted_sign(WeylElt w, WeylElt v, WeylElt z) const;
    /// Evaluates sign * c where every e^{-beta} > 1.
    SignReport sign_check(WeylElt w, WeylElt v, WeylElt z, const GroupAlgElt& c, std::mt19937_64& rng,
                          int points = 5) const;
    std::optional<Certificate> find_certificate(const GroupAlgElt& c, int sign,
                                                int support_bound = kDefaultSupportBound) const;

    /// c in the variables u_i = e^{-alpha_i}; nullopt if c leaves the root lattice.
    std::optional<GroupAlgElt> to_u(const GroupAlgElt& c) const;

private:
    RootSystemPtr rs_;
    std::vector<std::vector<std::int64_t>> roots_;  // simple-root coordinates
};

}  // namespace kschubert
