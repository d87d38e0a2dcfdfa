#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "kschubert/bareiss.hpp"
#include "kschubert/nilhecke.hpp"

namespace kschubert {

/// Class in K_T(G/B), in coordinates of the Schubert basis [O_{X_w}].
class KClass {
public:
    using Terms = std::map<WeylElt, GroupAlgElt>;

    KClass() = default;
    static KClass basis(WeylElt w, int rank);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    GroupAlgElt coeff(WeylElt w) const;
    void add_term(WeylElt w, const GroupAlgElt& c);

    KClass& operator+=(const KClass& o);
    KClass& operator-=(const KClass& o);
    KClass& operator*=(const GroupAlgElt& c);
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    friend KClass operator*(KClass a, const GroupAlgElt& c) { return a *= c; }
    KClass operator-() const;
    friend bool operator==(const KClass&, const KClass&) = default;

    std::string str(const RootSystem& rs) const;

private:
    Terms terms_;
};

/// Expansion sum_u n_u X^{-lambda_u} of a class in the Steinberg basis.
using LineBundleExpansion = std::map<WeylElt, GroupAlgElt>;

/// Computes X^mu [O_v]; lets callers swap in another engine for products.
using XAction = std::function<KClass(const Weight& mu, WeylElt v)>;

struct EigenReport {
    bool ok = true;
    int points = 0;
    std::vector<std::string> failures;
};

/// K_T(G/B) for a fixed root system, with caches for line bundles and the
/// Steinberg basis.  Thread-safe for concurrent const use.
class KTheory {
public:
    static constexpr std::size_t kMaxMatrixOrder = 50;

    explicit KTheory(RootSystemPtr rs, SteinbergConvention convention = SteinbergConvention::RightAscent);

    const RootSystem& root_system() const { return *rs_; }
    RootSystemPtr root_system_ptr() const { return rs_; }
    SteinbergConvention convention() const { return convention_; }
    int rank() const { return rs_->rank(); }

    KClass schubert_class(WeylElt w) const;
    KClass ideal_class(WeylElt w) const;
    /// h [O_1].
    KClass phi1(const NilHeckeElt& h) const;
    KClass act(const NilHeckeElt& h, const KClass& c) const;
    /// X^mu [O_v] through the nil-Hecke normal form (cached).
    KClass x_action(const Weight& mu, WeylElt v) const;
    KClass x_action(const Weight& mu, const KClass& c) const;
    /// f T_{w0} [O_1] for f in R[X].
    KClass phi(const RXElt& f) const;

    KClass line_bundle_class(const Weight& lambda) const;

    /// lambda_w under this instance's convention.
    Weight steinberg_weight(WeylElt w) const { return rs_->steinberg_weight(w, convention_); }
    /// Column v holds [X^{-lambda_v}]; rows and columns follow elements_by_length().
    const RMatrix& steinberg_matrix() const;
    const GroupAlgElt& steinberg_determinant() const;
    const RMatrix& steinberg_inverse() const;
    const std::vector<WeylElt>& order_of_basis() const { return basis_order_; }

    LineBundleExpansion schubert_in_line_bundles(WeylElt w) const;
    KClass from_line_bundles(const LineBundleExpansion& f) const;

    KClass product(WeylElt w, WeylElt v) const;
    KClass product(WeylElt w, WeylElt v, const XAction& engine) const;
    KClass product(const KClass& a, const KClass& b) const;

    /// f = sum_w f_w X^{-lambda_w} with f_w W-invariant, always in the
    /// "left-descent" convention.
    std::map<WeylElt, GroupAlgElt> steinberg_decompose(const GroupAlgElt& f) const;

    EigenReport eigen_verify(std::mt19937_64& rng, int points = 5) const;

private:
    void require_matrix_size() const;
    void build_matrix() const;

    RootSystemPtr rs_;
    SteinbergConvention convention_;
    std::vector<WeylElt> basis_order_;
    std::map<std::uint32_t, std::size_t> position_;

    mutable std::mutex mutex_;
    mutable std::mutex matrix_mutex_;
    mutable std::map<std::pair<Weight, std::uint32_t>, KClass> x_cache_;
    mutable bool matrix_ready_ = false;
    mutable RMatrix matrix_, inverse_;
    mutable GroupAlgElt det_;
};

}  // namespace kschubert
