#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kschubert/weight.hpp"

namespace kschubert {

/// Element of the Weyl group of a fixed root system.
///
/// The canonical form of an element is the image of rho (see
/// `RootSystem::rho_image`); the index is a dense handle into the
/// enumerated group, so two handles are equal iff the rho images are.
struct WeylElt {
    std::uint32_t index = 0;

    friend auto operator<=>(const WeylElt&, const WeylElt&) = default;
    friend bool operator==(const WeylElt&, const WeylElt&) = default;
};

struct PositiveRoot {
    Weight omega;                    // coordinates in the fundamental weights
    std::vector<std::int64_t> alpha; // coordinates in the simple roots
    WeylElt conjugator;              // root = conjugator * alpha_{simple}
    int simple = 0;
};

/// Bit set over simple indices generating a parabolic subgroup.
using SimpleSet = std::uint32_t;

/// lambda_w = w^{-1} sum_{s_i w < w} omega_i (LeftDescent) or
/// w sum_{w s_i > w} omega_i (RightAscent).
enum class SteinbergConvention { LeftDescent, RightAscent };

SteinbergConvention parse_convention(const std::string& name);
std::string to_string(SteinbergConvention c);

/// A finite root system given by its Cartan matrix, together with its
/// fully enumerated Weyl group.
///
/// Cartan entries follow a(i,j) = <alpha_j, alpha_i^vee>, so column j of the
/// matrix is alpha_j in fundamental-weight coordinates.
class RootSystem {
public:
    static constexpr std::size_t kMaxGroupOrder = 5000;

    /// Throws std::invalid_argument on malformed or non-finite-type input.
    static std::shared_ptr<const RootSystem> from_cartan(std::vector<std::vector<int>> cartan,
                                                         std::string name = "custom");
    /// Accepts a type name such as "A2", "B3", "G2", or a path to a text
    /// file holding the rows of a Cartan matrix.
    static std::shared_ptr<const RootSystem> build(const std::string& spec);
    static std::vector<std::vector<int>> cartan_for_type(const std::string& name);

    const std::string& name() const { return name_; }
    int rank() const { return rank_; }
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    int braid_order(int i, int j) const { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    const Weight& simple_root(int i) const { return simple_roots_[static_cast<std::size_t>(i)]; }
    Weight omega(int i) const { return Weight::fundamental(rank_, i); }
    Weight zero() const { return Weight(rank_); }
    Weight rho() const;
    const std::vector<PositiveRoot>& positive_roots() const { return positive_; }

    /// <lambda, alpha_i^vee>
    std::int64_t pairing(const Weight& lambda, int i) const { return lambda[i]; }
    /// <lambda, beta^vee> for a positive root.
    std::int64_t coroot_pairing(const Weight& lambda, const PositiveRoot& beta) const;
    /// Coordinates of lambda in the simple-root basis (rational in general).
    std::vector<Rational> to_alpha_coords(const Weight& lambda) const;
    /// Inverse of to_alpha_coords for integral root-lattice vectors.
    Weight from_alpha_coords(const std::vector<std::int64_t>& alpha) const;

    // ---- Weyl group --------------------------------------------------------
    std::size_t order() const { return rho_images_.size(); }
    WeylElt identity() const { return WeylElt{0}; }
    WeylElt longest() const { return longest_; }
    WeylElt simple_reflection(int i) const { return left_[static_cast<std::size_t>(i)][0]; }
    std::vector<WeylElt> elements() const;
    /// Elements sorted by (length, reduced word).
    std::vector<WeylElt> elements_by_length() const;

    const Weight& rho_image(WeylElt w) const { return rho_images_[w.index]; }
    WeylElt from_rho_image(const Weight& image) const;
    /// Element s_{i1} s_{i2} ... s_{ik}; the word need not be reduced.
    WeylElt from_word(const std::vector<int>& word) const;
    const std::vector<int>& reduced_word(WeylElt w) const { return words_[w.index]; }
    int length(WeylElt w) const { return static_cast<int>(words_[w.index].size()); }
    int sign(WeylElt w) const { return length(w) % 2 == 0 ? 1 : -1; }

    WeylElt left_mul(int i, WeylElt w) const { return left_[static_cast<std::size_t>(i)][w.index]; }
    WeylElt right_mul(WeylElt w, int i) const { return right_[static_cast<std::size_t>(i)][w.index]; }
    WeylElt multiply(WeylElt u, WeylElt v) const;
    WeylElt inverse(WeylElt w) const { return inverse_[w.index]; }
    /// Demazure (0-Hecke) product: fold v's reduced word into u.
    WeylElt hecke_product(WeylElt u, WeylElt v) const;

    bool has_left_descent(WeylElt w, int i) const { return length(left_mul(i, w)) < length(w); }
    bool has_right_descent(WeylElt w, int i) const { return length(right_mul(w, i)) < length(w); }

    Weight act(WeylElt w, const Weight& lambda) const;
    Weight reflect(int i, const Weight& lambda) const;

    bool bruhat_leq(WeylElt u, WeylElt w) const;
    std::vector<PositiveRoot> inversion_set(WeylElt w) const;
    /// Inversion set via the reduced-word telescoping formula.
    std::vector<Weight> inversion_set_from_word(WeylElt w) const;

    Weight steinberg_weight(WeylElt w, SteinbergConvention c) const;

    // ---- parabolic cosets ---------------------------------------------------
    static SimpleSet stabilizer_set(const Weight& dominant);
    const std::vector<WeylElt>& parabolic_subgroup(SimpleSet J) const;
    WeylElt parabolic_longest(SimpleSet J) const;
    WeylElt min_rep(WeylElt w, SimpleSet J) const;
    WeylElt max_rep(WeylElt w, SimpleSet J) const;
    /// Bruhat-maximal element of w W_J that is <= bound, if any.
    std::optional<WeylElt> max_rep_below(WeylElt w, SimpleSet J, WeylElt bound) const;
    /// Minimal-length w with w * lambda == image (lambda dominant).
    std::optional<WeylElt> min_element_mapping(const Weight& lambda, const Weight& image) const;

    std::string word_string(WeylElt w) const;

private:
    RootSystem() = default;
    void enumerate_group();
    void enumerate_roots();
    void compute_bruhat();

    std::string name_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<int>> m_;
    std::vector<Weight> simple_roots_;
    std::vector<PositiveRoot> positive_;
    std::vector<std::vector<Rational>> inverse_cartan_;

    std::vector<Weight> rho_images_;
    std::unordered_map<Weight, std::uint32_t, WeightHash> index_of_;
    std::vector<std::vector<int>> words_;
    std::vector<std::vector<WeylElt>> left_;
    std::vector<std::vector<WeylElt>> right_;
    std::vector<WeylElt> inverse_;
    WeylElt longest_;
    std::vector<std::vector<bool>> bruhat_;

    mutable std::mutex cache_mutex_;
    mutable std::map<SimpleSet, std::vector<WeylElt>> parabolic_cache_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace kschubert
