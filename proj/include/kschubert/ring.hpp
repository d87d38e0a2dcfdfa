#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kschubert/root_system.hpp"

namespace kschubert {

/// Sparse element of the group algebra Z[P].
///
/// Used both for the coefficient ring R (monomials e^mu) and for Z[X]
/// (monomials X^lambda); which alphabet is meant is up to the caller.
class GroupAlgElt {
public:
    using Terms = std::map<Weight, Integer>;

    GroupAlgElt() = default;
    static GroupAlgElt monomial(const Weight& w, Integer c = 1);
    static GroupAlgElt constant(int rank, Integer c);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Integer coeff(const Weight& w) const;
    /// Coefficient of the zero weight; rank is only needed for lookup.
    Integer constant_term(int rank) const { return coeff(Weight(rank)); }
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const Weight& w, const Integer& c);

    GroupAlgElt& operator+=(const GroupAlgElt& o);
    GroupAlgElt& operator-=(const GroupAlgElt& o);
    GroupAlgElt& operator*=(const GroupAlgElt& o);
    GroupAlgElt& operator*=(const Integer& k);
    friend GroupAlgElt operator+(GroupAlgElt a, const GroupAlgElt& b) { return a += b; }
    friend GroupAlgElt operator-(GroupAlgElt a, const GroupAlgElt& b) { return a -= b; }
    friend GroupAlgElt operator*(const GroupAlgElt& a, const GroupAlgElt& b);
    friend GroupAlgElt operator*(GroupAlgElt a, const Integer& k) { return a *= k; }
    GroupAlgElt operator-() const;
    friend bool operator==(const GroupAlgElt&, const GroupAlgElt&) = default;

    /// Multiply by the monomial with exponent w.
    GroupAlgElt shifted(const Weight& w) const;
    /// Weyl action on exponents.
    GroupAlgElt act(const RootSystem& rs, WeylElt w) const;
    /// Apply lambda -> -lambda to every exponent.
    GroupAlgElt dual() const;
    /// Integer power, nonnegative exponent.
    GroupAlgElt pow(unsigned k) const;

    /// Exact evaluation; point[i] is the value of the monomial for omega_i.
    Rational evaluate(const std::vector<Rational>& point) const;

    /// "3*e[1,0] - e[0,0]"; the empty element prints as "0".
    std::string str(const std::string& var = "e") const;
    /// Canonical-order (coordinates, coefficient) pairs.
    std::vector<std::pair<std::vector<std::int64_t>, Integer>> serialize() const;
    static GroupAlgElt deserialize(const std::vector<std::pair<std::vector<std::int64_t>, Integer>>& data);

private:
    Terms terms_;
};

/// Element of R[X] = R tensor Z[X]: a map from X-exponent to an R-coefficient.
class RXElt {
public:
    using Terms = std::map<Weight, GroupAlgElt>;

    RXElt() = default;
    static RXElt x_monomial(const Weight& lambda);
    static RXElt scalar(const GroupAlgElt& e_part, int rank);
    static RXElt from_x(const GroupAlgElt& x_part);
    static RXElt term(const GroupAlgElt& e_part, const Weight& lambda);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    const GroupAlgElt& coeff(const Weight& lambda) const;

    void add_term(const Weight& lambda, const GroupAlgElt& c);

    RXElt& operator+=(const RXElt& o);
    RXElt& operator-=(const RXElt& o);
    RXElt& operator*=(const GroupAlgElt& e_scalar);
    friend RXElt operator+(RXElt a, const RXElt& b) { return a += b; }
    friend RXElt operator-(RXElt a, const RXElt& b) { return a -= b; }
    friend RXElt operator*(const RXElt& a, const RXElt& b);
    friend RXElt operator*(RXElt a, const GroupAlgElt& k) { return a *= k; }
    RXElt operator-() const;
    friend bool operator==(const RXElt&, const RXElt&) = default;

    /// Multiply by X^lambda.
    RXElt x_shifted(const Weight& lambda) const;
    /// W acts on the X alphabet only.
    RXElt act(const RootSystem& rs, WeylElt w) const;
    /// X^lambda -> e^lambda.
    GroupAlgElt x_to_e() const;
    /// Rational value with e^{omega_i} -> e_point[i], X^{omega_i} -> x_point[i].
    Rational evaluate(const std::vector<Rational>& e_point, const std::vector<Rational>& x_point) const;

    std::string str() const;

private:
    Terms terms_;
};

/// Demazure operator (X^{alpha_i} f - s_i f) / (X^{alpha_i} - 1).
GroupAlgElt demazure(const RootSystem& rs, int i, const GroupAlgElt& f);
RXElt demazure(const RootSystem& rs, int i, const RXElt& f);

/// (X^lambda - X^{s_i lambda}) / (1 - X^{-alpha_i}).
GroupAlgElt geometric_quotient(const RootSystem& rs, const Weight& lambda, int i);
/// geometric_quotient extended linearly in the X alphabet.
RXElt geometric_quotient(const RootSystem& rs, const RXElt& f, int i);

/// Sum over the W-orbit (with multiplicity one per group element).
GroupAlgElt orbit_sum(const RootSystem& rs, const Weight& lambda);
bool is_w_invariant(const RootSystem& rs, const GroupAlgElt& f);

/// Monomial e^{-beta} - 1 style helpers used by table notation.
GroupAlgElt y_root(const Weight& beta);
GroupAlgElt a_root(const Weight& beta);

}  // namespace kschubert
