#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "kschubert/schubert.hpp"

namespace kschubert {

/// Polynomial in x_1..x_n, y_1..y_n with rational coefficients.
class Poly {
public:
    using Exponent = std::vector<int>;  // x exponents, then y exponents
    using Terms = std::map<Exponent, Rational>;

    Poly() = default;
    static Poly constant(int rank, const Rational& c);
    static Poly x(int rank, int i);
    static Poly y(int rank, int i);
    /// x_lambda = sum lambda_i x_i.
    static Poly x_weight(const Weight& lambda);
    static Poly y_weight(const Weight& lambda);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const Exponent& e, const Rational& c);
    Rational coeff(const Exponent& e) const;
    /// -1 for the zero polynomial.
    int degree() const;
    int low_degree() const;
    bool involves_x() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& k);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& k) { return a *= k; }
    Poly operator-() const;
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly truncated(int max_degree) const;
    Poly homogeneous_part(int d) const;
    /// w acting on the x variables only.
    Poly act(const RootSystem& rs, WeylElt w) const;
    /// x_i -> y_i.
    Poly x_to_y() const;
    Poly y_to_zero() const;
    Rational evaluate(const std::vector<Rational>& x_point, const std::vector<Rational>& y_point) const;

    std::string str() const;

private:
    Poly(int rank) : rank_(rank) {}
    int rank_ = 0;
    Terms terms_;
};

/// (f - s_i f) / alpha_i on the x variables.
Poly divided_difference(const RootSystem& rs, int i, const Poly& f);

/// Element of the graded nil-Hecke algebra, normal form sum_w t_w f_w(x, y).
class GradedElt {
public:
    using Terms = std::map<WeylElt, Poly>;

    GradedElt() = default;
    static GradedElt t(WeylElt w, int rank);
    static GradedElt poly(const Poly& f);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Poly coeff(WeylElt w) const;
    void add_term(WeylElt w, const Poly& f);

    GradedElt& operator+=(const GradedElt& o);
    GradedElt& operator-=(const GradedElt& o);
    GradedElt& operator*=(const Rational& k);
    friend GradedElt operator+(GradedElt a, const GradedElt& b) { return a += b; }
    friend GradedElt operator-(GradedElt a, const GradedElt& b) { return a -= b; }
    friend bool operator==(const GradedElt&, const GradedElt&) = default;

    GradedElt truncated(int max_degree) const;
    std::string str(const RootSystem& rs) const;

private:
    Terms terms_;
};

GradedElt right_mul_t(const RootSystem& rs, const GradedElt& h, int i);
GradedElt right_mul_poly(const GradedElt& h, const Poly& f);
GradedElt multiply(const RootSystem& rs, const GradedElt& a, const GradedElt& b);

/// A factor of a word in the graded algebra: t_i (index >= 0) or a polynomial.
struct GradedFactor {
    int t_index = -1;
    Poly f;
};
GradedElt graded_normalize(const RootSystem& rs, const std::vector<GradedFactor>& word);

/// Class in H*_T(G/B) in the basis [X_w], coefficients in y only.
using HClass = std::map<WeylElt, Poly>;

std::string hclass_str(const RootSystem& rs, const HClass& c);

/// h [X_1].
HClass graded_phi1(const RootSystem& rs, const GradedElt& h);
HClass h_act(const RootSystem& rs, const GradedElt& h, const HClass& c);
/// f t_{w_0} [X_1].
HClass graded_phi(const RootSystem& rs, const Poly& f);

/// H*_T(G/B) ring structure over Q through polynomial representatives.
class GradedCohomology {
public:
    explicit GradedCohomology(RootSystemPtr rs);

    const RootSystem& root_system() const { return *rs_; }
    /// f with f t_{w_0}[X_1] = [X_w].
    const Poly& representative(WeylElt w) const { return reps_.at(w); }
    HClass h_product(WeylElt w, WeylElt v) const;
    HClass product(const HClass& a, const HClass& b) const;

private:
    RootSystemPtr rs_;
    std::map<WeylElt, Poly> reps_;
};

/// ch(h) modulo polynomial degree > D.
GradedElt ch_truncated(const RootSystem& rs, const NilHeckeElt& h, int max_degree);
/// ch of a K_T class, coefficients truncated at degree D.
HClass ch_class(const RootSystem& rs, const KClass& c, int max_degree);
/// Total degree of c_z [X_z] is deg c_z + l(w_0) - l(z); keeps the lowest.
HClass lowest_degree(const RootSystem& rs, const HClass& c);

/// e^mu -> 1.
KClass specialize_k(const KClass& c);
/// y -> 0.
HClass specialize_h(const HClass& c);

}  // namespace kschubert
