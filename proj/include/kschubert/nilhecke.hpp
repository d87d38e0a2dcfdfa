#pragma once

#include <map>
#include <string>
#include <vector>

#include "kschubert/ring.hpp"

namespace kschubert {

/// Element of the affine nil-Hecke algebra over R, kept in the normal form
/// sum_w T_w f_w(e, X) with the T's on the left.
class NilHeckeElt {
public:
    using Terms = std::map<WeylElt, RXElt>;

    NilHeckeElt() = default;
    static NilHeckeElt T(WeylElt w, int rank);
    static NilHeckeElt X(const Weight& lambda);
    static NilHeckeElt scalar(const GroupAlgElt& e_part, int rank);
    static NilHeckeElt from_rx(const RXElt& f);
    static NilHeckeElt term(WeylElt w, const RXElt& f);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    const RXElt& coeff(WeylElt w) const;
    void add_term(WeylElt w, const RXElt& f);

    NilHeckeElt& operator+=(const NilHeckeElt& o);
    NilHeckeElt& operator-=(const NilHeckeElt& o);
    NilHeckeElt& operator*=(const GroupAlgElt& e_scalar);
    friend NilHeckeElt operator+(NilHeckeElt a, const NilHeckeElt& b) { return a += b; }
    friend NilHeckeElt operator-(NilHeckeElt a, const NilHeckeElt& b) { return a -= b; }
    NilHeckeElt operator-() const;
    friend bool operator==(const NilHeckeElt&, const NilHeckeElt&) = default;

private:
    Terms terms_;
};

/// Opposite normal form sum_w g_w(e, X) T_w.
using OppositeForm = std::map<WeylElt, RXElt>;

/// x * T_i, renormalized.
NilHeckeElt right_mul_T(const RootSystem& rs, const NilHeckeElt& x, int i);
/// x * T_w along a reduced word of w.
NilHeckeElt right_mul_T(const RootSystem& rs, const NilHeckeElt& x, WeylElt w);
/// x * f for f in R[X].
NilHeckeElt right_mul_rx(const NilHeckeElt& x, const RXElt& f);
NilHeckeElt multiply(const RootSystem& rs, const NilHeckeElt& a, const NilHeckeElt& b);
/// Left multiplication by X^lambda.
NilHeckeElt left_mul_X(const RootSystem& rs, const Weight& lambda, const NilHeckeElt& x);

/// X^lambda T_i rewritten as T_i X^{s_i lambda} + quotient.
NilHeckeElt commute_once(const RootSystem& rs, const Weight& lambda, int i);

NilHeckeElt epsilon(const RootSystem& rs, WeylElt w);
bool is_central(const RootSystem& rs, const GroupAlgElt& f);

OppositeForm to_opposite(const RootSystem& rs, const NilHeckeElt& x);
NilHeckeElt from_opposite(const RootSystem& rs, const OppositeForm& g);

/// The involution T_w -> epsilon_w, X^lambda -> X^{-lambda}, identity on R.
NilHeckeElt theta(const RootSystem& rs, const NilHeckeElt& x);

/// Action on R[X]: T_i by the Demazure operator, X^lambda by multiplication.
RXElt apply_operator(const RootSystem& rs, const NilHeckeElt& x, const RXElt& f);

/// Terms "coef * e[mu] * X[lambda] * T[word]" joined by + and -; words are
/// 1-based simple indices.  Factors may appear in any order and are
/// multiplied left to right.
NilHeckeElt parse_nilhecke(const RootSystem& rs, const std::string& text);
std::string to_string(const RootSystem& rs, const NilHeckeElt& x);

}  // namespace kschubert
